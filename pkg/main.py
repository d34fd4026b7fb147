#!/usr/bin/env python3
"""W算子引擎 - 主程序入口"""
import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import List, Optional, Tuple

from rich.console import Console

from algebra.permgroup import Permutation
from checks.suites import SuiteBounds
from config import (DEFAULT_OUTPUT_FORMAT, DEFAULT_THREADS, OUTPUT_FORMATS, VERIFY_BOUNDS,
                    VERIFY_SUITES, setup_logging)
from engine import WOperatorEngine
from exceptions import GradingError, TruncationError, WOperatorError
from operators.wop import OperatorSpec
from utils import (classification_to_csv, classification_to_dict, export_document,
                   hurwitz_to_csv, hurwitz_to_json, hurwitz_to_text, parse_cycles,
                   parse_int_list, parse_polynomial, parse_tuple, polynomial_to_csv,
                   polynomial_to_json, rows_to_csv, series_to_csv, series_to_json,
                   series_to_text, xpolynomial_to_csv, xpolynomial_to_json)

logger = logging.getLogger(__name__)

COMMANDS = ("apply", "hurwitz", "series", "verify", "classify")
OPERATOR_KINDS = ("cutjoin", "delta", "beta", "group", "wmatrix")

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


@dataclass
class CommandConfig:
    """一次命令调用的全部参数"""
    command: str
    op: str = "delta"
    d: int = 2
    beta: Optional[str] = None
    poly: Optional[str] = None
    n: int = 3
    k: int = 1
    k_max: int = VERIFY_BOUNDS["k_max"]
    w_max: int = VERIFY_BOUNDS["w_max"]
    N: int = VERIFY_BOUNDS["matrix_n"]
    n_max: int = VERIFY_BOUNDS["n_max"]
    d_max: int = VERIFY_BOUNDS["d_max"]
    theorem_n_max: int = VERIFY_BOUNDS["theorem_n_max"]
    theorem_d_max: int = VERIFY_BOUNDS["theorem_d_max"]
    cutjoin_w_max: int = VERIFY_BOUNDS["cutjoin_w_max"]
    op_w_max: int = VERIFY_BOUNDS["op_w_max"]
    op_d_max: int = VERIFY_BOUNDS["op_d_max"]
    suite: str = "all"
    output_format: str = DEFAULT_OUTPUT_FORMAT
    threads: int = DEFAULT_THREADS
    connected: bool = False
    perm: Optional[str] = None
    tuple_points: Optional[str] = None
    output: Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise WOperatorError(f"未知命令: {self.command}")
        if self.output_format not in OUTPUT_FORMATS:
            raise WOperatorError(f"未知输出格式: {self.output_format}")
        for name in ("w_max", "N", "n_max", "d_max", "n", "threads", "theorem_n_max", "theorem_d_max",
                     "cutjoin_w_max", "op_w_max", "op_d_max"):
            if getattr(self, name) < 1:
                raise TruncationError(f"--{name.replace('_', '-')} 必须为正: {getattr(self, name)}")
        if self.k_max < 0 or self.k < 0:
            raise TruncationError("--k 与 --k-max 必须非负")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="W([d]) 算子、广义 Hurwitz 数与其生成函数")
    parser.add_argument("command", choices=COMMANDS, help="子命令")
    parser.add_argument("--op", choices=OPERATOR_KINDS, default="delta", help="算子 (apply 用)")
    parser.add_argument("--d", type=int, default=2, help="循环长度 d")
    parser.add_argument("--beta", type=str, default=None, help="Δ_β 用的 d-循环, 如 1,3,2")
    parser.add_argument("--poly", type=str, default=None, help="多项式, 如 \"p1^3 + 1/2*p2\"")
    parser.add_argument("--n", type=int, default=3, help="对称群阶数 n")
    parser.add_argument("--k", type=int, default=1, help="分支点个数 k")
    parser.add_argument("--k-max", type=int, default=VERIFY_BOUNDS["k_max"], help="z 阶截断")
    parser.add_argument("--w-max", type=int, default=VERIFY_BOUNDS["w_max"], help="权重截断")
    parser.add_argument("--N", type=int, default=VERIFY_BOUNDS["matrix_n"], help="矩阵截断")
    parser.add_argument("--n-max", type=int, default=VERIFY_BOUNDS["n_max"], help="验证用的 n 上界")
    parser.add_argument("--d-max", type=int, default=VERIFY_BOUNDS["d_max"], help="验证用的 d 上界")
    parser.add_argument("--theorem-n-max", type=int, default=VERIFY_BOUNDS["theorem_n_max"],
                        help="theorem-w: n 上界")
    parser.add_argument("--theorem-d-max", type=int, default=VERIFY_BOUNDS["theorem_d_max"],
                        help="theorem-w: d 上界")
    parser.add_argument("--cutjoin-w-max", type=int, default=VERIFY_BOUNDS["cutjoin_w_max"],
                        help="theorem-w: 割并比较的权重上界")
    parser.add_argument("--op-w-max", type=int, default=VERIFY_BOUNDS["op_w_max"],
                        help="beta / commute: 权重上界")
    parser.add_argument("--op-d-max", type=int, default=VERIFY_BOUNDS["op_d_max"],
                        help="beta / commute: d 上界")
    parser.add_argument("--suite", choices=VERIFY_SUITES, default="all", help="验证套件")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default=DEFAULT_OUTPUT_FORMAT,
                        dest="output_format", help="输出格式")
    parser.add_argument("--threads", type=int, default=DEFAULT_THREADS,
                        help=f"工作进程数 (默认: {DEFAULT_THREADS})")
    parser.add_argument("--connected", action="store_true", help="series: 输出连通部分 H = log Ĥ")
    parser.add_argument("--perm", type=str, default=None, help="classify: α 的循环, 如 1,2;3")
    parser.add_argument("--tuple", type=str, default=None, dest="tuple_points",
                        help="classify: 元组 [j_d,…,j_1], 如 3,2,1")
    parser.add_argument("-o", "--output", type=str, default=None, help="同时把结果导出到文件")
    return parser


def build_config(argv: List[str]) -> CommandConfig:
    """argparse 出错时直接以状态 2 退出"""
    args = build_parser().parse_args(argv)
    return CommandConfig(**vars(args))


def _operator(config: CommandConfig) -> OperatorSpec:
    if config.op == "cutjoin":
        return OperatorSpec.cut_and_join()
    if config.op == "beta":
        if not config.beta:
            raise WOperatorError("--op beta 需要 --beta")
        cycle = parse_int_list(config.beta)
        return OperatorSpec.delta_beta(Permutation.from_cycles(len(cycle), [cycle]))
    if config.op == "group":
        return OperatorSpec.group_route(config.d)
    return OperatorSpec.delta(config.d)


def _run_apply(engine: WOperatorEngine, config: CommandConfig) -> str:
    if not config.poly:
        raise WOperatorError("apply 需要 --poly")
    f = parse_polynomial(config.poly)
    if config.op == "wmatrix":
        image = engine.apply_matrix(config.d, f, config.N)
        if config.output_format == "json":
            return xpolynomial_to_json(image)
        if config.output_format == "csv":
            return xpolynomial_to_csv(image)
        return str(image)
    image = engine.apply(_operator(config), f)
    if config.output_format == "json":
        return polynomial_to_json(image)
    if config.output_format == "csv":
        return polynomial_to_csv(image)
    return str(image)


def _run_hurwitz(engine: WOperatorEngine, config: CommandConfig) -> str:
    rows = engine.hurwitz_rows(config.n, config.d, config.k)
    if config.output_format == "json":
        return hurwitz_to_json(rows)
    if config.output_format == "csv":
        return hurwitz_to_csv(rows)
    return hurwitz_to_text(rows)


def _run_series(engine: WOperatorEngine, config: CommandConfig) -> str:
    s = engine.series(config.d, config.w_max, config.k_max, config.connected)
    if config.output_format == "json":
        return series_to_json(s)
    if config.output_format == "csv":
        return series_to_csv(s)
    return series_to_text(s)


def _run_classify(engine: WOperatorEngine, config: CommandConfig) -> str:
    if not config.perm or not config.tuple_points:
        raise WOperatorError("classify 需要 --perm 与 --tuple")
    alpha = parse_cycles(config.perm, config.n)
    sigma_bar = parse_tuple(config.tuple_points, config.n)
    result = engine.classify(alpha, sigma_bar)
    if config.output_format == "text":
        return f"τ = {result.type_tau}, 距离 = {result.distances}"
    document = classification_to_dict(alpha, sigma_bar, result.type_tau, result.distances)
    if config.output_format == "csv":
        return classification_to_csv(document)
    return json.dumps(document, ensure_ascii=False)


def _run_verify(engine: WOperatorEngine, config: CommandConfig) -> Tuple[int, str]:
    bounds = SuiteBounds(n_max=config.n_max, d_max=config.d_max, w_max=config.w_max,
                         k_max=config.k_max, matrix_n=config.N,
                         theorem_n_max=config.theorem_n_max, theorem_d_max=config.theorem_d_max,
                         cutjoin_w_max=config.cutjoin_w_max, op_w_max=config.op_w_max,
                         op_d_max=config.op_d_max)
    report = engine.verify(config.suite, bounds)
    if config.output_format == "json":
        document = report.to_json()
    elif config.output_format == "csv":
        document = rows_to_csv(report.to_csv_rows())
    else:
        document = report.to_text()
    return (EXIT_OK if report.passed else EXIT_FAILED), document


def run(config: CommandConfig, console: Console = None) -> Tuple[int, str]:
    """执行一条命令, 返回 (退出状态, 输出文档)"""
    console = console or Console(stderr=True)
    try:
        engine = WOperatorEngine(threads=config.threads, console=console)
        if config.command == "verify":
            return _run_verify(engine, config)
        handlers = {"apply": _run_apply, "hurwitz": _run_hurwitz,
                    "series": _run_series, "classify": _run_classify}
        return EXIT_OK, handlers[config.command](engine, config)
    except GradingError as e:
        console.print(f"[red]❌ 分次检查失败: {e}[/red]")
        return EXIT_FAILED, ""
    except WOperatorError as e:
        console.print(f"[red]❌ 参数错误: {e}[/red]")
        console.print(build_parser().format_usage(), end="")
        return EXIT_USAGE, ""


def main(argv: List[str] = None):
    setup_logging()
    argv = sys.argv[1:] if argv is None else argv
    console = Console(stderr=True)
    try:
        config = build_config(argv)
    except WOperatorError as e:
        console.print(f"[red]❌ 参数错误: {e}[/red]")
        console.print(build_parser().format_usage(), end="")
        sys.exit(EXIT_USAGE)

    status, document = run(config, console)
    if document:
        print(document)
        if config.output:
            try:
                path = export_document(document, config.output, config.command)
                console.print(f"📄 结果已导出到: {path}")
            except OSError as e:
                console.print(f"[yellow]⚠ 导出失败: {e}[/yellow]")
    sys.exit(status)


if __name__ == "__main__":
    main()
