"""W算子引擎 - 核心调度模块"""
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Sequence, Tuple

from rich.console import Console
from rich.panel import Panel
from rich.progress import BarColumn, MofNCompleteColumn, Progress, SpinnerColumn, TextColumn

from algebra.combinat import iter_partitions
from algebra.permgroup import CycleTuple, Permutation, TupleClassification, classify_tuple
from algebra.psymring import PMonomial, PPolynomial, ZSeries, p_to_x_subst
from checks.suites import CheckResult, SuiteBounds, plan_suite, run_item
from config import DEFAULT_THREADS
from exceptions import QueryError
from hurwitz.counting import Shard, count_tuples
from hurwitz.series import build_hhat_series, connected_from_log
from operators.wop import OperatorSpec, apply_operator
from operators.xmatrix import XPolynomial, apply_w_truncated
from report import VerificationReport
from utils import HurwitzRow

logger = logging.getLogger(__name__)


def _apply_monomial(op: OperatorSpec, m: PMonomial) -> PPolynomial:
    return apply_operator(op, PPolynomial.monomial(m))


def _apply_matrix_monomial(d: int, m: PMonomial, N: int) -> XPolynomial:
    return apply_w_truncated(d, p_to_x_subst(PPolynomial.monomial(m), N))


def _count_shard(n: int, d: int, k: int, connected: bool, shard: Shard):
    return count_tuples(n, d, k, connected, shard)


class WOperatorEngine:
    """协调算子作用、Hurwitz 计数与验证套件; 唯一负责调度的地方

    threads == 1 时全部在当前进程内顺序执行; 否则把互不依赖的工作项交给进程池,
    结果按提交顺序合并, 所以输出与线程数无关。
    """

    def __init__(self, threads: int = DEFAULT_THREADS, console: Console = None):
        if threads < 1:
            raise QueryError(f"线程数必须为正: {threads}")
        self.threads = threads
        self.console = console or Console(stderr=True)

    def _map(self, fn: Callable, args: Sequence[Tuple], description: str = "") -> List:
        """按顺序返回 fn(*a) 的结果"""
        if self.threads == 1 or len(args) <= 1:
            return [fn(*a) for a in args]
        logger.debug("%s: %d 个工作项, %d 个进程", description, len(args), self.threads)
        with ProcessPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(fn, *zip(*args)))

    def apply(self, op: OperatorSpec, f: PPolynomial) -> PPolynomial:
        """逐单项式作用后按固定顺序求和"""
        items = [(m, c) for m, c in f.sorted_terms()]
        images = self._map(_apply_monomial, [(op, m) for m, _ in items], str(op))
        result = PPolynomial()
        for (_, c), image in zip(items, images):
            result = result + image.scale(c)
        return result

    def apply_matrix(self, d: int, f: PPolynomial, N: int) -> XPolynomial:
        """(1/d):tr(D^d): 作用在 f(tr X, tr X², …) 上"""
        items = f.sorted_terms()
        images = self._map(_apply_matrix_monomial, [(d, m, N) for m, _ in items], f"W([{d}]) N={N}")
        result = XPolynomial(N)
        for (_, c), image in zip(items, images):
            result = result + image.scale(c)
        return result

    def _count(self, n: int, d: int, k: int, connected: bool) -> Counter:
        shards = [(n, d, k, connected, (i, self.threads)) for i in range(self.threads)]
        tally: Counter = Counter()
        for part in self._map(_count_shard, shards, f"计数 n={n} d={d} k={k}"):
            tally.update(part)
        return tally

    def hurwitz_rows(self, n: int, d: int, k: int) -> List[HurwitzRow]:
        """n 的每个分拆一行 (n, d, k, α, h, ĥ)"""
        if n < 1 or d < 2 or k < 0:
            raise QueryError(f"需要 n ≥ 1, d ≥ 2, k ≥ 0, 得到 n={n}, d={d}, k={k}")
        with self.console.status(f"[green]枚举 S_{n} 中的 {d}-循环元组 (k={k})...[/green]"):
            connected = self._count(n, d, k, True)
            disconnected = self._count(n, d, k, False)
        rows = [(n, d, k, alpha, connected.get(alpha, 0), disconnected.get(alpha, 0))
                for alpha in iter_partitions(n)]
        return sorted(rows, key=lambda r: tuple(-p for p in r[3].parts))

    def series(self, d: int, w_max: int, k_max: int, connected: bool = False) -> ZSeries:
        with self.console.status(f"[green]沿 W-流展开 Ĥ^[{d}] (w ≤ {w_max}, k ≤ {k_max})...[/green]"):
            s = build_hhat_series(d, w_max, k_max)
            return connected_from_log(s) if connected else s

    def classify(self, alpha: Permutation, sigma_bar: CycleTuple) -> TupleClassification:
        return classify_tuple(alpha, sigma_bar)

    def verify(self, suite: str, bounds: SuiteBounds) -> VerificationReport:
        """展开套件、分发工作项, 并按计划顺序记录结果"""
        items = plan_suite(suite, bounds)
        report = VerificationReport(suite, vars(bounds))
        self.console.print(Panel(f"[bold]{suite}[/bold]  {len(items)} 项检查, {self.threads} 个进程",
                                 title="[bold magenta]验证[/bold magenta]", border_style="magenta"))
        with Progress(SpinnerColumn(), TextColumn("[progress.description]{task.description}"),
                      BarColumn(), MofNCompleteColumn(), console=self.console) as progress:
            task = progress.add_task("检查中...", total=len(items))
            for result in self._iter_results(items):
                report.add_result(result)
                progress.advance(task)
                if not result.passed:
                    logger.warning("[%s] %s: %s", result.suite, result.label, result.detail)
        return report

    def _iter_results(self, items: Sequence) -> Iterable[CheckResult]:
        if self.threads == 1:
            for item in items:
                yield run_item(item)
            return
        with ProcessPoolExecutor(max_workers=self.threads) as pool:
            yield from pool.map(run_item, items, chunksize=max(1, len(items) // (8 * self.threads)))
