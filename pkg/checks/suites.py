"""命名验证套件: 每个套件展开成一串互不依赖的工作项

工作项是顶层函数加参数, 可以直接交给进程池; 列表按规模递增排列,
所以第一个失败的工作项就是最小反例。
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

from algebra.combinat import iter_partitions, make_partition
from algebra.permgroup import (CycleTuple, Permutation, canonical_of_type, classify_tuple,
                               compose, iter_class, iter_cycle_tuples, iter_symmetric_group,
                               pi_map)
from algebra.psymring import PMonomial, PPolynomial, p_to_x_subst
from exceptions import QueryError
from hurwitz.series import (build_hhat_series, build_series_bruteforce, connected_from_log,
                            recursion_diagnostic, verify_pde, verify_recursion)
from operators.wop import (OperatorSpec, apply_operator, bridge_term, cbar_contribution,
                           commutator, cut_and_join_closed_form, delta3_closed_form,
                           group_route_image)
from operators.xmatrix import (XPolynomial, apply_D_sequential, apply_D_tuple, apply_w_truncated,
                               x_monomial_of_permutation)

logger = logging.getLogger(__name__)

SUITE_NAMES = ("theorem-w", "beta", "commute", "xmatrix", "pde", "recursion")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    label: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class WorkItem:
    suite: str
    label: str
    fn: Callable[..., Tuple[bool, str]]
    args: Tuple = ()

    def run(self) -> CheckResult:
        passed, detail = self.fn(*self.args)
        return CheckResult(self.suite, self.label, passed, detail)


def run_item(item: WorkItem) -> CheckResult:
    """进程池的入口"""
    return item.run()


@dataclass
class SuiteBounds:
    """各套件的规模上界

    n_max / d_max 约束 Hurwitz 枚举 (recursion, pde) 与矩阵实现;
    theorem-w 与割并比较、beta / commute 各用自己的上界。
    """
    n_max: int = 6
    d_max: int = 3
    w_max: int = 5
    k_max: int = 3
    matrix_n: int = 3
    theorem_n_max: int = 8
    theorem_d_max: int = 4
    cutjoin_w_max: int = 10
    op_w_max: int = 8
    op_d_max: int = 4

    def __post_init__(self):
        for name in ("n_max", "w_max", "matrix_n", "theorem_n_max", "cutjoin_w_max", "op_w_max"):
            if getattr(self, name) < 1:
                raise QueryError(f"{name} 必须为正: {getattr(self, name)}")
        if self.k_max < 0:
            raise QueryError(f"k_max 必须非负: {self.k_max}")
        for name in ("d_max", "theorem_d_max", "op_d_max"):
            if getattr(self, name) < 2:
                raise QueryError(f"{name} 至少为 2: {getattr(self, name)}")


def _monomials(w_max: int) -> List[PMonomial]:
    return [PMonomial.from_parts(lam.parts) for w in range(1, w_max + 1) for lam in iter_partitions(w)]


def _mismatch(label: str, lhs, rhs) -> Tuple[bool, str]:
    if lhs == rhs:
        return True, ""
    return False, f"{label}: 左边 {lhs}, 右边 {rhs}"


# ---------------------------------------------------------------------------
# theorem-w: 解析路径与群代数路径
# ---------------------------------------------------------------------------

def check_theorem(parts: Tuple[int, ...], d: int) -> Tuple[bool, str]:
    m = PMonomial.from_parts(parts)
    analytic = apply_operator(OperatorSpec.delta(d), PPolynomial.monomial(m))
    return _mismatch(f"Δ_{d}({m})", analytic, group_route_image(m, d))


def check_cut_and_join(parts: Tuple[int, ...]) -> Tuple[bool, str]:
    f = PPolynomial.monomial(PMonomial.from_parts(parts))
    return _mismatch(f"Δ_2 与割并闭式在 {f}", apply_operator(OperatorSpec.delta(2), f),
                     cut_and_join_closed_form(f))


def check_delta3(parts: Tuple[int, ...]) -> Tuple[bool, str]:
    f = PPolynomial.monomial(PMonomial.from_parts(parts))
    return _mismatch(f"Δ_3 与逐项展开在 {f}", apply_operator(OperatorSpec.delta(3), f),
                     delta3_closed_form(f))


def check_bridge(parts: Tuple[int, ...], d: int) -> Tuple[bool, str]:
    """按 (τ, ī) 分类后逐类比较群代数贡献与 p̂_{φ(τ)}(ī)∂/∂p̂_τ(ī)Φ(α)"""
    alpha = canonical_of_type(make_partition(parts))
    classes = sorted({(c.type_tau, c.distances)
                      for c in (classify_tuple(alpha, t) for t in iter_cycle_tuples(alpha.degree, d))},
                     key=lambda c: (c[0].images, c[1]))
    for tau, distances in classes:
        ok, detail = _mismatch(f"α={alpha}, τ={tau}, ī={distances}",
                               cbar_contribution(alpha, tau, distances),
                               bridge_term(alpha, tau, distances))
        if not ok:
            return ok, detail
    return True, ""


def plan_theorem_w(bounds: SuiteBounds) -> List[WorkItem]:
    items = []
    for n in range(1, max(bounds.theorem_n_max, bounds.cutjoin_w_max) + 1):
        for lam in iter_partitions(n):
            if n <= bounds.theorem_n_max:
                for d in range(2, bounds.theorem_d_max + 1):
                    items.append(WorkItem("theorem-w", f"d={d} λ={lam}", check_theorem, (lam.parts, d)))
            if n <= bounds.cutjoin_w_max:
                items.append(WorkItem("theorem-w", f"割并 λ={lam}", check_cut_and_join, (lam.parts,)))
            if n <= bounds.theorem_n_max and bounds.theorem_d_max >= 3:
                items.append(WorkItem("theorem-w", f"Δ_3 展开 λ={lam}", check_delta3, (lam.parts,)))
            if n <= min(bounds.theorem_n_max, 5):
                for d in range(2, min(bounds.theorem_d_max, n) + 1):
                    items.append(WorkItem("theorem-w", f"分类 d={d} α={lam}", check_bridge, (lam.parts, d)))
    return items


# ---------------------------------------------------------------------------
# beta / commute
# ---------------------------------------------------------------------------

def check_beta(beta_images: Tuple[int, ...], parts: Tuple[int, ...]) -> Tuple[bool, str]:
    beta = Permutation(beta_images)
    f = PPolynomial.monomial(PMonomial.from_parts(parts))
    return _mismatch(f"Δ_β (β={beta}) 在 {f}", apply_operator(OperatorSpec.delta_beta(beta), f),
                     apply_operator(OperatorSpec.delta(beta.degree), f))


def plan_beta(bounds: SuiteBounds) -> List[WorkItem]:
    items = []
    for m in _monomials(bounds.op_w_max):
        for d in range(2, bounds.op_d_max + 1):
            for beta in iter_class(make_partition([d])):
                items.append(WorkItem("beta", f"β={beta} {m}", check_beta, (beta.images, m.parts())))
    return items


def check_commute(d1: int, d2: int, parts: Tuple[int, ...]) -> Tuple[bool, str]:
    f = PPolynomial.monomial(PMonomial.from_parts(parts))
    value = commutator(d1, d2, f)
    return _mismatch(f"[Δ_{d1}, Δ_{d2}] 在 {f}", value, PPolynomial.zero())


def plan_commute(bounds: SuiteBounds) -> List[WorkItem]:
    items = []
    for m in _monomials(bounds.op_w_max):
        for d1, d2 in itertools.combinations(range(2, bounds.op_d_max + 1), 2):
            items.append(WorkItem("commute", f"({d1},{d2}) {m}", check_commute, (d1, d2, m.parts())))
    return items


# ---------------------------------------------------------------------------
# xmatrix: 矩阵实现
# ---------------------------------------------------------------------------

def check_intertwining(d: int, parts: Tuple[int, ...], N: int) -> Tuple[bool, str]:
    f = PPolynomial.monomial(PMonomial.from_parts(parts))
    lhs = apply_w_truncated(d, p_to_x_subst(f, N))
    rhs = p_to_x_subst(apply_operator(OperatorSpec.delta(d), f), N)
    return _mismatch(f"W([{d}]) 与代换在 {f}, N={N}", lhs, rhs)


def check_per_monomial(d: int, g_images: Tuple[int, ...], N: int) -> Tuple[bool, str]:
    """对所有标号 (a_1..a_n) ∈ {1..N}^n: W([d]) M_g(a) = Σ_σ M_{σ∘g}(a)"""
    g = Permutation(g_images)
    n = g.degree
    cycles = list(iter_class(make_partition([d] + [1] * (n - d)))) if d <= n else []
    for labels in itertools.product(range(1, N + 1), repeat=n):
        lhs = apply_w_truncated(d, XPolynomial.monomial(x_monomial_of_permutation(g, labels, N)))
        rhs = XPolynomial(N)
        for sigma in cycles:
            rhs.add_term(x_monomial_of_permutation(compose(sigma, g), labels, N), 1)
        ok, detail = _mismatch(f"g={g}, a={labels}", lhs, rhs)
        if not ok:
            return ok, detail
    return True, ""


def check_cycle_action(d: int, alpha_images: Tuple[int, ...]) -> Tuple[bool, str]:
    """单射标号下 D_{(a_{i_1}..a_{i_d})} M_α = M_{α∘(i_1…i_d)}"""
    alpha = Permutation(alpha_images)
    n = alpha.degree
    labels = tuple(range(1, n + 1))
    m_alpha = XPolynomial.monomial(x_monomial_of_permutation(alpha, labels))
    for points in itertools.permutations(range(1, n + 1), d):
        image = apply_D_tuple([labels[i - 1] for i in points], m_alpha)
        moved = compose(alpha, pi_map(CycleTuple(points, n)))
        expected = XPolynomial.monomial(x_monomial_of_permutation(moved, labels))
        ok, detail = _mismatch(f"α={alpha}, 循环 {points}", image, expected)
        if not ok:
            return ok, detail
    return True, ""


def check_normal_ordering(N: int) -> Tuple[bool, str]:
    """找一个正规序乘积与顺序作用不同的输入"""
    for degree in (1, 2):
        for labels in itertools.product(range(1, N + 1), repeat=degree):
            for g in iter_symmetric_group(degree):
                f = XPolynomial.monomial(x_monomial_of_permutation(g, labels, N))
                for a in itertools.product(range(1, N + 1), repeat=2):
                    pairs = [(a[0], a[1]), (a[1], a[0])]
                    if apply_D_tuple(list(a), f) != apply_D_sequential(pairs, f):
                        return True, f"a={a} 在 {f} 上给出不同结果"
    return False, f"N={N} 内没有找到正规序的反例"


def plan_xmatrix(bounds: SuiteBounds) -> List[WorkItem]:
    items = []
    d_cap = min(bounds.d_max, 3)
    for N in range(1, bounds.matrix_n + 1):
        for m in _monomials(min(bounds.w_max, 4)):
            for d in range(2, d_cap + 1):
                items.append(WorkItem("xmatrix", f"代换 d={d} {m} N={N}", check_intertwining,
                                      (d, m.parts(), N)))
    for n in range(1, min(bounds.n_max, 4) + 1):
        for g in iter_symmetric_group(n):
            for d in range(2, d_cap + 1):
                items.append(WorkItem("xmatrix", f"逐单项式 d={d} g={g}", check_per_monomial,
                                      (d, g.images, bounds.matrix_n)))
    for n in range(2, min(bounds.n_max, 5) + 1):
        for lam in iter_partitions(n):
            for d in range(2, min(d_cap, n) + 1):
                alpha = canonical_of_type(lam)
                items.append(WorkItem("xmatrix", f"循环作用 d={d} α={alpha}", check_cycle_action,
                                      (d, alpha.images)))
    items.append(WorkItem("xmatrix", "正规序", check_normal_ordering, (min(bounds.matrix_n, 2),)))
    return items


# ---------------------------------------------------------------------------
# pde / recursion
# ---------------------------------------------------------------------------

def check_pde(d: int, w_max: int, k_max: int) -> Tuple[bool, str]:
    report = verify_pde(d, w_max, k_max)
    return report.passed, "; ".join(report.mismatches)


def check_connected_log(d: int, w_max: int, k_max: int) -> Tuple[bool, str]:
    extracted = connected_from_log(build_hhat_series(d, w_max, k_max))
    brute = build_series_bruteforce(d, w_max, k_max, connected=True)
    return _mismatch(f"log Ĥ 与连通计数 (d={d})", extracted, brute)


def plan_pde(bounds: SuiteBounds) -> List[WorkItem]:
    items = []
    for d in range(2, bounds.d_max + 1):
        items.append(WorkItem("pde", f"d={d} w≤{bounds.w_max} k≤{bounds.k_max}", check_pde,
                              (d, bounds.w_max, bounds.k_max)))
        w = min(bounds.w_max, 5)
        items.append(WorkItem("pde", f"log d={d} w≤{w}", check_connected_log, (d, w, bounds.k_max)))
    return items


def check_recursion(n: int, d: int, k: int) -> Tuple[bool, str]:
    report = verify_recursion(n, d, k)
    return _mismatch(f"递推 n={n} d={d} k={k}", report.lhs, report.rhs)


def check_connected_form_fails(n: int, d: int, k: int) -> Tuple[bool, str]:
    report = recursion_diagnostic(n, d, k)
    if report.equal:
        return False, f"连通形式在 n={n} d={d} k={k} 意外成立: {report.lhs}"
    return True, f"连通形式不成立: 左边 {report.lhs}, 右边 {report.rhs}"


def plan_recursion(bounds: SuiteBounds) -> List[WorkItem]:
    items = []
    for n in range(1, bounds.n_max + 1):
        for d in range(2, bounds.d_max + 1):
            for k in range(1, bounds.k_max + 1):
                items.append(WorkItem("recursion", f"n={n} d={d} k={k}", check_recursion, (n, d, k)))
    items.append(WorkItem("recursion", "连通形式诊断 n=3 d=2 k=2", check_connected_form_fails, (3, 2, 2)))
    return items


PLANNERS: Dict[str, Callable[[SuiteBounds], List[WorkItem]]] = {
    "theorem-w": plan_theorem_w,
    "beta": plan_beta,
    "commute": plan_commute,
    "xmatrix": plan_xmatrix,
    "pde": plan_pde,
    "recursion": plan_recursion,
}


def plan_suite(name: str, bounds: SuiteBounds) -> List[WorkItem]:
    """"all" 依次展开全部套件"""
    names: Sequence[str] = SUITE_NAMES if name == "all" else (name,)
    items: List[WorkItem] = []
    for suite in names:
        if suite not in PLANNERS:
            raise QueryError(f"未知的验证套件: {suite}")
        planned = PLANNERS[suite](bounds)
        logger.debug("套件 %s: %d 个工作项", suite, len(planned))
        items.extend(planned)
    return items
