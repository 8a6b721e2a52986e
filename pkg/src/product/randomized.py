"""
随机构造 - C_{2m+1} □ K_{k,t} 与 C_{2m+2} □ K_{k,t} 上的 (k+2)-重坏覆盖

两种构造的框架相同：
- 每个 X-纤维上的着色按移位类划分，共 b 类；k 个 X-纤维的类组合 p_a ∈ [b]^k 共 b^k 组
- 第 a 组分配 c 个专属 Y-纤维，下标 c*a .. c*a+c-1
- 对每个专属纤维和每个 j，随机取双射 σ_j：类成员 l -> 纤维下标 σ_j(l)，
  并在每个 u 上连边 (u, x_j, I_l(u)) - (u, y_q, σ_j(l))
- 若组内某个着色在所有专属纤维上都不易损，就整组重新抽样，直到重试上限

组 a 的随机流由 (seed, a) 派生，各组互相独立、可复现。
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from ..core.config import get_config
from ..core.errors import PreconditionError, RetryExhaustedError
from ..core.output_formatter import print_construct_progress
from ..cover.cover import Cover, Pair, canonical_cover, make_cover, make_twister
from ..graph.graph import Graph, standard_graph
from ..solver.search import find_coloring
from .product_cover import ProductCover, ResidualCover, assemble_product_cover
from .shift_classes import shift_classes_odd, shift_classes_twister
from .thresholds import Parity, class_count, replication_count, volatility_probability


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstructionParams:
    """随机构造参数"""
    parity: Parity
    m: int
    k: int
    t: int
    seed: int
    retry_cap: int
    replication: int

    @property
    def fold(self) -> int:
        return self.k + 2

    @property
    def cycle_length(self) -> int:
        return 2 * self.m + 1 if self.parity == Parity.ODD else 2 * self.m + 2

    def to_dict(self) -> dict:
        return {
            'parity': self.parity.value,
            'm': self.m,
            'k': self.k,
            't': self.t,
            'seed': self.seed,
            'retry_cap': self.retry_cap,
            'c_k': self.replication,
        }


@dataclass
class ConstructionStats:
    """每组的抽样次数与判据不一致次数"""
    attempts: List[int] = field(default_factory=list)
    discrepancies: int = 0

    @property
    def retries(self) -> int:
        return sum(a - 1 for a in self.attempts)


def paired_rows_cover(cycle_length: int, fold: int) -> Cover:
    """
    偶圈 Y-纤维上的成对行覆盖

    行对 (2l, 2l+1) 沿路径边恒等相连，在闭合边 (0, n-1) 上交叉相连；
    fold 为奇数时最后一行沿整个圈恒等相连。
    """
    n = cycle_length
    rows = 2 * (fold // 2)
    cycle = standard_graph('cycle', [n])
    links: Dict[Tuple[int, int], List[Pair]] = {
        (i, i + 1): [(r, r) for r in range(fold)] for i in range(n - 1)
    }
    closing = []
    for l in range(fold // 2):
        closing += [(2 * l, 2 * l + 1), (2 * l + 1, 2 * l)]
    if fold % 2:
        closing.append((rows, rows))
    links[(0, n - 1)] = closing
    return make_cover(cycle, [fold] * n, links)


def _odd_criterion(values: Sequence[int], k: int, fold: int) -> bool:
    return len(set(values)) == k


def _even_criterion(values: Sequence[int], k: int, fold: int) -> bool:
    hit = set(values)
    if len(hit) != k:
        return False
    rest = sorted(set(range(fold)) - hit)
    return rest[0] % 2 == 0 and rest[1] == rest[0] + 1 and rest[1] < 2 * (fold // 2)


class _ClassVolatility:
    """按被删下标集合缓存的易损判定；cross_check 时以剩余覆盖的定义判定为准"""

    def __init__(self, y_fiber: Cover, criterion: Callable[[Sequence[int], int, int], bool],
                 k: int, cross_check: bool, stats: ConstructionStats):
        self.y_fiber = y_fiber
        self.criterion = criterion
        self.k = k
        self.fold = y_fiber.fold
        self.cross_check = cross_check
        self.stats = stats
        self._cache: Dict[FrozenSet[int], bool] = {}

    def definitional(self, hit: FrozenSet[int]) -> bool:
        keep = tuple(i for i in range(self.fold) if i not in hit)
        residual = ResidualCover(self.y_fiber, (keep,) * self.y_fiber.vertex_count)
        return residual.is_empty or find_coloring(residual.to_cover()) is None

    def __call__(self, values: Sequence[int]) -> bool:
        key = frozenset(values)
        if key not in self._cache:
            fast = self.criterion(values, self.k, self.fold)
            if self.cross_check:
                exact = self.definitional(key)
                if exact != fast:
                    self.stats.discrepancies += 1
                    logger.warning("易损判据与定义判定不一致: 删去 %s, 判据=%s, 定义=%s",
                                   sorted(key), fast, exact)
                fast = exact
            self._cache[key] = fast
        return self._cache[key]


def class_rng(seed: int, group: int) -> np.random.Generator:
    """组 group 的独立随机流"""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(group,)))


def _sample_group(
    rng: np.random.Generator,
    params: ConstructionParams,
    volatile: _ClassVolatility,
) -> Tuple[Optional[List[List[np.ndarray]]], int, float]:
    """
    为一组抽样双射直到组内每个着色都在某个专属纤维上易损

    Returns:
        (sigmas[ℓ][j] 或 None, 抽样次数, 最好一次的覆盖比例)
    """
    k, fold, c = params.k, params.fold, params.replication
    members = list(itertools.product(range(fold), repeat=k))
    best = 0.0
    for attempt in range(1, params.retry_cap + 1):
        sigmas = [[rng.permutation(fold) for _ in range(k)] for _ in range(c)]
        covered = 0
        for s in members:
            if any(volatile([int(sigmas[l][j][s[j]]) for j in range(k)]) for l in range(c)):
                covered += 1
        if covered == len(members):
            return sigmas, attempt, 1.0
        best = max(best, covered / len(members))
    return None, params.retry_cap, best


def _build(
    params: ConstructionParams,
    graph: Graph,
    x_fiber: Cover,
    y_fiber: Cover,
    classes: Sequence[Tuple[Tuple[int, ...], ...]],
    criterion: Callable[[Sequence[int], int, int], bool],
    cross_check: Optional[bool],
    stats: Optional[ConstructionStats],
) -> ProductCover:
    k, c = params.k, params.replication
    b = len(classes)
    expected_b = class_count(params.parity, k, params.m)
    if b != expected_b:
        logger.error("移位类个数 %d 与公式 %d 不符", b, expected_b)
        raise PreconditionError(f"移位类个数 {b} 与公式给出的 {expected_b} 不符")
    if params.t < c * b ** k:
        raise PreconditionError(
            f"t = {params.t} 小于所需的 c_k * b^k = {c} * {b}^{k} = {c * b ** k}"
        )
    cross_check = get_config().cross_check if cross_check is None else cross_check
    stats = stats if stats is not None else ConstructionStats()
    volatile = _ClassVolatility(y_fiber, criterion, k, cross_check, stats)
    n = graph.vertex_count
    name = f"{params.parity.value}-cycle"

    link_matchings: Dict[Tuple[int, int], List[Pair]] = {}
    failures = []
    groups = list(itertools.product(range(b), repeat=k))
    for a, group in enumerate(groups):
        sigmas, attempts, best = _sample_group(class_rng(params.seed, a), params, volatile)
        stats.attempts.append(attempts)
        if sigmas is None:
            failures.append({'group': a, 'classes': list(group), 'attempts': attempts, 'best_fraction': best})
            continue
        for l in range(c):
            q = c * a + l
            for j in range(k):
                sigma = sigmas[l][j]
                for idx, coloring in enumerate(classes[group[j]]):
                    for u in range(n):
                        x = j * n + u
                        y = (k + q) * n + u
                        link_matchings.setdefault((x, y), []).append((coloring[u], int(sigma[idx])))
        if (a + 1) % max(1, len(groups) // 10) == 0 or a + 1 == len(groups):
            print_construct_progress(name, a + 1, len(groups), stats.retries)

    if failures:
        probability = volatility_probability(params.parity, k)
        logger.error("%d 组在 %d 次重试内未成功", len(failures), params.retry_cap)
        raise RetryExhaustedError(
            f"{len(failures)} 个类组在重试上限 {params.retry_cap} 内未能全部易损 "
            f"(单纤维易损概率 {probability})",
            [dict(f, volatility_probability=str(probability)) for f in failures],
        )
    pc = assemble_product_cover(
        graph, k, params.t,
        [x_fiber] * k,
        [y_fiber] * params.t,
        link_matchings,
    )
    logger.info("%s 构造完成: 组数 %d, 总重试 %d, 判据不一致 %d",
                name, len(groups), stats.retries, stats.discrepancies)
    return pc


def _params(parity: Parity, m: int, k: int, t: int, seed: Optional[int], retry_cap: Optional[int]) -> ConstructionParams:
    if m < 1 or k < 1:
        raise PreconditionError(f"要求 m >= 1 且 k >= 1，当前 m={m}, k={k}")
    config = get_config()
    seed = config.require_seed() if seed is None else seed
    retry_cap = config.retry_cap if retry_cap is None else retry_cap
    if retry_cap < 1:
        raise PreconditionError(f"重试上限必须至少为 1，当前为 {retry_cap}")
    return ConstructionParams(parity, m, k, t, int(seed), retry_cap, replication_count(parity, k))


def construct_odd_cycle_bad_cover(
    m: int,
    k: int,
    t: int,
    seed: Optional[int] = None,
    retry_cap: Optional[int] = None,
    cross_check: Optional[bool] = None,
    stats: Optional[ConstructionStats] = None,
) -> ProductCover:
    """
    C_{2m+1} □ K_{k,t} 的 (k+2)-重坏覆盖

    所有纤维都是规范覆盖；着色 s 对专属纤维易损当且仅当 σ_j(s_j) 两两不同。

    Raises:
        PreconditionError: t 小于 c_k * b^k
        RetryExhaustedError: 某组在重试上限内未成功
        ConfigurationError: 未提供种子
    """
    params = _params(Parity.ODD, m, k, t, seed, retry_cap)
    graph = standard_graph('cycle', [params.cycle_length])
    fiber = canonical_cover(graph, params.fold)
    classes = shift_classes_odd(params.cycle_length, params.fold).classes
    return _build(params, graph, fiber, fiber, classes, _odd_criterion, cross_check, stats)


def construct_even_cycle_bad_cover(
    m: int,
    k: int,
    t: int,
    seed: Optional[int] = None,
    retry_cap: Optional[int] = None,
    cross_check: Optional[bool] = None,
    stats: Optional[ConstructionStats] = None,
) -> ProductCover:
    """
    C_{2m+2} □ K_{k,t} 的 (k+2)-重坏覆盖

    X-纤维为扭转覆盖，Y-纤维为成对行覆盖；着色 s 对专属纤维易损当且仅当
    σ_j(s_j) 两两不同且剩下的两个下标恰是一个行对。

    Raises:
        同 construct_odd_cycle_bad_cover
    """
    params = _params(Parity.EVEN, m, k, t, seed, retry_cap)
    graph = standard_graph('cycle', [params.cycle_length])
    x_fiber = make_twister(m + 1, params.fold)
    y_fiber = paired_rows_cover(params.cycle_length, params.fold)
    classes = shift_classes_twister(x_fiber).classes
    return _build(params, graph, x_fiber, y_fiber, classes, _even_criterion, cross_check, stats)
