"""
穷举 - 规范化覆盖空间上的 P_DP(G, m) 与 χ_DP(G)

规范化：生成森林上的边固定为恒等完美匹配，其余（自由）边各自遍历全部 m! 个置换。
覆盖空间按第一条自由边的置换划分为互不相交的分区，可以并发处理后再归约。
"""

import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Tuple, TypeVar

from ..core.config import get_config
from ..core.errors import BudgetExceededError, PreconditionError
from ..cover.cover import Cover
from ..graph.degeneracy import coloring_number
from ..graph.graph import Edge, Graph
from .search import count_colorings, find_coloring


logger = logging.getLogger(__name__)

T = TypeVar('T')


@dataclass(frozen=True)
class ExhaustiveResult:
    """穷举结果：value 为 χ_DP 或 P_DP；witness 为达到极值的覆盖"""
    value: int
    witness: Optional[Cover]
    covers_examined: int


def free_edges(graph: Graph) -> List[Edge]:
    """不在广度优先生成森林中的边（按边序）"""
    tree, _ = graph.bfs_forest()
    tree_edges = {tuple(sorted(e)) for e in tree}
    return [e for e in graph.edges if e not in tree_edges]


def normalized_cover_count(graph: Graph, fold: int) -> int:
    """规范化 m-重满覆盖的个数 (m!)^(|E| - |V| + 分量数)"""
    return math.factorial(fold) ** len(free_edges(graph))


def _guard(graph: Graph, fold: int, budget: Optional[int]) -> int:
    limit = budget if budget is not None else get_config().budget
    size = normalized_cover_count(graph, fold)
    if size > limit:
        logger.warning("规范化覆盖数 %d 超过预算 %d (m=%d)", size, limit, fold)
        raise BudgetExceededError(
            f"规范化 {fold}-重覆盖共 {size} 个，超过预算 {limit}",
            size=size,
            limit=limit,
        )
    return size


def partition_count(graph: Graph, fold: int) -> int:
    """分区个数：有自由边时为 m!，否则为 1"""
    return math.factorial(fold) if free_edges(graph) else 1


def iter_normalized_covers(graph: Graph, fold: int, partition: Optional[int] = None) -> Iterator[Cover]:
    """
    逐个产生规范化的 m-重满覆盖

    Args:
        graph: 基图
        fold: 重数 m
        partition: 只产生第一条自由边取第 partition 个置换（字典序）的覆盖；None 表示全部
    """
    if fold < 1:
        raise PreconditionError(f"重数必须为正整数，当前为 {fold}")
    free = free_edges(graph)
    perms = [tuple(enumerate(p)) for p in itertools.permutations(range(fold))]
    identity = tuple((i, i) for i in range(fold))
    position = {e: i for i, e in enumerate(free)}
    if not free:
        if partition not in (None, 0):
            return
        yield Cover(graph, (fold,) * graph.vertex_count, (identity,) * len(graph.edges))
        return
    choices = [perms] * len(free)
    if partition is not None:
        choices[0] = [perms[partition]]
    for combo in itertools.product(*choices):
        links = tuple(
            combo[position[e]] if e in position else identity
            for e in graph.edges
        )
        yield Cover(graph, (fold,) * graph.vertex_count, links)


def _run_partitions(count: int, task: Callable[[int], T], workers: int) -> List[T]:
    """按分区下标顺序返回结果；workers > 1 时用线程池并发"""
    if workers <= 1 or count <= 1:
        return [task(p) for p in range(count)]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(task, range(count)))


def pdp_exhaustive(
    graph: Graph,
    fold: int,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> ExhaustiveResult:
    """
    P_DP(G, m)：所有 m-重覆盖上 H-着色数的最小值

    Raises:
        BudgetExceededError: 规范化覆盖数超过预算
    """
    _guard(graph, fold, budget)
    workers = workers if workers is not None else get_config().workers

    def scan(partition: int) -> Tuple[Optional[int], Optional[Cover], int]:
        best, witness, seen = None, None, 0
        for cover in iter_normalized_covers(graph, fold, partition):
            seen += 1
            value = count_colorings(cover)
            if best is None or value < best:
                best, witness = value, cover
            if best == 0:
                break
        return best, witness, seen

    results = _run_partitions(partition_count(graph, fold), scan, workers)
    best, witness, examined = None, None, 0
    for value, cover, seen in results:
        examined += seen
        if value is not None and (best is None or value < best):
            best, witness = value, cover
    logger.info("P_DP: m=%d, 值=%s, 检查覆盖 %d 个", fold, best, examined)
    return ExhaustiveResult(best, witness, examined)


def find_bad_cover(
    graph: Graph,
    fold: int,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> Tuple[Optional[Cover], int]:
    """在规范化 m-重满覆盖中寻找一个坏覆盖；返回 (覆盖或 None, 检查数)"""
    _guard(graph, fold, budget)
    workers = workers if workers is not None else get_config().workers

    def scan(partition: int) -> Tuple[Optional[Cover], int]:
        seen = 0
        for cover in iter_normalized_covers(graph, fold, partition):
            seen += 1
            if find_coloring(cover) is None:
                return cover, seen
        return None, seen

    examined = 0
    for cover, seen in _run_partitions(partition_count(graph, fold), scan, workers):
        examined += seen
        if cover is not None:
            return cover, examined
    return None, examined


def chi_dp_exhaustive(
    graph: Graph,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> ExhaustiveResult:
    """
    χ_DP(G)：最小的 m，使每个 m-重覆盖都有 H-着色

    从 m = 1 起逐个寻找坏覆盖；χ_DP ≤ col(G)，所以到 col(G) - 1 为止。
    witness 为 value - 1 处的坏覆盖（value = 1 时为 None）。
    """
    upper = coloring_number(graph).width
    witness: Optional[Cover] = None
    examined = 0
    for fold in range(1, upper):
        bad, seen = find_bad_cover(graph, fold, budget, workers)
        examined += seen
        if bad is None:
            logger.info("χ_DP = %d（检查覆盖 %d 个）", fold, examined)
            return ExhaustiveResult(fold, witness, examined)
        witness = bad
    logger.info("χ_DP = col(G) = %d（检查覆盖 %d 个）", upper, examined)
    return ExhaustiveResult(upper, witness, examined)


def pdp_cycle_formula(n: int, m: int) -> int:
    """圈 C_n 的 DP 色函数闭式：奇圈 (m-1)^n - (m-1)，偶圈 (m-1)^n - 1（m ≥ 2）"""
    if n < 3 or m < 2:
        raise PreconditionError("闭式要求 n ≥ 3 且 m ≥ 2")
    if n % 2:
        return (m - 1) ** n - (m - 1)
    return (m - 1) ** n - 1
