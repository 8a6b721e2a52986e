"""
确定性构造 - G □ K_{k,t} 上的 (m+k-1)-重坏覆盖，m = χ_DP(G)

- 每个 X-纤维复制一个着色数最少的 (m+k-1)-重覆盖 H_G
- 每个 Y-纤维的列表前 k 个下标记为 W，其余 m-1 个下标复制一个坏的 (m-1)-重覆盖 H'_G
- 第 i 个 X-着色 I_i 在每个 u 上的 k 个选择 z_{i,u,j} 与纤维 y_i 的 W 下标 j 相连，
  于是 I_i 删光纤维 y_i 的 W，剩下的 H'_G 无着色，I_i 对 y_i 易损
"""

import itertools
import logging
from typing import Dict, List, Optional, Tuple

from ..core.errors import PreconditionError
from ..cover.cover import Cover, Pair, ensure_valid, make_cover
from ..graph.graph import Graph
from ..solver.exhaustive import chi_dp_exhaustive, pdp_exhaustive
from ..solver.search import enumerate_colorings, find_coloring
from .product_cover import ProductCover, assemble_product_cover
from .thresholds import deterministic_minimum_t


logger = logging.getLogger(__name__)


def _y_fiber_cover(graph: Graph, k: int, bad: Optional[Cover]) -> Cover:
    """W（下标 0..k-1）不带内部匹配；H'_G 平移 k 个下标"""
    extra = bad.fold if bad is not None else 0
    links: Dict[Tuple[int, int], List[Pair]] = {}
    if bad is not None:
        for edge, pairs in zip(graph.edges, bad.links):
            links[edge] = [(i + k, j + k) for i, j in pairs]
    return make_cover(graph, [k + extra] * graph.vertex_count, links)


def _auto_covers(graph: Graph, k: int, budget: Optional[int]) -> Tuple[Cover, Optional[Cover]]:
    chi = chi_dp_exhaustive(graph, budget)
    minimizing = pdp_exhaustive(graph, chi.value + k - 1, budget).witness
    logger.info("自动模式: χ_DP(G)=%d, H_G 为 %d-重", chi.value, chi.value + k - 1)
    return minimizing, chi.witness


def construct_deterministic_bad_cover(
    graph: Graph,
    k: int,
    t: Optional[int] = None,
    minimizing_cover: Optional[Cover] = None,
    bad_cover: Optional[Cover] = None,
    budget: Optional[int] = None,
) -> ProductCover:
    """
    构造 G □ K_{k,t} 的坏覆盖

    Args:
        graph: 左因子 G
        k: X 侧大小
        t: Y 侧大小；None 时取最小值 d^k
        minimizing_cover: H_G，(m+k-1)-重且着色数为 P_DP(G, m+k-1)；None 时穷举求出
        bad_cover: H'_G，坏的 (m-1)-重覆盖；m = 1 时必须为 None
        budget: 自动模式下穷举的预算

    Raises:
        PreconditionError: t < d^k，或给定的覆盖与 G、k 不匹配
        BudgetExceededError: 自动模式穷举超过预算
    """
    if k < 1:
        raise PreconditionError(f"k 必须为正整数，当前为 {k}")
    if minimizing_cover is None:
        if bad_cover is not None:
            raise PreconditionError("只给出 H'_G 时无法确定 H_G；请同时给出两者或都不给")
        minimizing_cover, bad_cover = _auto_covers(graph, k, budget)

    ensure_valid(minimizing_cover)
    fold = minimizing_cover.fold
    if minimizing_cover.base != graph or fold is None:
        raise PreconditionError("H_G 必须是 G 上各列表大小相同的覆盖")
    m = fold - k + 1
    if m < 1:
        raise PreconditionError(f"H_G 的重数 {fold} 小于 k = {k}")
    if m == 1 and bad_cover is not None:
        raise PreconditionError("m = 1 时 H'_G 为 0-重覆盖，不应给出")
    if m > 1:
        if bad_cover is None:
            raise PreconditionError(f"需要一个坏的 {m - 1}-重覆盖 H'_G")
        ensure_valid(bad_cover)
        if bad_cover.base != graph or bad_cover.fold != m - 1:
            raise PreconditionError(f"H'_G 必须是 G 上的 {m - 1}-重覆盖")
        if find_coloring(bad_cover) is not None:
            raise PreconditionError("H'_G 不是坏覆盖")

    colorings = [h.choice for h in enumerate_colorings(minimizing_cover)]
    d = len(colorings)
    needed = deterministic_minimum_t(d, k)
    t = needed if t is None else t
    if t < needed:
        raise PreconditionError(f"t = {t} 小于所需的 d^k = {d}^{k} = {needed}")

    n = graph.vertex_count
    link_matchings: Dict[Tuple[int, int], List[Pair]] = {}
    for i, combo in enumerate(itertools.product(colorings, repeat=k)):
        for j, coloring in enumerate(combo):
            for u in range(n):
                x = j * n + u
                y = (k + i) * n + u
                link_matchings[(x, y)] = [(coloring[u], j)]

    y_fiber = _y_fiber_cover(graph, k, bad_cover)
    pc = assemble_product_cover(
        graph, k, t,
        [minimizing_cover] * k,
        [y_fiber] * t,
        link_matchings,
    )
    logger.info("确定性构造: %d-重, d=%d, t=%d", fold, d, t)
    return pc
