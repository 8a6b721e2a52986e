"""
上界着色 - G □ H 上任意 d-重覆盖的构造性着色，d = χ_DP(G) + col(H) - 1

按 H 的退化序逐个处理 G-纤维：纤维 v 上每个顶点 (u, v) 至多被 col(H) - 1 个
先处理的邻居纤维禁掉下标，剩下至少 χ_DP(G) 个；取前 χ_DP(G) 个组成 A_u，
在修剪后的 χ_DP(G)-重纤维覆盖上求一个着色。
"""

import logging
from typing import Optional

from ..core.errors import PreconditionError
from ..cover.cover import Cover, ensure_valid, subcover
from ..graph.degeneracy import coloring_number
from ..graph.graph import ProductGraph
from ..solver.exhaustive import chi_dp_exhaustive
from ..solver.search import HColoring, find_coloring, is_coloring
from .product_cover import ResidualCover


logger = logging.getLogger(__name__)


def upper_bound_fold(product: ProductGraph, chi_dp_left: Optional[int] = None, budget: Optional[int] = None) -> int:
    """d = χ_DP(G) + col(H) - 1"""
    if chi_dp_left is None:
        chi_dp_left = chi_dp_exhaustive(product.left, budget).value
    return chi_dp_left + coloring_number(product.right).width - 1


def upper_bound_coloring(
    product: ProductGraph,
    cover: Cover,
    chi_dp_left: Optional[int] = None,
    budget: Optional[int] = None,
) -> HColoring:
    """
    构造乘积覆盖的一个 H-着色

    Args:
        product: G □ H
        cover: product.graph 上的覆盖，每个列表大小至少为 d
        chi_dp_left: 已知的 χ_DP(G)；None 时穷举求出

    Raises:
        PreconditionError: 覆盖的基图不符或列表太小
        BudgetExceededError: 求 χ_DP(G) 时超过预算
    """
    ensure_valid(cover)
    if cover.base != product.graph:
        raise PreconditionError("覆盖的基图不是给定的乘积图")
    if chi_dp_left is None:
        chi_dp_left = chi_dp_exhaustive(product.left, budget).value
    ordering = coloring_number(product.right)
    d = chi_dp_left + ordering.width - 1
    smallest = min(cover.list_sizes)
    if smallest < d:
        raise PreconditionError(f"列表大小 {smallest} 小于 χ_DP(G) + col(H) - 1 = {d}")

    choice = [0] * cover.vertex_count
    done = set()
    for v in ordering.ordering:
        fiber_vertices = product.fiber(v)
        fiber = subcover(cover, fiber_vertices)
        allowed = []
        for u, flat in enumerate(fiber_vertices):
            forbidden = set()
            for w in product.right.adjacency[v]:
                if w in done:
                    other = product.index(u, w)
                    forbidden.update(j for i, j in cover.link(other, flat) if i == choice[other])
            free = [i for i in range(cover.list_sizes[flat]) if i not in forbidden]
            allowed.append(tuple(free[:chi_dp_left]))
        trimmed = ResidualCover(fiber, tuple(allowed))
        coloring = find_coloring(trimmed.to_cover())
        if coloring is None:
            raise PreconditionError(
                f"纤维 {v} 的修剪覆盖没有着色；给定的 χ_DP(G) = {chi_dp_left} 可能不正确"
            )
        for flat, index in zip(fiber_vertices, trimmed.lift(coloring)):
            choice[flat] = index
        done.add(v)
    result = HColoring(tuple(choice))
    if not is_coloring(cover, result.choice):
        logger.error("上界着色未通过校验")
        raise PreconditionError(f"拼接出的着色在整个乘积上不合法；给定的 χ_DP(G) = {chi_dp_left} 可能不正确")
    return result
