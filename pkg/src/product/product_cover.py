"""
乘积覆盖 - M = G □ K_{k,t} 上的覆盖及其纤维视图

编号约定：
- K_{k,t} 的 X 侧为 0..k-1，Y 侧为 k..k+t-1
- 乘积顶点 (u, v) 的平铺下标为 v * |V(G)| + u
- 因此 X-子覆盖恰好是平铺下标 0..k|V(G)|-1，下标不变；
  Y-纤维 q 的顶点 (u, y_q) 在纤维覆盖中的下标为 u
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..core.errors import CoverValidationError, PreconditionError
from ..cover.cover import Cover, Pair, ensure_valid, make_cover, subcover
from ..graph.graph import Graph, ProductGraph, cartesian_product, standard_graph
from ..solver.search import HColoring, is_coloring


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProductCover:
    """
    G □ K_{k,t} 上的覆盖

    {
        "cover": 平铺的覆盖,
        "k": X 侧大小,
        "t": Y 侧大小
    }
    """
    cover: Cover
    product: ProductGraph
    k: int
    t: int
    _views: Dict[object, object] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, '_views', {})

    @property
    def left(self) -> Graph:
        return self.product.left

    @property
    def fiber_size(self) -> int:
        return self.product.left.vertex_count

    def x_vertex(self, u: int, j: int) -> int:
        return self.product.index(u, j)

    def y_vertex(self, u: int, q: int) -> int:
        return self.product.index(u, self.k + q)

    def x_vertices(self) -> List[int]:
        return list(range(self.k * self.fiber_size))

    def x_subcover(self) -> Cover:
        """X 侧的子覆盖 H_X（k 份互不相连的 G）"""
        if 'x' not in self._views:
            self._views['x'] = subcover(self.cover, self.x_vertices())
        return self._views['x']

    def y_fiber_cover(self, q: int) -> Cover:
        """Y-纤维 M_{y_q} 上的子覆盖 H_{y_q}"""
        self._check_fiber(q)
        key = ('y', q)
        if key not in self._views:
            self._views[key] = subcover(self.cover, self.product.fiber(self.k + q))
        return self._views[key]

    def x_fiber_cover(self, j: int) -> Cover:
        if not 0 <= j < self.k:
            raise PreconditionError(f"X 侧下标 {j} 越界（k = {self.k}）")
        return subcover(self.cover, self.product.fiber(j))

    def _check_fiber(self, q: int) -> None:
        if not 0 <= q < self.t:
            raise PreconditionError(f"纤维下标 {q} 越界（t = {self.t}）")

    def cross_links(self, q: int) -> List[Tuple[int, int, Dict[int, int]]]:
        """
        X 侧指向纤维 q 的交叉匹配

        Returns:
            [(u, X 侧平铺顶点, {X 下标: 纤维下标}), ...]
        """
        self._check_fiber(q)
        key = ('links', q)
        if key in self._views:
            return self._views[key]
        result = []
        for u in self.left.vertices:
            y = self.y_vertex(u, q)
            for j in range(self.k):
                x = self.x_vertex(u, j)
                pairs = self.cover.link(x, y)
                if pairs:
                    result.append((u, x, dict(pairs)))
        self._views[key] = result
        return result


def bipartite_right_factor(k: int, t: int) -> Graph:
    if k < 1 or t < 0:
        raise PreconditionError(f"K_{{k,t}} 要求 k >= 1 且 t >= 0，当前 k={k}, t={t}")
    return standard_graph('complete_bipartite', [k, t])


def wrap_product_cover(cover: Cover, left: Graph, k: int, t: int) -> ProductCover:
    """
    把平铺覆盖包装成 ProductCover，并检查其基图确为 G □ K_{k,t}

    Raises:
        PreconditionError: 基图与 G □ K_{k,t} 不一致
    """
    product = cartesian_product(left, bipartite_right_factor(k, t))
    if cover.base != product.graph:
        raise PreconditionError("覆盖的基图不是 G □ K_{k,t}（按平铺编号）")
    ensure_valid(cover)
    return ProductCover(cover, product, k, t)


def assemble_product_cover(
    graph: Graph,
    k: int,
    t: int,
    x_fiber_covers: Sequence[Cover],
    y_fiber_covers: Sequence[Cover],
    link_matchings: Optional[Mapping[Tuple[int, int], Iterable[Sequence[int]]]] = None,
) -> ProductCover:
    """
    由各纤维上的覆盖与纤维之间的交叉匹配组装乘积覆盖

    Args:
        graph: 左因子 G
        k, t: K_{k,t} 的两侧大小
        x_fiber_covers: k 个 G 上的覆盖
        y_fiber_covers: t 个 G 上的覆盖
        link_matchings: {(平铺顶点 a, 平铺顶点 b): [(a 的下标, b 的下标), ...]}

    Raises:
        CoverValidationError: 匹配所在位置不是乘积的边，或违反覆盖公理
        PreconditionError: 纤维数量或纤维基图不符
    """
    if len(x_fiber_covers) != k or len(y_fiber_covers) != t:
        raise PreconditionError(
            f"需要 {k} 个 X-纤维覆盖和 {t} 个 Y-纤维覆盖，"
            f"实际为 {len(x_fiber_covers)} 和 {len(y_fiber_covers)}"
        )
    product = cartesian_product(graph, bipartite_right_factor(k, t))
    fibers = list(x_fiber_covers) + list(y_fiber_covers)
    list_sizes = [0] * product.graph.vertex_count
    links: Dict[Tuple[int, int], List[Pair]] = {}
    for v, fiber in enumerate(fibers):
        if fiber.base != graph:
            raise PreconditionError(f"第 {v} 个纤维覆盖的基图不是 G")
        for u in graph.vertices:
            list_sizes[product.index(u, v)] = fiber.list_sizes[u]
        for (a, b), pairs in zip(graph.edges, fiber.links):
            links[(product.index(a, v), product.index(b, v))] = list(pairs)
    for (a, b), pairs in (link_matchings or {}).items():
        if not product.graph.has_edge(a, b):
            raise CoverValidationError(
                f"交叉匹配位置 {[a, b]} 不是乘积图的边",
                [f"non-edge {[a, b]}"],
            )
        links.setdefault((a, b), []).extend(tuple(p) for p in pairs)
    cover = ensure_valid(make_cover(product.graph, list_sizes, links))
    logger.debug("组装乘积覆盖: k=%d, t=%d, 顶点 %d", k, t, cover.vertex_count)
    return ProductCover(cover, product, k, t)


def restrict_fibers(pc: ProductCover, t: int) -> ProductCover:
    """只保留 X 侧与前 t 个 Y-纤维"""
    if not 0 <= t <= pc.t:
        raise PreconditionError(f"t' 必须在 0..{pc.t} 之间，当前为 {t}")
    keep = range((pc.k + t) * pc.fiber_size)
    return wrap_product_cover(subcover(pc.cover, keep), pc.left, pc.k, t)


@dataclass(frozen=True)
class ResidualCover:
    """纤维在删去被 X-着色支配的顶点后的剩余覆盖"""
    fiber: Cover
    surviving: Tuple[Tuple[int, ...], ...]

    @property
    def is_empty(self) -> bool:
        """某个顶点的剩余列表为空"""
        return any(not s for s in self.surviving)

    def to_cover(self) -> Optional[Cover]:
        """
        剩余列表重新编号为 0..|D|-1 后的覆盖；有空列表时返回 None
        """
        if self.is_empty:
            return None
        position = [{old: new for new, old in enumerate(s)} for s in self.surviving]
        links = {}
        for (u, v), pairs in zip(self.fiber.base.edges, self.fiber.links):
            links[(u, v)] = [
                (position[u][i], position[v][j])
                for i, j in pairs
                if i in position[u] and j in position[v]
            ]
        return make_cover(self.fiber.base, [len(s) for s in self.surviving], links)

    def lift(self, coloring: HColoring) -> Tuple[int, ...]:
        """把剩余覆盖上的着色映射回纤维的原始下标"""
        return tuple(self.surviving[u][i] for u, i in enumerate(coloring.choice))


def residual_fiber(pc: ProductCover, x_coloring: HColoring, q: int) -> ResidualCover:
    """
    纤维 q 相对 X-着色 I_X 的剩余覆盖

    Raises:
        PreconditionError: I_X 不是 X-子覆盖的 H-着色，或 q 越界
    """
    if not is_coloring(pc.x_subcover(), x_coloring.choice):
        raise PreconditionError("I_X 不是 X-子覆盖的 H-着色")
    return residual_for_choice(pc, x_coloring.choice, q)


def residual_for_choice(pc: ProductCover, x_choice: Sequence[int], q: int) -> ResidualCover:
    """同 residual_fiber，但不重新校验 x_choice"""
    fiber = pc.y_fiber_cover(q)
    killed: List[set] = [set() for _ in pc.left.vertices]
    for u, x, mapping in pc.cross_links(q):
        if x_choice[x] in mapping:
            killed[u].add(mapping[x_choice[x]])
    surviving = tuple(
        tuple(i for i in range(fiber.list_sizes[u]) if i not in killed[u])
        for u in pc.left.vertices
    )
    return ResidualCover(fiber, surviving)
