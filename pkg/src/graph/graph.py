"""
图核心 - 简单无向图、标准图族与笛卡尔积

顶点用 0..n-1 的整数下标表示；边规范化为 (小下标, 大下标) 并排序存储。
构造后不可变，邻接表在构造时一次性建立。
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..core.errors import GraphValidationError, PreconditionError


logger = logging.getLogger(__name__)


Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    简单无向图

    {
        "n": 顶点数,
        "edges": [[i, j], ...]  (0-based, i < j)
    }
    """
    vertex_count: int
    edges: Tuple[Edge, ...]
    adjacency: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _edge_position: Dict[Edge, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        neighbors: List[List[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        object.__setattr__(self, 'adjacency', tuple(tuple(sorted(n)) for n in neighbors))
        object.__setattr__(self, '_edge_position', {e: i for i, e in enumerate(self.edges)})

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self._edge_position

    def edge_index(self, u: int, v: int) -> int:
        """返回边在 edges 中的位置，不存在时抛出 KeyError"""
        return self._edge_position[normalize_edge(u, v)]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def components(self) -> List[List[int]]:
        """连通分量，每个分量内部按下标排序，分量按最小下标排序"""
        parts = [sorted(c) for c in nx.connected_components(self.to_networkx())]
        return sorted(parts, key=lambda c: c[0])

    def is_tree(self) -> bool:
        return self.vertex_count >= 1 and nx.is_tree(self.to_networkx())

    def is_single_cycle(self) -> bool:
        """是否恰好是一个圈 C_n (n >= 3)"""
        return (
            self.vertex_count >= 3
            and len(self.edges) == self.vertex_count
            and all(self.degree(v) == 2 for v in self.vertices)
            and len(self.components()) == 1
        )

    def cycle_order(self) -> List[int]:
        """单圈图的循环顶点顺序，从 0 出发走向较小的邻居"""
        if not self.is_single_cycle():
            raise PreconditionError("该图不是单个圈，无法给出循环顺序")
        order = [0]
        prev, current = None, 0
        while True:
            a, b = self.adjacency[current]
            nxt = a if a != prev else b
            if nxt == 0:
                break
            order.append(nxt)
            prev, current = current, nxt
        return order

    def bfs_forest(self, skip: Optional[Edge] = None) -> Tuple[List[Tuple[int, int]], List[int]]:
        """
        广度优先生成森林（从顶点 0 开始，其余分量从最小未访问顶点开始）

        Args:
            skip: 视为不存在的一条边

        Returns:
            (树边列表 [(父, 子)], 每个顶点所属分量的根)
        """
        blocked = normalize_edge(*skip) if skip is not None else None
        root_of = [-1] * self.vertex_count
        tree: List[Tuple[int, int]] = []
        for root in self.vertices:
            if root_of[root] != -1:
                continue
            root_of[root] = root
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if normalize_edge(u, w) == blocked:
                        continue
                    if root_of[w] == -1:
                        root_of[w] = root
                        tree.append((u, w))
                        queue.append(w)
        return tree, root_of


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def build_graph(vertex_count: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    构造并校验一个简单图

    Args:
        vertex_count: 顶点数（至少为 1）
        edges: 无序下标对序列

    Returns:
        Graph 实例

    Raises:
        GraphValidationError: 自环、重边或越界下标
    """
    if vertex_count < 1:
        raise GraphValidationError(f"顶点数必须为正整数，当前为 {vertex_count}")
    seen = set()
    for pair in edges:
        if len(pair) != 2:
            raise GraphValidationError(f"边必须是一对下标: {list(pair)}")
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphValidationError(f"边 {[u, v]} 的端点越界（顶点数 {vertex_count}）")
        if u == v:
            raise GraphValidationError(f"不允许自环: {[u, v]}")
        e = normalize_edge(u, v)
        if e in seen:
            raise GraphValidationError(f"重复的边: {list(e)}")
        seen.add(e)
    return Graph(vertex_count, tuple(sorted(seen)))


class GraphKind(str, Enum):
    """标准图族"""
    CYCLE = "cycle"
    PATH = "path"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"


def standard_graph(kind: str, params: Sequence[int]) -> Graph:
    """
    按约定编号构造标准图族

    - cycle [n]: 顶点 0..n-1 按循环顺序，n >= 3
    - path [n]: 顶点 0..n-1 顺次相连
    - complete [n]: K_n
    - complete_bipartite [a, b]: X 部分为 0..a-1，Y 部分为 a..a+b-1
    """
    kind = GraphKind(kind)
    params = [int(p) for p in params]
    if kind == GraphKind.COMPLETE_BIPARTITE:
        if len(params) != 2 or params[0] < 0 or params[1] < 0 or sum(params) < 1:
            raise PreconditionError(f"complete_bipartite 需要两个非负参数且总顶点数为正: {params}")
        a, b = params
        return build_graph(a + b, [(x, a + y) for x in range(a) for y in range(b)])
    if len(params) != 1:
        raise PreconditionError(f"{kind.value} 只接受一个参数: {params}")
    n = params[0]
    if kind == GraphKind.CYCLE:
        if n < 3:
            raise PreconditionError(f"圈至少需要 3 个顶点，当前为 {n}")
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if n < 1:
        raise PreconditionError(f"{kind.value} 至少需要 1 个顶点，当前为 {n}")
    if kind == GraphKind.PATH:
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def induced_subgraph(graph: Graph, subset: Iterable[int]) -> Tuple[Graph, List[int]]:
    """
    诱导子图

    Returns:
        (子图, 原顶点列表)，子图中第 i 个顶点对应原图的 vertices[i]
    """
    vertices = sorted(set(subset))
    if not vertices:
        raise PreconditionError("诱导子图的顶点集合不能为空")
    position = {v: i for i, v in enumerate(vertices)}
    edges = [
        (position[u], position[v]) for u, v in graph.edges
        if u in position and v in position
    ]
    return build_graph(len(vertices), edges), vertices


@dataclass(frozen=True)
class ProductGraph:
    """
    笛卡尔积 G □ H

    顶点 (u, v) 的平铺下标为 v * |V(G)| + u，
    因此每个 G-纤维 G × {v} 占据一段连续下标。
    """
    graph: Graph
    left: Graph
    right: Graph

    def index(self, u: int, v: int) -> int:
        return v * self.left.vertex_count + u

    def pair(self, flat: int) -> Tuple[int, int]:
        v, u = divmod(flat, self.left.vertex_count)
        return u, v

    def fiber(self, v: int) -> List[int]:
        """右因子顶点 v 上的 G-纤维（平铺下标，按 u 排序）"""
        return [self.index(u, v) for u in self.left.vertices]

    @property
    def vertex_index(self) -> Dict[Tuple[int, int], int]:
        return {
            (u, v): self.index(u, v)
            for v in self.right.vertices for u in self.left.vertices
        }


def cartesian_product(left: Graph, right: Graph) -> ProductGraph:
    """
    笛卡尔积：(u,v)~(u',v') 当且仅当 u=u' 且 vv' 是右因子的边，
    或 v=v' 且 uu' 是左因子的边
    """
    n_left = left.vertex_count
    edges = []
    for v in right.vertices:
        for a, b in left.edges:
            edges.append((v * n_left + a, v * n_left + b))
    for u in left.vertices:
        for a, b in right.edges:
            edges.append((a * n_left + u, b * n_left + u))
    product = build_graph(n_left * right.vertex_count, edges)
    logger.debug("笛卡尔积: %d 顶点, %d 边", product.vertex_count, len(product.edges))
    return ProductGraph(product, left, right)
