"""
退化序 - 着色数 col(G) 与最小最后序 (smallest-last)

反复删去当前度数最小的顶点（同度取下标最小），删除序列的逆序
就是每个顶点至多有 degeneracy 个前驱邻居的排列。
"""

from dataclasses import dataclass
from typing import List, Tuple

from .graph import Graph


@dataclass(frozen=True)
class DegeneracyOrdering:
    """退化序：ordering 中每个顶点在其之前的邻居数不超过 width - 1"""
    ordering: Tuple[int, ...]
    width: int

    def back_degree(self, graph: Graph, v: int) -> int:
        position = {x: i for i, x in enumerate(self.ordering)}
        return sum(1 for w in graph.adjacency[v] if position[w] < position[v])


def coloring_number(graph: Graph) -> DegeneracyOrdering:
    """
    计算着色数与对应顶点顺序

    Returns:
        DegeneracyOrdering，width = degeneracy + 1 = col(G)
    """
    degree = [graph.degree(v) for v in graph.vertices]
    removed = [False] * graph.vertex_count
    removal: List[int] = []
    degeneracy = 0
    for _ in graph.vertices:
        v = min(
            (x for x in graph.vertices if not removed[x]),
            key=lambda x: (degree[x], x),
        )
        degeneracy = max(degeneracy, degree[v])
        removed[v] = True
        removal.append(v)
        for w in graph.adjacency[v]:
            if not removed[w]:
                degree[w] -= 1
    return DegeneracyOrdering(tuple(reversed(removal)), degeneracy + 1)
