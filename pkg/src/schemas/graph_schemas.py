"""
Graph Schemas - 图的 JSON 模型

{"n": 顶点数, "edges": [[i, j], ...]}，下标从 0 开始
"""

from typing import List

from pydantic import BaseModel, Field, field_validator

from ..graph.degeneracy import DegeneracyOrdering
from ..graph.graph import Graph, ProductGraph, build_graph


class GraphModel(BaseModel):
    """简单无向图"""
    n: int = Field(..., ge=1, description="顶点数")
    edges: List[List[int]] = Field(default_factory=list, description="边列表，每条边为一对 0-based 下标")

    @field_validator('edges')
    @classmethod
    def _pairs(cls, edges: List[List[int]]) -> List[List[int]]:
        for edge in edges:
            if len(edge) != 2:
                raise ValueError(f"边必须是一对下标: {edge}")
        return edges

    @classmethod
    def from_domain(cls, graph: Graph) -> 'GraphModel':
        return cls(n=graph.vertex_count, edges=[list(e) for e in graph.edges])

    def to_domain(self) -> Graph:
        return build_graph(self.n, self.edges)


class ProductGraphModel(BaseModel):
    """笛卡尔积及其平铺编号"""
    graph: GraphModel = Field(..., description="平铺后的乘积图")
    left: GraphModel = Field(..., description="左因子 G")
    right: GraphModel = Field(..., description="右因子 H")
    vertex_index: List[List[int]] = Field(..., description="平铺下标 -> [u, v]")

    @classmethod
    def from_domain(cls, product: ProductGraph) -> 'ProductGraphModel':
        return cls(
            graph=GraphModel.from_domain(product.graph),
            left=GraphModel.from_domain(product.left),
            right=GraphModel.from_domain(product.right),
            vertex_index=[list(product.pair(x)) for x in product.graph.vertices],
        )


class DegeneracyModel(BaseModel):
    """着色数与退化序"""
    col: int = Field(..., description="着色数 col(G) = 退化度 + 1")
    ordering: List[int] = Field(..., description="每个顶点至多有 col-1 个前驱邻居的顶点顺序")

    @classmethod
    def from_domain(cls, degeneracy: DegeneracyOrdering) -> 'DegeneracyModel':
        return cls(col=degeneracy.width, ordering=list(degeneracy.ordering))
