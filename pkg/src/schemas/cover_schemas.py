"""
Cover Schemas - 覆盖、乘积覆盖与标号见证的 JSON 模型

{"graph": <Graph>, "list_sizes": [m_0, ...], "links": [{"edge": [u, v], "pairs": [[i, j], ...]}, ...]}
下标从 0 开始；pairs 中的 (i, j) 对应 (edge[0] 的下标, edge[1] 的下标)
"""

from typing import List, Optional

from pydantic import BaseModel, Field

from ..cover.cover import Cover, Relabeling, make_cover
from ..cover.labeling import LabelingKind, LabelingWitness
from ..graph.graph import Graph
from ..product.product_cover import ProductCover, wrap_product_cover
from .graph_schemas import GraphModel


class LinkModel(BaseModel):
    """一条边上的匹配"""
    edge: List[int] = Field(..., min_length=2, max_length=2, description="基图的边 [u, v]")
    pairs: List[List[int]] = Field(default_factory=list, description="交叉边 [[i, j], ...]")


class CoverModel(BaseModel):
    """覆盖"""
    graph: GraphModel = Field(..., description="基图")
    list_sizes: List[int] = Field(..., description="每个顶点的列表大小")
    links: List[LinkModel] = Field(default_factory=list, description="逐边匹配，未列出的边为空匹配")

    @classmethod
    def from_domain(cls, cover: Cover) -> 'CoverModel':
        return cls(
            graph=GraphModel.from_domain(cover.base),
            list_sizes=list(cover.list_sizes),
            links=[
                LinkModel(edge=list(edge), pairs=[list(p) for p in pairs])
                for edge, pairs in zip(cover.base.edges, cover.links)
            ],
        )

    def to_domain(self, graph: Optional[Graph] = None) -> Cover:
        """不做覆盖公理校验，校验见 validate_cover"""
        base = graph if graph is not None else self.graph.to_domain()
        links = {}
        for link in self.links:
            links.setdefault(tuple(link.edge), []).extend(link.pairs)
        return make_cover(base, self.list_sizes, links)


class ProductCoverModel(BaseModel):
    """G □ K_{k,t} 上的覆盖"""
    cover: CoverModel = Field(..., description="平铺的覆盖")
    left: GraphModel = Field(..., description="左因子 G")
    k: int = Field(..., ge=1, description="X 侧大小")
    t: int = Field(..., ge=0, description="Y 侧大小")
    seed: Optional[int] = Field(default=None, description="随机构造使用的种子")

    @classmethod
    def from_domain(cls, pc: ProductCover, seed: Optional[int] = None) -> 'ProductCoverModel':
        return cls(
            cover=CoverModel.from_domain(pc.cover),
            left=GraphModel.from_domain(pc.left),
            k=pc.k,
            t=pc.t,
            seed=seed,
        )

    def to_domain(self) -> ProductCover:
        return wrap_product_cover(self.cover.to_domain(), self.left.to_domain(), self.k, self.t)


class RelabelingModel(BaseModel):
    """逐顶点的列表置换"""
    perms: List[List[int]] = Field(..., description="perms[v][旧下标] = 新下标")

    @classmethod
    def from_domain(cls, relabeling: Relabeling) -> 'RelabelingModel':
        return cls(perms=[list(p) for p in relabeling.perms])

    def to_domain(self) -> Relabeling:
        return Relabeling(tuple(tuple(p) for p in self.perms))


class LabelingWitnessModel(BaseModel):
    """规范 / 扭转规范标号见证"""
    kind: LabelingKind = Field(..., description="canonical 或 twisted_canonical")
    relabeling: RelabelingModel
    twist_edge: Optional[List[int]] = Field(default=None, description="扭转边，仅扭转规范标号有")

    @classmethod
    def from_domain(cls, witness: LabelingWitness) -> 'LabelingWitnessModel':
        return cls(
            kind=witness.kind,
            relabeling=RelabelingModel.from_domain(witness.relabeling),
            twist_edge=list(witness.twist_edge) if witness.twist_edge is not None else None,
        )

    def to_domain(self) -> LabelingWitness:
        twist = tuple(self.twist_edge) if self.twist_edge is not None else None
        return LabelingWitness(self.kind, self.relabeling.to_domain(), twist)
