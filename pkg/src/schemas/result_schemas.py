"""
Result Schemas - 求解、判定与验证结果的 JSON 模型
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from ..product.shift_classes import ShiftClassPartition, ShiftRelation
from ..product.volatile import BadnessVerdict, VolatileCensus
from ..solver.exhaustive import ExhaustiveResult
from ..solver.search import HColoring, SearchStats
from .cover_schemas import CoverModel


class HColoringModel(BaseModel):
    """H-着色：{"choice": [c_0, ...]}"""
    choice: List[int] = Field(..., description="每个顶点选中的列表下标")

    @classmethod
    def from_domain(cls, coloring: HColoring) -> 'HColoringModel':
        return cls(choice=list(coloring.choice))

    def to_domain(self) -> HColoring:
        return HColoring(tuple(self.choice))


class SearchStatsModel(BaseModel):
    """搜索统计"""
    nodes: int = Field(..., ge=0)
    backtracks: int = Field(..., ge=0)
    elapsed: float = Field(..., ge=0)

    @classmethod
    def from_domain(cls, stats: SearchStats) -> 'SearchStatsModel':
        return cls(nodes=stats.nodes, backtracks=stats.backtracks, elapsed=stats.elapsed)


class SolveResultModel(BaseModel):
    """solve 的结果；坏覆盖时 coloring 为 null"""
    coloring: Optional[HColoringModel] = None
    stats: SearchStatsModel

    @classmethod
    def from_domain(cls, coloring: Optional[HColoring], stats: SearchStats) -> 'SolveResultModel':
        return cls(
            coloring=HColoringModel.from_domain(coloring) if coloring is not None else None,
            stats=SearchStatsModel.from_domain(stats),
        )


class CountResultModel(BaseModel):
    count: int = Field(..., ge=0)
    stats: SearchStatsModel


class EnumerationModel(BaseModel):
    """enumerate 的结果，按字典序"""
    colorings: List[HColoringModel]
    count: int = Field(..., ge=0)
    stats: SearchStatsModel

    @classmethod
    def from_domain(cls, colorings: List[HColoring], stats: SearchStats) -> 'EnumerationModel':
        return cls(
            colorings=[HColoringModel.from_domain(h) for h in colorings],
            count=len(colorings),
            stats=SearchStatsModel.from_domain(stats),
        )


class ExhaustiveResultModel(BaseModel):
    """χ_DP / P_DP 穷举结果"""
    value: int = Field(..., description="χ_DP 或 P_DP 的值")
    witness: Optional[CoverModel] = Field(default=None, description="达到极值的覆盖")
    covers_examined: int = Field(..., ge=0, description="检查过的规范化覆盖数")

    @classmethod
    def from_domain(cls, result: ExhaustiveResult) -> 'ExhaustiveResultModel':
        return cls(
            value=result.value,
            witness=CoverModel.from_domain(result.witness) if result.witness is not None else None,
            covers_examined=result.covers_examined,
        )


class BadnessVerdictModel(BaseModel):
    """坏覆盖判定：Bad 带见证映射，Good 带整个乘积的着色"""
    verdict: str = Field(..., pattern="^(bad|good)$")
    coloring: Optional[List[int]] = Field(default=None, description="Good 时的乘积着色")
    witness: Optional[Dict[int, int]] = Field(default=None, description="X-着色序号 -> 易损纤维")
    x_coloring_count: int = Field(default=0, ge=0)

    @classmethod
    def from_domain(cls, verdict: BadnessVerdict) -> 'BadnessVerdictModel':
        if verdict.bad:
            return cls(verdict="bad", witness=dict(verdict.witness), x_coloring_count=len(verdict.x_colorings))
        return cls(verdict="good", coloring=list(verdict.coloring.choice))


class VolatileCensusModel(BaseModel):
    """易损计数"""
    c: int = Field(..., ge=0, description="X-着色个数")
    z: List[int] = Field(..., description="每个纤维上易损的 X-着色个数")
    t: int = Field(..., ge=0)
    max_z: int = Field(..., ge=0)
    certificate: bool = Field(..., description="c > max_z * t")

    @classmethod
    def from_domain(cls, census: VolatileCensus) -> 'VolatileCensusModel':
        return cls(c=census.c, z=list(census.z), t=census.t, max_z=census.max_z, certificate=census.certificate)


class ShiftClassPartitionModel(BaseModel):
    """移位类划分"""
    relation: ShiftRelation
    modulus: int = Field(..., ge=1)
    class_count: int = Field(..., ge=0)
    classes: List[List[List[int]]]

    @classmethod
    def from_domain(cls, partition: ShiftClassPartition) -> 'ShiftClassPartitionModel':
        return cls(
            relation=partition.relation,
            modulus=partition.modulus,
            class_count=len(partition.classes),
            classes=[[list(c) for c in members] for members in partition.classes],
        )


class VerificationReportModel(BaseModel):
    """单条论断的验证报告"""
    claim_id: str
    provenance: str = Field(..., description="期望值的来源说明")
    expected: Any
    computed: Any
    passed: bool
    elapsed: float = Field(..., ge=0)
    error: Optional[str] = None


class VerificationSummaryModel(BaseModel):
    """verify 动词的输出"""
    reports: List[VerificationReportModel]
    passed: int
    total: int
