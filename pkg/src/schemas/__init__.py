"""
Schemas - JSON 文档的 pydantic 模型
"""

from .common import SuccessResponse, ErrorResponse
from .graph_schemas import GraphModel, ProductGraphModel, DegeneracyModel
from .cover_schemas import (
    LinkModel,
    CoverModel,
    ProductCoverModel,
    RelabelingModel,
    LabelingWitnessModel,
)
from .result_schemas import (
    HColoringModel,
    SearchStatsModel,
    SolveResultModel,
    CountResultModel,
    EnumerationModel,
    ExhaustiveResultModel,
    BadnessVerdictModel,
    VolatileCensusModel,
    ShiftClassPartitionModel,
    VerificationReportModel,
    VerificationSummaryModel,
)

__all__ = [
    'SuccessResponse',
    'ErrorResponse',
    'GraphModel',
    'ProductGraphModel',
    'DegeneracyModel',
    'LinkModel',
    'CoverModel',
    'ProductCoverModel',
    'RelabelingModel',
    'LabelingWitnessModel',
    'HColoringModel',
    'SearchStatsModel',
    'SolveResultModel',
    'CountResultModel',
    'EnumerationModel',
    'ExhaustiveResultModel',
    'BadnessVerdictModel',
    'VolatileCensusModel',
    'ShiftClassPartitionModel',
    'VerificationReportModel',
    'VerificationSummaryModel',
]
