"""
Solver - 精确求解模块

包含：
- search: H-着色的存在性、计数、枚举、贪心
- transfer: 单圈覆盖的转移矩阵计数
- exhaustive: 规范化覆盖空间上的 P_DP 与 χ_DP
"""

from .search import (
    HColoring,
    SearchStats,
    is_coloring,
    find_coloring,
    count_colorings,
    enumerate_colorings,
    greedy_coloring,
)
from .transfer import cycle_transfer_count, edge_matrix
from .exhaustive import (
    ExhaustiveResult,
    free_edges,
    normalized_cover_count,
    partition_count,
    iter_normalized_covers,
    pdp_exhaustive,
    find_bad_cover,
    chi_dp_exhaustive,
    pdp_cycle_formula,
)

__all__ = [
    'HColoring',
    'SearchStats',
    'is_coloring',
    'find_coloring',
    'count_colorings',
    'enumerate_colorings',
    'greedy_coloring',
    'cycle_transfer_count',
    'edge_matrix',
    'ExhaustiveResult',
    'free_edges',
    'normalized_cover_count',
    'partition_count',
    'iter_normalized_covers',
    'pdp_exhaustive',
    'find_bad_cover',
    'chi_dp_exhaustive',
    'pdp_cycle_formula',
]
