"""
Graph - 图核心模块

包含：
- graph: 简单图、标准图族、笛卡尔积
- degeneracy: 退化序与着色数
"""

from .graph import (
    Edge,
    Graph,
    GraphKind,
    ProductGraph,
    build_graph,
    standard_graph,
    induced_subgraph,
    cartesian_product,
    normalize_edge,
)
from .degeneracy import DegeneracyOrdering, coloring_number

__all__ = [
    'Edge',
    'Graph',
    'GraphKind',
    'ProductGraph',
    'build_graph',
    'standard_graph',
    'induced_subgraph',
    'cartesian_product',
    'normalize_edge',
    'DegeneracyOrdering',
    'coloring_number',
]
