"""
Cover - 覆盖模块

包含：
- cover: 覆盖表示、校验、补全、子覆盖、重标号与标准构造
- labeling: 规范 / 扭转规范标号检测
- dot_export: Graphviz 导出
"""

from .cover import (
    Cover,
    CoverReport,
    Relabeling,
    make_cover,
    validate_cover,
    ensure_valid,
    full_completion,
    subcover,
    relabel,
    canonical_cover,
    make_twister,
    random_full_cover,
)
from .labeling import (
    LabelingKind,
    LabelingWitness,
    detect_canonical,
    detect_twisted_canonical,
    tree_labeling,
    verify_witness,
    cycle_holonomy,
)
from .dot_export import cover_to_dot

__all__ = [
    'Cover',
    'CoverReport',
    'Relabeling',
    'make_cover',
    'validate_cover',
    'ensure_valid',
    'full_completion',
    'subcover',
    'relabel',
    'canonical_cover',
    'make_twister',
    'random_full_cover',
    'LabelingKind',
    'LabelingWitness',
    'detect_canonical',
    'detect_twisted_canonical',
    'tree_labeling',
    'verify_witness',
    'cycle_holonomy',
    'cover_to_dot',
]
