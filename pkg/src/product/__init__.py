"""
Product - G □ K_{k,t} 上的易损着色框架、坏覆盖构造与上界着色

包含：
- product_cover: 乘积覆盖、纤维视图、剩余覆盖
- volatile: 易损判定、坏覆盖判定、易损计数
- shift_classes: 移位类
- thresholds: 复制次数与纤维数下界
- constructions: 确定性构造
- randomized: 奇圈 / 偶圈随机构造
- upper_bound: 上界着色
"""

from .product_cover import (
    ProductCover,
    ResidualCover,
    assemble_product_cover,
    wrap_product_cover,
    restrict_fibers,
    residual_fiber,
    residual_for_choice,
)
from .volatile import (
    BadnessVerdict,
    VolatileCensus,
    is_volatile,
    choice_is_volatile,
    badness_verdict,
    verify_bad_witness,
    volatile_census,
)
from .shift_classes import (
    ShiftClassPartition,
    ShiftRelation,
    shift_classes_odd,
    shift_classes_twister,
)
from .thresholds import (
    Parity,
    replication_count,
    volatility_probability,
    class_count,
    minimum_t,
    deterministic_minimum_t,
)
from .constructions import construct_deterministic_bad_cover
from .randomized import (
    ConstructionParams,
    ConstructionStats,
    paired_rows_cover,
    class_rng,
    construct_odd_cycle_bad_cover,
    construct_even_cycle_bad_cover,
)
from .upper_bound import upper_bound_coloring, upper_bound_fold

__all__ = [
    'ProductCover',
    'ResidualCover',
    'assemble_product_cover',
    'wrap_product_cover',
    'restrict_fibers',
    'residual_fiber',
    'residual_for_choice',
    'BadnessVerdict',
    'VolatileCensus',
    'is_volatile',
    'choice_is_volatile',
    'badness_verdict',
    'verify_bad_witness',
    'volatile_census',
    'ShiftClassPartition',
    'ShiftRelation',
    'shift_classes_odd',
    'shift_classes_twister',
    'Parity',
    'replication_count',
    'volatility_probability',
    'class_count',
    'minimum_t',
    'deterministic_minimum_t',
    'construct_deterministic_bad_cover',
    'ConstructionParams',
    'ConstructionStats',
    'paired_rows_cover',
    'class_rng',
    'construct_odd_cycle_bad_cover',
    'construct_even_cycle_bad_cover',
    'upper_bound_coloring',
    'upper_bound_fold',
]
