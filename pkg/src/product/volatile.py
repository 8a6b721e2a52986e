"""
易损着色 - 坏覆盖判定与易损计数

X-着色 I_X 对纤维 q 易损，当且仅当删去被 I_X 支配的顶点后纤维的剩余覆盖没有 H-着色。
乘积覆盖是坏覆盖，当且仅当每个 X-着色都对某个纤维易损。
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.config import get_config
from ..core.errors import BudgetExceededError, CoverValidationError, PreconditionError
from ..solver.search import HColoring, count_colorings, enumerate_colorings, find_coloring, is_coloring
from .product_cover import ProductCover, residual_for_choice


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BadnessVerdict:
    """
    坏覆盖判定

    bad=True 时 witness 把每个 X-着色的枚举序号映射到它易损的纤维；
    bad=False 时 coloring 是整个乘积上的 H-着色。
    """
    bad: bool
    coloring: Optional[HColoring] = None
    witness: Dict[int, int] = field(default_factory=dict)
    x_colorings: Tuple[Tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class VolatileCensus:
    """易损计数：c 个 X-着色，z[q] 个对纤维 q 易损"""
    c: int
    z: Tuple[int, ...]
    t: int

    @property
    def max_z(self) -> int:
        return max(self.z, default=0)

    @property
    def certificate(self) -> bool:
        """c > max(z) * t 时乘积必有 H-着色"""
        return self.c > self.max_z * self.t


def choice_is_volatile(pc: ProductCover, x_choice: Sequence[int], q: int) -> bool:
    residual = residual_for_choice(pc, x_choice, q)
    if residual.is_empty:
        return True
    return find_coloring(residual.to_cover()) is None


def is_volatile(pc: ProductCover, x_coloring: HColoring, q: int) -> bool:
    """
    I_X 是否对纤维 q 易损

    Raises:
        PreconditionError: I_X 不是 X-子覆盖的 H-着色，或 q 越界
    """
    if not is_coloring(pc.x_subcover(), x_coloring.choice):
        raise PreconditionError("I_X 不是 X-子覆盖的 H-着色")
    return choice_is_volatile(pc, x_coloring.choice, q)


def _x_colorings(pc: ProductCover, verdict_budget: Optional[int]) -> List[Tuple[int, ...]]:
    limit = verdict_budget if verdict_budget is not None else get_config().verdict_budget
    x_cover = pc.x_subcover()
    total = count_colorings(x_cover)
    if total > limit:
        logger.warning("X-着色数 %d 超过判定预算 %d", total, limit)
        raise BudgetExceededError(
            f"X-子覆盖共有 {total} 个 H-着色，超过判定预算 {limit}。\n"
            f"可以改用 volatile_census 对部分纤维抽样，或调大 DPCOLOR_VERDICT_BUDGET",
            size=total,
            limit=limit,
        )
    return [h.choice for h in enumerate_colorings(x_cover)]


def _assemble_coloring(pc: ProductCover, x_choice: Sequence[int]) -> HColoring:
    """由不易损的 X-着色加上各纤维剩余覆盖的着色拼出整个乘积的着色"""
    choice = [0] * pc.cover.vertex_count
    for x, c in zip(pc.x_vertices(), x_choice):
        choice[x] = c
    for q in range(pc.t):
        residual = residual_for_choice(pc, x_choice, q)
        lifted = residual.lift(find_coloring(residual.to_cover()))
        for u, c in enumerate(lifted):
            choice[pc.y_vertex(u, q)] = c
    coloring = HColoring(tuple(choice))
    if not is_coloring(pc.cover, coloring.choice):
        logger.error("拼接出的乘积着色未通过校验")
        raise CoverValidationError(
            "由纤维剩余覆盖拼接出的着色在平铺覆盖上不合法",
            ["纤维视图与平铺覆盖的交叉边不一致"],
        )
    return coloring


def badness_verdict(pc: ProductCover, verdict_budget: Optional[int] = None) -> BadnessVerdict:
    """
    判定乘积覆盖是否为坏覆盖

    按字典序枚举 X-着色，为每个寻找第一个使其易损的纤维；
    若某个 X-着色对所有纤维都不易损，则拼出整个乘积的着色。

    Raises:
        BudgetExceededError: X-着色数超过判定预算（异常中带有实际数量）
    """
    colorings = _x_colorings(pc, verdict_budget)
    witness: Dict[int, int] = {}
    for i, x_choice in enumerate(colorings):
        fiber = next((q for q in range(pc.t) if choice_is_volatile(pc, x_choice, q)), None)
        if fiber is None:
            logger.info("X-着色 #%d 对所有纤维都不易损，覆盖可着色", i)
            return BadnessVerdict(False, coloring=_assemble_coloring(pc, x_choice))
        witness[i] = fiber
    logger.info("坏覆盖: %d 个 X-着色全部易损", len(colorings))
    return BadnessVerdict(True, witness=witness, x_colorings=tuple(colorings))


def verify_bad_witness(pc: ProductCover, verdict: BadnessVerdict) -> bool:
    """
    独立复核 Bad 判定的见证

    重新枚举 X-子覆盖的全部 H-着色，要求与判定中的列表逐一相同，
    且每个 X-着色都有一个确实使其易损的纤维。
    """
    if not verdict.bad:
        return False
    colorings = tuple(h.choice for h in enumerate_colorings(pc.x_subcover()))
    if tuple(verdict.x_colorings) != colorings or set(verdict.witness) != set(range(len(colorings))):
        logger.warning("见证没有覆盖全部 %d 个 X-着色", len(colorings))
        return False
    return all(
        0 <= q < pc.t and choice_is_volatile(pc, colorings[i], q)
        for i, q in verdict.witness.items()
    )


def volatile_census(pc: ProductCover, verdict_budget: Optional[int] = None) -> VolatileCensus:
    """
    统计每个纤维上易损的 X-着色个数

    Raises:
        BudgetExceededError: X-着色数超过判定预算
    """
    colorings = _x_colorings(pc, verdict_budget)
    z = tuple(
        sum(1 for x_choice in colorings if choice_is_volatile(pc, x_choice, q))
        for q in range(pc.t)
    )
    census = VolatileCensus(len(colorings), z, pc.t)
    logger.info("易损计数: c=%d, max z=%d, t=%d", census.c, census.max_z, pc.t)
    return census
