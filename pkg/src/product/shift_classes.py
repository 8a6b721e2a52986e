"""
移位类 - 着色在「所有下标同时加常数 mod k」作用下的轨道
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Sequence, Tuple

from ..core.errors import PreconditionError
from ..cover.cover import Cover, canonical_cover, make_twister
from ..graph.graph import standard_graph
from ..solver.search import enumerate_colorings


Coloring = Tuple[int, ...]


class ShiftRelation(str, Enum):
    """移位关系的来源"""
    ODD_CYCLE = "odd_cycle"
    TWISTER = "twister"


@dataclass(frozen=True)
class ShiftClassPartition:
    """按移位关系划分的着色类；每类按字典序排列，类按最小成员排序"""
    classes: Tuple[Tuple[Coloring, ...], ...]
    relation: ShiftRelation
    modulus: int

    def class_of(self) -> Dict[Coloring, int]:
        return {c: i for i, members in enumerate(self.classes) for c in members}

    def __len__(self) -> int:
        return len(self.classes)


def shift(coloring: Sequence[int], amount: int, modulus: int) -> Coloring:
    return tuple((c + amount) % modulus for c in coloring)


def group_by_shift(colorings: Sequence[Coloring], modulus: int) -> List[Tuple[Coloring, ...]]:
    """
    把一个在移位下封闭的着色集合分成移位类

    Raises:
        PreconditionError: 集合在移位下不封闭
    """
    pool = set(colorings)
    seen = set()
    classes: List[Tuple[Coloring, ...]] = []
    for c in sorted(pool):
        if c in seen:
            continue
        members = tuple(sorted({shift(c, j, modulus) for j in range(modulus)}))
        if not pool.issuperset(members):
            raise PreconditionError(f"着色集合在 mod {modulus} 移位下不封闭: {c}")
        seen.update(members)
        classes.append(members)
    return classes


def shift_classes_odd(n: int, k: int) -> ShiftClassPartition:
    """奇圈 C_n 的全部正常 k-着色按 ∼ 划分"""
    if n < 3 or n % 2 == 0:
        raise PreconditionError(f"shift_classes_odd 要求 n 为不小于 3 的奇数，当前为 {n}")
    if k < 1:
        raise PreconditionError(f"颜色数必须为正整数，当前为 {k}")
    cover = canonical_cover(standard_graph('cycle', [n]), k)
    colorings = [h.choice for h in enumerate_colorings(cover)]
    return ShiftClassPartition(tuple(group_by_shift(colorings, k)), ShiftRelation.ODD_CYCLE, k)


def shift_classes_twister(twister: Cover) -> ShiftClassPartition:
    """
    扭转覆盖的全部 H-着色按 ≈ 划分

    Raises:
        PreconditionError: 重数小于 3，或输入不是 make_twister 产生的覆盖
    """
    k = twister.fold
    if k is None or k < 3:
        raise PreconditionError(f"移位类要求扭转覆盖的重数 k >= 3，当前为 {k}")
    n = twister.vertex_count
    if n < 4 or n % 2 or twister != make_twister(n // 2, k):
        raise PreconditionError("输入不是 C_{2m} 上的扭转覆盖")
    colorings = [h.choice for h in enumerate_colorings(twister)]
    return ShiftClassPartition(tuple(group_by_shift(colorings, k)), ShiftRelation.TWISTER, k)
