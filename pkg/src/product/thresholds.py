"""
阈值 - 随机构造的复制次数与纤维数下界

复制次数按精确的有理数运算求出：
最小的 c >= 1 使 (k+2)^k * (1 - p)^c < 1，p 为单个纤维上某类着色易损的概率。
"""

import math
from enum import Enum
from fractions import Fraction

from ..core.errors import PreconditionError


class Parity(str, Enum):
    """圈长的奇偶：odd 对应 C_{2m+1}，even 对应 C_{2m+2}"""
    ODD = "odd"
    EVEN = "even"


def _check_k(k: int) -> None:
    if k < 1:
        raise PreconditionError(f"k 必须为正整数，当前为 {k}")


def volatility_probability(parity: str, k: int) -> Fraction:
    """
    类着色对单个随机纤维易损的概率

    - odd: (k+2)! / (2 (k+2)^k)
    - even: floor((k+2)/2) * k! / (k+2)^k
    """
    parity = Parity(parity)
    _check_k(k)
    fold = k + 2
    if parity == Parity.ODD:
        return Fraction(math.factorial(fold), 2 * fold ** k)
    return Fraction((fold // 2) * math.factorial(k), fold ** k)


def replication_count(parity: str, k: int) -> int:
    """每个类组分配的纤维数 c_k"""
    p = volatility_probability(parity, k)
    classes = Fraction((k + 2) ** k)
    c = 1
    while classes * (1 - p) ** c >= 1:
        c += 1
    return c


def class_count(parity: str, k: int, m: int) -> int:
    """
    每个 X-纤维上移位类的个数 b = P_DP(C, k+2) / (k+2)

    odd 对应 C_{2m+1}，even 对应 C_{2m+2}
    """
    parity = Parity(parity)
    _check_k(k)
    if m < 1:
        raise PreconditionError(f"m 必须为正整数，当前为 {m}")
    fold = k + 2
    if parity == Parity.ODD:
        return ((k + 1) ** (2 * m + 1) - (k + 1)) // fold
    return ((k + 1) ** (2 * m + 2) - 1) // fold


def minimum_t(parity: str, k: int, m: int) -> int:
    """随机构造所需的纤维数 c_k * b^k"""
    return replication_count(parity, k) * class_count(parity, k, m) ** k


def deterministic_minimum_t(d: int, k: int) -> int:
    """确定性构造所需的纤维数 d^k，d 为 X-纤维覆盖的着色数"""
    _check_k(k)
    if d < 0:
        raise PreconditionError(f"d 不能为负，当前为 {d}")
    return d ** k
