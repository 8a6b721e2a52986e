"""
转移矩阵 - 单圈覆盖的着色计数

沿圈的每条边取矩阵 (全 1 矩阵 - 匹配指示矩阵)，计数等于连乘积的迹。
矩阵用 object dtype 保存 Python 大整数，保证精确。
"""

import numpy as np

from ..cover.cover import Cover
from ..core.errors import PreconditionError


def edge_matrix(cover: Cover, u: int, v: int) -> np.ndarray:
    """从 u 到 v 的转移矩阵：允许的 (i, j) 为 1"""
    matrix = np.ones((cover.list_sizes[u], cover.list_sizes[v]), dtype=object)
    for i, j in cover.link(u, v):
        matrix[i, j] = 0
    return matrix


def cycle_transfer_count(cover: Cover) -> int:
    """单圈覆盖的 H-着色数"""
    if not cover.base.is_single_cycle():
        raise PreconditionError("转移矩阵计数只适用于单个圈")
    order = cover.base.cycle_order()
    product = None
    for idx, u in enumerate(order):
        step = edge_matrix(cover, u, order[(idx + 1) % len(order)])
        product = step if product is None else product.dot(step)
    return int(sum(product.diagonal().tolist()))
