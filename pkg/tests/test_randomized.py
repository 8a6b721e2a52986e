#!/usr/bin/env python3
"""
测试随机构造：奇圈 / 偶圈 (k+2)-重坏覆盖、可复现性与重试上限
"""

import dataclasses
import itertools
import os
import sys

# 添加父目录到路径
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from src.core.config import get_config, reset_config
from src.core.errors import ConfigurationError, PreconditionError, RetryExhaustedError
from src.product.product_cover import ResidualCover
from src.product.randomized import (
    ConstructionStats,
    class_rng,
    construct_even_cycle_bad_cover,
    construct_odd_cycle_bad_cover,
    paired_rows_cover,
)
from src.product.shift_classes import shift_classes_odd
from src.product.thresholds import minimum_t
from src.product.volatile import badness_verdict, verify_bad_witness
from src.solver.search import find_coloring


@pytest.fixture(autouse=True)
def fresh_config():
    reset_config()
    yield
    reset_config()


@pytest.mark.parametrize("m, k, t", [(1, 1, 2), (2, 1, 10)])
def test_odd_cycle_construction_is_bad(m, k, t):
    stats = ConstructionStats()
    pc = construct_odd_cycle_bad_cover(m, k, t, seed=11, cross_check=True, stats=stats)
    assert pc.left.vertex_count == 2 * m + 1
    assert pc.cover.fold == k + 2
    verdict = badness_verdict(pc)
    assert verdict.bad, f"C_{2 * m + 1} □ K_{{{k},{t}}} 的随机构造应为坏覆盖"
    assert verify_bad_witness(pc, verdict)
    assert stats.discrepancies == 0, "易损判据应与定义判定一致"
    assert stats.retries == 0, "k = 1 时奇圈的易损概率为 1，不需要重试"


def test_even_cycle_construction_is_bad():
    stats = ConstructionStats()
    pc = construct_even_cycle_bad_cover(1, 1, 15, seed=7, cross_check=True, stats=stats)
    assert pc.left.vertex_count == 4
    assert len(stats.attempts) == 5, "C_4 的扭转覆盖有 5 个移位类"
    assert stats.discrepancies == 0
    verdict = badness_verdict(pc)
    assert verdict.bad
    assert verify_bad_witness(pc, verdict)


def test_same_seed_same_cover():
    first = construct_even_cycle_bad_cover(1, 1, 15, seed=123)
    second = construct_even_cycle_bad_cover(1, 1, 15, seed=123)
    assert first.cover == second.cover, "相同种子必须得到相同覆盖"


def test_seed_from_config():
    get_config().set_seed(5)
    pc = construct_odd_cycle_bad_cover(1, 1, 2)
    assert pc.cover == construct_odd_cycle_bad_cover(1, 1, 2, seed=5).cover


def test_missing_seed_is_configuration_error():
    with pytest.raises(ConfigurationError):
        construct_odd_cycle_bad_cover(1, 1, 2)


def test_t_below_threshold():
    with pytest.raises(PreconditionError):
        construct_odd_cycle_bad_cover(1, 1, minimum_t('odd', 1, 1) - 1, seed=1)
    with pytest.raises(PreconditionError):
        construct_even_cycle_bad_cover(1, 1, 14, seed=1)
    with pytest.raises(PreconditionError):
        construct_even_cycle_bad_cover(0, 1, 15, seed=1)
    with pytest.raises(PreconditionError):
        construct_odd_cycle_bad_cover(1, 1, 2, seed=1, retry_cap=0)


def test_retry_exhaustion_reports_failures():
    """单次抽样时每组成功概率只有 2/9，21 组不可能全部成功"""
    with pytest.raises(RetryExhaustedError) as info:
        construct_even_cycle_bad_cover(2, 1, 63, seed=3, retry_cap=1)
    failures = info.value.failures
    assert failures, "应报告失败的类组"
    assert all(f['attempts'] == 1 for f in failures)
    assert all(f['volatility_probability'] == '1/3' for f in failures)
    assert all(0 <= f['best_fraction'] < 1 for f in failures)


def test_class_rng_streams_are_independent_and_reproducible():
    a = class_rng(42, 0).permutation(10).tolist()
    assert a == class_rng(42, 0).permutation(10).tolist()
    assert [class_rng(42, g).permutation(10).tolist() for g in range(5)] != [a] * 5


def test_paired_rows_cover_structure():
    cover = paired_rows_cover(4, 3)
    assert cover.fold == 3
    assert cover.link(0, 1) == ((0, 0), (1, 1), (2, 2))
    assert cover.link(0, 3) == ((0, 1), (1, 0), (2, 2)), "闭合边上行对交叉，单独的行恒等"
    assert paired_rows_cover(4, 4).link(0, 3) == ((0, 1), (1, 0), (2, 3), (3, 2))


@pytest.mark.parametrize("n, fold", [(4, 3), (4, 4), (6, 4)])
def test_paired_rows_residual_is_bad_exactly_on_row_pairs(n, fold):
    """删去 k = fold - 2 个下标后，剩余覆盖坏当且仅当剩下的是一个行对"""
    cover = paired_rows_cover(n, fold)
    pairs = {frozenset((2 * l, 2 * l + 1)) for l in range(fold // 2)}
    for removed in itertools.combinations(range(fold), fold - 2):
        keep = tuple(i for i in range(fold) if i not in removed)
        residual = ResidualCover(cover, (keep,) * n)
        bad = find_coloring(residual.to_cover()) is None
        assert bad == (frozenset(keep) in pairs), f"删去 {removed} 时的判定不符"


def test_class_count_mismatch_raises(monkeypatch):
    """移位类个数与公式不符时拒绝构造"""
    def truncated(n, fold):
        partition = shift_classes_odd(n, fold)
        return dataclasses.replace(partition, classes=partition.classes[:1])

    monkeypatch.setattr('src.product.randomized.shift_classes_odd', truncated)
    with pytest.raises(PreconditionError, match="移位类个数"):
        construct_odd_cycle_bad_cover(1, 1, 2, seed=1)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
