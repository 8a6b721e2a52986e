#!/usr/bin/env python3
"""
测试穷举：规范化覆盖空间、P_DP、χ_DP 与预算保护
"""

import itertools
import math
import os
import sys

# 添加父目录到路径
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from src.core.config import reset_config
from src.core.errors import BudgetExceededError, PreconditionError
from src.cover.cover import Cover
from src.graph.graph import build_graph, standard_graph
from src.solver.exhaustive import (
    chi_dp_exhaustive,
    find_bad_cover,
    free_edges,
    iter_normalized_covers,
    normalized_cover_count,
    partition_count,
    pdp_cycle_formula,
    pdp_exhaustive,
)
from src.solver.search import count_colorings, find_coloring


@pytest.fixture(autouse=True)
def fresh_config():
    reset_config()
    yield
    reset_config()


def test_free_edges_count_cycle_rank():
    """自由边数 = |E| - |V| + 分量数"""
    assert len(free_edges(standard_graph('cycle', [5]))) == 1
    assert len(free_edges(standard_graph('path', [5]))) == 0
    assert len(free_edges(standard_graph('complete', [4]))) == 3
    assert len(free_edges(standard_graph('complete_bipartite', [2, 4]))) == 3


def test_normalized_space_size_and_partitions():
    c4 = standard_graph('cycle', [4])
    assert normalized_cover_count(c4, 3) == 6
    covers = list(iter_normalized_covers(c4, 3))
    assert len(covers) == 6 and len(set(covers)) == 6, "规范化覆盖两两不同"
    assert partition_count(c4, 3) == 6
    by_partition = [c for p in range(6) for c in iter_normalized_covers(c4, 3, p)]
    assert sorted(by_partition, key=lambda c: c.links) == sorted(covers, key=lambda c: c.links), \
        "各分区拼起来恰好是整个空间"
    path = standard_graph('path', [3])
    assert partition_count(path, 2) == 1
    assert len(list(iter_normalized_covers(path, 2))) == 1


FOUR_VERTEX_GRAPHS = [
    ("C3", standard_graph('cycle', [3])),
    ("P4", standard_graph('path', [4])),
    ("C4", standard_graph('cycle', [4])),
    ("K4", standard_graph('complete', [4])),
    ("K1,3", standard_graph('complete_bipartite', [1, 3])),
    ("paw", build_graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])),
]


@pytest.mark.parametrize("name, graph", FOUR_VERTEX_GRAPHS, ids=[name for name, _ in FOUR_VERTEX_GRAPHS])
def test_normalization_preserves_minimum(name, graph):
    """所有 2-重满覆盖（未规范化）的最小着色数与规范化空间一致"""
    perms = [tuple(enumerate(p)) for p in itertools.permutations(range(2))]
    everything = [
        Cover(graph, (2,) * graph.vertex_count, links)
        for links in itertools.product(perms, repeat=len(graph.edges))
    ]
    assert min(count_colorings(c) for c in everything) == pdp_exhaustive(graph, 2).value, \
        f"{name} 上规范化改变了最小值"


@pytest.mark.parametrize("n, m", [(3, 2), (3, 3), (4, 2), (4, 3), (5, 2), (5, 3), (6, 2)])
def test_pdp_cycles_match_closed_form(n, m):
    result = pdp_exhaustive(standard_graph('cycle', [n]), m)
    assert result.value == pdp_cycle_formula(n, m), f"P_DP(C_{n}, {m}) 应为 {pdp_cycle_formula(n, m)}"
    assert count_colorings(result.witness) == result.value, "见证覆盖的着色数应等于最小值"
    assert result.covers_examined >= 1


def test_pdp_with_thread_pool_matches_serial():
    k4 = standard_graph('complete', [4])
    serial = pdp_exhaustive(k4, 3, workers=1)
    pooled = pdp_exhaustive(k4, 3, workers=3)
    assert serial.value == pooled.value == 0, "K_4 上存在 3-重坏覆盖"


def test_pdp_tree_equals_chromatic_polynomial():
    """树上所有满覆盖都等价于规范覆盖：P_DP = m (m-1)^(n-1)"""
    path = standard_graph('path', [4])
    assert pdp_exhaustive(path, 3).value == 3 * 2 ** 3


@pytest.mark.parametrize("kind, params, expected", [
    ('cycle', [3], 3),
    ('cycle', [4], 3),
    ('cycle', [5], 3),
    ('cycle', [6], 3),
    ('complete', [1], 1),
    ('path', [4], 2),
    ('complete_bipartite', [2, 4], 3),
])
def test_chi_dp_values(kind, params, expected):
    result = chi_dp_exhaustive(standard_graph(kind, params))
    assert result.value == expected, f"χ_DP({kind}{params}) 应为 {expected}"
    if expected > 1:
        assert result.witness is not None and result.witness.fold == expected - 1
        assert find_coloring(result.witness) is None, "见证应是 (χ_DP - 1)-重坏覆盖"
    else:
        assert result.witness is None


def test_find_bad_cover():
    c4 = standard_graph('cycle', [4])
    bad, examined = find_bad_cover(c4, 2)
    assert bad is not None and find_coloring(bad) is None
    assert examined <= 2
    good, _ = find_bad_cover(c4, 3)
    assert good is None, "C_4 的 3-重覆盖都有着色"


def test_budget_guard():
    k4 = standard_graph('complete', [4])
    with pytest.raises(BudgetExceededError) as info:
        pdp_exhaustive(k4, 3, budget=100)
    assert info.value.size == math.factorial(3) ** 3
    assert info.value.limit == 100
    with pytest.raises(BudgetExceededError):
        chi_dp_exhaustive(standard_graph('complete', [5]), budget=10)


def test_pdp_cycle_formula_preconditions():
    assert pdp_cycle_formula(4, 3) == 15 and pdp_cycle_formula(3, 3) == 6
    with pytest.raises(PreconditionError):
        pdp_cycle_formula(2, 3)
    with pytest.raises(PreconditionError):
        pdp_cycle_formula(4, 1)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
