#!/usr/bin/env python3
"""
测试求解器：寻找、计数、枚举、贪心与转移矩阵快速路径
"""

import itertools
import os
import sys

# 添加父目录到路径
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np
import pytest

from src.core.errors import CoverValidationError, PreconditionError
from src.cover.cover import Cover, canonical_cover, make_cover, make_twister, random_full_cover
from src.graph.degeneracy import coloring_number
from src.graph.graph import build_graph, standard_graph
from src.solver.search import (
    SearchStats,
    count_colorings,
    enumerate_colorings,
    find_coloring,
    greedy_coloring,
    is_coloring,
)
from src.solver.transfer import cycle_transfer_count, edge_matrix


def brute_force_colorings(cover: Cover):
    return [
        choice for choice in itertools.product(*(range(m) for m in cover.list_sizes))
        if is_coloring(cover, choice)
    ]


def random_partial_cover(graph, rng, max_size: int = 3) -> Cover:
    """列表大小随机、每条边取随机置换的随机子集"""
    sizes = [int(rng.integers(1, max_size + 1)) for _ in graph.vertices]
    links = {}
    for u, v in graph.edges:
        width = min(sizes[u], sizes[v])
        left = rng.permutation(sizes[u])[:width]
        right = rng.permutation(sizes[v])[:width]
        keep = rng.random(width) < 0.7
        links[(u, v)] = [(int(i), int(j)) for i, j, k in zip(left, right, keep) if k]
    return make_cover(graph, sizes, links)


GRAPHS = [
    ('cycle', [4]),
    ('cycle', [5]),
    ('path', [4]),
    ('complete', [4]),
    ('complete_bipartite', [2, 3]),
]


@pytest.mark.parametrize("kind, params", GRAPHS)
def test_search_agrees_with_brute_force(kind, params):
    """find / count / enumerate 与暴力枚举一致"""
    rng = np.random.default_rng(sum(params) * 31)
    graph = standard_graph(kind, params)
    for _ in range(15):
        cover = random_partial_cover(graph, rng)
        oracle = brute_force_colorings(cover)
        found = find_coloring(cover)
        assert (found is None) == (not oracle), "find_coloring 的存在性应与暴力枚举一致"
        if found is not None:
            assert is_coloring(cover, found.choice)
        assert count_colorings(cover) == len(oracle)
        assert count_colorings(cover, use_fast_path=False) == len(oracle)
        listed = [h.choice for h in enumerate_colorings(cover)]
        assert listed == oracle, "枚举应按字典序且不重不漏"


def test_disconnected_graph_counts_multiply():
    graph = build_graph(5, [[0, 1], [1, 2], [3, 4]])
    cover = canonical_cover(graph, 3)
    # 路 P_3 有 3·2·2 = 12 个，P_2 有 3·2 = 6 个
    assert count_colorings(cover) == 72
    assert len(list(enumerate_colorings(cover))) == 72


TRANSFER_CASES = [(3, 3), (4, 3), (5, 2), (6, 3), (7, 3)]


@pytest.mark.parametrize("n, m", TRANSFER_CASES)
def test_transfer_matrix_matches_backtracking(n, m):
    """每种情形 100 个随机圈覆盖，合计 500 个"""
    rng = np.random.default_rng(n * 10 + m)
    graph = standard_graph('cycle', [n])
    for _ in range(500 // len(TRANSFER_CASES)):
        cover = random_full_cover(graph, m, rng)
        assert cycle_transfer_count(cover) == count_colorings(cover, use_fast_path=False)


def test_transfer_matrix_known_counts():
    assert cycle_transfer_count(make_twister(2, 3)) == 15
    assert cycle_transfer_count(canonical_cover(standard_graph('cycle', [4]), 3)) == 18
    matrix = edge_matrix(make_twister(2, 3), 3, 0)
    assert matrix.tolist() == [[1, 0, 1], [1, 1, 0], [0, 1, 1]], "闭合边 (3, l) 与 (0, l+1) 冲突"
    with pytest.raises(PreconditionError):
        cycle_transfer_count(canonical_cover(standard_graph('path', [3]), 2))


def test_bad_cover_has_no_coloring():
    """2-重规范奇圈覆盖是坏覆盖"""
    cover = canonical_cover(standard_graph('cycle', [3]), 2)
    stats = SearchStats()
    assert find_coloring(cover, stats) is None
    assert stats.nodes > 0 and stats.backtracks > 0, "搜索统计应记录节点与回溯"
    assert count_colorings(cover) == 0
    assert list(enumerate_colorings(cover)) == []


def test_invalid_cover_is_rejected():
    graph = build_graph(2, [[0, 1]])
    cover = make_cover(graph, [2, 2], {(0, 1): [(0, 0), (0, 1)]})
    with pytest.raises(CoverValidationError):
        find_coloring(cover)


def test_greedy_coloring_on_degeneracy_order():
    """列表大小不小于 col(G) 时按退化序贪心总能成功"""
    rng = np.random.default_rng(17)
    for kind, params in GRAPHS:
        graph = standard_graph(kind, params)
        ordering = coloring_number(graph)
        for _ in range(10):
            cover = random_full_cover(graph, ordering.width, rng)
            coloring = greedy_coloring(cover, ordering.ordering)
            assert coloring is not None and is_coloring(cover, coloring.choice), \
                f"{kind}{params} 上贪心着色应成功"


def test_greedy_coloring_preconditions():
    cover = canonical_cover(standard_graph('cycle', [3]), 2)
    assert greedy_coloring(cover, [0, 1, 2]) is None
    with pytest.raises(PreconditionError):
        greedy_coloring(cover, [0, 0, 1])


def test_is_coloring_rejects_bad_vectors():
    cover = canonical_cover(standard_graph('path', [2]), 2)
    assert is_coloring(cover, (0, 1))
    assert not is_coloring(cover, (1, 1))
    assert not is_coloring(cover, (0, 2))
    assert not is_coloring(cover, (0,))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
