#!/usr/bin/env python3
"""
测试覆盖：构造、校验、补全、子覆盖、重标号与标准构造
"""

import itertools
import os
import sys

# 添加父目录到路径
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.core.errors import CoverValidationError, PreconditionError
from src.cover.cover import (
    Cover,
    Relabeling,
    canonical_cover,
    ensure_valid,
    full_completion,
    make_cover,
    make_twister,
    random_full_cover,
    relabel,
    subcover,
    validate_cover,
)
from src.cover.dot_export import cover_to_dot
from src.graph.graph import build_graph, standard_graph
from src.solver.search import count_colorings, enumerate_colorings, is_coloring
from tests.strategies import full_covers, partial_covers


def brute_force_count(cover: Cover) -> int:
    """暴力枚举所有横截选取并逐边检查"""
    total = 0
    for choice in itertools.product(*(range(m) for m in cover.list_sizes)):
        if all(
            (choice[u], choice[v]) not in pairs
            for (u, v), pairs in zip(cover.base.edges, cover.links)
        ):
            total += 1
    return total


def test_make_cover_orients_pairs():
    """(i, j) 跟随给出的边方向，存储时转为 (小端点, 大端点)"""
    graph = build_graph(2, [[0, 1]])
    cover = make_cover(graph, [2, 3], {(1, 0): [(2, 0)]})
    assert cover.links == (((0, 2),),), f"反向给出的匹配应被翻转，实际为 {cover.links}"
    assert cover.link(1, 0) == ((2, 0),)
    assert cover.link_map(0, 1) == {0: 2}


def test_make_cover_rejects_non_edge():
    graph = standard_graph('path', [3])
    with pytest.raises(CoverValidationError):
        make_cover(graph, [2, 2, 2], {(0, 2): [(0, 0)]})


def test_validate_cover_reports_each_violation():
    """重复下标与越界下标都要逐条列出"""
    graph = build_graph(2, [[0, 1]])
    cover = make_cover(graph, [2, 2], {(0, 1): [(0, 0), (0, 1), (1, 5)]})
    report = validate_cover(cover)
    assert not report.ok
    assert any("左下标 0 重复" in v for v in report.violations), f"应指出重复: {report.violations}"
    assert any("越界" in v for v in report.violations), f"应指出越界: {report.violations}"
    with pytest.raises(CoverValidationError) as info:
        ensure_valid(cover)
    assert info.value.violations == report.violations
    assert info.value.details['violations'] == report.violations


def test_fold_and_full():
    c4 = standard_graph('cycle', [4])
    cover = canonical_cover(c4, 3)
    assert cover.fold == 3 and cover.is_full()
    partial = make_cover(c4, [3, 3, 3, 3], {(0, 1): [(0, 0)]})
    assert not partial.is_full()
    assert make_cover(c4, [2, 3, 3, 3]).fold is None


def test_full_completion_adds_only_missing_pairs():
    graph = standard_graph('path', [3])
    cover = make_cover(graph, [3, 3, 3], {(0, 1): [(0, 2)]})
    completed = full_completion(cover)
    assert completed.is_full()
    assert set(cover.links[0]) <= set(completed.links[0]), "原有匹配必须保留"
    assert completed.links[0] == ((0, 2), (1, 0), (2, 1)), "剩余下标按升序配对"
    with pytest.raises(PreconditionError):
        full_completion(make_cover(graph, [2, 3, 3]))


def test_subcover_renumbers_vertices():
    cover = make_twister(2, 3)
    sub = subcover(cover, [1, 2, 3])
    assert sub.base.edges == ((0, 1), (1, 2))
    assert sub.link(0, 1) == cover.link(1, 2)
    assert sub.link(1, 2) == cover.link(2, 3)


def test_relabel_preserves_count_and_inverts():
    rng = np.random.default_rng(7)
    cover = random_full_cover(standard_graph('cycle', [4]), 3, rng)
    relabeling = Relabeling(tuple(tuple(int(x) for x in rng.permutation(3)) for _ in range(4)))
    moved = relabel(cover, relabeling)
    assert brute_force_count(moved) == brute_force_count(cover), "重标号不改变着色数"
    assert relabel(moved, relabeling.inverse()) == cover, "逆重标号应还原覆盖"
    with pytest.raises(PreconditionError):
        relabel(cover, Relabeling.identity([3, 3, 3]))


@settings(max_examples=60, deadline=None)
@given(cover=full_covers(), data=st.data())
def test_relabel_preserves_count_property(cover, data):
    relabeling = Relabeling(tuple(
        tuple(data.draw(st.permutations(range(m)))) for m in cover.list_sizes
    ))
    moved = relabel(cover, relabeling)
    assert brute_force_count(moved) == brute_force_count(cover)
    assert relabel(moved, relabeling.inverse()) == cover


@settings(max_examples=60, deadline=None)
@given(cover=partial_covers())
def test_full_completion_colorings_color_original(cover):
    """补全只增加交叉边，补全后的着色都是原覆盖的着色"""
    completed = full_completion(cover)
    assert completed.is_full()
    for coloring in enumerate_colorings(completed):
        assert is_coloring(cover, coloring.choice)
    assert count_colorings(completed) <= brute_force_count(cover)


@pytest.mark.parametrize("n, m", [(3, 2), (3, 3), (4, 3), (5, 3)])
def test_canonical_cover_counts_match_chromatic_polynomial(n, m):
    """规范覆盖的着色数等于色多项式 (m-1)^n + (-1)^n (m-1)"""
    cover = canonical_cover(standard_graph('cycle', [n]), m)
    assert brute_force_count(cover) == (m - 1) ** n + (-1) ** n * (m - 1)


def test_canonical_c4_three_fold_has_18_colorings():
    assert brute_force_count(canonical_cover(standard_graph('cycle', [4]), 3)) == 18


@pytest.mark.parametrize("half_length, fold, expected", [(2, 3, 15), (2, 2, 0), (3, 3, 63)])
def test_twister_counts(half_length, fold, expected):
    """扭转覆盖的着色数为 (m-1)^n - 1"""
    twister = make_twister(half_length, fold)
    assert twister.is_full()
    assert brute_force_count(twister) == expected


def test_twister_closing_edge():
    twister = make_twister(2, 3)
    assert twister.link_map(3, 0) == {0: 1, 1: 2, 2: 0}, "闭合边上 (2m-1, l) 连 (0, l+1)"
    with pytest.raises(PreconditionError):
        make_twister(1, 3)


def test_random_full_cover_is_seeded():
    graph = standard_graph('cycle', [5])
    first = random_full_cover(graph, 3, np.random.default_rng(11))
    second = random_full_cover(graph, 3, np.random.default_rng(11))
    assert first == second, "相同种子应产生相同覆盖"
    assert first.is_full() and validate_cover(first).ok


def test_dot_export_draws_clusters_and_cross_edges():
    cover = make_twister(2, 2)
    dot = cover_to_dot(cover, name="twister")
    assert dot.startswith('graph "twister" {')
    assert dot.count("subgraph cluster_") == 4
    assert dot.count(" -- ") == sum(len(p) for p in cover.links), "只画交叉边"


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
