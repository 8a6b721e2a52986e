"""
精确搜索 - H-着色的存在性、计数、枚举与贪心

域用整数位掩码表示；回溯时动态选择剩余域最小的顶点（同大小取下标最小），
并对未赋值邻居做前向检查。计数按连通分量分解后相乘。
"""

import logging
import time
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from ..cover.cover import Cover, ensure_valid
from ..core.errors import PreconditionError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HColoring:
    """H-着色：choice[v] 为顶点 v 选中的列表下标"""
    choice: Tuple[int, ...]


@dataclass
class SearchStats:
    """搜索统计"""
    nodes: int = 0
    backtracks: int = 0
    elapsed: float = 0.0


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int) -> Iterator[int]:
    i = 0
    while x:
        if x & 1:
            yield i
        x >>= 1
        i += 1


def is_coloring(cover: Cover, choice: Sequence[int]) -> bool:
    """检查 choice 是否为合法的 H-着色"""
    if len(choice) != cover.vertex_count:
        return False
    if any(not (0 <= c < m) for c, m in zip(choice, cover.list_sizes)):
        return False
    for (u, v), pairs in zip(cover.base.edges, cover.links):
        if (choice[u], choice[v]) in pairs:
            return False
    return True


class _Backtracker:
    """带前向检查的回溯器（单次调用内使用，不跨线程共享）"""

    def __init__(self, cover: Cover, stats: SearchStats):
        self.cover = cover
        self.conflicts = cover.conflict_masks()
        self.stats = stats

    def initial_domains(self) -> List[int]:
        return [(1 << m) - 1 for m in self.cover.list_sizes]

    def _select(self, unassigned: Set[int], domains: List[int]) -> int:
        return min(unassigned, key=lambda x: (_popcount(domains[x]), x))

    def _forward(self, v: int, i: int, unassigned: Set[int], domains: List[int]):
        """v 选 i 后收缩邻居的域；返回 (是否无空域, 变更记录)"""
        changed = []
        for w, masks in self.conflicts[v]:
            if w not in unassigned:
                continue
            mask = masks[i]
            if domains[w] & mask:
                changed.append((w, domains[w]))
                domains[w] &= ~mask
                if domains[w] == 0:
                    return False, changed
        return True, changed

    @staticmethod
    def _restore(domains: List[int], changed):
        for w, old in reversed(changed):
            domains[w] = old

    def find(self, unassigned: Set[int], domains: List[int], choice: List[int]) -> bool:
        self.stats.nodes += 1
        if not unassigned:
            return True
        v = self._select(unassigned, domains)
        unassigned.remove(v)
        for i in _bits(domains[v]):
            ok, changed = self._forward(v, i, unassigned, domains)
            if ok:
                choice[v] = i
                if self.find(unassigned, domains, choice):
                    return True
            self.stats.backtracks += 1
            self._restore(domains, changed)
        unassigned.add(v)
        return False

    def count(self, unassigned: Set[int], domains: List[int]) -> int:
        self.stats.nodes += 1
        if not unassigned:
            return 1
        v = self._select(unassigned, domains)
        unassigned.remove(v)
        total = 0
        for i in _bits(domains[v]):
            ok, changed = self._forward(v, i, unassigned, domains)
            if ok:
                total += self.count(unassigned, domains)
            else:
                self.stats.backtracks += 1
            self._restore(domains, changed)
        unassigned.add(v)
        return total

    def enumerate(self, position: int, domains: List[int], choice: List[int]) -> Iterator[Tuple[int, ...]]:
        """按顶点下标顺序赋值，按下标升序尝试，产生字典序"""
        self.stats.nodes += 1
        n = self.cover.vertex_count
        if position == n:
            yield tuple(choice)
            return
        pending = set(range(position + 1, n))
        for i in _bits(domains[position]):
            ok, changed = self._forward(position, i, pending, domains)
            if ok:
                choice[position] = i
                yield from self.enumerate(position + 1, domains, choice)
            else:
                self.stats.backtracks += 1
            self._restore(domains, changed)


def find_coloring(cover: Cover, stats: Optional[SearchStats] = None) -> Optional[HColoring]:
    """
    寻找一个 H-着色

    Returns:
        HColoring，或 None（穷尽搜索证明不存在）

    Raises:
        CoverValidationError: 覆盖不合法
    """
    ensure_valid(cover)
    stats = stats if stats is not None else SearchStats()
    started = time.perf_counter()
    searcher = _Backtracker(cover, stats)
    domains = searcher.initial_domains()
    choice = [0] * cover.vertex_count
    found = True
    for component in cover.base.components():
        if not searcher.find(set(component), domains, choice):
            found = False
            break
    stats.elapsed += time.perf_counter() - started
    if not found:
        return None
    return HColoring(tuple(choice))


def count_colorings(
    cover: Cover,
    stats: Optional[SearchStats] = None,
    use_fast_path: bool = True,
) -> int:
    """
    精确计数 H-着色

    基图恰为一个圈时走转移矩阵快速路径；否则按连通分量回溯计数后相乘。
    """
    ensure_valid(cover)
    if use_fast_path and cover.base.is_single_cycle():
        from .transfer import cycle_transfer_count
        return cycle_transfer_count(cover)
    stats = stats if stats is not None else SearchStats()
    started = time.perf_counter()
    searcher = _Backtracker(cover, stats)
    domains = searcher.initial_domains()
    total = 1
    for component in cover.base.components():
        total *= searcher.count(set(component), domains)
        if total == 0:
            break
    stats.elapsed += time.perf_counter() - started
    return total


def enumerate_colorings(cover: Cover, stats: Optional[SearchStats] = None) -> Iterator[HColoring]:
    """按 choice 向量的字典序逐个产生所有 H-着色，每个恰好一次"""
    ensure_valid(cover)
    stats = stats if stats is not None else SearchStats()
    searcher = _Backtracker(cover, stats)
    domains = searcher.initial_domains()
    choice = [0] * cover.vertex_count
    for result in searcher.enumerate(0, domains, choice):
        yield HColoring(result)


def greedy_coloring(cover: Cover, ordering: Sequence[int]) -> Optional[HColoring]:
    """
    贪心着色：按给定顺序为每个顶点选与已选下标无冲突的最小下标

    Returns:
        HColoring，或 None（某个顶点无可选下标）
    """
    ensure_valid(cover)
    if sorted(ordering) != list(cover.base.vertices):
        raise PreconditionError("ordering 必须是顶点的一个排列")
    conflicts = cover.conflict_masks()
    forbidden = [0] * cover.vertex_count
    choice = [0] * cover.vertex_count
    done = [False] * cover.vertex_count
    for v in ordering:
        allowed = ((1 << cover.list_sizes[v]) - 1) & ~forbidden[v]
        if allowed == 0:
            logger.debug("贪心着色在顶点 %d 处无可选下标", v)
            return None
        i = (allowed & -allowed).bit_length() - 1
        choice[v] = i
        done[v] = True
        for w, masks in conflicts[v]:
            if not done[w]:
                forbidden[w] |= masks[i]
    return HColoring(tuple(choice))
