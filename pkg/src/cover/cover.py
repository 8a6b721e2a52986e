"""
覆盖 (L, H) - 以列表大小加逐边部分匹配表示

约定:
- 顶点 v 的列表为下标 0..m_v-1（原始记号从 1 开始，这里统一 0-based）
- 对于基图的边 (u, v)（u < v），links 中的每个 (i, j) 表示
  (u, i) 与 (v, j) 之间有一条交叉边
- 列表内部的团从不显式存储；横截选取（每个顶点恰选一个下标）天然满足团约束
- 每条边的匹配按左下标排序，覆盖相等即结构相等
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import CoverValidationError, PreconditionError
from ..graph.graph import Edge, Graph, induced_subgraph, normalize_edge, standard_graph


logger = logging.getLogger(__name__)


Pair = Tuple[int, int]
Link = Tuple[Pair, ...]


@dataclass(frozen=True)
class Cover:
    """
    覆盖

    {
        "graph": 基图,
        "list_sizes": [m_0, ...],
        "links": 与 graph.edges 对齐的匹配序列
    }
    """
    base: Graph
    list_sizes: Tuple[int, ...]
    links: Tuple[Link, ...]
    _conflicts: Tuple[Tuple[Tuple[int, Tuple[int, ...]], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        object.__setattr__(self, '_conflicts', None)

    @property
    def vertex_count(self) -> int:
        return self.base.vertex_count

    def link(self, u: int, v: int) -> Link:
        """返回从 u 指向 v 的匹配：(u 的下标, v 的下标)"""
        pairs = self.links[self.base.edge_index(u, v)]
        if u < v:
            return pairs
        return tuple(sorted((j, i) for i, j in pairs))

    def link_map(self, u: int, v: int) -> Dict[int, int]:
        return dict(self.link(u, v))

    @property
    def fold(self) -> Optional[int]:
        """所有列表大小相同时返回该值，否则为 None"""
        sizes = set(self.list_sizes)
        return sizes.pop() if len(sizes) == 1 else None

    def is_full(self) -> bool:
        """每条边的匹配都是完美匹配"""
        for (u, v), pairs in zip(self.base.edges, self.links):
            if self.list_sizes[u] != self.list_sizes[v] or len(pairs) != self.list_sizes[u]:
                return False
        return True

    def conflict_masks(self) -> Tuple[Tuple[Tuple[int, Tuple[int, ...]], ...], ...]:
        """
        搜索用的冲突表：conflicts[u] = ((v, masks), ...)，
        masks[i] 是 u 选 i 时 v 被禁止的下标位掩码
        """
        if self._conflicts is None:
            table: List[Dict[int, List[int]]] = [dict() for _ in self.base.vertices]
            for (u, v), pairs in zip(self.base.edges, self.links):
                fwd = table[u].setdefault(v, [0] * self.list_sizes[u])
                bwd = table[v].setdefault(u, [0] * self.list_sizes[v])
                for i, j in pairs:
                    fwd[i] |= 1 << j
                    bwd[j] |= 1 << i
            frozen = tuple(
                tuple((v, tuple(masks)) for v, masks in sorted(row.items()))
                for row in table
            )
            object.__setattr__(self, '_conflicts', frozen)
        return self._conflicts


def make_cover(
    base: Graph,
    list_sizes: Sequence[int],
    links: Optional[Mapping[Edge, Iterable[Sequence[int]]]] = None,
) -> Cover:
    """
    由 {边: 匹配} 构造覆盖；边的方向可任意，(i, j) 对应 (edge[0], edge[1])

    未出现的边视为空匹配。不做校验，校验见 validate_cover。
    """
    normalized: Dict[Edge, List[Pair]] = {e: [] for e in base.edges}
    for edge, pairs in (links or {}).items():
        u, v = int(edge[0]), int(edge[1])
        key = normalize_edge(u, v)
        if key not in normalized:
            raise CoverValidationError(f"匹配所在的 {[u, v]} 不是基图的边", [f"non-edge {[u, v]}"])
        oriented = [(int(p[0]), int(p[1])) for p in pairs]
        if u > v:
            oriented = [(j, i) for i, j in oriented]
        normalized[key].extend(oriented)
    return Cover(
        base,
        tuple(int(m) for m in list_sizes),
        tuple(tuple(sorted(normalized[e])) for e in base.edges),
    )


# ============================================================================
# 校验
# ============================================================================

@dataclass
class CoverReport:
    """覆盖校验报告"""
    ok: bool
    violations: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {'ok': self.ok, 'violations': self.violations}


def validate_cover(cover: Cover) -> CoverReport:
    """
    校验覆盖的匹配与下标范围

    Returns:
        CoverReport，violations 逐条指出违规的边与下标对
    """
    violations: List[str] = []
    n = cover.base.vertex_count
    if len(cover.list_sizes) != n:
        violations.append(f"list_sizes 长度 {len(cover.list_sizes)} 与顶点数 {n} 不符")
        return CoverReport(False, violations)
    for v, m in enumerate(cover.list_sizes):
        if m < 1:
            violations.append(f"顶点 {v} 的列表大小必须为正，当前为 {m}")
    if len(cover.links) != len(cover.base.edges):
        violations.append(f"links 数量 {len(cover.links)} 与边数 {len(cover.base.edges)} 不符")
        return CoverReport(False, violations)
    for (u, v), pairs in zip(cover.base.edges, cover.links):
        left_seen, right_seen = set(), set()
        for i, j in pairs:
            if not (0 <= i < cover.list_sizes[u]) or not (0 <= j < cover.list_sizes[v]):
                violations.append(f"边 {[u, v]} 的下标对 {[i, j]} 越界")
            if i in left_seen:
                violations.append(f"边 {[u, v]} 的下标对 {[i, j]}: 左下标 {i} 重复")
            if j in right_seen:
                violations.append(f"边 {[u, v]} 的下标对 {[i, j]}: 右下标 {j} 重复")
            left_seen.add(i)
            right_seen.add(j)
    return CoverReport(not violations, violations)


def ensure_valid(cover: Cover) -> Cover:
    """校验失败时抛出 CoverValidationError"""
    report = validate_cover(cover)
    if not report.ok:
        raise CoverValidationError(f"覆盖不合法: {report.violations[0]}", report.violations)
    return cover


# ============================================================================
# 基本变换
# ============================================================================

def full_completion(cover: Cover) -> Cover:
    """
    把每条边的匹配补全为完美匹配：未匹配的左下标按升序与未匹配的右下标配对
    """
    ensure_valid(cover)
    completed: List[Link] = []
    for (u, v), pairs in zip(cover.base.edges, cover.links):
        m = cover.list_sizes[u]
        if m != cover.list_sizes[v]:
            raise PreconditionError(
                f"边 {[u, v]} 两端列表大小不同 ({m} != {cover.list_sizes[v]})，无法补全为完美匹配"
            )
        left_used = {i for i, _ in pairs}
        right_used = {j for _, j in pairs}
        free_left = [i for i in range(m) if i not in left_used]
        free_right = [j for j in range(m) if j not in right_used]
        completed.append(tuple(sorted(list(pairs) + list(zip(free_left, free_right)))))
    return Cover(cover.base, cover.list_sizes, tuple(completed))


def subcover(cover: Cover, subset: Iterable[int]) -> Cover:
    """由顶点子集 U 诱导的子覆盖；基图为 G[U]，顶点按原下标升序重新编号"""
    graph, vertices = induced_subgraph(cover.base, subset)
    links = {
        (a, b): cover.link(vertices[a], vertices[b])
        for a, b in graph.edges
    }
    return make_cover(graph, [cover.list_sizes[v] for v in vertices], links)


@dataclass(frozen=True)
class Relabeling:
    """逐顶点的列表置换：新下标 = perms[v][旧下标]"""
    perms: Tuple[Tuple[int, ...], ...]

    @classmethod
    def identity(cls, list_sizes: Sequence[int]) -> 'Relabeling':
        return cls(tuple(tuple(range(m)) for m in list_sizes))

    def inverse(self) -> 'Relabeling':
        result = []
        for perm in self.perms:
            inv = [0] * len(perm)
            for old, new in enumerate(perm):
                inv[new] = old
            result.append(tuple(inv))
        return Relabeling(tuple(result))

    def is_valid_for(self, cover: Cover) -> bool:
        if len(self.perms) != cover.vertex_count:
            return False
        return all(
            sorted(perm) == list(range(m))
            for perm, m in zip(self.perms, cover.list_sizes)
        )


def relabel(cover: Cover, relabeling: Relabeling) -> Cover:
    """按 Relabeling 重命名各列表；(i, j) 变为 (R_u(i), R_v(j))"""
    if not relabeling.is_valid_for(cover):
        raise PreconditionError("Relabeling 与覆盖的顶点数或列表大小不匹配")
    perms = relabeling.perms
    links = tuple(
        tuple(sorted((perms[u][i], perms[v][j]) for i, j in pairs))
        for (u, v), pairs in zip(cover.base.edges, cover.links)
    )
    return Cover(cover.base, cover.list_sizes, links)


# ============================================================================
# 构造
# ============================================================================

def canonical_cover(graph: Graph, fold: int) -> Cover:
    """所有匹配都是恒等完美匹配的 m-重覆盖"""
    if fold < 1:
        raise PreconditionError(f"重数必须为正整数，当前为 {fold}")
    identity = tuple((i, i) for i in range(fold))
    return Cover(graph, (fold,) * graph.vertex_count, (identity,) * len(graph.edges))


def make_twister(half_length: int, fold: int) -> Cover:
    """
    k-重 C_{2m} 扭转覆盖

    圈按 0..2m-1 循环编号；边 (i, i+1) 为恒等匹配，
    闭合边上 (2m-1, l) 与 (0, (l+1) mod k) 相连
    """
    if half_length < 2:
        raise PreconditionError(f"扭转覆盖要求 m >= 2，当前为 {half_length}")
    if fold < 1:
        raise PreconditionError(f"重数必须为正整数，当前为 {fold}")
    n = 2 * half_length
    cycle = standard_graph('cycle', [n])
    links: Dict[Edge, List[Pair]] = {
        (i, i + 1): [(l, l) for l in range(fold)] for i in range(n - 1)
    }
    links[(n - 1, 0)] = [(l, (l + 1) % fold) for l in range(fold)]
    return make_cover(cycle, [fold] * n, links)


def random_full_cover(graph: Graph, fold: int, rng: np.random.Generator) -> Cover:
    """每条边取独立均匀随机置换的满 m-重覆盖"""
    if fold < 1:
        raise PreconditionError(f"重数必须为正整数，当前为 {fold}")
    links = tuple(
        tuple(sorted((i, int(j)) for i, j in enumerate(rng.permutation(fold))))
        for _ in graph.edges
    )
    return Cover(graph, (fold,) * graph.vertex_count, links)
