"""
标号刻画 - 规范标号 (canonical) 与扭转规范标号 (twisted-canonical)

两种检测都基于生成森林传播：根顶点取恒等置换，沿树边传播被迫的置换，
最后检查其余边在重标号后是否为恒等匹配。
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from ..core.errors import PreconditionError
from ..graph.graph import Edge
from .cover import Cover, Relabeling, relabel


logger = logging.getLogger(__name__)


class LabelingKind(str, Enum):
    """标号类型"""
    CANONICAL = "canonical"
    TWISTED_CANONICAL = "twisted_canonical"


@dataclass(frozen=True)
class LabelingWitness:
    """标号见证：重标号后除扭转边外所有匹配都是恒等匹配"""
    kind: LabelingKind
    relabeling: Relabeling
    twist_edge: Optional[Edge] = None


def _propagate(cover: Cover, tree: Sequence[Tuple[int, int]]) -> List[List[int]]:
    """沿树边传播置换，使每条树边在重标号后成为恒等匹配"""
    k = cover.fold
    perms: List[List[int]] = [list(range(k)) for _ in cover.base.vertices]
    for parent, child in tree:
        for i, j in cover.link(parent, child):
            perms[child][j] = perms[parent][i]
    return perms


def _is_identity(pairs, k: int) -> bool:
    return len(pairs) == k and all(i == j for i, j in pairs)


def _uniform_full(cover: Cover) -> bool:
    return cover.fold is not None and cover.is_full()


def verify_witness(cover: Cover, witness: LabelingWitness) -> bool:
    """重新应用见证并逐边核对"""
    if not witness.relabeling.is_valid_for(cover) or not _uniform_full(cover):
        return False
    k = cover.fold
    relabeled = relabel(cover, witness.relabeling)
    for edge, pairs in zip(relabeled.base.edges, relabeled.links):
        if witness.kind == LabelingKind.TWISTED_CANONICAL and edge == witness.twist_edge:
            if len(pairs) != k or all(i == j for i, j in pairs):
                return False
        elif not _is_identity(pairs, k):
            return False
    if witness.kind == LabelingKind.TWISTED_CANONICAL:
        return witness.twist_edge in relabeled.base.edges
    return True


def detect_canonical(cover: Cover) -> Optional[LabelingWitness]:
    """
    检测规范标号

    仅对满且各列表大小相同的覆盖返回见证；其他情形返回 None。
    """
    if not _uniform_full(cover):
        return None
    tree, _ = cover.base.bfs_forest()
    perms = _propagate(cover, tree)
    witness = LabelingWitness(
        LabelingKind.CANONICAL,
        Relabeling(tuple(tuple(p) for p in perms)),
    )
    return witness if verify_witness(cover, witness) else None


def _twisted_for_edge(cover: Cover, edge: Edge) -> Optional[LabelingWitness]:
    k = cover.fold
    tree, root_of = cover.base.bfs_forest(skip=edge)
    perms = _propagate(cover, tree)
    u, v = edge
    for other, pairs in zip(cover.base.edges, cover.links):
        if other == edge:
            continue
        a, b = other
        if any(perms[a][i] != perms[b][j] for i, j in pairs):
            return None
    twisted = any(perms[u][i] != perms[v][j] for i, j in cover.link(u, v))
    if not twisted:
        # 割边：另一侧整体做循环移位即可制造扭转
        if root_of[u] == root_of[v] or k < 2:
            return None
        side = root_of[v]
        for w in cover.base.vertices:
            if root_of[w] == side:
                perms[w] = [(x + 1) % k for x in perms[w]]
    witness = LabelingWitness(
        LabelingKind.TWISTED_CANONICAL,
        Relabeling(tuple(tuple(p) for p in perms)),
        edge,
    )
    return witness if verify_witness(cover, witness) else None


def detect_twisted_canonical(cover: Cover) -> Optional[LabelingWitness]:
    """
    检测扭转规范标号：依次尝试每条边作为扭转边，返回第一个成功的见证
    """
    if not _uniform_full(cover):
        return None
    for edge in cover.base.edges:
        witness = _twisted_for_edge(cover, edge)
        if witness is not None:
            logger.debug("扭转规范标号: 扭转边 %s", edge)
            return witness
    return None


def tree_labeling(cover: Cover, mode: str = "canonical") -> LabelingWitness:
    """
    树上满覆盖的标号

    Args:
        cover: 基图为树的满覆盖，各列表大小相同
        mode: canonical 或 twisted

    Raises:
        PreconditionError: 基图不是树、覆盖不满，或扭转模式下无法产生扭转
    """
    if not cover.base.is_tree():
        raise PreconditionError("tree_labeling 要求基图是树")
    if not _uniform_full(cover):
        raise PreconditionError("tree_labeling 要求满覆盖且各列表大小相同")
    if mode == "canonical":
        witness = detect_canonical(cover)
    elif mode == "twisted":
        if not cover.base.edges or cover.fold < 2:
            raise PreconditionError("扭转标号需要至少一条边且重数至少为 2")
        witness = _twisted_for_edge(cover, cover.base.edges[0])
    else:
        raise PreconditionError(f"未知的标号模式: {mode}")
    if witness is None:
        raise PreconditionError("树覆盖的标号传播失败")
    return witness


def cycle_holonomy(cover: Cover) -> Tuple[int, ...]:
    """
    单圈满覆盖沿圈一周的置换复合：返回 σ，σ[i] 为从 v_0 的下标 i 出发
    绕圈一周回到 v_0 时的下标
    """
    if not cover.base.is_single_cycle() or not _uniform_full(cover):
        raise PreconditionError("cycle_holonomy 要求单圈上的满覆盖且各列表大小相同")
    order = cover.base.cycle_order()
    sigma = list(range(cover.fold))
    for idx, u in enumerate(order):
        step = cover.link_map(u, order[(idx + 1) % len(order)])
        sigma = [step[x] for x in sigma]
    return tuple(sigma)
