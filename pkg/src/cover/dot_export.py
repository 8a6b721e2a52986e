"""
DOT 导出 - 列表画成带底色的簇，只画交叉边（列表内部的团省略）
"""

from typing import List, Optional, Sequence

from .cover import Cover


def cover_to_dot(cover: Cover, name: str = "cover", vertex_labels: Optional[Sequence[str]] = None) -> str:
    """
    把覆盖渲染成 Graphviz DOT 文本

    Args:
        cover: 覆盖
        name: 图名
        vertex_labels: 基图顶点的显示名，默认为下标
    """
    labels = list(vertex_labels) if vertex_labels else [str(v) for v in cover.base.vertices]
    lines: List[str] = [
        f'graph "{name}" {{',
        '  node [shape=circle, width=0.15, fixedsize=true, fontsize=8];',
    ]
    for v, m in enumerate(cover.list_sizes):
        lines.append(f'  subgraph cluster_{v} {{')
        lines.append(f'    label="{labels[v]}"; style=filled; fillcolor=gray90; color=gray60;')
        for i in range(m):
            lines.append(f'    "{v}:{i}" [label="{i}"];')
        lines.append('  }')
    for (u, v), pairs in zip(cover.base.edges, cover.links):
        for i, j in pairs:
            lines.append(f'  "{u}:{i}" -- "{v}:{j}";')
    lines.append('}')
    return "\n".join(lines) + "\n"
