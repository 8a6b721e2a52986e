"""
输出格式化模块 - 统一管理诊断输出格式

所有诊断信息（搜索统计、构造进度、验证报告表）都写到标准错误，
标准输出只承载一个 JSON 文档。
输出标签格式:
- [Search] - 搜索统计
- [Construct: 名称] - 构造进度
- [Verify] - 验证报告
"""

import sys
from typing import Iterable, Optional, TextIO


class OutputFormatter:
    """输出格式化器 - 统一管理所有诊断样式"""

    # 全局开关：是否启用诊断输出
    PRINT_ENABLED = True

    # 分隔符长度
    SEPARATOR_LENGTH = 70

    # 分隔符样式
    SEPARATOR_SECTION = "-"
    SEPARATOR_REPORT = "="

    # 诊断流（默认标准错误）
    _stream: Optional[TextIO] = None

    @classmethod
    def set_stream(cls, stream: Optional[TextIO]):
        """设置诊断输出流，None 表示标准错误"""
        cls._stream = stream

    @classmethod
    def stream(cls) -> TextIO:
        return cls._stream or sys.stderr

    @classmethod
    def emit(cls, text: str):
        if cls.PRINT_ENABLED:
            print(text, file=cls.stream(), flush=True)

    @staticmethod
    def format_search_stats(label: str, nodes: int, backtracks: int, elapsed: float) -> str:
        """格式化一次搜索的统计"""
        return f"[Search | {label}] nodes={nodes} backtracks={backtracks} elapsed={elapsed:.4f}s"

    @staticmethod
    def format_construct_progress(name: str, done: int, total: int, retries: int) -> str:
        """格式化构造进度"""
        return f"[Construct: {name}] classes {done}/{total} retries={retries}"

    @staticmethod
    def format_report_line(claim_id: str, passed: bool, expected, computed, elapsed: float) -> str:
        status = "✓" if passed else "✗"
        return f"  {status} {claim_id:<30} expected={expected} computed={computed} ({elapsed:.2f}s)"


# ============================================================================
# 便捷函数
# ============================================================================

def print_search_stats(label: str, nodes: int, backtracks: int, elapsed: float):
    OutputFormatter.emit(OutputFormatter.format_search_stats(label, nodes, backtracks, elapsed))


def print_construct_progress(name: str, done: int, total: int, retries: int):
    OutputFormatter.emit(OutputFormatter.format_construct_progress(name, done, total, retries))


def print_report_table(rows: Iterable[tuple]):
    """打印验证报告表，rows 为 (claim_id, passed, expected, computed, elapsed)"""
    rows = list(rows)
    OutputFormatter.emit(OutputFormatter.SEPARATOR_REPORT * OutputFormatter.SEPARATOR_LENGTH)
    OutputFormatter.emit("[Verify] 论断验证结果")
    OutputFormatter.emit(OutputFormatter.SEPARATOR_SECTION * OutputFormatter.SEPARATOR_LENGTH)
    for claim_id, passed, expected, computed, elapsed in rows:
        OutputFormatter.emit(OutputFormatter.format_report_line(claim_id, passed, expected, computed, elapsed))
    passed_count = sum(1 for row in rows if row[1])
    OutputFormatter.emit(OutputFormatter.SEPARATOR_SECTION * OutputFormatter.SEPARATOR_LENGTH)
    OutputFormatter.emit(f"[Verify] 通过 {passed_count}/{len(rows)}")
    OutputFormatter.emit(OutputFormatter.SEPARATOR_REPORT * OutputFormatter.SEPARATOR_LENGTH)
