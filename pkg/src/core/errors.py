"""
异常定义 - 工作台统一的错误类型

所有错误都继承自 ValueError，便于调用方沿用 `except ValueError` 的写法，
同时 CLI 可以按具体子类映射退出码。
"""

from typing import Any, Dict, List, Optional


class DPColorError(ValueError):
    """工作台错误基类"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class GraphValidationError(DPColorError):
    """图结构不合法（自环、重边、越界下标等）"""


class CoverValidationError(DPColorError):
    """覆盖不合法 - 携带违规报告"""

    def __init__(self, message: str, violations: Optional[List[str]] = None):
        super().__init__(message, {'violations': list(violations or [])})
        self.violations = list(violations or [])


class PreconditionError(DPColorError):
    """操作的前置条件不满足"""


class BudgetExceededError(DPColorError):
    """搜索规模超过预算"""

    def __init__(self, message: str, size: int, limit: int):
        super().__init__(message, {'size': size, 'limit': limit})
        self.size = size
        self.limit = limit


class RetryExhaustedError(DPColorError):
    """随机构造在重试上限内未成功"""

    def __init__(self, message: str, failures: List[Dict[str, Any]]):
        super().__init__(message, {'failures': failures})
        self.failures = failures


class ConfigurationError(DPColorError):
    """配置不完整或取值非法"""
