"""
Core - 工作台基础设施

包含：
- config: 配置管理
- errors: 异常定义
- output_formatter: 诊断输出格式化
"""

from .config import Config, setup_config, get_config, reset_config
from .errors import (
    DPColorError,
    GraphValidationError,
    CoverValidationError,
    PreconditionError,
    BudgetExceededError,
    RetryExhaustedError,
    ConfigurationError,
)
from .output_formatter import (
    OutputFormatter,
    print_search_stats,
    print_construct_progress,
    print_report_table,
)

__all__ = [
    # config
    'Config',
    'setup_config',
    'get_config',
    'reset_config',
    # errors
    'DPColorError',
    'GraphValidationError',
    'CoverValidationError',
    'PreconditionError',
    'BudgetExceededError',
    'RetryExhaustedError',
    'ConfigurationError',
    # output_formatter
    'OutputFormatter',
    'print_search_stats',
    'print_construct_progress',
    'print_report_table',
]
