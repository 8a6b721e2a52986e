"""
配置管理模块 - 统一管理工作台的预算、重试与随机种子

支持多种配置方式（按优先级从低到高）:
1. .env 文件
2. 环境变量 (DPCOLOR_*)
3. 代码或命令行参数直接设置

所有随机化操作都要求显式种子，不存在基于时钟的默认值。
"""

import os
import logging
from typing import Optional

from dotenv import dotenv_values

from .errors import ConfigurationError


logger = logging.getLogger(__name__)


_TRUE_VALUES = ('true', '1', 'yes')


class Config:
    """配置管理类 - 单例模式"""

    _instance = None
    _initialized = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    # 默认值常量
    DEFAULT_BUDGET: int = 10 ** 7
    DEFAULT_VERDICT_BUDGET: int = 10 ** 6
    DEFAULT_RETRY_CAP: int = 10 ** 4

    def __init__(self):
        if not self._initialized:
            self._budget: int = self.DEFAULT_BUDGET
            self._verdict_budget: int = self.DEFAULT_VERDICT_BUDGET
            self._retry_cap: int = self.DEFAULT_RETRY_CAP
            self._seed: Optional[int] = None
            self._workers: int = 1
            self._cross_check: bool = True
            self._log_level: str = 'WARNING'
            self._initialized = True

    def _apply(self, key: str, value: str) -> None:
        """把一个字符串形式的配置项写入实例"""
        try:
            if key == 'DPCOLOR_BUDGET':
                self._budget = int(value)
            elif key == 'DPCOLOR_VERDICT_BUDGET':
                self._verdict_budget = int(value)
            elif key == 'DPCOLOR_RETRY_CAP':
                self._retry_cap = int(value)
            elif key == 'DPCOLOR_SEED':
                self._seed = int(value)
            elif key == 'DPCOLOR_WORKERS':
                self._workers = int(value)
            elif key == 'DPCOLOR_CROSS_CHECK':
                self._cross_check = value.lower() in _TRUE_VALUES
            elif key == 'DPCOLOR_LOG_LEVEL':
                self._log_level = value.upper()
        except ValueError as e:
            raise ConfigurationError(f"配置项 {key} 的取值无法解析: {value!r}") from e

    def load_from_env(self) -> 'Config':
        """从环境变量加载配置"""
        for key in (
            'DPCOLOR_BUDGET', 'DPCOLOR_VERDICT_BUDGET', 'DPCOLOR_RETRY_CAP',
            'DPCOLOR_SEED', 'DPCOLOR_WORKERS', 'DPCOLOR_CROSS_CHECK', 'DPCOLOR_LOG_LEVEL',
        ):
            value = os.environ.get(key)
            if value:
                self._apply(key, value)
        return self

    def load_from_dotenv(self, dotenv_path: str = '.env') -> 'Config':
        """从 .env 文件加载配置"""
        if not os.path.exists(dotenv_path):
            return self
        for key, value in dotenv_values(dotenv_path).items():
            if key.startswith('DPCOLOR_') and value:
                self._apply(key, value)
        logger.debug("已从 %s 加载配置", dotenv_path)
        return self

    def set_budget(self, budget: int) -> 'Config':
        """手动设置穷举预算"""
        self._budget = budget
        return self

    def set_verdict_budget(self, budget: int) -> 'Config':
        """手动设置判定预算（X 侧着色数量上限）"""
        self._verdict_budget = budget
        return self

    def set_retry_cap(self, retry_cap: int) -> 'Config':
        """手动设置每个类的重试上限"""
        self._retry_cap = retry_cap
        return self

    def set_seed(self, seed: Optional[int]) -> 'Config':
        """手动设置随机种子"""
        self._seed = seed
        return self

    def set_workers(self, workers: int) -> 'Config':
        """手动设置线程池宽度"""
        self._workers = workers
        return self

    def set_cross_check(self, cross_check: bool) -> 'Config':
        """手动设置是否用定义式检查复核快速判据"""
        self._cross_check = cross_check
        return self

    def set_log_level(self, level: str) -> 'Config':
        """手动设置日志级别"""
        self._log_level = level.upper()
        return self

    @property
    def budget(self) -> int:
        """穷举搜索的覆盖空间上限"""
        return self._budget

    @property
    def verdict_budget(self) -> int:
        """坏覆盖判定时允许的 X 侧着色数量上限"""
        return self._verdict_budget

    @property
    def retry_cap(self) -> int:
        """随机构造中每个类的重采样上限"""
        return self._retry_cap

    @property
    def seed(self) -> Optional[int]:
        """随机种子（未设置时为 None）"""
        return self._seed

    @property
    def workers(self) -> int:
        """线程池宽度"""
        return self._workers

    @property
    def cross_check(self) -> bool:
        """是否复核快速易变判据"""
        return self._cross_check

    @property
    def log_level(self) -> str:
        """日志级别"""
        return self._log_level

    def require_seed(self) -> int:
        """获取种子，未配置时报错"""
        if self._seed is None:
            raise ConfigurationError(
                "随机化操作需要显式种子。请通过以下方式之一配置:\n"
                "1. 命令行参数: --seed 42\n"
                "2. 环境变量: export DPCOLOR_SEED=42\n"
                "3. .env 文件: 添加 DPCOLOR_SEED=42"
            )
        return self._seed

    def validate(self) -> None:
        """验证配置取值是否合法"""
        if self._budget < 1:
            raise ConfigurationError(
                f"穷举预算必须为正整数，当前为 {self._budget}。\n"
                "请通过 --budget 或 DPCOLOR_BUDGET 重新设置"
            )
        if self._verdict_budget < 1:
            raise ConfigurationError(
                f"判定预算必须为正整数，当前为 {self._verdict_budget}。\n"
                "请通过 DPCOLOR_VERDICT_BUDGET 重新设置"
            )
        if self._retry_cap < 1:
            raise ConfigurationError(
                f"重试上限至少为 1，当前为 {self._retry_cap}。\n"
                "请通过 --retry-cap 或 DPCOLOR_RETRY_CAP 重新设置"
            )
        if self._workers < 1:
            raise ConfigurationError(f"线程池宽度至少为 1，当前为 {self._workers}")
        if self._log_level not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            raise ConfigurationError(f"未知的日志级别: {self._log_level}")


# ============================================================================
# 便捷函数
# ============================================================================

def get_config() -> Config:
    """获取配置实例（单例）"""
    return Config()


def reset_config() -> Config:
    """丢弃单例并返回一个默认配置（测试用）"""
    Config._instance = None
    Config._initialized = False
    return Config()


def setup_config(
    budget: Optional[int] = None,
    verdict_budget: Optional[int] = None,
    retry_cap: Optional[int] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    cross_check: Optional[bool] = None,
    log_level: Optional[str] = None,
    use_dotenv: bool = True,
    use_env: bool = True
) -> Config:
    """
    设置配置并返回配置实例

    Args:
        budget: 穷举预算
        verdict_budget: 判定预算
        retry_cap: 每类重试上限
        seed: 随机种子
        workers: 线程池宽度
        cross_check: 是否复核快速判据
        log_level: 日志级别
        use_dotenv: 是否从 .env 文件加载
        use_env: 是否从环境变量加载

    Returns:
        Config 实例

    优先级顺序:
    1. 直接提供的参数
    2. 环境变量
    3. .env 文件
    """
    config = get_config()

    if use_dotenv:
        config.load_from_dotenv()

    if use_env:
        config.load_from_env()

    if budget is not None:
        config.set_budget(budget)
    if verdict_budget is not None:
        config.set_verdict_budget(verdict_budget)
    if retry_cap is not None:
        config.set_retry_cap(retry_cap)
    if seed is not None:
        config.set_seed(seed)
    if workers is not None:
        config.set_workers(workers)
    if cross_check is not None:
        config.set_cross_check(cross_check)
    if log_level is not None:
        config.set_log_level(log_level)

    config.validate()
    return config
