#!/usr/bin/env python3
"""
测试配置管理

验证默认值、.env 文件、环境变量与直接参数之间的优先级，以及种子要求。
"""

import os
import sys

# 添加父目录到路径
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from src.core.config import Config, get_config, reset_config, setup_config
from src.core.errors import ConfigurationError


@pytest.fixture(autouse=True)
def clean_env(tmp_path, monkeypatch):
    for key in list(os.environ):
        if key.startswith('DPCOLOR_'):
            monkeypatch.delenv(key)
    monkeypatch.chdir(tmp_path)
    reset_config()
    yield
    reset_config()


def test_defaults():
    """测试默认配置"""
    print("\n" + "=" * 80)
    print("测试 1: 默认配置")
    print("=" * 80)

    config = setup_config()
    assert config.budget == Config.DEFAULT_BUDGET, "穷举预算应为默认值"
    assert config.verdict_budget == Config.DEFAULT_VERDICT_BUDGET
    assert config.retry_cap == Config.DEFAULT_RETRY_CAP
    assert config.seed is None, "默认没有种子"
    assert config.workers == 1
    assert config.cross_check is True
    assert config.log_level == 'WARNING'

    print("✓ 默认配置测试通过")


def test_singleton():
    """测试单例"""
    assert get_config() is get_config()
    get_config().set_seed(3)
    assert Config().seed == 3, "单例的所有引用共享状态"
    assert reset_config().seed is None


def test_dotenv_file(tmp_path):
    """测试 .env 文件加载"""
    print("\n" + "=" * 80)
    print("测试 2: .env 文件")
    print("=" * 80)

    (tmp_path / '.env').write_text(
        "DPCOLOR_BUDGET=500\nDPCOLOR_SEED=17\nDPCOLOR_CROSS_CHECK=false\nOTHER_KEY=ignored\n",
        encoding='utf-8',
    )
    config = setup_config()
    assert config.budget == 500, ".env 中的预算应生效"
    assert config.seed == 17
    assert config.cross_check is False

    print("✓ .env 文件测试通过")


def test_priority(tmp_path, monkeypatch):
    """测试优先级：直接参数 > 环境变量 > .env 文件"""
    print("\n" + "=" * 80)
    print("测试 3: 配置优先级")
    print("=" * 80)

    (tmp_path / '.env').write_text("DPCOLOR_BUDGET=500\nDPCOLOR_RETRY_CAP=7\n", encoding='utf-8')
    monkeypatch.setenv('DPCOLOR_BUDGET', '800')
    monkeypatch.setenv('DPCOLOR_LOG_LEVEL', 'debug')
    config = setup_config(retry_cap=9)

    assert config.budget == 800, "环境变量应覆盖 .env"
    assert config.retry_cap == 9, "直接参数应覆盖 .env"
    assert config.log_level == 'DEBUG', "日志级别统一为大写"

    print("✓ 配置优先级测试通过")


def test_env_only_skips_dotenv(tmp_path):
    (tmp_path / '.env').write_text("DPCOLOR_SEED=17\n", encoding='utf-8')
    config = setup_config(use_dotenv=False)
    assert config.seed is None


def test_require_seed():
    """测试种子要求"""
    config = setup_config()
    with pytest.raises(ConfigurationError) as info:
        config.require_seed()
    assert "DPCOLOR_SEED" in str(info.value), "错误信息应说明如何配置种子"
    assert setup_config(seed=42).require_seed() == 42


@pytest.mark.parametrize("kwargs", [
    {'budget': 0},
    {'verdict_budget': -1},
    {'retry_cap': 0},
    {'workers': 0},
    {'log_level': 'chatty'},
])
def test_validate_rejects(kwargs):
    with pytest.raises(ConfigurationError):
        setup_config(**kwargs)


def test_unparsable_env_value(monkeypatch):
    monkeypatch.setenv('DPCOLOR_BUDGET', 'lots')
    with pytest.raises(ConfigurationError):
        setup_config()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
