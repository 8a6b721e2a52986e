"""
CLI - dpcolor 命令行与论断验证
"""

from .main import main, build_parser, CommandResult
from .verification import (
    Claim,
    VerificationContext,
    VerificationReport,
    claim_ids,
    select_claims,
    run_claim,
    verify_all,
)

__all__ = [
    'main',
    'build_parser',
    'CommandResult',
    'Claim',
    'VerificationContext',
    'VerificationReport',
    'claim_ids',
    'select_claims',
    'run_claim',
    'verify_all',
]
