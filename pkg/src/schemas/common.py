"""
Common Schemas - 通用响应模型
"""

from typing import Any, Dict, Optional

from pydantic import BaseModel, Field


class SuccessResponse(BaseModel):
    """成功响应"""
    success: bool = True
    message: str = "操作成功"
    data: Optional[Any] = None


class ErrorResponse(BaseModel):
    """错误响应"""
    success: bool = False
    error: str = Field(..., description="错误信息")
    type: Optional[str] = Field(default=None, description="错误类型")
    details: Optional[Dict[str, Any]] = Field(default=None, description="附加信息（违规列表、预算等）")

    @classmethod
    def from_exception(cls, exc: Exception) -> 'ErrorResponse':
        details = getattr(exc, 'details', None)
        message = getattr(exc, 'message', None) or str(exc)
        return cls(error=message, type=type(exc).__name__, details=details or None)
