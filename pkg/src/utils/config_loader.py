"""
配置加载器

加载并验证 config.yaml（实验参数与日志设置）；文件缺失时使用默认值
"""
from pathlib import Path
from typing import Optional

import yaml
from loguru import logger
from pydantic import BaseModel, Field, field_validator

from .logger import DEFAULT_FORMAT

_LEVELS = {'TRACE', 'DEBUG', 'INFO', 'SUCCESS', 'WARNING', 'ERROR', 'CRITICAL'}


class LabConfig(BaseModel):
    """实验配置"""
    cell_timeout: float = Field(default=30.0, gt=0, description="网格单格超时（秒）")
    workers: int = Field(default=1, ge=1, description="网格并行线程数")
    default_budget: int = Field(default=10_000, ge=1, description="字母表搜索默认样本数")
    default_seed: int = Field(default=1, description="字母表搜索默认随机种子")
    enumerate_guard: int = Field(default=16, ge=0, description="语言枚举的最大长度上限")


class LoggingConfig(BaseModel):
    """日志配置"""
    level: str = "WARNING"
    file: Optional[str] = None
    format: str = DEFAULT_FORMAT

    @field_validator('level')
    @classmethod
    def validate_level(cls, v: str) -> str:
        v = v.upper()
        if v not in _LEVELS:
            raise ValueError(f"日志级别必须是 {sorted(_LEVELS)} 之一，但得到: {v}")
        return v


class Config(BaseModel):
    """主配置"""
    lab: LabConfig = Field(default_factory=LabConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)


class ConfigLoader:
    """配置加载器"""

    def __init__(self, config_path: Optional[str] = "config.yaml", required: bool = False):
        """
        Args:
            config_path: 配置文件路径
            required: 为 True 时文件必须存在（用户显式指定了 --config）
        """
        self.config_path = Path(config_path) if config_path else None
        self.required = required
        self.config: Optional[Config] = None

    def load(self) -> Config:
        """
        加载主配置文件

        Raises:
            FileNotFoundError: required 且文件不存在
            pydantic.ValidationError: 配置值非法
        """
        if self.config_path is None or not self.config_path.exists():
            if self.required:
                raise FileNotFoundError(f"配置文件不存在: {self.config_path}")
            self.config = Config()
            return self.config

        with open(self.config_path, 'r', encoding='utf-8') as f:
            config_dict = yaml.safe_load(f) or {}

        self.config = Config(**config_dict)
        logger.debug(f"成功加载配置文件: {self.config_path}")
        return self.config
