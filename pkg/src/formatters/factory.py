"""
格式化器工厂

按格式名或输出文件扩展名选择报告格式化器
"""
from pathlib import Path
from typing import Dict, Optional, Type

from .base import BaseFormatter
from .csv_formatter import CSVFormatter
from .json_formatter import JSONFormatter
from .markdown_formatter import MarkdownFormatter
from .yaml_formatter import YAMLFormatter


class FormatterFactory:
    """格式化器工厂"""

    _formatters: Dict[str, Type[BaseFormatter]] = {
        'csv': CSVFormatter,
        'json': JSONFormatter,
        'yaml': YAMLFormatter,
        'yml': YAMLFormatter,
        'md': MarkdownFormatter,
        'markdown': MarkdownFormatter,
    }

    @classmethod
    def create(cls, format_type: str) -> BaseFormatter:
        """
        创建格式化器实例

        Raises:
            ValueError: 如果格式类型不支持
        """
        format_type = format_type.lower()
        if format_type not in cls._formatters:
            supported = ', '.join(cls._formatters.keys())
            raise ValueError(f"不支持的输出格式: '{format_type}'. 支持的格式: {supported}")
        return cls._formatters[format_type]()

    @classmethod
    def for_output(cls, format_type: Optional[str], out_path: Optional[str],
                   default: str = 'csv') -> BaseFormatter:
        """显式格式优先，其次看输出文件扩展名，最后用默认格式"""
        if format_type:
            return cls.create(format_type)
        if out_path:
            suffix = Path(out_path).suffix.lstrip('.').lower()
            if suffix in cls._formatters:
                return cls.create(suffix)
        return cls.create(default)

    @classmethod
    def get_supported_formats(cls) -> list[str]:
        """获取支持的格式列表"""
        return list(cls._formatters.keys())
