"""
JSON 格式化器
"""
import json

from .base import BaseFormatter, Reports
from ..lab.report import SearchReport


class JSONFormatter(BaseFormatter):
    """JSON 格式化器"""

    def __init__(self, indent: int = 2):
        """
        Args:
            indent: JSON 缩进空格数
        """
        self.indent = indent

    def format(self, result: Reports) -> str:
        """单个网格报告输出对象，多个输出数组"""
        if isinstance(result, SearchReport):
            return result.to_json(indent=self.indent) + "\n"
        payload = [report.to_dict() for report in result]
        if len(payload) == 1:
            payload = payload[0]
        return json.dumps(payload, ensure_ascii=False, indent=self.indent) + "\n"

    def get_extension(self) -> str:
        """返回扩展名"""
        return "json"
