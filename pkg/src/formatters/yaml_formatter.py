"""
YAML 格式化器
"""
import yaml

from .base import BaseFormatter, Reports
from ..lab.report import SearchReport


class YAMLFormatter(BaseFormatter):
    """复杂度报告输出为报告列表，搜索报告输出为单个映射"""

    def format(self, result: Reports) -> str:
        if isinstance(result, SearchReport):
            payload = result.model_dump(mode='json')
        else:
            payload = [report.to_dict() for report in result]
        # 网格行较多，块风格便于逐格 diff
        return yaml.safe_dump(payload, allow_unicode=True, sort_keys=False)

    def get_extension(self) -> str:
        return "yaml"
