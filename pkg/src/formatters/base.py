"""
报告格式化器基类
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Union

from ..lab.report import ComplexityReport, SearchReport

Reports = Union[List[ComplexityReport], SearchReport]


def search_summary(report: SearchReport) -> Dict[str, Any]:
    """SearchReport 的标量字段（不含序列化的自动机）"""
    return report.model_dump(exclude={'best_pair', 'counterexample'}) | {
        'counterexample_found': report.counterexample is not None,
    }


class BaseFormatter(ABC):
    """报告格式化器基类"""

    @abstractmethod
    def format(self, result: Reports) -> str:
        """
        将报告格式化为字符串

        Args:
            result: 网格报告列表或搜索报告

        Returns:
            格式化后的字符串
        """
        pass

    @abstractmethod
    def get_extension(self) -> str:
        """
        返回文件扩展名

        Returns:
            文件扩展名（不带点）
        """
        pass
