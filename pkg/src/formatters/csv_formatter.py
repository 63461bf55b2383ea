"""
CSV 格式化器
"""
import csv
import io

from .base import BaseFormatter, Reports, search_summary
from ..lab.report import SearchReport, reports_to_csv


class CSVFormatter(BaseFormatter):
    """CSV 格式化器，网格报告列序固定"""

    def format(self, result: Reports) -> str:
        if isinstance(result, SearchReport):
            summary = search_summary(result)
            buffer = io.StringIO()
            writer = csv.DictWriter(buffer, fieldnames=list(summary), lineterminator='\n')
            writer.writeheader()
            writer.writerow(summary)
            return buffer.getvalue()
        return reports_to_csv(result)

    def get_extension(self) -> str:
        return "csv"
