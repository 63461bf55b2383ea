"""
Markdown 格式化器
"""
from .base import BaseFormatter, Reports, search_summary
from ..lab.report import SearchReport


class MarkdownFormatter(BaseFormatter):
    """Markdown 格式化器 - 适合放进文档的表格"""

    def format(self, result: Reports) -> str:
        if isinstance(result, SearchReport):
            lines = ["# 字母表极小性搜索\n", "| 字段 | 值 |", "|---|---|"]
            lines += [f"| {key} | {value} |" for key, value in search_summary(result).items()]
            if result.counterexample:
                lines.append("\n## 反例\n")
                for label, text in zip(("P", "T"), result.counterexample):
                    lines += [f"### {label}\n", "```", text.rstrip(), "```\n"]
            return "\n".join(lines) + "\n"

        lines = []
        for report in result:
            lines.append(f"# {report.family.value}\n")
            lines.append("| m | n | 实测 κ | 上界 | 达到 | 耗时 (ms) |")
            lines.append("|---|---|---|---|---|---|")
            for row in report.rows:
                measured = row.measured if row.measured is not None else f"失败: {row.error}"
                mark = "✅" if row.tight else "❌"
                lines.append(
                    f"| {row.m} | {row.n} | {measured} | {row.formula} | {mark} | {row.elapsed_ms:.1f} |"
                )
            lines.append("")
        return "\n".join(lines)

    def get_extension(self) -> str:
        return "md"
