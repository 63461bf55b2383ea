"""
异常定义

所有"输入错误"都继承自 AutomatonError（ValueError 子类），CLI 统一映射为退出码 2
"""
from typing import Optional


class AutomatonError(ValueError):
    """自动机输入错误"""


class UnknownLetterError(AutomatonError):
    """单词中出现字母表以外的字母"""

    def __init__(self, letter: str, position: int):
        self.letter = letter
        self.position = position
        super().__init__(f"未知字母 '{letter}'（位置 {position}）")


class AlphabetMismatchError(AutomatonError):
    """两个自动机的字母表不一致"""

    def __init__(self, left, right):
        super().__init__(
            f"字母表不一致: {' '.join(left)} vs {' '.join(right)}"
        )


class FormatError(AutomatonError):
    """自动机文本格式错误"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"第 {line} 行: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class WitnessRangeError(AutomatonError):
    """见证族参数越界"""
