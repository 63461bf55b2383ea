"""
输入验证器

CLI 在调用运算前做的前置检查：字母表一致、输入是否最小
"""
from typing import List, Tuple

from loguru import logger

from .automata import Dfa
from .minimize import minimize


class Validator:
    """输入验证器"""

    def __init__(self, strict: bool = True):
        """
        Args:
            strict: 严格模式下验证失败记为 error，否则只记 warning
        """
        self.strict = strict

    def _report(self, problems: List[str]) -> Tuple[bool, List[str]]:
        for problem in problems:
            if self.strict:
                logger.error(f"验证失败: {problem}")
            else:
                logger.warning(f"验证警告: {problem}")
        return not problems, problems

    def validate_alphabets(self, *automata) -> Tuple[bool, List[str]]:
        """
        所有自动机的字母表逐字母一致

        Returns:
            (是否通过, 问题列表)
        """
        problems = []
        first = automata[0].alphabet.letters
        for i, d in enumerate(automata[1:], start=2):
            if d.alphabet.letters != first:
                problems.append(
                    f"第 {i} 个自动机的字母表 {' '.join(d.alphabet.letters)} "
                    f"与第 1 个 {' '.join(first)} 不一致"
                )
        return self._report(problems)

    def validate_minimal(self, d: Dfa, name: str = "DFA") -> Tuple[bool, List[str]]:
        """d 已是最小 DFA（最小化不减少状态数）"""
        count = minimize(d).state_count
        problems = []
        if count != d.state_count:
            problems.append(f"{name} 不是最小的: {d.state_count} 个状态，最小为 {count}")
        return self._report(problems)
