"""
模式匹配的组合运算

四种模式：文本 T 与模式 P 生成的理想求交。
prefix -> (PΣ*)∩T，suffix -> (Σ*P)∩T，factor -> (Σ*PΣ*)∩T，subsequence -> (Σ*⧢P)∩T
"""
from dataclasses import dataclass
from enum import Enum

from loguru import logger

from .automata import Dfa, WordLike
from .ideals import IdealKind, ideal
from .minimize import minimize
from .operations import product_intersection, same_alphabet


class MatchMode(str, Enum):
    """匹配模式，与 IdealKind 一一对应"""
    PREFIX = 'prefix'
    SUFFIX = 'suffix'
    FACTOR = 'factor'
    SUBSEQUENCE = 'subsequence'

    @property
    def kind(self) -> IdealKind:
        return _KIND_OF[self]


_KIND_OF = {
    MatchMode.PREFIX: IdealKind.RIGHT,
    MatchMode.SUFFIX: IdealKind.LEFT,
    MatchMode.FACTOR: IdealKind.TWO_SIDED,
    MatchMode.SUBSEQUENCE: IdealKind.ALL_SIDED,
}


@dataclass(frozen=True)
class MatchDiagnostics:
    """匹配结果及未最小化直积的可达状态数"""
    minimal: Dfa
    reachable_product_states: int

    @property
    def distinguishable_states(self) -> int:
        return self.minimal.state_count


def match_with_diagnostics(mode: MatchMode, p: Dfa, t: Dfa) -> MatchDiagnostics:
    mode = MatchMode(mode)
    same_alphabet(p, t)
    raw = product_intersection(ideal(mode.kind, p), t)
    minimal = minimize(raw)
    logger.debug(
        f"匹配 {mode.value}: 直积可达 {raw.state_count} 个状态，最小 {minimal.state_count} 个"
    )
    return MatchDiagnostics(minimal, raw.state_count)


def match_language(mode: MatchMode, p: Dfa, t: Dfa) -> Dfa:
    """
    ideal(kind(mode), p) ∩ L(t) 的最小 DFA

    Raises:
        AlphabetMismatchError: 字母表不一致
    """
    return match_with_diagnostics(mode, p, t).minimal


def classify_word(mode: MatchMode, p: Dfa, text: WordLike) -> bool:
    """
    判断具体文本是否以给定模式包含 P 中的单词（在理想 DFA 上运行）

    Raises:
        UnknownLetterError: 文本含字母表以外的字母
    """
    mode = MatchMode(mode)
    return ideal(mode.kind, p).accepts(text)
