"""
单词模式的专用构造

P = {w}，w = a1…a_{m-2}。提供 {w} 的 DFA、边界（bridge）表以及四种匹配自动机，
suffix/factor/subsequence 直接由边界表在 O(m·|Σ|) 内构造，不走子集构造。
"""
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Tuple

from loguru import logger

from .automata import Alphabet, Dfa, Word, WordLike
from .errors import AutomatonError
from .matchers import MatchMode
from .minimize import minimize
from .operations import product_intersection, same_alphabet


@dataclass(frozen=True)
class PatternWord:
    """
    非空模式单词

    前缀 w_0 = ε, …, w_{m-2} = w 以长度 0..m-2 编号，m = |w| + 2。
    """

    alphabet: Alphabet
    letters: Word

    def __post_init__(self):
        if not self.letters:
            raise AutomatonError("模式单词不能为空")
        object.__setattr__(self, 'letters', self.alphabet.word(self.letters))

    @classmethod
    def parse(cls, alphabet: Alphabet, text: WordLike) -> 'PatternWord':
        return cls(alphabet, alphabet.word(text))

    @property
    def m(self) -> int:
        return len(self.letters) + 2

    def __len__(self) -> int:
        return len(self.letters)

    def prefix(self, i: int) -> Word:
        return self.letters[:i]

    @cached_property
    def codes(self) -> Tuple[int, ...]:
        return tuple(self.alphabet.indices(self.letters))

    def __str__(self) -> str:
        return self.alphabet.render(self.letters)


@dataclass(frozen=True)
class BridgeTable:
    """
    边界表：f[i-1] = f(i)，i = 1..|w|

    f(i) 是 w_i 的最长真后缀且同时为 w 前缀的长度。
    """

    word: PatternWord
    f: Tuple[int, ...]

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.word):
            raise AutomatonError(f"边界表下标越界: {i}")
        return self.f[i - 1]


def bridge_table(w: PatternWord) -> BridgeTable:
    """标准的失配函数递推"""
    codes = w.codes
    f: List[int] = [0] * len(codes)
    k = 0
    for i in range(1, len(codes)):
        while k > 0 and codes[i] != codes[k]:
            k = f[k - 1]
        if codes[i] == codes[k]:
            k += 1
        f[i] = k
    return BridgeTable(w, tuple(f))


def word_dfa(w: PatternWord) -> Dfa:
    """{w} 的最小完全 DFA：前缀链 + sink，共 |w|+2 个状态"""
    size = len(w)
    sink = size + 1
    k = len(w.alphabet)
    delta = []
    for i in range(size + 1):
        row = [sink] * k
        if i < size:
            row[w.codes[i]] = i + 1
        delta.append(tuple(row))
    delta.append(tuple([sink] * k))
    return Dfa(w.alphabet, size + 2, 0, frozenset({size}), tuple(delta))


def _prefix_automaton(w: PatternWord) -> Dfa:
    size = len(w)
    sink = size + 1
    k = len(w.alphabet)
    delta = []
    for i in range(size):
        row = [sink] * k
        row[w.codes[i]] = i + 1
        delta.append(tuple(row))
    delta.append(tuple([size] * k))
    delta.append(tuple([sink] * k))
    return Dfa(w.alphabet, size + 2, 0, frozenset({size}), tuple(delta))


def _kmp_automaton(w: PatternWord, table: Optional[BridgeTable] = None,
                   absorbing: bool = False) -> Dfa:
    table = table or bridge_table(w)
    size = len(w)
    k = len(w.alphabet)
    delta: List[Tuple[int, ...]] = []
    for i in range(size + 1):
        if absorbing and i == size:
            delta.append(tuple([size] * k))
            continue
        row = []
        for c in range(k):
            if i < size and c == w.codes[i]:
                row.append(i + 1)
            elif i == 0:
                row.append(0)
            else:
                # 沿最长 bridge 回退：δ(w_i, a) = δ(w_f(i), a)
                row.append(delta[table(i)][c])
        delta.append(tuple(row))
    return Dfa(w.alphabet, size + 1, 0, frozenset({size}), tuple(delta))


def _subsequence_automaton(w: PatternWord) -> Dfa:
    size = len(w)
    k = len(w.alphabet)
    delta = []
    for i in range(size + 1):
        row = [i] * k
        if i < size:
            row[w.codes[i]] = i + 1
        delta.append(tuple(row))
    return Dfa(w.alphabet, size + 1, 0, frozenset({size}), tuple(delta))


def single_word_automaton(mode: MatchMode, w: PatternWord) -> Dfa:
    """
    单词模式的理想自动机

    Args:
        mode: prefix -> wΣ*（m 个状态）；suffix -> Σ*w 的 KMP 自动机（m-1 个状态）；
              factor -> 同 suffix 但 w 状态吸收；subsequence -> 前进或停留（m-1 个状态）
        w: 非空模式单词
    """
    mode = MatchMode(mode)
    if mode is MatchMode.PREFIX:
        return _prefix_automaton(w)
    if mode is MatchMode.SUFFIX:
        return _kmp_automaton(w)
    if mode is MatchMode.FACTOR:
        return _kmp_automaton(w, absorbing=True)
    return _subsequence_automaton(w)


def fused_prefix_dfa(w: PatternWord, t: Dfa) -> Dfa:
    """
    把 w 的前缀链嫁接到 t 上：w_{m-3} 读 a_{m-2} 进入 q_r = δ_T(q0, w)

    状态布局：t 的状态 0..n-1，链 w_0..w_{m-3} 为 n..n+|w|-1，sink 为最后一个。
    """
    same_alphabet(w, t)
    n = t.state_count
    size = len(w)
    sink = n + size
    k = len(t.alphabet)
    q_r = t.run(w.letters)
    delta: List[Tuple[int, ...]] = list(t.delta)
    for i in range(size):
        row = [sink] * k
        row[w.codes[i]] = n + i + 1 if i < size - 1 else q_r
        delta.append(tuple(row))
    delta.append(tuple([sink] * k))
    return Dfa(t.alphabet, n + size + 1, n, t.finals, tuple(delta))


def match_single_word(mode: MatchMode, w: PatternWord, t: Dfa) -> Dfa:
    """
    (mode 对应的 {w} 的理想) ∩ L(t) 的最小 DFA

    prefix 走嫁接构造，其余模式与专用自动机做直积。

    Raises:
        AlphabetMismatchError: 字母表不一致
    """
    mode = MatchMode(mode)
    same_alphabet(w, t)
    if mode is MatchMode.PREFIX:
        raw = fused_prefix_dfa(w, t)
    else:
        raw = product_intersection(single_word_automaton(mode, w), t)
    result = minimize(raw)
    logger.debug(f"单词匹配 {mode.value} |w|={len(w)}: {raw.state_count} -> {result.state_count}")
    return result


def longest_prefix_suffix(w: PatternWord, text: Word) -> int:
    """text 的最长后缀且为 w 前缀的长度（暴力）"""
    for size in range(min(len(w), len(text)), -1, -1):
        if size == 0 or tuple(text[len(text) - size:]) == w.letters[:size]:
            return size
    return 0


def bridge_extension_holds(w: PatternWord, x: WordLike) -> bool:
    """对每个 w_i：后缀自动机从 w_i 读 x 到达 w_i·x 的最长后缀且为 w 前缀者"""
    x = w.alphabet.word(x)
    automaton = single_word_automaton(MatchMode.SUFFIX, w)
    return all(
        automaton.run(x, start=i) == longest_prefix_suffix(w, w.prefix(i) + x)
        for i in range(len(w) + 1)
    )


def suffixword_equal_holds(w: PatternWord) -> bool:
    """(i < |w| 且 a ≠ a_{i+1}) 或 i = |w| 时 δ(w_i, a) = δ(w_f(i), a)"""
    automaton = single_word_automaton(MatchMode.SUFFIX, w)
    table = bridge_table(w)
    size = len(w)
    for i in range(1, size + 1):
        for c in range(len(w.alphabet)):
            if i < size and c == w.codes[i]:
                continue
            if automaton.delta[i][c] != automaton.delta[table(i)][c]:
                return False
    return True


def suffixword_next_holds(w: PatternWord) -> bool:
    """i < |w| 时 δ(w_f(i), a_{i+1}) = w_f(i+1)"""
    automaton = single_word_automaton(MatchMode.SUFFIX, w)
    table = bridge_table(w)
    return all(
        automaton.delta[table(i)][w.codes[i]] == table(i + 1)
        for i in range(1, len(w))
    )
