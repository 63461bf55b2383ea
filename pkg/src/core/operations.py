"""
布尔运算、等价判定与语言枚举
"""
from collections import deque
from typing import Callable, Dict, List, Tuple

from loguru import logger

from .automata import Dfa, Nfa, Word, WordSample
from .errors import AlphabetMismatchError, AutomatonError

DEFAULT_ENUMERATE_GUARD = 16


def same_alphabet(d1, d2):
    """逐字母比较字母表，不一致时抛出 AlphabetMismatchError"""
    if d1.alphabet.letters != d2.alphabet.letters:
        raise AlphabetMismatchError(d1.alphabet.letters, d2.alphabet.letters)


def product(d1: Dfa, d2: Dfa, combine: Callable[[bool, bool], bool]) -> Dfa:
    """
    直积：只包含可达状态对

    Args:
        d1: 左操作数
        d2: 右操作数
        combine: 由两个分量是否接受决定状态对是否接受

    Raises:
        AlphabetMismatchError: 字母表不一致
    """
    same_alphabet(d1, d2)
    k = len(d1.alphabet)
    start = (d1.initial, d2.initial)
    index: Dict[Tuple[int, int], int] = {start: 0}
    pairs = [start]
    delta: List[Tuple[int, ...]] = []
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        row = []
        for c in range(k):
            target = (d1.delta[p][c], d2.delta[q][c])
            if target not in index:
                index[target] = len(pairs)
                pairs.append(target)
                queue.append(target)
            row.append(index[target])
        delta.append(tuple(row))

    finals = frozenset(
        i for i, (p, q) in enumerate(pairs) if combine(p in d1.finals, q in d2.finals)
    )
    logger.debug(f"直积: {d1.state_count} x {d2.state_count} -> {len(pairs)} 个可达状态对")
    return Dfa(d1.alphabet, len(pairs), 0, finals, tuple(delta))


def product_intersection(d1: Dfa, d2: Dfa) -> Dfa:
    return product(d1, d2, lambda x, y: x and y)


def product_union(d1: Dfa, d2: Dfa) -> Dfa:
    return product(d1, d2, lambda x, y: x or y)


def product_difference(d1: Dfa, d2: Dfa) -> Dfa:
    """L(d1) \\ L(d2)"""
    return product(d1, d2, lambda x, y: x and not y)


def is_empty(d: Dfa) -> bool:
    """可达部分中没有终止状态"""
    seen = {d.initial}
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        if q in d.finals:
            return False
        for p in d.delta[q]:
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return True


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    """语言相等：对称差的直积为空（不经过最小化）"""
    return is_empty(product(d1, d2, lambda x, y: x != y))


def subset_of(d1: Dfa, d2: Dfa) -> bool:
    """L(d1) ⊆ L(d2)"""
    return is_empty(product_difference(d1, d2))


def _check_guard(max_len: int, guard: int):
    if max_len < 0:
        raise AutomatonError(f"max_len 不能为负: {max_len}")
    if max_len > guard:
        raise AutomatonError(f"max_len={max_len} 超过枚举上限 {guard}")


def enumerate_language(d: Dfa, max_len: int, guard: int = DEFAULT_ENUMERATE_GUARD) -> WordSample:
    """
    暴力枚举长度不超过 max_len 的全部接受单词

    按字母表顺序做字典序 DFS，结果已排序且无重复。

    Raises:
        AutomatonError: max_len 超过上限
    """
    _check_guard(max_len, guard)
    letters = d.alphabet.letters
    words: List[Word] = []

    def walk(q: int, prefix: Tuple[str, ...]):
        if q in d.finals:
            words.append(prefix)
        if len(prefix) == max_len:
            return
        for c, letter in enumerate(letters):
            walk(d.delta[q][c], prefix + (letter,))

    walk(d.initial, ())
    return WordSample(max_len, tuple(words))


def enumerate_nfa(n: Nfa, max_len: int, guard: int = DEFAULT_ENUMERATE_GUARD) -> WordSample:
    """直接在 NFA 上搜索枚举（作为子集构造的对照）"""
    _check_guard(max_len, guard)
    letters = n.alphabet.letters
    words: List[Word] = []

    def walk(current: frozenset, prefix: Tuple[str, ...]):
        if current & n.finals:
            words.append(prefix)
        if len(prefix) == max_len:
            return
        for c, letter in enumerate(letters):
            walk(n.step(current, c), prefix + (letter,))

    walk(frozenset({n.initial}), ())
    return WordSample(max_len, tuple(words))
