"""
随机自动机采样

每个字母独立均匀抽取变换，终止集合在非空子集中均匀抽取，初始状态固定为 0。
"""
from typing import Optional

import numpy as np

from ..core.automata import Alphabet, Dfa, Nfa, Word


def random_dfa(rng: np.random.Generator, alphabet: Alphabet, state_count: int,
               allow_empty_finals: bool = False) -> Dfa:
    table = rng.integers(0, state_count, size=(state_count, len(alphabet)))
    low = 0 if allow_empty_finals else 1
    mask = int(rng.integers(low, 1 << state_count))
    finals = frozenset(q for q in range(state_count) if mask >> q & 1)
    delta = tuple(tuple(int(p) for p in row) for row in table)
    return Dfa(alphabet, state_count, 0, finals, delta)


def random_nfa(rng: np.random.Generator, alphabet: Alphabet, state_count: int,
               density: float = 0.3) -> Nfa:
    """每条边 (q, c, p) 以概率 density 独立出现"""
    edges = rng.random((state_count, len(alphabet), state_count)) < density
    delta = tuple(
        tuple(frozenset(int(p) for p in np.flatnonzero(edges[q, c])) for c in range(len(alphabet)))
        for q in range(state_count)
    )
    finals = frozenset(int(q) for q in np.flatnonzero(rng.random(state_count) < 0.5))
    return Nfa(alphabet, state_count, 0, finals, delta)


def random_word(rng: np.random.Generator, alphabet: Alphabet, max_len: int,
                min_len: int = 0, length: Optional[int] = None) -> Word:
    if length is None:
        length = int(rng.integers(min_len, max_len + 1))
    return tuple(alphabet.letters[int(c)] for c in rng.integers(0, len(alphabet), size=length))
