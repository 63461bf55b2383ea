"""
测试辅助：随机自动机策略与暴力判定
"""
from itertools import combinations, product
from typing import Iterator, Tuple

from hypothesis import strategies as st

from src.core.automata import Alphabet, Dfa, Nfa
from src.core.witnesses import BINARY

TERNARY = Alphabet(('a', 'b', 'c'))


def alphabet_of(size: int) -> Alphabet:
    return Alphabet(tuple('abcd'[:size]))


@st.composite
def dfas(draw, max_states: int = 6, max_letters: int = 3, alphabet: Alphabet = None) -> Dfa:
    if alphabet is None:
        alphabet = alphabet_of(draw(st.integers(1, max_letters)))
    n = draw(st.integers(1, max_states))
    delta = tuple(
        tuple(draw(st.integers(0, n - 1)) for _ in alphabet) for _ in range(n)
    )
    finals = draw(st.frozensets(st.integers(0, n - 1)))
    initial = draw(st.integers(0, n - 1))
    return Dfa(alphabet, n, initial, finals, delta)


@st.composite
def nfas(draw, max_states: int = 5, alphabet: Alphabet = BINARY) -> Nfa:
    n = draw(st.integers(1, max_states))
    targets = st.frozensets(st.integers(0, n - 1), max_size=n)
    delta = tuple(tuple(draw(targets) for _ in alphabet) for _ in range(n))
    finals = draw(st.frozensets(st.integers(0, n - 1)))
    return Nfa(alphabet, n, 0, finals, delta)


def all_words(alphabet: Alphabet, max_len: int) -> Iterator[Tuple[str, ...]]:
    for length in range(max_len + 1):
        yield from product(alphabet.letters, repeat=length)


def has_prefix_in(p: Dfa, x) -> bool:
    return any(p.accepts(x[:i]) for i in range(len(x) + 1))


def has_suffix_in(p: Dfa, x) -> bool:
    return any(p.accepts(x[i:]) for i in range(len(x) + 1))


def has_factor_in(p: Dfa, x) -> bool:
    return any(p.accepts(x[i:j]) for i in range(len(x) + 1) for j in range(i, len(x) + 1))


def has_subsequence_in(p: Dfa, x) -> bool:
    return any(
        p.accepts(tuple(x[i] for i in positions))
        for size in range(len(x) + 1)
        for positions in combinations(range(len(x)), size)
    )


ORACLES = {
    'prefix': has_prefix_in,
    'suffix': has_suffix_in,
    'factor': has_factor_in,
    'subsequence': has_subsequence_in,
}


def is_subsequence(w, x) -> bool:
    it = iter(x)
    return all(letter in it for letter in w)


def is_factor(w, x) -> bool:
    w, x = tuple(w), tuple(x)
    return any(x[i:i + len(w)] == w for i in range(len(x) - len(w) + 1))
