"""
组合运算（匹配）测试
"""
import pytest
from hypothesis import given, settings

from src.core.automata import Alphabet, total_dfa
from src.core.errors import AlphabetMismatchError, UnknownLetterError
from src.core.ideals import IdealKind
from src.core.matchers import MatchMode, classify_word, match_language, match_with_diagnostics
from src.core.minimize import minimize
from src.core.single_word import PatternWord, word_dfa
from src.core.witnesses import (
    BINARY, factor_pattern, factor_text, prefix_pattern, prefix_text, subsequence_pattern,
    subsequence_text, suffix_pattern, suffix_text,
)
from src.lab.sampling import random_dfa
from tests.helpers import ORACLES, all_words, dfas, is_subsequence


def ceiling(mode: MatchMode, m: int, n: int) -> int:
    if mode is MatchMode.PREFIX:
        return m * n
    if mode is MatchMode.SUFFIX:
        return 2 ** (m - 1) * n
    return (2 ** (m - 2) + 1) * n if m >= 2 else n


def test_mode_kinds():
    assert MatchMode.PREFIX.kind is IdealKind.RIGHT
    assert MatchMode.SUFFIX.kind is IdealKind.LEFT
    assert MatchMode.FACTOR.kind is IdealKind.TWO_SIDED
    assert MatchMode.SUBSEQUENCE.kind is IdealKind.ALL_SIDED


class TestWitnessSizes:
    def test_prefix(self):
        assert match_language('prefix', prefix_pattern(4), prefix_text(4)).state_count == 16

    def test_suffix(self):
        assert match_language('suffix', suffix_pattern(3), suffix_text(3)).state_count == 12

    def test_factor(self):
        assert match_language('factor', factor_pattern(4), factor_text(3)).state_count == 15

    def test_subsequence(self):
        result = match_language('subsequence', subsequence_pattern(4), subsequence_text(4, 3))
        assert result.state_count == 15

    def test_rejecting_pattern(self):
        result = match_language('factor', total_dfa(BINARY, accepting=False), suffix_text(5))
        assert result.state_count == 1
        assert not result.finals

    def test_all_product_states_distinguishable(self):
        for m in range(2, 5):
            for n in range(2, 5):
                report = match_with_diagnostics('suffix', suffix_pattern(m), suffix_text(n))
                assert report.reachable_product_states == 2 ** (m - 1) * n
                assert report.distinguishable_states == report.reachable_product_states


@pytest.mark.parametrize('mode', list(MatchMode))
def test_random_pairs_stay_below_ceiling(mode, rng):
    for i in range(500):
        alphabet = BINARY if i % 3 else Alphabet(('a', 'b', 'c'))
        p = random_dfa(rng, alphabet, int(rng.integers(1, 5)))
        t = random_dfa(rng, alphabet, int(rng.integers(1, 5)))
        m, n = minimize(p).state_count, minimize(t).state_count
        report = match_with_diagnostics(mode, p, t)
        assert report.minimal.state_count <= ceiling(mode, m, n)
        assert report.minimal.state_count <= report.reachable_product_states


@pytest.mark.parametrize('mode', list(MatchMode))
@settings(max_examples=50, deadline=None)
@given(p=dfas(max_states=3, alphabet=BINARY), t=dfas(max_states=3, alphabet=BINARY))
def test_language_matches_brute_force(mode, p, t):
    result = match_language(mode, p, t)
    oracle = ORACLES[mode.value]
    for w in all_words(BINARY, 5):
        assert result.accepts(w) == (t.accepts(w) and oracle(p, w))


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatchError):
        match_language('prefix', total_dfa(BINARY), total_dfa(Alphabet(('a', 'c'))))


class TestClassify:
    def test_factor_with_extra_letters(self):
        alphabet = Alphabet(('a', 'b', 'x', 'y'))
        p = word_dfa(PatternWord(alphabet, 'ab'))
        assert classify_word('factor', p, 'xaby')
        assert not classify_word('factor', p, 'xayb')
        assert classify_word('subsequence', p, 'xayb')

    def test_subsequence_agrees_with_scan(self):
        alphabet = Alphabet(('a', 'b', 'c', 'd'))
        p = word_dfa(PatternWord(alphabet, 'abc'))
        for w in all_words(alphabet, 6):
            assert classify_word('subsequence', p, w) == is_subsequence('abc', w)

    def test_suffix_generator_words(self):
        p = suffix_pattern(4)
        # bΣ²(aΣ²)* 中的单词
        for text in ('bab', 'bbb', 'baaaab', 'abbbbaab'):
            assert classify_word('suffix', p, text)

    def test_unknown_letter(self):
        with pytest.raises(UnknownLetterError):
            classify_word('prefix', prefix_pattern(3), 'abz')


def test_subsequence_with_large_alphabet_stays_below_ceiling(rng):
    for _ in range(500):
        m = int(rng.integers(3, 6))
        alphabet = Alphabet(tuple('abcd'[:m - 1]))
        p = random_dfa(rng, alphabet, m)
        t = random_dfa(rng, alphabet, int(rng.integers(1, 5)))
        kappa_p, kappa_t = minimize(p).state_count, minimize(t).state_count
        result = match_language(MatchMode.SUBSEQUENCE, p, t)
        assert result.state_count <= ceiling(MatchMode.SUBSEQUENCE, kappa_p, kappa_t)
