"""
布尔运算、等价判定与枚举测试
"""
import pytest
from hypothesis import given, settings

from src.core.automata import Alphabet, total_dfa
from src.core.errors import AlphabetMismatchError, AutomatonError
from src.core.operations import (
    enumerate_language, equivalent, is_empty, product_difference, product_intersection,
    product_union, subset_of,
)
from src.core.single_word import PatternWord, word_dfa
from src.core.witnesses import BINARY, prefix_text, suffix_text
from tests.helpers import all_words, dfas


@settings(max_examples=200, deadline=None)
@given(dfas(alphabet=BINARY), dfas(alphabet=BINARY))
def test_products_follow_boolean_operations(d1, d2):
    meet = product_intersection(d1, d2)
    join = product_union(d1, d2)
    minus = product_difference(d1, d2)
    for w in all_words(BINARY, 5):
        x, y = d1.accepts(w), d2.accepts(w)
        assert meet.accepts(w) == (x and y)
        assert join.accepts(w) == (x or y)
        assert minus.accepts(w) == (x and not y)


@settings(max_examples=200, deadline=None)
@given(dfas(alphabet=BINARY), dfas(alphabet=BINARY))
def test_subset_and_equivalence(d1, d2):
    assert subset_of(product_intersection(d1, d2), d1)
    assert subset_of(d1, product_union(d1, d2))
    assert equivalent(d1, d2) == (subset_of(d1, d2) and subset_of(d2, d1))


def test_product_only_reachable_pairs():
    # 两个 a 循环同步前进，只有 3 个可达状态对
    d = product_intersection(prefix_text(3), prefix_text(3))
    assert d.state_count == 3


def test_alphabet_mismatch():
    other = Alphabet(('a', 'c'))
    with pytest.raises(AlphabetMismatchError):
        product_intersection(total_dfa(BINARY), total_dfa(other))
    with pytest.raises(AlphabetMismatchError):
        equivalent(total_dfa(BINARY), total_dfa(Alphabet(('b', 'a'))))


def test_is_empty():
    assert is_empty(total_dfa(BINARY, accepting=False))
    assert not is_empty(total_dfa(BINARY))
    assert is_empty(product_intersection(prefix_text(2), prefix_text(2).complement()))


class TestEnumerate:
    def test_single_word(self):
        d = word_dfa(PatternWord(BINARY, 'ab'))
        assert enumerate_language(d, 4).words == (('a', 'b'),)
        assert enumerate_language(d, 1).words == ()

    def test_order_is_prefix_first(self):
        sample = enumerate_language(total_dfa(BINARY), 2)
        assert sample.words == ((), ('a',), ('a', 'a'), ('a', 'b'), ('b',), ('b', 'a'), ('b', 'b'))
        assert sample.max_len == 2

    def test_matches_brute_force(self):
        d = suffix_text(4)
        expected = [w for w in all_words(BINARY, 6) if d.accepts(w)]
        sample = enumerate_language(d, 6)
        assert sorted(sample.words) == sorted(expected)
        assert len(set(sample.words)) == len(sample)

    def test_guard(self):
        with pytest.raises(AutomatonError):
            enumerate_language(total_dfa(BINARY), 17)
        with pytest.raises(AutomatonError):
            enumerate_language(total_dfa(BINARY), -1)
        assert len(enumerate_language(total_dfa(Alphabet(('a',))), 20, guard=20)) == 21
