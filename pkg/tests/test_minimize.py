"""
最小化与同构判定测试
"""
import pytest
from hypothesis import given, settings

from src.core.automata import Dfa
from src.core.errors import AutomatonError
from src.core.minimize import (
    canonical_form, is_minimal, isomorphic, minimize, minimize_oracle, trim,
)
from src.core.operations import enumerate_language, equivalent
from src.core.witnesses import (
    BINARY, bm_dfa, cm_dfa, factor_pattern, factor_text, prefix_text, suffix_pattern, suffix_text,
)
from src.lab.sampling import random_dfa
from tests.helpers import TERNARY, dfas


def test_hopcroft_agrees_with_table_filling(rng):
    for i in range(1000):
        alphabet = BINARY if i % 2 else TERNARY
        d = random_dfa(rng, alphabet, int(rng.integers(1, 13)), allow_empty_finals=True)
        assert minimize(d) == minimize_oracle(d)


def test_table_filling_handles_unreachable_states_itself():
    # 初始状态 2；状态 1 不可达，0 与 3 等价
    d = Dfa(BINARY, 4, 2, frozenset({0, 3}), ((0, 0), (1, 1), (3, 0), (0, 3)))
    expected = Dfa(BINARY, 2, 0, frozenset({1}), ((1, 1), (1, 1)))
    assert minimize_oracle(d) == expected
    assert minimize(d) == expected


@settings(max_examples=300, deadline=None)
@given(dfas())
def test_minimize_preserves_language(d):
    result = minimize(d)
    assert result.state_count <= len(d.reachable())
    assert enumerate_language(result, 6) == enumerate_language(d, 6)
    assert equivalent(result, d)


@settings(max_examples=200, deadline=None)
@given(dfas())
def test_minimize_is_idempotent(d):
    once = minimize(d)
    assert minimize(once) == once
    assert is_minimal(once)


def test_trim_drops_unreachable():
    d = Dfa(BINARY, 3, 1, frozenset({0, 2}), ((0, 0), (2, 1), (1, 2)))
    t = trim(d)
    assert t.state_count == 2
    assert t.initial == 0
    assert t.finals == frozenset({1})


def test_minimize_merges_equivalent_states():
    # 状态 1 与 2 都是 Σ* 的终止吸收态
    d = Dfa(BINARY, 3, 0, frozenset({1, 2}), ((1, 2), (1, 1), (2, 2)))
    result = minimize(d)
    assert result.state_count == 2
    assert result.delta == ((1, 1), (1, 1))


def test_empty_language_has_one_state():
    d = Dfa(BINARY, 3, 0, frozenset({2}), ((1, 0), (0, 1), (2, 2)))
    result = minimize(d)
    assert result.state_count == 1
    assert result.finals == frozenset()


@pytest.mark.parametrize('builder,low,high', [
    (prefix_text, 1, 8),
    (suffix_text, 2, 8),
    (factor_text, 3, 8),
    (suffix_pattern, 2, 8),
    (factor_pattern, 3, 8),
])
def test_witness_inputs_are_minimal(builder, low, high):
    for k in range(low, high + 1):
        assert minimize(builder(k)).state_count == k


def test_subset_automata_are_minimal():
    for m in range(2, 9):
        assert is_minimal(bm_dfa(m))
    for m in range(3, 9):
        assert is_minimal(cm_dfa(m))


class TestIsomorphic:
    def test_renumbered_copy(self):
        d = minimize(suffix_text(5))
        perm = [3, 0, 4, 1, 2]
        assert isomorphic(d, d.renumber(perm))

    def test_different_languages(self):
        assert not isomorphic(suffix_text(4), factor_text(4))

    def test_rejects_non_minimal(self):
        d = Dfa(BINARY, 3, 0, frozenset({1, 2}), ((1, 2), (1, 1), (2, 2)))
        with pytest.raises(AutomatonError):
            isomorphic(d, minimize(d))

    def test_canonical_form_ignores_numbering(self):
        d = bm_dfa(4)
        assert canonical_form(d) == canonical_form(d.renumber(list(reversed(range(8)))))
