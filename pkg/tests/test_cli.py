"""
CLI 测试
"""
import json

import pytest
from click.testing import CliRunner
from loguru import logger

from src.core.automata import Alphabet, Nfa
from src.core.minimize import isomorphic, minimize
from src.core.single_word import PatternWord, word_dfa
from src.core.witnesses import (
    BINARY, bm_dfa, prefix_pattern, prefix_text, suffix_pattern, word_text,
)
from src.main import cli
from src.utils.automaton_io import parse_dfa, serialize_dfa, serialize_nfa


@pytest.fixture(autouse=True)
def _detach_logger():
    yield
    logger.remove()


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def write(tmp_path):
    def _write(name, d):
        path = tmp_path / name
        text = serialize_nfa(d) if isinstance(d, Nfa) else serialize_dfa(d)
        path.write_text(text, encoding='utf-8')
        return str(path)
    return _write


class TestAutomatonCommands:
    def test_witness(self, runner):
        result = runner.invoke(cli, ['witness', '--family', 'prefix_general', '--role', 'text',
                                     '-n', '3'])
        assert result.exit_code == 0
        assert result.output == serialize_dfa(prefix_text(3))

    def test_witness_out_of_range(self, runner):
        result = runner.invoke(cli, ['witness', '--family', 'suffix_general', '--role', 'text',
                                     '-n', '1'])
        assert result.exit_code == 2
        assert 'n >= 2' in result.output

    def test_witness_dot(self, runner):
        result = runner.invoke(cli, ['witness', '--family', 'prefix_general', '--role', 'text',
                                     '-n', '2', '--dot'])
        assert result.exit_code == 0
        assert result.output.startswith('digraph dfa {')

    def test_ideal(self, runner, write):
        path = write('p.dfa', suffix_pattern(4))
        result = runner.invoke(cli, ['ideal', '--kind', 'left', path])
        assert result.exit_code == 0
        assert isomorphic(parse_dfa(result.output), bm_dfa(4))

    def test_ideal_from_stdin(self, runner):
        result = runner.invoke(cli, ['ideal', '--kind', 'left', '-'],
                               input=serialize_dfa(suffix_pattern(3)))
        assert result.exit_code == 0
        assert parse_dfa(result.output).state_count == 4

    def test_shuffle(self, runner, write):
        a = write('a.dfa', word_dfa(PatternWord(BINARY, 'a')))
        b = write('b.dfa', word_dfa(PatternWord(BINARY, 'b')))
        result = runner.invoke(cli, ['shuffle', a, b])
        assert result.exit_code == 0
        d = parse_dfa(result.output)
        assert d.accepts('ab') and d.accepts('ba')
        assert not d.accepts('aa')

    def test_minimize_nfa_input(self, runner, write):
        n = Nfa(BINARY, 2, 0, frozenset({1}), (
            (frozenset({0, 1}), frozenset({0})),
            (frozenset(), frozenset()),
        ))
        result = runner.invoke(cli, ['minimize', write('n.nfa', n)])
        assert result.exit_code == 0
        d = parse_dfa(result.output)
        assert d.state_count == 2
        assert d.accepts('ba') and not d.accepts('ab')

    def test_equiv(self, runner, write):
        x = write('x.dfa', prefix_text(4))
        y = write('y.dfa', prefix_text(5))
        same = runner.invoke(cli, ['equiv', x, x])
        assert same.exit_code == 0
        assert same.output.strip() == 'true'
        different = runner.invoke(cli, ['equiv', x, y])
        assert different.exit_code == 1
        assert different.output.strip() == 'false'

    def test_equiv_alphabet_mismatch(self, runner, write):
        x = write('x.dfa', prefix_text(2))
        y = write('y.dfa', word_dfa(PatternWord(Alphabet(('a', 'c')), 'c')))
        assert runner.invoke(cli, ['equiv', x, y]).exit_code == 2

    def test_iso(self, runner, write):
        d = minimize(prefix_text(3))
        x = write('x.dfa', d)
        y = write('y.dfa', d.renumber([2, 0, 1]))
        assert runner.invoke(cli, ['iso', x, y]).exit_code == 0
        assert runner.invoke(cli, ['iso', x, write('z.dfa', prefix_text(4))]).exit_code == 1

    def test_iso_rejects_non_minimal(self, runner, write):
        x = write('x.dfa', prefix_text(3))
        doubled = write('d.dfa', parse_dfa(
            "dfa\nalphabet: a b\nstates: 2\ninitial: 0\nfinals: 0 1\n0 : 1 1\n1 : 0 0\n"
        ))
        result = runner.invoke(cli, ['iso', x, doubled])
        assert result.exit_code == 2

    def test_malformed_file(self, runner, tmp_path):
        path = tmp_path / 'bad.dfa'
        path.write_text("dfa\nalphabet: a b\nstates: 4\ninitial: 9\nfinals: 0\n", encoding='utf-8')
        result = runner.invoke(cli, ['minimize', str(path)])
        assert result.exit_code == 2
        assert 'state 9 out of range' in result.output


class TestMatch:
    def test_word_suffix(self, runner, write):
        t = write('t.dfa', word_text(5))
        result = runner.invoke(cli, ['match', '--mode', 'suffix', '--word', 'bbb', '--text', t])
        assert result.exit_code == 0
        assert parse_dfa(result.output).state_count == 4 * 5 - 3

    def test_pattern_prefix(self, runner, write):
        p = write('p.dfa', prefix_pattern(4))
        t = write('t.dfa', prefix_text(4))
        result = runner.invoke(cli, ['match', '--mode', 'prefix', '--pattern', p, '--text', t])
        assert result.exit_code == 0
        assert parse_dfa(result.output).state_count == 16

    def test_needs_exactly_one_pattern(self, runner, write):
        p = write('p.dfa', prefix_pattern(3))
        t = write('t.dfa', prefix_text(3))
        both = runner.invoke(cli, ['match', '--mode', 'prefix', '--pattern', p, '--word', 'a',
                                   '--text', t])
        neither = runner.invoke(cli, ['match', '--mode', 'prefix', '--text', t])
        assert both.exit_code == 2
        assert neither.exit_code == 2

    def test_word_outside_alphabet(self, runner, write):
        t = write('t.dfa', word_text(3))
        result = runner.invoke(cli, ['match', '--mode', 'factor', '--word', 'abc', '--text', t])
        assert result.exit_code == 2
        assert "'c'" in result.output


class TestClassify:
    @pytest.mark.parametrize('mode,text,code', [
        ('factor', 'xaby', 0),
        ('factor', 'xayb', 1),
        ('subsequence', 'xayb', 0),
        ('prefix', 'abx', 0),
        ('suffix', 'abx', 1),
    ])
    def test_word(self, runner, mode, text, code):
        result = runner.invoke(cli, ['classify', '--mode', mode, '--word', 'ab', '-i', text])
        assert result.exit_code == code
        assert result.output.strip() == ('true' if code == 0 else 'false')

    def test_pattern_file(self, runner, write):
        p = write('p.dfa', suffix_pattern(4))
        result = runner.invoke(cli, ['classify', '--mode', 'suffix', '--pattern', p, '-i', 'abab'])
        assert result.exit_code == 0

    def test_unknown_letter(self, runner):
        result = runner.invoke(cli, ['classify', '--mode', 'factor', '--word', 'ab',
                                     '--alphabet', 'ab', '-i', 'abz'])
        assert result.exit_code == 2


def test_lemmas(runner):
    result = runner.invoke(cli, ['lemmas', 'aba'])
    assert result.exit_code == 0
    assert 'bridge: 0 0 1' in result.output
    assert 'suffixword_equal: true' in result.output
    assert 'suffixword_next: true' in result.output


@pytest.mark.parametrize('word', ['a b a', 'a1 b a1', ' x y x '])
def test_lemmas_word_with_spaces(runner, word):
    result = runner.invoke(cli, ['lemmas', word])
    assert result.exit_code == 0
    assert 'bridge: 0 0 1' in result.output


def test_families(runner):
    result = runner.invoke(cli, ['families'])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert len(lines) == 9
    assert 'unary m>=3 n>=2' in lines


class TestExperiments:
    def test_complexity_json_file(self, runner, tmp_path):
        out = tmp_path / 'prefix.json'
        result = runner.invoke(cli, ['complexity', '--family', 'prefix_general',
                                     '--m-range', '2..3', '--n-range', '2..3', '-o', str(out)])
        assert result.exit_code == 0
        payload = json.loads(out.read_text(encoding='utf-8'))
        assert payload['family'] == 'prefix_general'
        assert [(r['m'], r['n'], r['measured']) for r in payload['rows']] == [
            (2, 2, 4), (2, 3, 6), (3, 2, 6), (3, 3, 9),
        ]
        assert all(r['tight'] for r in payload['rows'])

    def test_complexity_csv_stdout(self, runner):
        result = runner.invoke(cli, ['complexity', '--family', 'unary',
                                     '--m-range', '3..4', '--n-range', '2'])
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines[0] == 'family,m,n,measured,formula,tight,elapsed_ms'
        assert lines[1].startswith('unary,3,2,3,3,true,')
        assert lines[2].startswith('unary,4,2,4,4,true,')

    def test_complexity_out_without_suffix(self, runner, tmp_path):
        out = tmp_path / 'unary'
        result = runner.invoke(cli, ['complexity', '--family', 'unary', '--m-range', '3',
                                     '--n-range', '2', '--format', 'json', '-o', str(out)])
        assert result.exit_code == 0
        payload = json.loads((tmp_path / 'unary.json').read_text(encoding='utf-8'))
        assert payload['rows'][0]['measured'] == 3

    def test_complexity_format_alias(self, runner):
        result = runner.invoke(cli, ['complexity', '--family', 'unary', '--m-range', '3',
                                     '--n-range', '2', '--format', 'markdown'])
        assert result.exit_code == 0
        assert '# unary' in result.output

    def test_complexity_bad_range(self, runner):
        result = runner.invoke(cli, ['complexity', '--family', 'suffix_general',
                                     '--m-range', '1..3', '--n-range', '2..3'])
        assert result.exit_code == 2

    def test_search_alphabet(self, runner, tmp_path):
        out = tmp_path / 'search.json'
        result = runner.invoke(cli, ['search-alphabet', '-m', '3', '-n', '1', '-o', str(out)])
        assert result.exit_code == 0
        payload = json.loads(out.read_text(encoding='utf-8'))
        assert payload['bound'] == 3
        assert payload['best_kappa_found'] == 3
        assert payload['counterexample'] is not None

    def test_search_alphabet_markdown(self, runner):
        result = runner.invoke(cli, ['search-alphabet', '-m', '4', '-n', '2', '--budget', '50',
                                     '--format', 'md'])
        assert result.exit_code == 0
        assert '| bound | 10 |' in result.output
        assert '| counterexample_found | False |' in result.output


class TestUsage:
    def test_unknown_flag(self, runner):
        assert runner.invoke(cli, ['minimize', '--frobnicate']).exit_code == 2

    def test_missing_config(self, runner, tmp_path):
        result = runner.invoke(cli, ['--config', str(tmp_path / 'none.yaml'), 'lemmas', 'ab'])
        assert result.exit_code == 2

    def test_invalid_config(self, runner, tmp_path):
        path = tmp_path / 'bad.yaml'
        path.write_text("logging:\n  level: LOUD\n", encoding='utf-8')
        result = runner.invoke(cli, ['--config', str(path), 'lemmas', 'ab'])
        assert result.exit_code == 2

    def test_explicit_config(self, runner, tmp_path):
        path = tmp_path / 'lab.yaml'
        path.write_text("lab:\n  default_budget: 20\n", encoding='utf-8')
        result = runner.invoke(cli, ['--config', str(path), 'search-alphabet', '-m', '4', '-n', '2',
                                     '--format', 'json'])
        assert result.exit_code == 0
        assert json.loads(result.output)['samples_tried'] == 20


class TestEnumerate:
    def test_words(self, runner, write):
        path = write('ab.dfa', word_dfa(PatternWord(BINARY, 'ab')))
        result = runner.invoke(cli, ['enumerate', path, '--max-len', '3'])
        assert result.exit_code == 0
        assert result.output == 'ab\n'

    def test_guard_from_config(self, runner, write, tmp_path):
        path = write('t.dfa', prefix_text(2))
        config = tmp_path / 'lab.yaml'
        config.write_text("lab:\n  enumerate_guard: 3\n", encoding='utf-8')
        result = runner.invoke(cli, ['--config', str(config), 'enumerate', path, '--max-len', '4'])
        assert result.exit_code == 2
