"""
CLI 命令实现

每个方法对应一个子命令，输出写 stdout，返回退出码：
0 成功，1 逻辑否定（equiv/iso/classify 为假），2 输入错误
"""
from functools import wraps
from pathlib import Path
from typing import IO, Optional, Sequence

import click
from loguru import logger
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from ..core.automata import Alphabet, Dfa, Nfa, determinize
from ..core.factory import WitnessFactory
from ..core.ideals import IdealKind, ideal, shuffle
from ..core.matchers import MatchMode, classify_word, match_with_diagnostics
from ..core.minimize import isomorphic, minimize
from ..core.operations import enumerate_language, equivalent
from ..core.single_word import (
    PatternWord, bridge_table, match_single_word, single_word_automaton,
    suffixword_equal_holds, suffixword_next_holds,
)
from ..core.validator import Validator
from ..formatters.base import BaseFormatter
from ..formatters.factory import FormatterFactory
from ..lab.grid import parse_range, run_default_grids
from ..lab.report import ComplexityReport
from ..lab.search import search_alphabet_minimality
from ..utils.automaton_io import parse_automaton, serialize_dfa, to_dot
from ..utils.config_loader import Config

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT_ERROR = 2


def handles_input_errors(method):
    """把输入错误统一转换为退出码 2，并在 stderr 给出一行说明"""
    @wraps(method)
    def wrapper(self, *args, **kwargs):
        try:
            return method(self, *args, **kwargs)
        except (ValueError, ValidationError, FileNotFoundError) as e:
            logger.debug(f"{method.__name__} 输入错误: {e!r}")
            click.echo(f"❌ 输入错误: {e}", err=True)
            return EXIT_INPUT_ERROR
    return wrapper


class Commands:
    """CLI 命令处理器"""

    def __init__(self, config: Config):
        """
        Args:
            config: 主配置对象
        """
        self.config = config
        self.factory = WitnessFactory()
        self.validator = Validator()

    # ---- 输入输出 ----

    @staticmethod
    def _load(source: IO[str]) -> Dfa:
        """读入 DFA；NFA 输入先做子集构造"""
        automaton = parse_automaton(source.read())
        if isinstance(automaton, Nfa):
            logger.debug("输入为 NFA，先做子集构造")
            return determinize(automaton)
        return automaton

    @staticmethod
    def _emit(d: Dfa, dot: bool = False):
        click.echo(to_dot(d) if dot else serialize_dfa(d), nl=False)

    def _check_alphabets(self, *automata: Dfa):
        ok, problems = self.validator.validate_alphabets(*automata)
        if not ok:
            raise ValueError(problems[0])

    def _pattern_word(self, alphabet: Alphabet, text: str) -> PatternWord:
        word = alphabet.word(text)
        return PatternWord(alphabet, word)

    # ---- 自动机运算 ----

    @handles_input_errors
    def ideal_command(self, kind: str, source: IO[str], dot: bool = False) -> int:
        self._emit(ideal(IdealKind(kind), self._load(source)), dot)
        return EXIT_OK

    @handles_input_errors
    def shuffle_command(self, first: IO[str], second: IO[str], dot: bool = False) -> int:
        d1, d2 = self._load(first), self._load(second)
        self._check_alphabets(d1, d2)
        self._emit(shuffle(d1, d2), dot)
        return EXIT_OK

    @handles_input_errors
    def minimize_command(self, source: IO[str], dot: bool = False) -> int:
        self._emit(minimize(self._load(source)), dot)
        return EXIT_OK

    @handles_input_errors
    def equiv_command(self, first: IO[str], second: IO[str]) -> int:
        d1, d2 = self._load(first), self._load(second)
        self._check_alphabets(d1, d2)
        result = equivalent(d1, d2)
        click.echo("true" if result else "false")
        return EXIT_OK if result else EXIT_FALSE

    @handles_input_errors
    def iso_command(self, first: IO[str], second: IO[str]) -> int:
        d1, d2 = self._load(first), self._load(second)
        for name, d in (("FILE1", d1), ("FILE2", d2)):
            ok, problems = self.validator.validate_minimal(d, name)
            if not ok:
                raise ValueError(problems[0])
        result = isomorphic(d1, d2)
        click.echo("true" if result else "false")
        return EXIT_OK if result else EXIT_FALSE

    @handles_input_errors
    def match_command(self, mode: str, text: IO[str], pattern: Optional[IO[str]] = None,
                      word: Optional[str] = None, diagnostics: bool = False,
                      dot: bool = False) -> int:
        """
        T 与模式理想的交

        Args:
            mode: prefix/suffix/factor/subsequence
            text: 文本 DFA
            pattern: 模式 DFA（与 word 二选一）
            word: 单词模式，字母必须出现在文本的字母表中
            diagnostics: 在 stderr 报告直积可达状态数
        """
        mode = MatchMode(mode)
        t = self._load(text)
        if (pattern is None) == (word is None):
            raise ValueError("--pattern 与 --word 必须且只能给出一个")

        if word is not None:
            result = match_single_word(mode, self._pattern_word(t.alphabet, word), t)
            if diagnostics:
                click.echo(f"minimal_states={result.state_count}", err=True)
        else:
            p = self._load(pattern)
            self._check_alphabets(p, t)
            report = match_with_diagnostics(mode, p, t)
            result = report.minimal
            if diagnostics:
                click.echo(
                    f"reachable_product_states={report.reachable_product_states} "
                    f"minimal_states={report.distinguishable_states}",
                    err=True,
                )
        self._emit(result, dot)
        return EXIT_OK

    @handles_input_errors
    def classify_command(self, mode: str, text_input: str, pattern: Optional[IO[str]] = None,
                         word: Optional[str] = None, alphabet: Optional[str] = None) -> int:
        """
        具体文本是否以 mode 方式含有模式中的单词

        使用 --word 时字母表取 --alphabet，缺省为单词与文本中出现的字符。
        """
        mode = MatchMode(mode)
        if (pattern is None) == (word is None):
            raise ValueError("--pattern 与 --word 必须且只能给出一个")

        if pattern is not None:
            result = classify_word(mode, self._load(pattern), text_input)
        else:
            if alphabet:
                letters = Alphabet.of(alphabet)
            else:
                letters = Alphabet(tuple(dict.fromkeys(
                    ch for ch in word + text_input if not ch.isspace()
                )))
            w = self._pattern_word(letters, word)
            result = single_word_automaton(mode, w).accepts(text_input)

        click.echo("true" if result else "false")
        return EXIT_OK if result else EXIT_FALSE

    @handles_input_errors
    def enumerate_command(self, source: IO[str], max_len: int) -> int:
        """按字典序逐行输出长度不超过 max_len 的接受单词（空单词输出为空行）"""
        d = self._load(source)
        sample = enumerate_language(d, max_len, guard=self.config.lab.enumerate_guard)
        for word in sample.words:
            click.echo(d.alphabet.render(word))
        logger.info(f"共 {len(sample)} 个单词（max_len={max_len}）")
        return EXIT_OK

    def families_command(self) -> int:
        """每行输出一个见证族及其 m、n 下限"""
        for entry in self.factory.list_families():
            click.echo(f"{entry['family']} m>={entry['m_min']} n>={entry['n_min']}")
        return EXIT_OK

    @handles_input_errors
    def witness_command(self, family: str, role: str, m: Optional[int], n: Optional[int],
                        dot: bool = False) -> int:
        self._emit(self.factory.create(family, role, m=m, n=n), dot)
        return EXIT_OK

    @handles_input_errors
    def lemmas_command(self, word: str, alphabet: Optional[str] = None) -> int:
        """打印边界表并检查后缀自动机的两条转移恒等式"""
        if alphabet:
            letters = Alphabet.of(alphabet)
        else:
            # 含空白时按空白切出多字符字母
            tokens = word.split() if any(ch.isspace() for ch in word) else list(word)
            letters = Alphabet(tuple(dict.fromkeys(tokens)))
        w = self._pattern_word(letters, word)
        table = bridge_table(w)
        equal_ok = suffixword_equal_holds(w)
        next_ok = suffixword_next_holds(w)
        click.echo(f"word: {w}")
        click.echo(f"bridge: {' '.join(str(f) for f in table.f)}")
        click.echo(f"suffixword_equal: {str(equal_ok).lower()}")
        click.echo(f"suffixword_next: {str(next_ok).lower()}")
        return EXIT_OK if equal_ok and next_ok else EXIT_FALSE

    # ---- 实验 ----

    def _write(self, formatter: BaseFormatter, text: str, out: Optional[str]):
        """写入 out（无扩展名时补上格式扩展名）；out 为空时写 stdout"""
        if out:
            path = Path(out)
            if not path.suffix:
                path = path.with_suffix(f".{formatter.get_extension()}")
            path.write_text(text, encoding='utf-8')
            logger.info(f"报告已写入: {path}")
        else:
            click.echo(text, nl=False)

    @staticmethod
    def _print_table(reports: Sequence[ComplexityReport]):
        console = Console(stderr=True)
        for report in reports:
            table = Table(title=report.family.value)
            for column in ("m", "n", "κ", "上界", "达到", "ms"):
                table.add_column(column, justify="right")
            for row in report.rows:
                table.add_row(
                    str(row.m), str(row.n),
                    str(row.measured) if row.measured is not None else "[red]失败[/red]",
                    str(row.formula),
                    "[green]✓[/green]" if row.tight else "[red]✗[/red]",
                    f"{row.elapsed_ms:.1f}",
                )
            console.print(table)

    @handles_input_errors
    def complexity_command(self, family: str, m_range: Optional[str], n_range: Optional[str],
                           format_type: Optional[str] = None, out: Optional[str] = None,
                           table: bool = False) -> int:
        """运行网格实验；family 为 all 时按默认网格运行全部族"""
        lab = self.config.lab
        reports = run_default_grids(
            None if family == 'all' else [family],
            m_range=parse_range(m_range) if m_range else None,
            n_range=parse_range(n_range) if n_range else None,
            timeout=lab.cell_timeout, workers=lab.workers, factory=self.factory,
        )

        formatter = FormatterFactory.for_output(format_type, out)
        self._write(formatter, formatter.format(reports), out)
        if table:
            self._print_table(reports)

        loose = [(r.family.value, row.m, row.n) for r in reports for row in r.rows if not row.tight]
        if loose:
            logger.warning(f"{len(loose)} 个格子未达到上界: {loose[:5]}")
        return EXIT_OK

    @handles_input_errors
    def search_command(self, m: int, n: int, budget: Optional[int], seed: Optional[int],
                       format_type: Optional[str] = None, out: Optional[str] = None,
                       exhaustive: Optional[bool] = None) -> int:
        lab = self.config.lab
        report = search_alphabet_minimality(
            m, n,
            budget=budget if budget is not None else lab.default_budget,
            seed=seed if seed is not None else lab.default_seed,
            exhaustive=exhaustive,
        )
        formatter = FormatterFactory.for_output(format_type, out)
        self._write(formatter, formatter.format(report), out)
        return EXIT_OK
