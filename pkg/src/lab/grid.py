"""
(m, n) 网格实验

对每个格子用见证构造组合语言，测量最小 DFA 的状态数并与闭式上界比较。
各格互相独立，最多 workers 格并行；报告按 (m, n) 顺序汇总。
"""
import threading
import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

from loguru import logger

from .. import __version__
from ..core.automata import Dfa
from ..core.factory import WitnessFactory
from ..core.matchers import MatchMode, match_language
from ..core.minimize import isomorphic
from ..core.single_word import PatternWord, match_single_word
from ..core.witnesses import BINARY, UNARY, WitnessFamily
from .bounds import bound_formula
from .report import ComplexityReport, GridRow

GENERAL_MODES: Dict[WitnessFamily, MatchMode] = {
    WitnessFamily.PREFIX_GENERAL: MatchMode.PREFIX,
    WitnessFamily.SUFFIX_GENERAL: MatchMode.SUFFIX,
    WitnessFamily.FACTOR_GENERAL: MatchMode.FACTOR,
    WitnessFamily.SUBSEQUENCE_GENERAL: MatchMode.SUBSEQUENCE,
}

WORD_MODES: Dict[WitnessFamily, MatchMode] = {
    WitnessFamily.WORD_PREFIX: MatchMode.PREFIX,
    WitnessFamily.WORD_SUFFIX: MatchMode.SUFFIX,
    WitnessFamily.WORD_FACTOR: MatchMode.FACTOR,
    WitnessFamily.WORD_SUBSEQUENCE: MatchMode.SUBSEQUENCE,
}

# 各族默认网格，与验收范围一致
DEFAULT_GRIDS: Dict[WitnessFamily, Tuple[Tuple[int, int], Tuple[int, int]]] = {
    WitnessFamily.PREFIX_GENERAL: ((2, 6), (2, 6)),
    WitnessFamily.SUFFIX_GENERAL: ((2, 8), (2, 5)),
    WitnessFamily.FACTOR_GENERAL: ((3, 8), (3, 5)),
    WitnessFamily.SUBSEQUENCE_GENERAL: ((3, 7), (3, 5)),
    WitnessFamily.WORD_PREFIX: ((3, 10), (2, 8)),
    WitnessFamily.WORD_SUFFIX: ((3, 10), (2, 8)),
    WitnessFamily.WORD_FACTOR: ((3, 10), (2, 8)),
    WitnessFamily.WORD_SUBSEQUENCE: ((3, 10), (2, 8)),
    WitnessFamily.UNARY: ((3, 8), (2, 8)),
}


def parse_range(text: str) -> Tuple[int, int]:
    """'A..B' 或单个整数 'A'"""
    low, sep, high = text.partition('..')
    try:
        bounds = (int(low), int(high)) if sep else (int(low), int(low))
    except ValueError:
        raise ValueError(f"无法解析范围 '{text}'，期望 A..B") from None
    if bounds[0] > bounds[1]:
        raise ValueError(f"范围为空: '{text}'")
    return bounds


def alphabet_size(family: WitnessFamily, m: int) -> int:
    if family is WitnessFamily.SUBSEQUENCE_GENERAL:
        return m - 1
    if family is WitnessFamily.UNARY:
        return len(UNARY)
    return len(BINARY)


def measure(family, m: int, n: int, factory: Optional[WitnessFactory] = None) -> int:
    """用该族的见证构造组合语言，返回其状态复杂度"""
    family = WitnessFamily(family)
    factory = factory or WitnessFactory()
    text = factory.text(family, m, n)
    if family in GENERAL_MODES:
        return match_language(GENERAL_MODES[family], factory.pattern(family, m), text).state_count
    if family in WORD_MODES:
        word = PatternWord(BINARY, ('b',) * (m - 2))
        return match_single_word(WORD_MODES[family], word, text).state_count
    return match_language(MatchMode.PREFIX, factory.pattern(family, m), text).state_count


@dataclass
class _CellRun:
    """一格的运行状态；超时后线程被放弃，结果不再读取"""
    m: int
    n: int
    started: float = 0.0
    timed_out: bool = False
    result: Optional[Tuple[int, float]] = None
    error: Optional[Exception] = None
    done: threading.Event = field(default_factory=threading.Event)


def _timed_cell(family: WitnessFamily, m: int, n: int, factory: WitnessFactory) -> Tuple[int, float]:
    start = time.perf_counter()
    measured = measure(family, m, n, factory)
    return measured, (time.perf_counter() - start) * 1000.0


def _start_cell(family: WitnessFamily, m: int, n: int, factory: WitnessFactory,
                changed: threading.Event) -> _CellRun:
    run = _CellRun(m, n)

    def target():
        try:
            run.result = _timed_cell(family, m, n, factory)
        except Exception as e:
            run.error = e
        finally:
            run.done.set()
            changed.set()

    run.started = time.monotonic()
    threading.Thread(target=target, name=f"cell-{family.value}-{m}-{n}", daemon=True).start()
    return run


def _run_cells(family: WitnessFamily, cells: List[Tuple[int, int]], timeout: Optional[float],
               workers: int, factory: WitnessFactory) -> Dict[Tuple[int, int], _CellRun]:
    """
    最多同时运行 workers 格，每格从自身开始运行时计时

    超时的格立即释放槽位，后台线程继续跑完但结果被丢弃。
    """
    pending = deque(cells)
    active: List[_CellRun] = []
    finished: Dict[Tuple[int, int], _CellRun] = {}
    changed = threading.Event()

    while pending or active:
        while pending and len(active) < workers:
            active.append(_start_cell(family, *pending.popleft(), factory, changed))

        changed.clear()
        now = time.monotonic()
        still_running: List[_CellRun] = []
        for run in active:
            if run.done.is_set():
                finished[(run.m, run.n)] = run
            elif timeout is not None and now - run.started >= timeout:
                run.timed_out = True
                finished[(run.m, run.n)] = run
            else:
                still_running.append(run)

        if len(still_running) == len(active):
            wait = None
            if timeout is not None:
                wait = max(0.0, min(run.started + timeout for run in active) - now)
            changed.wait(wait)
        active = still_running

    return finished


def run_grid(family, m_range: Tuple[int, int], n_range: Tuple[int, int],
             timeout: Optional[float] = 30.0, workers: int = 1,
             factory: Optional[WitnessFactory] = None) -> ComplexityReport:
    """
    在闭区间网格上运行实验

    Args:
        family: 见证族
        m_range: (m_min, m_max)
        n_range: (n_min, n_max)
        timeout: 单格超时（秒），从该格开始运行时计时；超时的格记为失败并释放槽位
        workers: 线程数
        factory: 共享的见证工厂

    Returns:
        按 (m, n) 排序的报告

    Raises:
        WitnessRangeError: 网格超出该族合法范围
    """
    family = WitnessFamily(family)
    factory = factory or WitnessFactory()
    cells = [(m, n) for m in range(m_range[0], m_range[1] + 1)
             for n in range(n_range[0], n_range[1] + 1)]
    formulas = {cell: bound_formula(family, *cell) for cell in cells}
    logger.info(f"开始网格实验 {family.value}: m={m_range}, n={n_range}, 共 {len(cells)} 格")

    runs = _run_cells(family, cells, timeout, max(1, workers), factory)
    rows: List[GridRow] = []
    for m, n in cells:
        run, formula = runs[(m, n)], formulas[(m, n)]
        if run.timed_out:
            logger.warning(f"{family.value} m={m} n={n} 超时（{timeout}s），记为失败")
            rows.append(GridRow(m=m, n=n, formula=formula,
                                elapsed_ms=timeout * 1000.0, error='timeout'))
            continue
        if run.error is not None:
            logger.warning(f"{family.value} m={m} n={n} 失败: {run.error}")
            rows.append(GridRow(m=m, n=n, formula=formula, error=str(run.error)))
            continue

        measured, elapsed = run.result
        if measured > formula:
            logger.error(f"{family.value} m={m} n={n}: 实测 {measured} 超过上界 {formula}")
        rows.append(GridRow(m=m, n=n, measured=measured, formula=formula,
                            tight=measured == formula, elapsed_ms=elapsed))
        logger.debug(f"{family.value} m={m} n={n}: κ={measured}（上界 {formula}）")

    report = ComplexityReport(family=family, rows=rows, meta={
        'version': __version__,
        'm_range': list(m_range),
        'n_range': list(n_range),
        'alphabet_sizes': {str(m): alphabet_size(family, m)
                           for m in range(m_range[0], m_range[1] + 1)},
    })
    tight = sum(row.tight for row in rows)
    logger.info(f"网格实验 {family.value} 完成: {tight}/{len(rows)} 格达到上界")
    return report


def run_default_grids(families: Optional[Iterable] = None,
                      m_range: Optional[Tuple[int, int]] = None,
                      n_range: Optional[Tuple[int, int]] = None,
                      **kwargs) -> List[ComplexityReport]:
    """
    依次运行多个族（默认全部）

    未给出的区间取各族默认网格；其余参数原样传给 run_grid。
    """
    families = [WitnessFamily(f) for f in (families or DEFAULT_GRIDS)]
    reports = []
    for family in families:
        default_m, default_n = DEFAULT_GRIDS[family]
        reports.append(run_grid(family, m_range or default_m, n_range or default_n, **kwargs))
    return reports


def unary_results(m: int, n: int, factory: Optional[WitnessFactory] = None) -> Dict[str, Dfa]:
    """一元见证上四种匹配模式以及单词 prefix 嫁接构造的结果"""
    factory = factory or WitnessFactory()
    pattern = factory.pattern(WitnessFamily.UNARY, m)
    text = factory.text(WitnessFamily.UNARY, m, n)
    results = {mode.value: match_language(mode, pattern, text) for mode in MatchMode}
    word = PatternWord(UNARY, ('a',) * (m - 2))
    results['word_prefix'] = match_single_word(MatchMode.PREFIX, word, text)
    return results


def unary_coincidence(m: int, n: int, factory: Optional[WitnessFactory] = None) -> bool:
    """一元情形下各构造两两同构"""
    results = list(unary_results(m, n, factory).values())
    return all(isomorphic(x, y) for x, y in combinations(results, 2))
