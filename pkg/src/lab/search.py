"""
字母表极小性搜索

在大小为 m-2 的字母表上寻找使 κ((Σ*⧢P)∩T) 达到 (2^{m-2}+1)n 的 (P, T)。
空间不超过预算时穷举，否则用固定种子随机抽样；同一种子结果可逐位复现（计时字段除外）。
"""
import string
import time
from itertools import product as cartesian
from typing import Dict, Iterator, Optional, Tuple

import numpy as np
from loguru import logger

from ..core.automata import Alphabet, Dfa
from ..core.ideals import IdealKind, ideal
from ..core.minimize import canonical_form, minimize
from ..core.operations import product_intersection
from ..core.errors import AutomatonError
from ..utils.automaton_io import serialize_dfa
from .report import SearchReport
from .sampling import random_dfa

PROGRESS_EVERY = 2000


def small_alphabet(m: int) -> Alphabet:
    """m-2 个字母：a, b, c, …"""
    size = m - 2
    if not 1 <= size <= len(string.ascii_lowercase):
        raise AutomatonError(f"无法为 m={m} 构造大小为 {size} 的字母表")
    return Alphabet(tuple(string.ascii_lowercase[:size]))


def space_size(alphabet: Alphabet, state_count: int) -> int:
    """初始状态为 0、终止集合非空的完全 DFA 个数"""
    return state_count ** (state_count * len(alphabet)) * ((1 << state_count) - 1)


def all_dfas(alphabet: Alphabet, state_count: int) -> Iterator[Dfa]:
    k = len(alphabet)
    for table in cartesian(range(state_count), repeat=state_count * k):
        delta = tuple(table[q * k:(q + 1) * k] for q in range(state_count))
        for mask in range(1, 1 << state_count):
            finals = frozenset(q for q in range(state_count) if mask >> q & 1)
            yield Dfa(alphabet, state_count, 0, finals, delta)


class _IdealCache:
    """按 P 的最小规范形缓存全边理想"""

    def __init__(self):
        self._cache: Dict[tuple, Dfa] = {}

    def get(self, p: Dfa) -> Dfa:
        key = canonical_form(minimize(p))
        if key not in self._cache:
            self._cache[key] = ideal(IdealKind.ALL_SIDED, p)
        return self._cache[key]


def search_alphabet_minimality(m: int, n: int, budget: int = 10_000, seed: int = 1,
                               text: Optional[Dfa] = None,
                               exhaustive: Optional[bool] = None) -> SearchReport:
    """
    搜索小字母表上的子序列匹配复杂度

    Args:
        m: 模式状态数上限（m >= 3），字母表大小固定为 m-2
        n: 文本状态数上限（n >= 1）
        budget: 随机样本数；空间不超过 budget 时改为穷举
        seed: numpy 随机种子
        text: 固定文本 DFA（此时只遍历模式）
        exhaustive: 强制穷举（True）或强制抽样（False）；默认按预算决定

    Returns:
        SearchReport；达到上界时附带反例
    """
    if m < 3 or n < 1:
        raise AutomatonError(f"搜索要求 m >= 3, n >= 1，但得到 m={m}, n={n}")
    alphabet = text.alphabet if text is not None else small_alphabet(m)
    if len(alphabet) != m - 2:
        raise AutomatonError(f"固定文本的字母表大小应为 {m - 2}")
    bound = (2 ** (m - 2) + 1) * n

    pattern_space = space_size(alphabet, m)
    text_space = 1 if text is not None else space_size(alphabet, n)
    if exhaustive is None:
        exhaustive = pattern_space * text_space <= budget

    logger.info(
        f"字母表极小性搜索: m={m}, n={n}, |Σ|={len(alphabet)}, 上界 {bound}, "
        f"{'穷举' if exhaustive else f'随机 {budget} 个样本（seed={seed}）'}"
    )

    if exhaustive:
        texts = [text] if text is not None else list(all_dfas(alphabet, n))
        pairs = ((p, t) for p in all_dfas(alphabet, m) for t in texts)
    else:
        rng = np.random.default_rng(seed)
        pairs = (
            (random_dfa(rng, alphabet, m),
             text if text is not None else random_dfa(rng, alphabet, n))
            for _ in range(budget)
        )

    cache = _IdealCache()
    start = time.perf_counter()
    best = 0
    best_pair: Optional[Tuple[Dfa, Dfa]] = None
    tried = 0
    for p, t in pairs:
        tried += 1
        kappa = minimize(product_intersection(cache.get(p), t)).state_count
        if kappa > best:
            best, best_pair = kappa, (p, t)
            logger.debug(f"样本 {tried}: 新的最大 κ = {kappa}")
        if tried % PROGRESS_EVERY == 0:
            logger.info(f"已尝试 {tried} 个样本，当前最大 κ = {best}")

    serialized = None
    if best_pair is not None:
        serialized = (serialize_dfa(best_pair[0]), serialize_dfa(best_pair[1]))
    counterexample = serialized if best >= bound else None
    if counterexample is not None:
        logger.warning(f"找到达到上界 {bound} 的反例")

    return SearchReport(
        m=m, n=n, alphabet_size=len(alphabet), samples_tried=tried,
        best_kappa_found=best, bound=bound, seed=None if exhaustive else seed,
        exhaustive=exhaustive, pattern_space=pattern_space, text_space=text_space,
        best_pair=serialized, counterexample=counterexample,
        elapsed_ms=(time.perf_counter() - start) * 1000.0,
    )
