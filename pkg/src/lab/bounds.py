"""
闭式上界

每个见证族对应一个状态复杂度公式；实验网格用它与实测值比较。
"""
from typing import Callable, Dict

from ..core.errors import WitnessRangeError
from ..core.witnesses import MINIMUMS, WitnessFamily

_FORMULAS: Dict[WitnessFamily, Callable[[int, int], int]] = {
    WitnessFamily.PREFIX_GENERAL: lambda m, n: m * n,
    WitnessFamily.SUFFIX_GENERAL: lambda m, n: 2 ** (m - 1) * n,
    WitnessFamily.FACTOR_GENERAL: lambda m, n: (2 ** (m - 2) + 1) * n,
    WitnessFamily.SUBSEQUENCE_GENERAL: lambda m, n: (2 ** (m - 2) + 1) * n,
    WitnessFamily.WORD_PREFIX: lambda m, n: m + n - 1,
    WitnessFamily.WORD_SUFFIX: lambda m, n: (m - 1) * n - (m - 2),
    WitnessFamily.WORD_FACTOR: lambda m, n: (m - 1) * n,
    WitnessFamily.WORD_SUBSEQUENCE: lambda m, n: (m - 1) * n,
    WitnessFamily.UNARY: lambda m, n: m + n - 2,
}


def bound_formula(family, m: int, n: int) -> int:
    """
    返回 (m, n) 处的上界

    Raises:
        WitnessRangeError: (m, n) 不在该族的合法范围内
    """
    family = WitnessFamily(family)
    m_min, n_min = MINIMUMS[family]
    if m < m_min or n < n_min:
        raise WitnessRangeError(
            f"{family.value} 要求 m >= {m_min} 且 n >= {n_min}，但得到 m={m}, n={n}"
        )
    return _FORMULAS[family](m, n)
