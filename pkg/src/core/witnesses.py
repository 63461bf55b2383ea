"""
见证（witness）DFA 族

用变换记号生成各族的模式/文本 DFA，以及显式的子集自动机 B_m 与 C_m。
方言通过交换字母的变换实现；状态编号与构造定义保持一致。
"""
from enum import Enum
from typing import Callable, Dict, Optional, Tuple

from pydantic import BaseModel, Field

from .automata import Alphabet, Dfa, Transformation
from .errors import WitnessRangeError
from .single_word import PatternWord, word_dfa

BINARY = Alphabet(('a', 'b'))
UNARY = Alphabet(('a',))


class WitnessFamily(str, Enum):
    PREFIX_GENERAL = 'prefix_general'
    SUFFIX_GENERAL = 'suffix_general'
    FACTOR_GENERAL = 'factor_general'
    SUBSEQUENCE_GENERAL = 'subsequence_general'
    WORD_PREFIX = 'word_prefix'
    WORD_SUFFIX = 'word_suffix'
    WORD_FACTOR = 'word_factor'
    WORD_SUBSEQUENCE = 'word_subsequence'
    UNARY = 'unary'


class WitnessRole(str, Enum):
    PATTERN = 'pattern'
    TEXT = 'text'


# (m 的下限, n 的下限)
MINIMUMS: Dict[WitnessFamily, Tuple[int, int]] = {
    WitnessFamily.PREFIX_GENERAL: (1, 1),
    WitnessFamily.SUFFIX_GENERAL: (2, 2),
    WitnessFamily.FACTOR_GENERAL: (3, 3),
    WitnessFamily.SUBSEQUENCE_GENERAL: (3, 3),
    WitnessFamily.WORD_PREFIX: (3, 2),
    WitnessFamily.WORD_SUFFIX: (3, 2),
    WitnessFamily.WORD_FACTOR: (3, 2),
    WitnessFamily.WORD_SUBSEQUENCE: (3, 2),
    WitnessFamily.UNARY: (3, 2),
}

# 文本还依赖 m 的族
_TEXT_NEEDS_M = {WitnessFamily.WORD_PREFIX, WitnessFamily.UNARY}


class WitnessSpec(BaseModel):
    """见证描述：(family, role, m, n)"""
    model_config = {'frozen': True}

    family: WitnessFamily = Field(..., description="见证族")
    role: WitnessRole = Field(..., description="pattern 或 text")
    m: Optional[int] = Field(default=None, description="模式的状态复杂度")
    n: Optional[int] = Field(default=None, description="文本的状态复杂度")

    def check_range(self):
        """
        检查该族需要的参数及其下限

        Raises:
            WitnessRangeError: 缺参数或越界，消息中给出该族的下限
        """
        m_min, n_min = MINIMUMS[self.family]
        needs_m = self.role is WitnessRole.PATTERN or self.family in _TEXT_NEEDS_M
        needs_n = self.role is WitnessRole.TEXT
        for name, value, minimum, needed in (('m', self.m, m_min, needs_m),
                                             ('n', self.n, n_min, needs_n)):
            if not needed:
                continue
            if value is None:
                raise WitnessRangeError(
                    f"{self.family.value} 的 {self.role.value} 需要参数 {name}"
                )
            if value < minimum:
                raise WitnessRangeError(
                    f"{self.family.value} 要求 {name} >= {minimum}，但得到 {name}={value}"
                )


def cycle_dfa(alphabet: Alphabet, n: int, cycles: Dict[str, Transformation],
              finals) -> Dfa:
    """未列出的字母取恒等变换"""
    transformations = {
        letter: cycles.get(letter, Transformation.identity(n)) for letter in alphabet
    }
    return Dfa.from_transformations(alphabet, transformations, finals)


def prefix_text(n: int) -> Dfa:
    """a: (0,…,n-1)，b: 𝟙，终止 {n-1}"""
    return cycle_dfa(BINARY, n, {'a': Transformation.cycle(n, range(n))}, {n - 1})


def prefix_pattern(m: int) -> Dfa:
    """文本机的方言：b: (0,…,m-1)，a: 𝟙，终止 {m-1}"""
    return cycle_dfa(BINARY, m, {'b': Transformation.cycle(m, range(m))}, {m - 1})


def suffix_text(n: int) -> Dfa:
    """a: (0,…,n-1)，b: (1,…,n-1)，终止 {n-1}"""
    return cycle_dfa(BINARY, n, {
        'a': Transformation.cycle(n, range(n)),
        'b': Transformation.cycle(n, range(1, n)),
    }, {n - 1})


def suffix_pattern(m: int) -> Dfa:
    """b: (0,…,m-1)，a: (1,…,m-1)，终止 {m-1}"""
    return cycle_dfa(BINARY, m, {
        'b': Transformation.cycle(m, range(m)),
        'a': Transformation.cycle(m, range(1, m)),
    }, {m - 1})


def factor_text(n: int) -> Dfa:
    """a: (0,…,n-1)，b: (1,…,n-2)，终止 {n-1}"""
    return cycle_dfa(BINARY, n, {
        'a': Transformation.cycle(n, range(n)),
        'b': Transformation.cycle(n, range(1, n - 1)),
    }, {n - 1})


def factor_pattern(m: int) -> Dfa:
    """
    按显式边表生成：0 -b-> 1 -b-> … -b-> m-1 -b-> 0，
    m-2 -a-> 1，a 在 1..m-2 上循环，0 与 m-1 上 a 自环，终止 {m-1}
    """
    return cycle_dfa(BINARY, m, {
        'b': Transformation.cycle(m, range(m)),
        'a': Transformation.cycle(m, range(1, m - 1)),
    }, {m - 1})


def subsequence_alphabet(m: int) -> Alphabet:
    """a1, …, a(m-2), b"""
    return Alphabet(tuple(f"a{i}" for i in range(1, m - 1)) + ('b',))


def subsequence_pattern(m: int) -> Dfa:
    """a_i: (i -> m-1)(0 -> i)，b: 𝟙，终止 {m-1}"""
    alphabet = subsequence_alphabet(m)
    cycles = {
        f"a{i}": Transformation.arrow(m, i, m - 1).then(Transformation.arrow(m, 0, i))
        for i in range(1, m - 1)
    }
    return cycle_dfa(alphabet, m, cycles, {m - 1})


def subsequence_text(m: int, n: int) -> Dfa:
    """b: (0,…,n-1)，a_i: 𝟙，终止 {n-1}"""
    return cycle_dfa(subsequence_alphabet(m), n,
                     {'b': Transformation.cycle(n, range(n))}, {n - 1})


def word_pattern(m: int) -> Dfa:
    """{b^{m-2}}"""
    return word_dfa(PatternWord(BINARY, ('b',) * (m - 2)))


def word_prefix_text(m: int, n: int) -> Dfa:
    """与 w = b^{m-2} 匹配的方言：b: (0,…,n-1)，a: 𝟙，终止 {r-1}，r = (m-2) mod n"""
    r = (m - 2) % n
    return cycle_dfa(BINARY, n, {'b': Transformation.cycle(n, range(n))}, {(r - 1) % n})


def word_text(n: int) -> Dfa:
    """a: (0,…,n-1)，b: 𝟙，终止 {0,…,n-2}"""
    return cycle_dfa(BINARY, n, {'a': Transformation.cycle(n, range(n))}, range(n - 1))


def unary_pattern(m: int) -> Dfa:
    """{a^{m-2}}，含 sink 共 m 个状态"""
    return word_dfa(PatternWord(UNARY, ('a',) * (m - 2)))


def unary_text(m: int, n: int) -> Dfa:
    """a: (0,…,n-1)，终止 {(m-3) mod n}"""
    return cycle_dfa(UNARY, n, {'a': Transformation.cycle(n, range(n))}, {(m - 3) % n})


def bm_dfa(m: int) -> Dfa:
    """
    B_m：2^{m-1} 个状态，状态为 (m-1) 位二进制元组的值（x1 为最高位）

    a 把元组循环左移一位；b 左移一位并在末位补 1；终止状态为 x1 = 1。

    Raises:
        WitnessRangeError: m < 2
    """
    if m < 2:
        raise WitnessRangeError(f"bm_dfa 要求 m >= 2，但得到 m={m}")
    size = 1 << (m - 1)
    mask = size - 1
    top = m - 2
    delta = tuple(
        (((k << 1) | (k >> top)) & mask, ((k << 1) | 1) & mask)
        for k in range(size)
    )
    finals = frozenset(range(1 << top, size))
    return Dfa(BINARY, size, 0, finals, delta)


def cm_dfa(m: int) -> Dfa:
    """
    C_m：(m-2) 位二进制元组加吸收终止状态 f = 2^{m-2}

    a 循环左移；x1 = 0 时 b 左移补 1，x1 = 1 时 b 进入 f。

    Raises:
        WitnessRangeError: m < 3
    """
    if m < 3:
        raise WitnessRangeError(f"cm_dfa 要求 m >= 3，但得到 m={m}")
    f = 1 << (m - 2)
    mask = f - 1
    top = m - 3
    delta = []
    for k in range(f):
        rotated = ((k << 1) | (k >> top)) & mask
        delta.append((rotated, f if k >> top else ((k << 1) | 1) & mask))
    delta.append((f, f))
    return Dfa(BINARY, f + 1, 0, frozenset({f}), tuple(delta))


_Builder = Callable[[WitnessSpec], Dfa]

_BUILDERS: Dict[Tuple[WitnessFamily, WitnessRole], _Builder] = {
    (WitnessFamily.PREFIX_GENERAL, WitnessRole.PATTERN): lambda s: prefix_pattern(s.m),
    (WitnessFamily.PREFIX_GENERAL, WitnessRole.TEXT): lambda s: prefix_text(s.n),
    (WitnessFamily.SUFFIX_GENERAL, WitnessRole.PATTERN): lambda s: suffix_pattern(s.m),
    (WitnessFamily.SUFFIX_GENERAL, WitnessRole.TEXT): lambda s: suffix_text(s.n),
    (WitnessFamily.FACTOR_GENERAL, WitnessRole.PATTERN): lambda s: factor_pattern(s.m),
    (WitnessFamily.FACTOR_GENERAL, WitnessRole.TEXT): lambda s: factor_text(s.n),
    (WitnessFamily.SUBSEQUENCE_GENERAL, WitnessRole.PATTERN): lambda s: subsequence_pattern(s.m),
    (WitnessFamily.WORD_PREFIX, WitnessRole.PATTERN): lambda s: word_pattern(s.m),
    (WitnessFamily.WORD_PREFIX, WitnessRole.TEXT): lambda s: word_prefix_text(s.m, s.n),
    (WitnessFamily.WORD_SUFFIX, WitnessRole.PATTERN): lambda s: word_pattern(s.m),
    (WitnessFamily.WORD_SUFFIX, WitnessRole.TEXT): lambda s: word_text(s.n),
    (WitnessFamily.WORD_FACTOR, WitnessRole.PATTERN): lambda s: word_pattern(s.m),
    (WitnessFamily.WORD_FACTOR, WitnessRole.TEXT): lambda s: word_text(s.n),
    (WitnessFamily.WORD_SUBSEQUENCE, WitnessRole.PATTERN): lambda s: word_pattern(s.m),
    (WitnessFamily.WORD_SUBSEQUENCE, WitnessRole.TEXT): lambda s: word_text(s.n),
    (WitnessFamily.UNARY, WitnessRole.PATTERN): lambda s: unary_pattern(s.m),
    (WitnessFamily.UNARY, WitnessRole.TEXT): lambda s: unary_text(s.m, s.n),
}


def witness(spec: WitnessSpec) -> Dfa:
    """
    生成见证 DFA

    子序列族的文本字母表依赖 m；未给出 m 时按最小合法字母表 {a1, b} 生成。

    Raises:
        WitnessRangeError: 参数缺失或低于该族下限
    """
    spec.check_range()
    if spec.family is WitnessFamily.SUBSEQUENCE_GENERAL and spec.role is WitnessRole.TEXT:
        m = spec.m if spec.m is not None else MINIMUMS[spec.family][0]
        if m < MINIMUMS[spec.family][0]:
            raise WitnessRangeError(f"subsequence_general 要求 m >= 3，但得到 m={m}")
        return subsequence_text(m, spec.n)
    return _BUILDERS[(spec.family, spec.role)](spec)
