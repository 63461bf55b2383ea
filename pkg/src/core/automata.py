"""
自动机核心类型

完全 DFA、NFA、部分 DFA、变换（transformation）以及字母表与单词的处理。
所有类型构造后不可变，可在线程间共享。
"""
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from loguru import logger

from .errors import AutomatonError, UnknownLetterError

Word = Tuple[str, ...]
WordLike = Union[str, Sequence[str]]


@dataclass(frozen=True)
class Alphabet:
    """有序字母表，字母为不含空白的非空记号（允许 a1 这类多字符字母）"""

    letters: Tuple[str, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, 'letters', letters)
        if not letters:
            raise AutomatonError("字母表不能为空")
        if len(set(letters)) != len(letters):
            raise AutomatonError(f"字母表有重复字母: {' '.join(letters)}")
        for letter in letters:
            if not letter or any(ch.isspace() for ch in letter) or not letter.isprintable():
                raise AutomatonError(f"非法字母: {letter!r}")

    @classmethod
    def of(cls, letters: Union[str, Iterable[str]]) -> 'Alphabet':
        """由字符串（每个字符一个字母）或字母序列构造"""
        if isinstance(letters, str):
            letters = letters.split() if ' ' in letters else list(letters)
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {letter: i for i, letter in enumerate(self.letters)}

    def index(self, letter: str, position: int = 0) -> int:
        try:
            return self._index[letter]
        except KeyError:
            raise UnknownLetterError(letter, position) from None

    def __contains__(self, letter: str) -> bool:
        return letter in self._index

    @property
    def single_char(self) -> bool:
        return all(len(letter) == 1 for letter in self.letters)

    def tokenize(self, text: str) -> Word:
        """
        把文本切分为单词

        含空白时按空白切分；否则按最长匹配逐个识别字母。

        Raises:
            UnknownLetterError: 无法识别的字母
        """
        if any(ch.isspace() for ch in text):
            word = tuple(text.split())
            self.indices(word)
            return word

        longest = max(len(letter) for letter in self.letters)
        word: List[str] = []
        pos = 0
        while pos < len(text):
            for size in range(min(longest, len(text) - pos), 0, -1):
                if text[pos:pos + size] in self._index:
                    word.append(text[pos:pos + size])
                    pos += size
                    break
            else:
                raise UnknownLetterError(text[pos], pos)
        return tuple(word)

    def word(self, w: WordLike) -> Word:
        """规范化单词：字符串走 tokenize，序列原样转元组"""
        if isinstance(w, str):
            return self.tokenize(w)
        word = tuple(w)
        self.indices(word)
        return word

    def indices(self, w: Sequence[str]) -> List[int]:
        return [self.index(letter, pos) for pos, letter in enumerate(w)]

    def render(self, w: Sequence[str]) -> str:
        """单词的文本形式：单字符字母直接拼接，否则用空格分隔"""
        return ''.join(w) if self.single_char else ' '.join(w)


@dataclass(frozen=True)
class Transformation:
    """
    状态集 {0..n-1} 上的变换，以像数组表示

    复合按从左到右的约定：q(st) = (qs)t。
    """

    image: Tuple[int, ...]

    def __post_init__(self):
        image = tuple(self.image)
        object.__setattr__(self, 'image', image)
        n = len(image)
        for q, p in enumerate(image):
            if not 0 <= p < n:
                raise AutomatonError(f"变换像越界: {q} -> {p}（状态数 {n}）")

    @property
    def size(self) -> int:
        return len(self.image)

    def __call__(self, q: int) -> int:
        return self.image[q]

    @classmethod
    def identity(cls, n: int) -> 'Transformation':
        return cls(tuple(range(n)))

    @classmethod
    def cycle(cls, n: int, states: Sequence[int]) -> 'Transformation':
        """循环 (q0, q1, ..., q_{k-1})，其余状态不动"""
        image = list(range(n))
        states = list(states)
        if len(set(states)) != len(states):
            raise AutomatonError(f"循环中有重复状态: {states}")
        for i, q in enumerate(states):
            image[q] = states[(i + 1) % len(states)]
        return cls(tuple(image))

    @classmethod
    def shift_up(cls, n: int, low: int, high: int) -> 'Transformation':
        """区间平移 q -> q+1（low <= q <= high），其余不动"""
        image = list(range(n))
        for q in range(low, high + 1):
            image[q] = q + 1
        return cls(tuple(image))

    @classmethod
    def shift_down(cls, n: int, low: int, high: int) -> 'Transformation':
        """区间平移 q -> q-1（low <= q <= high），其余不动"""
        image = list(range(n))
        for q in range(low, high + 1):
            image[q] = q - 1
        return cls(tuple(image))

    @classmethod
    def arrow(cls, n: int, source: int, target: int) -> 'Transformation':
        """单箭头 (source -> target)，其余不动"""
        image = list(range(n))
        image[source] = target
        return cls(tuple(image))

    def then(self, other: 'Transformation') -> 'Transformation':
        """先作用 self 再作用 other"""
        if other.size != self.size:
            raise AutomatonError("变换大小不一致，无法复合")
        return Transformation(tuple(other.image[p] for p in self.image))

    def __mul__(self, other: 'Transformation') -> 'Transformation':
        return self.then(other)

    def preimage(self, targets: Iterable[int]) -> FrozenSet[int]:
        targets = set(targets)
        return frozenset(q for q, p in enumerate(self.image) if p in targets)


def _check_state(q: int, count: int, what: str):
    if not isinstance(q, int) or not 0 <= q < count:
        raise AutomatonError(f"state {q} out of range（{what}，状态数 {count}）")


@dataclass(frozen=True)
class Dfa:
    """完全 DFA：稠密转移表 state_count × |alphabet|"""

    alphabet: Alphabet
    state_count: int
    initial: int
    finals: FrozenSet[int]
    delta: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, 'finals', frozenset(self.finals))
        object.__setattr__(self, 'delta', tuple(tuple(row) for row in self.delta))
        if self.state_count < 1:
            raise AutomatonError("DFA 至少需要一个状态")
        _check_state(self.initial, self.state_count, "初始状态")
        for q in self.finals:
            _check_state(q, self.state_count, "终止状态")
        if len(self.delta) != self.state_count:
            raise AutomatonError(f"转移表行数 {len(self.delta)} 与状态数 {self.state_count} 不符")
        k = len(self.alphabet)
        for q, row in enumerate(self.delta):
            if len(row) != k:
                raise AutomatonError(f"状态 {q} 的转移数 {len(row)} 与字母表大小 {k} 不符")
            for p in row:
                _check_state(p, self.state_count, f"状态 {q} 的转移")

    @classmethod
    def from_transformations(cls, alphabet: Alphabet, transformations: Dict[str, Transformation],
                             finals: Iterable[int], initial: int = 0) -> 'Dfa':
        """由每个字母的变换构造 DFA"""
        missing = [letter for letter in alphabet if letter not in transformations]
        if missing:
            raise AutomatonError(f"缺少字母的变换: {' '.join(missing)}")
        sizes = {t.size for t in transformations.values()}
        if len(sizes) != 1:
            raise AutomatonError(f"变换大小不一致: {sorted(sizes)}")
        n = sizes.pop()
        delta = tuple(
            tuple(transformations[letter](q) for letter in alphabet)
            for q in range(n)
        )
        return cls(alphabet, n, initial, frozenset(finals), delta)

    def transformation(self, letter: str) -> Transformation:
        c = self.alphabet.index(letter)
        return Transformation(tuple(row[c] for row in self.delta))

    def step(self, q: int, letter: str) -> int:
        return self.delta[q][self.alphabet.index(letter)]

    def run(self, w: WordLike, start: Optional[int] = None) -> int:
        """从 start（默认初始状态）读入 w 后到达的状态"""
        q = self.initial if start is None else start
        for c in self.alphabet.indices(self.alphabet.word(w)):
            q = self.delta[q][c]
        return q

    def accepts(self, w: WordLike) -> bool:
        return self.run(w) in self.finals

    def reachable(self) -> List[int]:
        """BFS 序的可达状态（字母按字母表顺序）"""
        seen = {self.initial}
        order = [self.initial]
        queue = deque(order)
        while queue:
            q = queue.popleft()
            for p in self.delta[q]:
                if p not in seen:
                    seen.add(p)
                    order.append(p)
                    queue.append(p)
        return order

    def renumber(self, permutation: Sequence[int]) -> 'Dfa':
        """按 permutation（旧编号 -> 新编号）重命名状态"""
        perm = list(permutation)
        if sorted(perm) != list(range(self.state_count)):
            raise AutomatonError("renumber 需要状态的一个排列")
        delta: List[Tuple[int, ...]] = [()] * self.state_count
        for q, row in enumerate(self.delta):
            delta[perm[q]] = tuple(perm[p] for p in row)
        return Dfa(self.alphabet, self.state_count, perm[self.initial],
                   frozenset(perm[q] for q in self.finals), tuple(delta))

    def complement(self) -> 'Dfa':
        return Dfa(self.alphabet, self.state_count, self.initial,
                   frozenset(range(self.state_count)) - self.finals, self.delta)


def dialect(d: Dfa, permutation: Dict[str, str]) -> Dfa:
    """
    方言：按 permutation 交换字母的角色

    新机器中字母 permutation[x] 的作用等于原机器中字母 x 的作用。
    """
    letters = list(d.alphabet)
    if sorted(permutation.keys()) != sorted(permutation.values()):
        raise AutomatonError("方言映射必须是字母表上的置换")
    transformations = {
        permutation.get(letter, letter): d.transformation(letter) for letter in letters
    }
    return Dfa.from_transformations(d.alphabet, transformations, d.finals, d.initial)


def total_dfa(alphabet: Alphabet, accepting: bool = True) -> Dfa:
    """单状态 DFA：Σ*（accepting）或空语言"""
    return Dfa(alphabet, 1, 0, frozenset({0}) if accepting else frozenset(),
               (tuple(0 for _ in alphabet),))


@dataclass(frozen=True)
class PartialDfa:
    """部分 DFA：缺失的转移用 None 表示"""

    alphabet: Alphabet
    state_count: int
    initial: int
    finals: FrozenSet[int]
    delta: Tuple[Tuple[Optional[int], ...], ...]


def complete(d: Union[PartialDfa, Dfa]) -> Dfa:
    """
    补全部分 DFA

    若存在缺失转移，则添加一个非终止、全自环的 sink 状态；已完全的 DFA 原样返回。
    """
    if isinstance(d, Dfa):
        return d
    missing = any(p is None for row in d.delta for p in row)
    if not missing:
        return Dfa(d.alphabet, d.state_count, d.initial, d.finals, d.delta)
    sink = d.state_count
    k = len(d.alphabet)
    delta = [tuple(sink if p is None else p for p in row) for row in d.delta]
    delta.append(tuple(sink for _ in range(k)))
    logger.debug(f"补全部分 DFA：添加 sink 状态 {sink}")
    return Dfa(d.alphabet, d.state_count + 1, d.initial, d.finals, tuple(delta))


@dataclass(frozen=True)
class Nfa:
    """无 ε 转移的 NFA：每个状态每个字母对应一个状态集合（可为空）"""

    alphabet: Alphabet
    state_count: int
    initial: int
    finals: FrozenSet[int]
    delta: Tuple[Tuple[FrozenSet[int], ...], ...]

    def __post_init__(self):
        object.__setattr__(self, 'finals', frozenset(self.finals))
        object.__setattr__(
            self, 'delta',
            tuple(tuple(frozenset(targets) for targets in row) for row in self.delta)
        )
        if self.state_count < 1:
            raise AutomatonError("NFA 至少需要一个状态")
        _check_state(self.initial, self.state_count, "初始状态")
        for q in self.finals:
            _check_state(q, self.state_count, "终止状态")
        if len(self.delta) != self.state_count:
            raise AutomatonError(f"转移表行数 {len(self.delta)} 与状态数 {self.state_count} 不符")
        k = len(self.alphabet)
        for q, row in enumerate(self.delta):
            if len(row) != k:
                raise AutomatonError(f"状态 {q} 的转移数 {len(row)} 与字母表大小 {k} 不符")
            for targets in row:
                for p in targets:
                    _check_state(p, self.state_count, f"状态 {q} 的转移")

    @classmethod
    def from_dfa(cls, d: Dfa) -> 'Nfa':
        return cls(d.alphabet, d.state_count, d.initial, d.finals,
                   tuple(tuple(frozenset({p}) for p in row) for row in d.delta))

    def step(self, states: Iterable[int], c: int) -> FrozenSet[int]:
        out = set()
        for q in states:
            out |= self.delta[q][c]
        return frozenset(out)

    def accepts(self, w: WordLike) -> bool:
        current = frozenset({self.initial})
        for c in self.alphabet.indices(self.alphabet.word(w)):
            current = self.step(current, c)
            if not current:
                return False
        return bool(current & self.finals)


def determinize(n: Nfa) -> Dfa:
    """
    子集构造

    只物化可达子集；空子集作为 sink。状态按 BFS 编号（字母按字母表顺序），状态 0 为初始子集。
    """
    k = len(n.alphabet)
    start = frozenset({n.initial})
    index: Dict[FrozenSet[int], int] = {start: 0}
    subsets = [start]
    delta: List[Tuple[int, ...]] = []
    queue = deque([start])
    while queue:
        current = queue.popleft()
        row = []
        for c in range(k):
            target = n.step(current, c)
            if target not in index:
                index[target] = len(subsets)
                subsets.append(target)
                queue.append(target)
            row.append(index[target])
        delta.append(tuple(row))

    finals = frozenset(i for i, s in enumerate(subsets) if s & n.finals)
    logger.debug(f"子集构造: NFA {n.state_count} 个状态 -> {len(subsets)} 个可达子集")
    return Dfa(n.alphabet, len(subsets), 0, finals, tuple(delta))


@dataclass(frozen=True)
class WordSample:
    """长度不超过 max_len 的全部接受单词，按字母表顺序的字典序排列（前缀在前）"""

    max_len: int
    words: Tuple[Word, ...] = field(default_factory=tuple)

    def __contains__(self, w) -> bool:
        return tuple(w) in set(self.words)

    def __len__(self) -> int:
        return len(self.words)
