"""
理想（ideal）构造

右理想 PΣ*、左理想 Σ*P、双边理想 Σ*PΣ*、全边理想 Σ*⧢P 以及一般的 shuffle。
构造路线统一为：改造成 NFA -> 子集构造 -> 最小化，返回最小完全 DFA。
"""
from collections import deque
from enum import Enum
from typing import Dict, List, Tuple

from loguru import logger

from .automata import Dfa, Nfa, determinize
from .minimize import minimize
from .operations import same_alphabet


class IdealKind(str, Enum):
    """理想的种类"""
    RIGHT = 'right'
    LEFT = 'left'
    TWO_SIDED = 'two_sided'
    ALL_SIDED = 'all_sided'


def ideal_nfa(kind: IdealKind, p: Dfa) -> Nfa:
    """
    生成对应理想的 NFA

    - right: 每个终止状态在所有字母上加自环
    - left: 初始状态在所有字母上加自环（保留原有转移作为非确定分支）
    - two_sided: 两者兼有
    - all_sided: Δ(q, σ) = {q, δ(q, σ)}
    """
    kind = IdealKind(kind)
    k = len(p.alphabet)
    delta: List[Tuple[frozenset, ...]] = []
    for q in range(p.state_count):
        row = []
        for c in range(k):
            targets = {p.delta[q][c]}
            if kind is IdealKind.ALL_SIDED:
                targets.add(q)
            else:
                if kind in (IdealKind.RIGHT, IdealKind.TWO_SIDED) and q in p.finals:
                    targets.add(q)
                if kind in (IdealKind.LEFT, IdealKind.TWO_SIDED) and q == p.initial:
                    targets.add(q)
            row.append(frozenset(targets))
        delta.append(tuple(row))
    return Nfa(p.alphabet, p.state_count, p.initial, p.finals, tuple(delta))


def ideal(kind: IdealKind, p: Dfa) -> Dfa:
    """
    由 L(p) 生成的理想的最小 DFA

    Args:
        kind: 理想种类
        p: 完全 DFA

    Returns:
        最小完全 DFA；空语言的理想仍是空语言（单状态拒绝机）
    """
    kind = IdealKind(kind)
    result = minimize(determinize(ideal_nfa(kind, p)))
    logger.debug(f"理想 {kind.value}: κ(P)={p.state_count} -> {result.state_count} 个状态")
    return result


def shuffle_nfa(d1: Dfa, d2: Dfa) -> Nfa:
    """可达状态对上的 NFA：每个字母非确定地推进恰好一个分量"""
    same_alphabet(d1, d2)
    k = len(d1.alphabet)
    start = (d1.initial, d2.initial)
    index: Dict[Tuple[int, int], int] = {start: 0}
    pairs = [start]
    rows: List[List[Tuple[Tuple[int, int], Tuple[int, int]]]] = []
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        row = []
        for c in range(k):
            moves = ((d1.delta[p][c], q), (p, d2.delta[q][c]))
            for target in moves:
                if target not in index:
                    index[target] = len(pairs)
                    pairs.append(target)
                    queue.append(target)
            row.append(moves)
        rows.append(row)

    delta = tuple(
        tuple(frozenset(index[t] for t in moves) for moves in row)
        for row in rows
    )
    finals = frozenset(
        i for i, (p, q) in enumerate(pairs) if p in d1.finals and q in d2.finals
    )
    return Nfa(d1.alphabet, len(pairs), 0, finals, delta)


def shuffle(d1: Dfa, d2: Dfa) -> Dfa:
    """
    L(d1) ⧢ L(d2) 的最小 DFA

    Raises:
        AlphabetMismatchError: 字母表不一致
    """
    result = minimize(determinize(shuffle_nfa(d1, d2)))
    logger.debug(f"shuffle: {d1.state_count} ⧢ {d2.state_count} -> {result.state_count} 个状态")
    return result
