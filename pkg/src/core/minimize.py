"""
DFA 最小化与规范形

minimize 使用 Hopcroft 划分细化；minimize_oracle 是独立实现的 Moore 填表法，仅用作测试对照。
两者结果都按 BFS（从初始状态出发，字母按字母表顺序）规范编号。
"""
from collections import deque
from itertools import chain
from typing import Dict, List, Tuple

from automata.base.utils import PartitionRefinement
from loguru import logger

from .automata import Dfa
from .errors import AutomatonError

CanonicalForm = Tuple[Tuple[str, ...], int, Tuple[int, ...], Tuple[Tuple[int, ...], ...]]


def trim(d: Dfa) -> Dfa:
    """去掉不可达状态，并按 BFS 顺序重新编号（初始状态为 0）"""
    order: Dict[int, int] = {d.initial: 0}
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        for p in d.delta[q]:
            if p not in order:
                order[p] = len(order)
                queue.append(p)

    delta: List[Tuple[int, ...]] = [()] * len(order)
    for q, i in order.items():
        delta[i] = tuple(order[p] for p in d.delta[q])
    finals = frozenset(order[q] for q in d.finals if q in order)
    return Dfa(d.alphabet, len(order), 0, finals, tuple(delta))


def _quotient(d: Dfa, block_of: Dict[int, int]) -> Dfa:
    """按块编号构造商自动机（d 已 trim），结果再规范编号"""
    blocks = sorted(set(block_of.values()))
    rename = {b: i for i, b in enumerate(blocks)}
    delta: List[Tuple[int, ...]] = [()] * len(blocks)
    for q in range(d.state_count):
        i = rename[block_of[q]]
        if not delta[i]:
            delta[i] = tuple(rename[block_of[p]] for p in d.delta[q])
    finals = frozenset(rename[block_of[q]] for q in d.finals)
    return trim(Dfa(d.alphabet, len(blocks), rename[block_of[d.initial]], finals, tuple(delta)))


def _hopcroft_blocks(d: Dfa) -> Dict[int, int]:
    states = range(d.state_count)
    classes = PartitionRefinement(states)
    split = classes.refine(d.finals)
    processing = {split[0][0] if split else next(iter(classes.get_set_ids()))}

    back: List[List[List[int]]] = [[[] for _ in states] for _ in d.alphabet.letters]
    for q in states:
        for c, p in enumerate(d.delta[q]):
            back[c][p].append(q)

    while processing:
        splitter = tuple(classes.get_set_by_id(processing.pop()))
        for into in back:
            for inside_id, outside_id in classes.refine(chain.from_iterable(into[p] for p in splitter)):
                if outside_id in processing:
                    processing.add(inside_id)
                elif len(classes.get_set_by_id(inside_id)) <= len(classes.get_set_by_id(outside_id)):
                    processing.add(inside_id)
                else:
                    processing.add(outside_id)

    return {q: i for i, block in enumerate(classes.get_sets()) for q in block}


def minimize(d: Dfa) -> Dfa:
    """
    Hopcroft 最小化

    Args:
        d: 完全 DFA

    Returns:
        语言相同的最小完全 DFA，状态按 BFS 规范编号；state_count 即状态复杂度（含 sink）
    """
    reachable = trim(d)
    result = _quotient(reachable, _hopcroft_blocks(reachable))
    logger.debug(f"最小化: {d.state_count} -> {result.state_count} 个状态")
    return result


def minimize_oracle(d: Dfa) -> Dfa:
    """Moore 填表法最小化，与 minimize 相互独立（自带可达性、商与编号），仅作对照"""
    reachable = {d.initial}
    stack = [d.initial]
    while stack:
        for p in d.delta[stack.pop()]:
            if p not in reachable:
                reachable.add(p)
                stack.append(p)
    states = sorted(reachable)
    marked = {(p, q): (p in d.finals) != (q in d.finals) for p in states for q in states}

    changed = True
    while changed:
        changed = False
        for p in states:
            for q in states:
                if p >= q or marked[(p, q)]:
                    continue
                if any(marked[(x, y)] for x, y in zip(d.delta[p], d.delta[q])):
                    marked[(p, q)] = marked[(q, p)] = True
                    changed = True

    # 每个等价类以其最小状态为代表
    representative = {q: min(p for p in states if not marked[(p, q)]) for q in states}

    number = {representative[d.initial]: 0}
    order = [representative[d.initial]]
    for r in order:
        for p in d.delta[r]:
            if representative[p] not in number:
                number[representative[p]] = len(order)
                order.append(representative[p])

    delta = tuple(tuple(number[representative[p]] for p in d.delta[r]) for r in order)
    finals = frozenset(number[r] for r in order if r in d.finals)
    return Dfa(d.alphabet, len(order), 0, finals, delta)


def canonical_form(d: Dfa) -> CanonicalForm:
    """BFS 规范形：(字母表, 状态数, 终止状态, 转移表)，只含可达部分"""
    t = trim(d)
    return (t.alphabet.letters, t.state_count, tuple(sorted(t.finals)), t.delta)


def is_minimal(d: Dfa) -> bool:
    return minimize(d).state_count == d.state_count


def isomorphic(d1: Dfa, d2: Dfa) -> bool:
    """
    判断两个最小完全 DFA 是否同构

    Raises:
        AutomatonError: 任一输入不是最小 DFA
    """
    for name, d in (("第一个", d1), ("第二个", d2)):
        if not is_minimal(d):
            raise AutomatonError(f"{name} DFA 不是最小的，同构判定要求最小输入")
    return canonical_form(d1) == canonical_form(d2)
