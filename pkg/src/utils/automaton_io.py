"""
自动机文本格式

逐行格式，'#' 开始注释，UTF-8：

    dfa
    alphabet: a b
    states: 3
    initial: 0
    finals: 2
    0 : 1 0
    ...

NFA 头部为 nfa，像写成 {i,j,...}（可为 {}）。
"""
import re
from typing import Dict, Iterator, List, Tuple, Union

from ..core.automata import Alphabet, Dfa, Nfa
from ..core.errors import AutomatonError, FormatError

_HEADER_FIELDS = ('alphabet', 'states', 'initial', 'finals')
_SET_PATTERN = re.compile(r'\{([^{}]*)\}')


def _content_lines(text: str) -> Iterator[Tuple[int, str]]:
    """去掉注释与空行，保留原始行号"""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            yield number, line


def _int(token: str, line: int) -> int:
    if not re.fullmatch(r'\d+', token):
        raise FormatError(f"期望非负整数，得到 '{token}'", line)
    return int(token)


def _state(token: str, count: int, line: int) -> int:
    q = _int(token, line)
    if q >= count:
        raise FormatError(f"state {q} out of range", line)
    return q


def _parse_header(lines: List[Tuple[int, str]], kind: str):
    if not lines:
        raise FormatError("空输入")
    number, first = lines[0]
    if first != kind:
        raise FormatError(f"期望头部 '{kind}'，得到 '{first}'", number)
    if len(lines) < 5:
        raise FormatError("头部不完整", lines[-1][0])

    values: Dict[str, Tuple[int, str]] = {}
    for (number, line), name in zip(lines[1:5], _HEADER_FIELDS):
        key, sep, value = line.partition(':')
        if not sep or key.strip() != name:
            raise FormatError(f"期望 '{name}:'，得到 '{line}'", number)
        values[name] = (number, value.strip())

    number, letters = values['alphabet']
    try:
        alphabet = Alphabet(tuple(letters.split()))
    except AutomatonError as e:
        raise FormatError(str(e), number) from None

    number, count_text = values['states']
    count = _int(count_text, number)
    if count < 1:
        raise FormatError("状态数必须为正", number)

    number, initial_text = values['initial']
    initial = _state(initial_text, count, number)

    number, finals_text = values['finals']
    finals = frozenset(_state(tok, count, number) for tok in finals_text.split())

    return alphabet, count, initial, finals


def _parse_rows(lines: List[Tuple[int, str]], count: int, width: int, parse_images):
    body = lines[5:]
    if len(body) != count:
        where = body[-1][0] if body else lines[-1][0]
        raise FormatError(f"期望 {count} 行转移，得到 {len(body)} 行", where)

    rows: Dict[int, tuple] = {}
    for number, line in body:
        source, sep, images = line.partition(':')
        if not sep:
            raise FormatError(f"转移行缺少 ':': '{line}'", number)
        q = _state(source.strip(), count, number)
        if q in rows:
            raise FormatError(f"状态 {q} 重复定义", number)
        row = parse_images(images.strip(), number)
        if len(row) != width:
            raise FormatError(f"状态 {q} 有 {len(row)} 个像，字母表大小为 {width}", number)
        rows[q] = row
    return tuple(rows[q] for q in range(count))


def parse_dfa(text: str) -> Dfa:
    """
    解析 DFA 文本

    Raises:
        FormatError: 格式错误（带行号）或状态下标越界
    """
    lines = list(_content_lines(text))
    alphabet, count, initial, finals = _parse_header(lines, 'dfa')

    def images(value: str, number: int):
        return tuple(_state(tok, count, number) for tok in value.split())

    delta = _parse_rows(lines, count, len(alphabet), images)
    return Dfa(alphabet, count, initial, finals, delta)


def parse_nfa(text: str) -> Nfa:
    """解析 NFA 文本，像为 {i,j,...}"""
    lines = list(_content_lines(text))
    alphabet, count, initial, finals = _parse_header(lines, 'nfa')

    def images(value: str, number: int):
        sets = _SET_PATTERN.findall(value)
        if _SET_PATTERN.sub('', value).strip():
            raise FormatError(f"无法解析的像: '{value}'", number)
        return tuple(
            frozenset(_state(tok.strip(), count, number) for tok in body.split(',') if tok.strip())
            for body in sets
        )

    delta = _parse_rows(lines, count, len(alphabet), images)
    return Nfa(alphabet, count, initial, finals, delta)


def parse_automaton(text: str) -> Union[Dfa, Nfa]:
    """按头部自动识别 dfa / nfa"""
    lines = list(_content_lines(text))
    if lines and lines[0][1] == 'nfa':
        return parse_nfa(text)
    return parse_dfa(text)


def _header(kind: str, d) -> List[str]:
    finals = ' '.join(str(q) for q in sorted(d.finals))
    return [
        kind,
        f"alphabet: {' '.join(d.alphabet.letters)}",
        f"states: {d.state_count}",
        f"initial: {d.initial}",
        f"finals: {finals}".rstrip(),
    ]


def serialize_dfa(d: Dfa) -> str:
    lines = _header('dfa', d)
    lines += [f"{q} : {' '.join(str(p) for p in row)}" for q, row in enumerate(d.delta)]
    return '\n'.join(lines) + '\n'


def serialize_nfa(n: Nfa) -> str:
    lines = _header('nfa', n)
    for q, row in enumerate(n.delta):
        images = ' '.join('{' + ','.join(str(p) for p in sorted(s)) + '}' for s in row)
        lines.append(f"{q} : {images}")
    return '\n'.join(lines) + '\n'


def to_dot(d: Dfa, name: str = 'dfa') -> str:
    """Graphviz DOT 文本，同一对状态间的边合并标注"""
    lines = [f'digraph {name} {{', '  rankdir=LR;', '  __start [shape=point];']
    for q in range(d.state_count):
        shape = 'doublecircle' if q in d.finals else 'circle'
        lines.append(f'  {q} [shape={shape}];')
    lines.append(f'  __start -> {d.initial};')
    for q, row in enumerate(d.delta):
        labels: Dict[int, List[str]] = {}
        for letter, p in zip(d.alphabet.letters, row):
            labels.setdefault(p, []).append(letter)
        for p, letters in labels.items():
            lines.append(f'  {q} -> {p} [label="{",".join(letters)}"];')
    lines.append('}')
    return '\n'.join(lines) + '\n'
