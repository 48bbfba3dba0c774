"""Module for reading and writing diagram files.

A diagram file is UTF-8 text::

    # comment
    qubits: 3
    ZII, IZI, IIZ, ZZZ
    XXX, XYY, YXY, -YYX

Each non-blank line after the header lists the members of one ID. A negative
ID carries '-' on exactly one member, a positive ID on none.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import List

from ksforge.catalog import IdSet, product_sign
from ksforge.diagram import Diagram
from ksforge.errors import DiagramError, DiagramFormatError, PauliParseError, QubitMismatchError
from ksforge.pauli import parse_observable

logger = logging.getLogger(__name__)

HEADER = 'qubits:'


def _parse_id(text: str, line: int, n_qubits: int) -> IdSet:
    try:
        members = [parse_observable(part) for part in text.split(',')]
    except PauliParseError as error:
        raise DiagramFormatError(line, str(error)) from error
    if len(members) < 3:
        raise DiagramFormatError(line, "an ID needs at least three members")
    for member in members:
        if member.n_qubits != n_qubits:
            raise DiagramFormatError(line, f"{member} acts on {member.n_qubits} qubits, "
                                           f"expected {n_qubits}")
    carriers = [index for index, member in enumerate(members) if member.sign == -1]
    if len(carriers) > 1:
        raise DiagramFormatError(line, "at most one member may carry '-'")
    positives = tuple(member.positive() for member in members)
    if len({member.base for member in positives}) != len(positives):
        raise DiagramFormatError(line, "repeated member")
    try:
        sign = product_sign(positives)
    except QubitMismatchError as error:
        raise DiagramFormatError(line, str(error)) from error
    if sign is None:
        raise DiagramFormatError(line, "members do not commute pairwise or do not multiply to +I or -I")
    declared = -1 if carriers else 1
    if declared != sign:
        raise DiagramFormatError(line, f"declared {'negative' if declared < 0 else 'positive'} "
                                       f"but the members multiply to {'-' if sign < 0 else '+'}I")
    return IdSet(positives, sign, carriers[0] if carriers else -1)


def parse_diagram(text: str) -> Diagram:
    """
    Parses diagram file text.

    Raises:
        DiagramFormatError: naming the first offending line.
    """
    n_qubits = None
    ids: List[IdSet] = []
    for line, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0].strip()
        if not content:
            continue
        if n_qubits is None:
            if not content.lower().startswith(HEADER):
                raise DiagramFormatError(line, f"expected a '{HEADER} N' header")
            value = content[len(HEADER):].strip()
            if not value.isdigit() or int(value) < 1:
                raise DiagramFormatError(line, f"invalid qubit count {value!r}")
            n_qubits = int(value)
            continue
        ids.append(_parse_id(content, line, n_qubits))
    if n_qubits is None:
        raise DiagramFormatError(1, f"missing '{HEADER} N' header")
    if not ids:
        raise DiagramFormatError(len(text.splitlines()) or 1, "the diagram has no IDs")
    try:
        diagram = Diagram.from_ids(ids)
        diagram.check()
    except DiagramError as error:
        raise DiagramFormatError(len(text.splitlines()), str(error)) from error
    return diagram


def read_diagram(path: str | Path) -> Diagram:
    diagram = parse_diagram(Path(path).read_text(encoding='utf-8'))
    logger.debug("read %d IDs from %s", len(diagram.ids), path)
    return diagram


def format_diagram(d: Diagram, comment: str = '') -> str:
    lines = [f"# {part}" for part in comment.splitlines()]
    lines.append(f"{HEADER} {d.n_qubits}")
    lines.extend(str(id_set) for id_set in d.ids)
    return '\n'.join(lines) + '\n'


def write_diagram(path: str | Path, d: Diagram, comment: str = '') -> None:
    Path(path).write_text(format_diagram(d, comment), encoding='utf-8')


def to_dot(d: Diagram, name: str = 'diagram') -> str:
    """
    Graphviz text of a diagram: one node per observable, in diagram order, and
    one chain of edges per ID; negative IDs are drawn thick.
    """
    lines = [f"graph {name} {{", '  node [shape=plaintext];']
    for position, observable in enumerate(d.observables):
        lines.append(f'  o{position} [label="{observable.base.letters}"];')
    for number, id_set in enumerate(d.ids):
        style = 'penwidth=4' if id_set.is_negative else 'penwidth=1'
        chain = ' -- '.join(f"o{d.index[base]}" for base in id_set.bases)
        lines.append(f'  {chain} [{style}, id="id{number + 1}"];')
    lines.append('}')
    return '\n'.join(lines) + '\n'
