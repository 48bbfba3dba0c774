"""Module with the named diagrams shipped with ksforge and the published numbering
of their rays, projectors and bases"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from ksforge.diagram import Diagram
from ksforge.formats.diagram_file import parse_diagram

PENTAGRAM = """\
# GHZ-Mermin pentagram, symbol 10_2-5_4
qubits: 3
ZII, IZI, IIZ, ZZZ
ZII, IXI, IIX, ZXX
XII, IZI, IIX, XZX
XII, IXI, IIZ, XXZ
ZZZ, ZXX, XZX, -XXZ
"""

PENTAGRAM_POSITIVE = """\
# pentagram without its negative ID4: not a KS proof
qubits: 3
ZII, IZI, IIZ, ZZZ
ZII, IXI, IIX, ZXX
XII, IZI, IIX, XZX
XII, IXI, IIZ, XXZ
"""

SQUARE2 = """\
# two-qubit Peres-Mermin square, symbol 9_2-6_3
qubits: 2
XI, IX, XX
IZ, ZI, ZZ
XZ, ZX, YY
XI, IZ, XZ
IX, ZI, ZX
XX, ZZ, -YY
"""

SQUARE3 = """\
# three-qubit Peres-Mermin square, symbol 9_2-6_3
qubits: 3
ZIZ, ZZI, IZZ
XIX, XXI, IXX
YIY, YYI, IYY
ZIZ, XIX, -YIY
ZZI, XXI, -YYI
IZZ, IXX, -IYY
"""

KITE = """\
# kite, symbol 10_2-4_3 2_4: two ID4s sharing ZZZ and ZXX
qubits: 3
ZZZ, ZXX, IXX, IZZ
ZZZ, ZXX, XZX, -XXZ
IXX, IIX, IXI
IZZ, XZI, XIZ
XZX, IIX, XZI
XXZ, IXI, XIZ
"""

FIXTURES: Dict[str, str] = {
    'pentagram': PENTAGRAM,
    'pentagram_positive': PENTAGRAM_POSITIVE,
    'square2': SQUARE2,
    # the Peres 24 rays and 24 bases are the projector system of the two-qubit square
    'peres24': SQUARE2,
    'square3': SQUARE3,
    'kite': KITE,
}

# published ray number of each pentagram projector, in projector-label order
PENTAGRAM_RAY_NUMBERS: Tuple[int, ...] = (
    1, 2, 3, 4, 5, 6, 7, 8,
    9, 11, 10, 12, 13, 15, 14, 16,
    17, 19, 21, 23, 18, 20, 22, 24,
    25, 29, 27, 31, 26, 30, 28, 32,
    33, 35, 34, 36, 40, 37, 38, 39,
)

# published projector number of each square3 projector, in projector-label order
SQUARE3_PROJECTOR_NUMBERS: Tuple[int, ...] = (
    1, 2, 3, 4,
    5, 6, 7, 8,
    9, 10, 11, 12,
    13, 14, 15, 16,
    19, 20, 17, 18,
    22, 21, 24, 23,
)

# the 25 bases of the pentagram rays, in published ray numbers; 1-5 pure, 6-25 hybrid
PENTAGRAM_BASES: Tuple[Tuple[int, ...], ...] = (
    (1, 2, 3, 4, 5, 6, 7, 8),
    (9, 10, 11, 12, 13, 14, 15, 16),
    (17, 18, 19, 20, 21, 22, 23, 24),
    (25, 26, 27, 28, 29, 30, 31, 32),
    (33, 34, 35, 36, 37, 38, 39, 40),
    (1, 2, 3, 4, 13, 14, 15, 16),
    (1, 2, 5, 6, 21, 22, 23, 24),
    (1, 3, 5, 7, 29, 30, 31, 32),
    (1, 4, 6, 7, 37, 38, 39, 40),
    (2, 3, 5, 8, 33, 34, 35, 36),
    (2, 4, 6, 8, 25, 26, 27, 28),
    (3, 4, 7, 8, 17, 18, 19, 20),
    (5, 6, 7, 8, 9, 10, 11, 12),
    (9, 10, 13, 14, 19, 20, 23, 24),
    (9, 11, 13, 15, 27, 28, 31, 32),
    (9, 12, 14, 15, 34, 36, 38, 39),
    (10, 11, 13, 16, 33, 35, 37, 40),
    (10, 12, 14, 16, 25, 26, 29, 30),
    (11, 12, 15, 16, 17, 18, 21, 22),
    (17, 19, 21, 23, 26, 28, 30, 32),
    (17, 20, 22, 23, 35, 36, 37, 39),
    (18, 19, 21, 24, 33, 34, 38, 40),
    (18, 20, 22, 24, 25, 27, 29, 31),
    (25, 28, 30, 31, 33, 36, 37, 38),
    (26, 27, 29, 32, 34, 35, 39, 40),
)

# one published proof of each pentagram type, in published basis numbers
PENTAGRAM_EXAMPLE_PROOFS: Dict[str, Tuple[int, ...]] = {
    '36-11': (1, 6, 7, 8, 10, 14, 15, 17, 20, 21, 25),
    '38-13': (1, 2, 3, 6, 7, 8, 10, 14, 15, 16, 20, 22, 25),
    '40-15': (1, 2, 3, 4, 5, 6, 7, 8, 10, 14, 15, 16, 20, 22, 24),
}

PENTAGRAM_CENSUS: Dict[str, Tuple[str, int]] = {
    '36-11': ('28_2 8_4-11_8', 320),
    '38-13': ('24_2 14_4-13_8', 640),
    '40-15': ('20_2 20_4-15_8', 64),
}

SQUARE_CENSUS: Dict[str, Tuple[str, int]] = {
    '18-9': ('18_2-9_4', 16),
    '20-11': ('18_2 2_4-11_4', 240),
    '22-13': ('18_2 4_4-13_4', 240),
    '24-15': ('18_2 6_4-15_4', 16),
}

KITE_PROOF_TYPES: Dict[str, str] = {
    '24-9': '12_2 **12_2**-1_8 4_6 4_4',
    '26-11': '8_2 6_4 **12_2**-3_8 4_6 4_4',
    '28-13': '4_2 12_4 **12_2**-5_8 4_6 4_4',
    '30-15': '4_2 12_4 **12_2 2_4**-5_8 4_6 6_4',
    '32-17': '4_2 12_4 **12_2 4_4**-5_8 4_6 8_4',
}

# spanning vectors of square3 projectors 13-16 over |000>, |001>, ..., |111>
SQUARE3_SUBSPACES: Dict[int, Tuple[Tuple[int, ...], ...]] = {
    13: ((1, 0, 0, 0, 0, 1, 0, 0), (0, 0, 1, 0, 0, 0, 0, 1)),
    14: ((1, 0, 0, 0, 0, -1, 0, 0), (0, 0, 1, 0, 0, 0, 0, -1)),
    15: ((0, 1, 0, 0, 1, 0, 0, 0), (0, 0, 0, 1, 0, 0, 1, 0)),
    16: ((0, 1, 0, 0, -1, 0, 0, 0), (0, 0, 0, 1, 0, 0, -1, 0)),
}


def names() -> List[str]:
    return sorted(FIXTURES)


def load(name: str) -> Diagram:
    """
    Returns a named diagram.

    Raises:
        KeyError: for an unknown name.
    """
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}, choose from {', '.join(names())}")
    return parse_diagram(FIXTURES[name])


def published_basis_numbers(bases: Sequence[Sequence[int]], ray_numbers: Sequence[int],
                            table: Sequence[Sequence[int]]) -> List[int]:
    """
    Maps bases given as 0-based projector labels onto the 1-based numbers of a
    published basis table.

    Raises:
        ValueError: when a basis does not occur in the table.
    """
    lookup = {frozenset(basis): number for number, basis in enumerate(table, start=1)}
    numbers = []
    for basis in bases:
        published = frozenset(ray_numbers[label] for label in basis)
        if published not in lookup:
            raise ValueError(f"basis {sorted(published)} is not in the published table")
        numbers.append(lookup[published])
    return numbers
