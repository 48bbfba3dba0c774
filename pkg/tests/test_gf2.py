"""Tests for ksforge.gf2"""

import numpy as np

from ksforge import gf2


def test_kernel_of_cycle():
    # incidence of a triangle: every vertex in two edges
    matrix = np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]], dtype=np.uint8)
    kernel = gf2.kernel_basis(matrix)
    assert kernel.shape == (1, 3)
    assert list(kernel[0]) == [1, 1, 1]


def test_full_rank_has_empty_kernel():
    kernel = gf2.kernel_basis(np.eye(4, dtype=np.uint8))
    assert kernel.shape == (0, 4)
    assert gf2.odd_weight_count(kernel) == 0


def test_rank():
    assert gf2.rank(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]], dtype=np.uint8)) == 2
    assert gf2.rank(np.zeros((0, 3), dtype=np.uint8)) == 0


def test_gray_walk_visits_span_once():
    basis = np.array([[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]], dtype=np.uint8)
    seen = [tuple(vector) for _, vector in gf2.gray_walk(basis)]
    assert len(seen) == 8
    assert len(set(seen)) == 8
    assert seen[0] == (0, 0, 0, 0)


def test_gray_walk_flips_one_row():
    basis = np.array([[1, 0, 0], [0, 1, 0], [0, 0, 1]], dtype=np.uint8)
    previous = None
    for flipped, vector in gf2.gray_walk(basis):
        if previous is not None:
            assert list(np.flatnonzero(previous ^ vector)) == [flipped]
        previous = vector.copy()


def test_fixed_prefixes_partition():
    basis = np.array([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]], dtype=np.uint8)
    parts = [{tuple(vector) for _, vector in gf2.gray_walk(basis, prefix)}
             for prefix in [(0,), (1,)]]
    assert len(parts[0]) == len(parts[1]) == 4
    assert not parts[0] & parts[1]


def test_odd_weight_count():
    basis = np.array([[1, 1, 1, 0], [0, 0, 1, 1]], dtype=np.uint8)
    assert gf2.odd_weight_count(basis) == 2
    assert gf2.odd_weight_count(np.array([[1, 1, 0, 0]], dtype=np.uint8)) == 0


def test_bits_to_indices():
    assert gf2.bits_to_indices(np.array([0, 1, 0, 1], dtype=np.uint8)) == [1, 3]
