"""Module for linear algebra over GF(2): kernels of incidence matrices and Gray-code
walks over them"""

from __future__ import annotations

from typing import Iterator, List, Sequence, Tuple

import galois
import numpy as np

GF2 = galois.GF(2)


def kernel_basis(matrix: np.ndarray) -> np.ndarray:
    """
    Returns a basis of the right kernel {x : M x = 0} of a 0/1 matrix as the
    rows of a uint8 array. An empty kernel gives shape (0, columns).
    """
    matrix = np.asarray(matrix, dtype=np.uint8) & 1
    columns = matrix.shape[1]
    if matrix.shape[0] == 0:
        return np.eye(columns, dtype=np.uint8)
    null = GF2(matrix).null_space()
    return np.asarray(null, dtype=np.uint8).reshape(-1, columns)


def rank(matrix: np.ndarray) -> int:
    matrix = np.asarray(matrix, dtype=np.uint8) & 1
    if matrix.size == 0:
        return 0
    return int(np.linalg.matrix_rank(GF2(matrix)))


def gray_walk(basis: np.ndarray, fixed: Sequence[int] = ()) -> Iterator[Tuple[int, np.ndarray]]:
    """
    Visits every combination of the basis rows in Gray-code order.

    The first len(fixed) basis rows are held at the given 0/1 coefficients and
    the remaining rows are walked, so disjoint `fixed` prefixes partition the
    kernel between workers.

    Yields:
        (flipped, vector): the index of the basis row toggled to reach this
        vector (-1 for the starting vector) and the current vector. The vector
        array is reused between steps; copy it to keep it.
    """
    basis = np.asarray(basis, dtype=np.uint8)
    dimension, length = basis.shape
    vector = np.zeros(length, dtype=np.uint8)
    for row, coefficient in enumerate(fixed):
        if coefficient:
            vector ^= basis[row]
    free = list(range(len(fixed), dimension))
    yield -1, vector
    for step in range(1, 2 ** len(free)):
        # the Gray code g(step) differs from g(step - 1) in the lowest set bit of step
        bit = (step & -step).bit_length() - 1
        row = free[bit]
        vector ^= basis[row]
        yield row, vector


def odd_weight_count(basis: np.ndarray) -> int:
    """Number of kernel vectors of odd weight: 0 or half of the kernel."""
    basis = np.asarray(basis, dtype=np.uint8)
    if basis.shape[0] == 0:
        return 0
    if not np.any(basis.sum(axis=1) % 2):
        return 0
    return 2 ** (basis.shape[0] - 1)


def bits_to_indices(vector: np.ndarray) -> List[int]:
    return [int(index) for index in np.flatnonzero(vector)]
