"""Exact matrix helpers over cyclotomic scalars (numpy object arrays)."""

import numpy as np

from tenj.errors import SingularPairing
from tenj.scalar.cyclotomic import ONE, ZERO, as_cyclotomic


def as_matrix(rows) -> np.ndarray:
    mat = np.empty((len(rows), len(rows[0]) if len(rows) else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            mat[i, j] = as_cyclotomic(value)
    return mat


def identity(size: int) -> np.ndarray:
    mat = np.full((size, size), ZERO, dtype=object)
    for i in range(size):
        mat[i, i] = ONE
    return mat


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.full((a.shape[0], b.shape[1]), ZERO, dtype=object)
    for i in range(a.shape[0]):
        for j in range(b.shape[1]):
            acc = ZERO
            for k in range(a.shape[1]):
                acc = acc + a[i, k] * b[k, j]
            out[i, j] = acc
    return out


def invert_matrix(mat: np.ndarray) -> np.ndarray:
    """Exact inverse by Gauss-Jordan elimination.

    Raises:
        SingularPairing: if the matrix is not square or not invertible.
    """
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise SingularPairing(f"pairing matrix must be square, got shape {mat.shape}")
    size = mat.shape[0]
    work = np.empty((size, 2 * size), dtype=object)
    work[:, :size] = mat
    work[:, size:] = identity(size)
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r, col]), None)
        if pivot is None:
            raise SingularPairing("pairing matrix is singular")
        if pivot != col:
            work[[col, pivot]] = work[[pivot, col]]
        inv = work[col, col].inverse()
        work[col] = [x * inv for x in work[col]]
        for r in range(size):
            if r != col and work[r, col]:
                f = work[r, col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return work[:, size:].copy()


def tensors_equal(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.flat, b.flat))
