"""
Möbius and zeta transforms on L = {0,...,k}^n.

Because <= on L is a product order, both transforms factor into n
one-dimensional passes: a backward difference per axis for the Möbius
transform, a prefix sum per axis for zeta. ``moebius_direct`` keeps the
closed-form alternating sum as a reference.
"""
from itertools import product

import numpy as np
from loguru import logger

from ..models.game import KAryGame, MoebiusTable
from ..models.lattice import iter_points


def moebius(v: KAryGame) -> MoebiusTable:
    table = v.tensor.copy()
    for axis in range(v.shape.n):
        table = np.diff(table, axis=axis, prepend=0.0)
    logger.debug(f"Moebius transform computed for n={v.shape.n}, k={v.shape.k}")
    return MoebiusTable(v.shape, table.reshape(-1))


def zeta(m: MoebiusTable) -> KAryGame:
    table = m.tensor.copy()
    for axis in range(m.shape.n):
        table = np.cumsum(table, axis=axis)
    return KAryGame(m.shape, table.reshape(-1))


def moebius_direct(v: KAryGame) -> MoebiusTable:
    """m(x) = sum over y <= x with x - y in {0,1}^n of (-1)^|x-y| v(y)"""
    shape = v.shape
    coeffs = np.zeros(shape.size)
    for idx, x in enumerate(iter_points(shape)):
        total = 0.0
        for step in product((0, 1), repeat=shape.n):
            y = tuple(c - d for c, d in zip(x, step))
            if min(y) < 0:
                continue
            total += (-1) ** sum(step) * v(y)
        coeffs[idx] = total
    return MoebiusTable(shape, coeffs)
