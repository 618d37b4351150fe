"""
Shapley-like values for multichoice games from the literature.

All three are efficient in the classical sense (their totals equal v(k_N)),
which is what sets them apart from the importance index.
"""
from fractions import Fraction
from math import factorial
from typing import Literal, Optional

import numpy as np

from ..exceptions import PreconditionError
from ..models.game import KAryGame
from ..models.lattice import insert_coord, lattice_coordinates, vertices_minus_i
from ..models.results import BiIndexTable, ImportanceVector, WeightScheme
from .moebius import moebius


def grabisch_lange(v: KAryGame) -> ImportanceVector:
    """Shapley-type weights over the vertices of L_{-i} only"""
    n, k = v.shape.n, v.shape.k
    phi = np.zeros(n)
    for i in range(n):
        total = 0.0
        for reduced in vertices_minus_i(v.shape, i):
            kernel_size = sum(1 for c in reduced if c == k)
            weight = Fraction(factorial(n - kernel_size - 1) * factorial(kernel_size), factorial(n))
            total += float(weight) * (v(insert_coord(reduced, i, k)) - v(insert_coord(reduced, i, 0)))
        phi[i] = total
    return ImportanceVector("grabisch-lange", phi)


def _level_sums(shares: np.ndarray, coords: np.ndarray, k: int) -> np.ndarray:
    """table[i, j-1] = sum of shares[x, i] over points x with x_i = j"""
    n = coords.shape[1]
    table = np.zeros((n, k))
    for i in range(n):
        for j in range(1, k + 1):
            table[i, j - 1] = float(np.sum(shares[coords[:, i] == j, i]))
    return table


def hsiao_raghavan(v: KAryGame, weights: Optional[WeightScheme] = None,
                   zero_level: Literal["ignore", "error"] = "ignore") -> BiIndexTable:
    """Weighted sharing of every unanimity coefficient m^v(x)

    u_x gives level (i, x_i) the share w_{x_i} / sum_l w_{x_l}. Levels equal
    to 0 weigh w_0 = 0 under ``zero_level="ignore"``; ``"error"`` refuses any
    game whose Möbius transform touches a point with a zero coordinate.
    """
    shape = v.shape
    weights = weights if weights is not None else WeightScheme.default(shape.k)
    if weights.k != shape.k:
        raise PreconditionError(f"Need {shape.k} weights for k = {shape.k}, got {weights.k}")
    coords = lattice_coordinates(shape)
    m = moebius(v).coeffs
    if zero_level == "error":
        partial = (m != 0) & np.any(coords == 0, axis=1) & np.any(coords > 0, axis=1)
        if np.any(partial):
            raise PreconditionError("w_0 is undefined: the Moebius transform is nonzero at a point with a zero coordinate")
    w = weights.with_zero_level()[coords]
    denom = w.sum(axis=1)
    shares = np.zeros_like(w)
    active = denom > 0
    shares[active] = m[active, None] * w[active] / denom[active, None]
    return BiIndexTable("hsiao-raghavan", _level_sums(shares, coords, shape.k))


def peters_zank(v: KAryGame) -> BiIndexTable:
    """phi_ij = sum of m^v(x) / s(x) over x with x_i = j"""
    shape = v.shape
    coords = lattice_coordinates(shape)
    m = moebius(v).coeffs
    s = np.count_nonzero(coords, axis=1)
    ratio = np.divide(m, s, out=np.zeros_like(m), where=s > 0)
    shares = np.repeat(ratio[:, None], shape.n, axis=1)
    return BiIndexTable("peters-zank", _level_sums(shares, coords, shape.k))
