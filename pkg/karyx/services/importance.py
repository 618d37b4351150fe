"""
The axiomatized importance index for k-ary games and the classical Shapley
value it generalises.

For attribute i the index is a weighted sum, over x_{-i} in L_{-i}, of the
full-range difference v(x_{-i}, k_i) - v(x_{-i}, 0_i). The weight depends
only on the support size s and kernel size k of x_{-i}:

    (n - s - 1)! k! / (n + k - s)!

Weights are exact rationals converted to floats once per shape. Summation
runs in flat-index order, so results are reproducible bit for bit.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterator

import numpy as np
from loguru import logger

from ..exceptions import PreconditionError
from ..models.game import KAryGame
from ..models.lattice import LatticeShape, enumerate_slice
from ..models.results import ImportanceVector


@lru_cache(maxsize=None)
def importance_weight(n: int, s: int, kernel_size: int) -> Fraction:
    return Fraction(factorial(n - s - 1) * factorial(kernel_size), factorial(n + kernel_size - s))


@lru_cache(maxsize=None)
def shapley_weight(n: int, s: int) -> Fraction:
    return Fraction(factorial(n - s - 1) * factorial(s), factorial(n))


@lru_cache(maxsize=64)
def importance_coefficients(shape: LatticeShape) -> np.ndarray:
    """Weights over L_{-i} with one axis per remaining attribute (same for every i)"""
    weights = [
        float(importance_weight(shape.n, point.support_size, point.kernel_size))
        for point in enumerate_slice(shape, 0)
    ]
    table = np.array(weights).reshape(shape.reduced())
    table.setflags(write=False)
    return table


def full_range_differences(v: KAryGame, i: int) -> np.ndarray:
    """v(x_{-i}, k_i) - v(x_{-i}, 0_i) over L_{-i}"""
    moved = np.moveaxis(v.tensor, i, -1)
    return moved[..., v.shape.k] - moved[..., 0]


def importance(v: KAryGame) -> ImportanceVector:
    coefficients = importance_coefficients(v.shape).reshape(-1)
    phi = np.array([
        float(np.dot(coefficients, full_range_differences(v, i).reshape(-1)))
        for i in range(v.shape.n)
    ])
    return ImportanceVector("paper", phi)


def shapley_classical(mu: KAryGame) -> ImportanceVector:
    """Shapley value of a classical game, given as a k-ary game with k = 1"""
    shape = mu.shape
    if shape.k != 1:
        raise PreconditionError(f"The classical Shapley value needs k = 1, got k = {shape.k}")
    n = shape.n
    # coalition sizes over the subsets of N \ i, in flat order
    sizes = np.indices(shape.reduced()).sum(axis=0).reshape(-1) if n > 1 else np.zeros(1, dtype=int)
    weights = np.array([float(shapley_weight(n, int(s))) for s in sizes])
    phi = np.array([
        float(np.dot(weights, full_range_differences(mu, i).reshape(-1)))
        for i in range(n)
    ])
    return ImportanceVector("shapley", phi)


def cell_game(v: KAryGame, cell: tuple[int, ...]) -> KAryGame:
    """mu_x(S) = v((x+1)_S, x_{-S}) - v(x) on the unit cube above ``cell``"""
    cube = v.tensor[tuple(slice(c, c + 2) for c in cell)]
    local = cube - cube[(0,) * v.shape.n]
    return KAryGame(LatticeShape(v.shape.n, 1), local.reshape(-1))


def cell_contributions(v: KAryGame) -> Iterator[tuple[tuple[int, ...], ImportanceVector]]:
    """Each cell x in {0..k-1}^n with the Shapley value of its local game"""
    for cell in product(range(v.shape.k), repeat=v.shape.n):
        yield cell, shapley_classical(cell_game(v, cell))


def importance_by_cells(v: KAryGame) -> ImportanceVector:
    """Sum of per-cell Shapley values; equals ``importance`` for every game"""
    total = np.zeros(v.shape.n)
    count = 0
    for _, contribution in cell_contributions(v):
        total += contribution.values
        count += 1
    logger.debug(f"Cell decomposition summed over {count} cells")
    return ImportanceVector("cells", total)


def sum_identity_rhs(v: KAryGame) -> float:
    """Total diagonal variation: sum of v(x+1) - v(x) over x with every x_j < k"""
    n = v.shape.n
    upper = v.tensor[(slice(1, None),) * n]
    lower = v.tensor[(slice(None, -1),) * n]
    return float(np.sum(upper - lower))
