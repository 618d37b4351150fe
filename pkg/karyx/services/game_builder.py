"""
Constructors for k-ary games: validated tables, basis games, GAI models,
heterogeneous-k padding, and the game transformations the axioms need.
"""
from typing import Optional, Sequence

import numpy as np
from loguru import logger

from ..exceptions import PreconditionError
from ..models.game import GaiModel, KAryGame
from ..models.lattice import LatticeShape, PointLike, check_point, flat_index


def new_game(shape: LatticeShape, values, normalize: bool = False) -> KAryGame:
    """Validate a raw table; with ``normalize`` the table is shifted so v(0_N) = 0"""
    table = np.array(values, dtype=np.float64).reshape(-1)
    if table.size != shape.size:
        raise PreconditionError(f"Expected {shape.size} values for n={shape.n}, k={shape.k}, got {table.size}")
    if not np.all(np.isfinite(table)):
        raise PreconditionError("Game values must be finite")
    if table[0] != 0.0:
        if not normalize:
            raise PreconditionError(f"v(0_N) must be 0, got {table[0]!r} (use normalize to shift)")
        logger.info(f"Shifting game by {-table[0]!r} so that v(0_N) = 0")
        table = table - table[0]
    return KAryGame(shape, table)


def zero_game(shape: LatticeShape) -> KAryGame:
    return KAryGame(shape, np.zeros(shape.size))


def _non_origin(x: PointLike, shape: LatticeShape):
    x = check_point(x, shape)
    if not any(x):
        raise PreconditionError("Basis games are defined for x != 0_N only")
    return x


def unanimity(shape: LatticeShape, x: PointLike) -> KAryGame:
    """u_x: 1 on every y >= x, 0 elsewhere"""
    x = _non_origin(x, shape)
    mask = np.ones(shape.dims, dtype=bool)
    for axis, level in enumerate(x):
        index = [slice(None)] * shape.n
        index[axis] = slice(0, level)
        mask[tuple(index)] = False
    return KAryGame(shape, mask.astype(np.float64).reshape(-1))


def dirac(shape: LatticeShape, x: PointLike) -> KAryGame:
    """delta_x: 1 at x only"""
    x = _non_origin(x, shape)
    table = np.zeros(shape.size)
    table[flat_index(x, shape)] = 1.0
    return KAryGame(shape, table)


def random_game(shape: LatticeShape, rng: np.random.Generator, dyadic: bool = False) -> KAryGame:
    """Independent values in [-1, 1] off the origin; non-monotone in general

    With ``dyadic`` the values are multiples of 1/4, which keeps sums and
    differences exact in floating point.
    """
    if dyadic:
        table = rng.integers(-4, 5, size=shape.size) / 4.0
    else:
        table = rng.uniform(-1.0, 1.0, size=shape.size)
    table[0] = 0.0
    return KAryGame(shape, table)


def pad_to_common_k(tops: Sequence[int], values) -> KAryGame:
    """Lift a game on x_i {0..k^i} to the common lattice {0..k}^n, k = max k^i

    Levels above k^i repeat the value at k^i, so v(x_{-i}, k) - v(x_{-i}, 0)
    keeps its full-range meaning for every attribute.
    """
    tops = tuple(int(t) for t in tops)
    if not tops or any(t < 1 for t in tops):
        raise PreconditionError(f"Every attribute needs a top level >= 1, got {list(tops)}")
    table = np.array(values, dtype=np.float64).reshape(-1)
    expected = int(np.prod([t + 1 for t in tops]))
    if table.size != expected:
        raise PreconditionError(f"Expected {expected} values for tops {list(tops)}, got {table.size}")
    shape = LatticeShape(len(tops), max(tops))
    tensor = table.reshape([t + 1 for t in tops])
    for axis, top in enumerate(tops):
        if top < shape.k:
            levels = np.minimum(np.arange(shape.k + 1), top)
            tensor = np.take(tensor, levels, axis=axis)
    return new_game(shape, tensor.reshape(-1))


def gai_values(model: GaiModel) -> np.ndarray:
    """Raw sum of the GAI terms over x_i {0..k^i}, before padding and shifting"""
    n = model.shape.n
    tops = model.attribute_tops()
    if len(tops) != n:
        raise PreconditionError(f"GAI model declares {len(tops)} tops for n={n}")
    total = np.zeros([t + 1 for t in tops])
    for term in model.terms:
        attrs = tuple(term.attrs)
        if not attrs:
            raise PreconditionError("GAI term with an empty attribute set")
        if len(set(attrs)) != len(attrs) or any(not 0 <= a < n for a in attrs):
            raise PreconditionError(f"GAI term attributes {[a + 1 for a in attrs]} are not distinct members of 1..{n}")
        sub_dims = [tops[a] + 1 for a in attrs]
        table = np.asarray(term.table, dtype=np.float64)
        if table.size != int(np.prod(sub_dims)):
            raise PreconditionError(
                f"GAI term over attributes {[a + 1 for a in attrs]} needs {int(np.prod(sub_dims))} values, got {table.size}"
            )
        # order the term's axes like the full lattice, then broadcast
        order = np.argsort(attrs)
        sub = np.transpose(table.reshape(sub_dims), order)
        broadcast_shape = [1] * n
        for a in sorted(attrs):
            broadcast_shape[a] = tops[a] + 1
        total = total + sub.reshape(broadcast_shape)
    return total.reshape(-1)


def from_gai(model: GaiModel) -> KAryGame:
    """Dense game of a GAI model, shifted so that v(0_N) = 0"""
    raw = gai_values(model)
    raw = raw - raw[0]
    tops = model.attribute_tops()
    if all(t == model.shape.k for t in tops):
        return new_game(model.shape, raw)
    return pad_to_common_k(tops, raw)


def thermal_comfort_model(k: int = 4, optimum: Optional[Sequence[int]] = None) -> GaiModel:
    """Comfort over (temperature, humidity, air velocity) with interior optima

    Each attribute is single peaked around its optimum level; air velocity is
    more welcome when the temperature is high, which adds a temperature x
    velocity term. The model is deliberately not monotone.
    """
    if k < 2:
        raise PreconditionError("A single-peaked attribute needs k >= 2")
    shape = LatticeShape(3, k)
    peaks = list(optimum) if optimum is not None else [(k + 1) // 2, k // 2, 1]
    levels = np.arange(k + 1, dtype=np.float64)

    def peaked(peak: int, width: float) -> list[float]:
        return list(1.0 - ((levels - peak) / width) ** 2)

    temp_velocity = np.outer(levels / k, levels / k)
    return GaiModel.build(
        shape,
        [
            ((0,), peaked(peaks[0], k / 2)),
            ((1,), peaked(peaks[1], k)),
            ((2,), peaked(peaks[2], k)),
            ((0, 2), temp_velocity.reshape(-1)),
        ],
    )


def is_capacity(v: KAryGame) -> bool:
    """True when v is monotone, i.e. a k-ary capacity"""
    tensor = v.tensor
    return all(np.all(np.diff(tensor, axis=axis) >= 0) for axis in range(v.shape.n))


def permute_game(v: KAryGame, sigma: Sequence[int]) -> KAryGame:
    """sigma o v, defined by (sigma o v)(sigma(x)) = v(x)"""
    sigma = [int(s) for s in sigma]
    if sorted(sigma) != list(range(v.shape.n)):
        raise PreconditionError(f"{[s + 1 for s in sigma]} is not a permutation of 1..{v.shape.n}")
    # axis i of v becomes axis sigma(i)
    permuted = np.moveaxis(v.tensor, list(range(v.shape.n)), sigma)
    return KAryGame(v.shape, np.ascontiguousarray(permuted).reshape(-1))


def null_out(v: KAryGame, i: int) -> KAryGame:
    """The game x -> v(x_{-i}, 0_i), in which attribute i is null"""
    base = np.take(v.tensor, [0], axis=i)
    return KAryGame(v.shape, np.broadcast_to(base, v.shape.dims).reshape(-1))
