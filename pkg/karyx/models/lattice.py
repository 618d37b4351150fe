"""
The finite lattice L = {0,...,k}^n of alternatives.

Points are stored in a dense table whose flat order is mixed radix with
attribute 1 most significant, which is exactly numpy's C order for an array
of shape ``(k+1,) * n``. Attribute indices are 0-based here; the I/O layer
converts to and from the 1-based numbering users see.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

import numpy as np

from ..exceptions import PreconditionError


@dataclass(frozen=True)
class LatticeShape:
    """n attributes, each taking levels 0..k"""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise PreconditionError(f"Lattice needs n >= 1 and k >= 1, got n={self.n}, k={self.k}")

    @property
    def dims(self) -> tuple[int, ...]:
        return (self.k + 1,) * self.n

    @property
    def size(self) -> int:
        return (self.k + 1) ** self.n

    @property
    def origin(self) -> "LatticePoint":
        return LatticePoint((0,) * self.n)

    @property
    def top(self) -> "LatticePoint":
        return LatticePoint((self.k,) * self.n)

    def reduced(self) -> tuple[int, ...]:
        """Dimensions of L_{-i} (the same for every i)"""
        return (self.k + 1,) * (self.n - 1)


@dataclass(frozen=True)
class LatticePoint:
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def __le__(self, other: "LatticePoint") -> bool:
        return all(a <= b for a, b in zip(self.coords, other.coords))

    def __ge__(self, other: "LatticePoint") -> bool:
        return all(a >= b for a, b in zip(self.coords, other.coords))

    def __repr__(self):
        return f"LatticePoint{self.coords}"


PointLike = Union[LatticePoint, Sequence[int]]


class SlicePoint(NamedTuple):
    """Element of L_{-i} tagged with its support and kernel sizes"""

    coords: tuple[int, ...]
    support_size: int
    kernel_size: int


def as_point(x: PointLike) -> LatticePoint:
    return x if isinstance(x, LatticePoint) else LatticePoint(tuple(x))


def check_point(x: PointLike, shape: LatticeShape) -> LatticePoint:
    x = as_point(x)
    if len(x) != shape.n:
        raise PreconditionError(f"Point {x.coords} has {len(x)} coordinates, lattice has n={shape.n}")
    for i, c in enumerate(x):
        if not 0 <= c <= shape.k:
            raise PreconditionError(f"Coordinate {i + 1} of {x.coords} is outside 0..{shape.k}")
    return x


def flat_index(x: PointLike, shape: LatticeShape) -> int:
    x = check_point(x, shape)
    idx = 0
    for c in x:
        idx = idx * (shape.k + 1) + c
    return idx


def point_from_index(idx: int, shape: LatticeShape) -> LatticePoint:
    if not 0 <= idx < shape.size:
        raise PreconditionError(f"Flat index {idx} outside 0..{shape.size - 1}")
    coords = []
    for _ in range(shape.n):
        idx, c = divmod(idx, shape.k + 1)
        coords.append(c)
    return LatticePoint(tuple(reversed(coords)))


def iter_points(shape: LatticeShape) -> Iterator[LatticePoint]:
    """All points of L in flat-index order"""
    for coords in product(range(shape.k + 1), repeat=shape.n):
        yield LatticePoint(coords)


def support(x: PointLike) -> frozenset[int]:
    return frozenset(i for i, c in enumerate(as_point(x)) if c > 0)


def support_size(x: PointLike) -> int:
    return sum(1 for c in as_point(x) if c > 0)


def kernel(x: PointLike, shape: LatticeShape) -> frozenset[int]:
    return frozenset(i for i, c in enumerate(as_point(x)) if c == shape.k)


def kernel_size(x: PointLike, shape: LatticeShape) -> int:
    return sum(1 for c in as_point(x) if c == shape.k)


def vertices(shape: LatticeShape) -> Iterator[LatticePoint]:
    """The 2^n points of Gamma(L), every coordinate 0 or k"""
    for coords in product((0, shape.k), repeat=shape.n):
        yield LatticePoint(coords)


def vertices_minus_i(shape: LatticeShape, i: int) -> Iterator[tuple[int, ...]]:
    """Vertices of L_{-i}, as (n-1)-tuples"""
    _check_attribute(i, shape)
    yield from product((0, shape.k), repeat=shape.n - 1)


def with_coord(x: PointLike, i: int, level: int) -> LatticePoint:
    """(x_{-i}, level_i)"""
    coords = list(as_point(x))
    coords[i] = level
    return LatticePoint(tuple(coords))


def insert_coord(reduced: Sequence[int], i: int, level: int) -> LatticePoint:
    """Rebuild a full point from an element of L_{-i} and a level for i"""
    coords = list(reduced)
    coords.insert(i, level)
    return LatticePoint(tuple(coords))


def bump(x: PointLike, i: int, shape: LatticeShape) -> LatticePoint:
    """x + 1_i"""
    x = check_point(x, shape)
    if x[i] >= shape.k:
        raise PreconditionError(f"No successor of {x.coords} along attribute {i + 1}")
    return with_coord(x, i, x[i] + 1)


def bump_all(x: PointLike, shape: LatticeShape) -> LatticePoint:
    """x + 1, defined when no coordinate is already at k"""
    x = check_point(x, shape)
    if any(c >= shape.k for c in x):
        raise PreconditionError(f"No diagonal successor of {x.coords}")
    return LatticePoint(tuple(c + 1 for c in x))


def enumerate_slice(shape: LatticeShape, i: int) -> Iterator[SlicePoint]:
    """All (k+1)^(n-1) elements of L_{-i} in flat order, with s and k tags"""
    _check_attribute(i, shape)
    for coords in product(range(shape.k + 1), repeat=shape.n - 1):
        yield SlicePoint(
            coords,
            sum(1 for c in coords if c > 0),
            sum(1 for c in coords if c == shape.k),
        )


@lru_cache(maxsize=64)
def lattice_coordinates(shape: LatticeShape) -> np.ndarray:
    """(size, n) integer array; row r holds the coordinates of flat index r"""
    coords = np.indices(shape.dims).reshape(shape.n, -1).T.copy()
    coords.setflags(write=False)
    return coords


def permute_point(x: PointLike, sigma: Iterable[int]) -> LatticePoint:
    """sigma(x) with sigma(x)_{sigma(i)} = x_i"""
    x = as_point(x)
    out = [0] * len(x)
    for i, target in enumerate(sigma):
        out[target] = x[i]
    return LatticePoint(tuple(out))


def _check_attribute(i: int, shape: LatticeShape):
    if not 0 <= i < shape.n:
        raise PreconditionError(f"Attribute index {i + 1} outside 1..{shape.n}")
