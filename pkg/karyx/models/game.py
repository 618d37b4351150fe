"""
Game tables: k-ary games, their Möbius transforms and GAI models.

Games and Möbius tables hold a dense, read-only float64 vector of length
(k+1)^n in flat-index order. Use ``services.game_builder.new_game`` to build
a game from untrusted data; the constructors here only enforce the table
invariants.
"""
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from ..exceptions import PreconditionError
from .lattice import LatticeShape, PointLike, flat_index


def _frozen_table(shape: LatticeShape, values, what: str) -> np.ndarray:
    table = np.array(values, dtype=np.float64).reshape(-1)
    if table.size != shape.size:
        raise PreconditionError(
            f"{what} table has {table.size} entries, lattice n={shape.n}, k={shape.k} needs {shape.size}"
        )
    if not np.all(np.isfinite(table)):
        raise PreconditionError(f"{what} table contains non-finite entries")
    if table[0] != 0.0:
        raise PreconditionError(f"{what} value at the origin must be 0, got {table[0]!r}")
    table.setflags(write=False)
    return table


@dataclass(frozen=True, eq=False)
class KAryGame:
    """A real-valued function v on L with v(0_N) = 0"""

    shape: LatticeShape
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_table(self.shape, self.values, "Game"))

    @property
    def tensor(self) -> np.ndarray:
        """View of the table with one axis per attribute"""
        return self.values.reshape(self.shape.dims)

    def __call__(self, x: PointLike) -> float:
        return float(self.values[flat_index(x, self.shape)])

    def top_value(self) -> float:
        """v(k_N)"""
        return float(self.values[-1])

    def _require_same_shape(self, other: "KAryGame"):
        if other.shape != self.shape:
            raise PreconditionError(f"Cannot combine games on {self.shape} and {other.shape}")

    def __add__(self, other: "KAryGame") -> "KAryGame":
        if not isinstance(other, KAryGame):
            return NotImplemented
        self._require_same_shape(other)
        return KAryGame(self.shape, self.values + other.values)

    def __sub__(self, other: "KAryGame") -> "KAryGame":
        if not isinstance(other, KAryGame):
            return NotImplemented
        self._require_same_shape(other)
        return KAryGame(self.shape, self.values - other.values)

    def __mul__(self, alpha: float) -> "KAryGame":
        if not isinstance(alpha, (int, float, np.number)):
            return NotImplemented
        # + 0.0 turns -0.0 at the origin back into 0.0
        return KAryGame(self.shape, self.values * float(alpha) + 0.0)

    __rmul__ = __mul__

    def __neg__(self) -> "KAryGame":
        return self * -1.0

    def __eq__(self, other) -> bool:
        if not isinstance(other, KAryGame):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.values, other.values)

    def __repr__(self):
        return f"KAryGame(n={self.shape.n}, k={self.shape.k})"


@dataclass(frozen=True, eq=False)
class MoebiusTable:
    """m^v, indexed like the game it was computed from"""

    shape: LatticeShape
    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _frozen_table(self.shape, self.coeffs, "Moebius"))

    @property
    def tensor(self) -> np.ndarray:
        return self.coeffs.reshape(self.shape.dims)

    def __call__(self, x: PointLike) -> float:
        return float(self.coeffs[flat_index(x, self.shape)])

    def __repr__(self):
        return f"MoebiusTable(n={self.shape.n}, k={self.shape.k})"


@dataclass(frozen=True)
class GaiTerm:
    """v_S over the sub-lattice of the attributes in ``attrs`` (0-based)"""

    attrs: tuple[int, ...]
    table: tuple[float, ...]


@dataclass(frozen=True)
class GaiModel:
    """v(x) = sum over terms of v_S(x_S)

    ``tops`` gives the per-attribute top level k^i when the attributes do not
    share the same k; it defaults to ``shape.k`` everywhere.
    """

    shape: LatticeShape
    terms: tuple[GaiTerm, ...]
    tops: Optional[tuple[int, ...]] = field(default=None)

    def attribute_tops(self) -> tuple[int, ...]:
        return self.tops if self.tops is not None else (self.shape.k,) * self.shape.n

    @classmethod
    def build(cls, shape: LatticeShape, terms: Sequence[tuple[Sequence[int], Sequence[float]]],
              tops: Optional[Sequence[int]] = None) -> "GaiModel":
        return cls(
            shape,
            tuple(GaiTerm(tuple(a), tuple(float(t) for t in table)) for a, table in terms),
            tuple(tops) if tops is not None else None,
        )
