"""
Outputs of the index computations and of the axiom harness.
"""
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np
from pydantic import BaseModel, Field, field_validator

from ..exceptions import PreconditionError


@dataclass(frozen=True, eq=False)
class ImportanceVector:
    """One real per attribute"""

    method: str
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64).reshape(-1)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self):
        return self.values.size

    def __getitem__(self, i: int) -> float:
        return float(self.values[i])

    def total(self) -> float:
        return float(np.sum(self.values))

    def to_list(self) -> list[float]:
        return [float(x) for x in self.values]


@dataclass(frozen=True, eq=False)
class BiIndexTable:
    """phi_ij for attribute i and level j = 1..k (column j-1)"""

    method: str
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 2:
            raise PreconditionError("Bi-index table must be two-dimensional (n x k)")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def entry(self, i: int, j: int) -> float:
        """phi_ij with 0-based i and level j >= 1"""
        return float(self.values[i, j - 1])

    def row_sums(self) -> ImportanceVector:
        return ImportanceVector(self.method, self.values.sum(axis=1))

    def total(self) -> float:
        return float(np.sum(self.values))

    def to_lists(self) -> list[list[float]]:
        return [[float(x) for x in row] for row in self.values]


def check_weights(weights: list[float]) -> list[float]:
    if not weights or any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    if any(b <= a for a, b in zip(weights, weights[1:])):
        raise ValueError("weights must be strictly increasing")
    return weights


class WeightScheme(BaseModel):
    """Hsiao-Raghavan weights w_1 < ... < w_k, all positive (w_0 = 0 implied)"""

    weights: list[float] = Field(min_length=1)

    @field_validator("weights")
    @classmethod
    def _strictly_increasing_positive(cls, weights: list[float]) -> list[float]:
        return check_weights(weights)

    @classmethod
    def default(cls, k: int) -> "WeightScheme":
        """w_j = j"""
        return cls(weights=[float(j) for j in range(1, k + 1)])

    @property
    def k(self) -> int:
        return len(self.weights)

    def with_zero_level(self) -> np.ndarray:
        return np.array([0.0] + list(self.weights))


class AxiomReport(BaseModel):
    axiom: str
    passed: bool
    violation: float
    tolerance: float
    trials: int
    seed: Optional[int] = None
    note: Optional[str] = None
    witness: Optional[dict[str, Any]] = None

    @classmethod
    def from_violation(cls, axiom: str, violation: float, tolerance: float, trials: int,
                       seed: Optional[int] = None, note: Optional[str] = None,
                       witness: Optional[dict[str, Any]] = None) -> "AxiomReport":
        passed = bool(np.isfinite(violation) and violation <= tolerance)
        return cls(
            axiom=axiom,
            passed=passed,
            violation=float(violation),
            tolerance=tolerance,
            trials=trials,
            seed=seed,
            note=note,
            witness=None if passed else witness,
        )
