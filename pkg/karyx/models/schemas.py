"""
Pydantic schemas for input files and for the CLI run configuration.

Attribute numbers in files are 1-based; conversion to 0-based indices
happens in ``services.game_io``.
"""
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, PositiveInt, field_validator, model_validator

from .results import check_weights

COMMANDS = ("compute", "moebius", "compare", "verify", "gai-eval")
METHOD_NAMES = ("paper", "shapley", "cells", "grabisch-lange", "hsiao-raghavan", "peters-zank")
FORMATS = ("json", "table", "csv")


class SparseEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    x: list[int]
    v: FiniteFloat


class DenseValues(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dense: list[FiniteFloat]


class SparseValues(BaseModel):
    model_config = ConfigDict(extra="forbid")

    sparse: list[SparseEntry]
    default: FiniteFloat = 0.0

    @model_validator(mode="after")
    def _no_duplicates(self):
        seen = set()
        for entry in self.sparse:
            key = tuple(entry.x)
            if key in seen:
                raise ValueError(f"duplicate sparse point {list(key)}")
            seen.add(key)
        return self


def _check_levels(k: Union[int, list[int]], n: int) -> None:
    tops = [k] * n if isinstance(k, int) else k
    if len(tops) != n:
        raise ValueError(f"k lists {len(tops)} levels for n={n}")
    if any(t < 1 for t in tops):
        raise ValueError("every top level must be >= 1")


class GameFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: PositiveInt
    k: Union[int, list[int]]
    kind: Literal["game", "moebius"] = "game"
    values: Union[DenseValues, SparseValues]

    @model_validator(mode="after")
    def _levels(self):
        _check_levels(self.k, self.n)
        if self.kind == "moebius" and isinstance(self.k, list) and len(set(self.k)) > 1:
            raise ValueError("Moebius tables must use a single k")
        return self


class GaiTermFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    attrs: list[PositiveInt] = Field(min_length=1)
    table: list[FiniteFloat]


class GaiFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: PositiveInt
    k: Union[int, list[int]]
    terms: list[GaiTermFile]

    @model_validator(mode="after")
    def _levels(self):
        _check_levels(self.k, self.n)
        return self


class RunConfig(BaseModel):
    """Everything one CLI invocation needs, after merging flags over settings"""

    command: Literal["compute", "moebius", "compare", "verify", "gai-eval"]
    input: Optional[str] = None
    output: Optional[str] = None
    method: Optional[Literal["paper", "shapley", "cells", "grabisch-lange", "hsiao-raghavan", "peters-zank"]] = None
    weights: Optional[list[float]] = None
    format: Literal["json", "table", "csv"] = "json"
    check: bool = False
    normalize: bool = False
    n: Optional[PositiveInt] = None
    k: Optional[PositiveInt] = None
    seed: int = Field(default=7, ge=0)
    trials: int = Field(default=200, ge=1)
    tolerance: float = Field(default=1e-9, gt=0)
    hr_zero_level: Literal["ignore", "error"] = "ignore"

    @field_validator("weights")
    @classmethod
    def _weights_increasing(cls, weights: Optional[list[float]]):
        return None if weights is None else check_weights(weights)

    @model_validator(mode="after")
    def _consistent(self):
        if self.weights is not None and self.method != "hsiao-raghavan" and self.command != "compare":
            raise ValueError("--weights is only accepted with --method hsiao-raghavan")
        if self.command == "verify":
            if self.n is None or self.k is None:
                raise ValueError("verify needs --n and --k")
        elif self.input is None:
            raise ValueError(f"{self.command} needs --input")
        return self
