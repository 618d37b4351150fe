"""
Method registry: maps the CLI method names to index computations.
"""
from typing import Literal, Optional, Union

from ..exceptions import PreconditionError
from ..models.game import KAryGame
from ..models.results import BiIndexTable, ImportanceVector, WeightScheme
from .axiom_harness import IndexFunctional
from .importance import importance, importance_by_cells, shapley_classical
from .multichoice_values import grabisch_lange, hsiao_raghavan, peters_zank

BI_INDEX_METHODS = ("hsiao-raghavan", "peters-zank")


def applicable_methods(v: KAryGame) -> list[str]:
    methods = ["paper", "cells", "grabisch-lange"]
    if v.shape.k == 1:
        methods.append("shapley")
    return methods + list(BI_INDEX_METHODS)


def compute_index(method: str, v: KAryGame, weights: Optional[list[float]] = None,
                  zero_level: Literal["ignore", "error"] = "ignore") -> Union[ImportanceVector, BiIndexTable]:
    if method == "paper":
        return importance(v)
    if method == "cells":
        return importance_by_cells(v)
    if method == "grabisch-lange":
        return grabisch_lange(v)
    if method == "shapley":
        return shapley_classical(v)
    if method == "hsiao-raghavan":
        scheme = WeightScheme(weights=weights) if weights is not None else None
        return hsiao_raghavan(v, scheme, zero_level=zero_level)
    if method == "peters-zank":
        return peters_zank(v)
    raise PreconditionError(f"Unknown method {method!r}")


def index_functional(method: str, weights: Optional[list[float]] = None,
                     zero_level: Literal["ignore", "error"] = "ignore") -> IndexFunctional:
    """Per-attribute functional for the axiom harness; bi-indices use their row sums"""

    def apply(v: KAryGame):
        result = compute_index(method, v, weights, zero_level)
        return result.row_sums() if isinstance(result, BiIndexTable) else result

    return IndexFunctional(method, apply)
