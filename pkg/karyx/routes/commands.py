"""
Command handlers for the karyx CLI.

Each handler takes a validated RunConfig, builds a JSON-ready payload, hands
it to the renderer and returns the process exit code. Errors propagate as
KaryxError subclasses and are mapped to exit codes in ``karyx.main``.
"""
from pathlib import Path
from typing import Any, Callable

from loguru import logger

from ..exceptions import EXIT_OK, EXIT_VERIFICATION_FAILED, InputError, PreconditionError
from ..models.game import KAryGame
from ..models.lattice import LatticeShape
from ..models.results import BiIndexTable
from ..models.schemas import RunConfig
from ..services.axiom_harness import AxiomHarness
from ..services.game_io import GameFileLoader, LoadedInput, game_to_dict, moebius_to_dict
from ..services.importance import sum_identity_rhs
from ..services.methods import applicable_methods, compute_index, index_functional
from ..services.moebius import moebius, zeta
from ..services.renderer import ReportRenderer

SUM_IDENTITY_METHODS = ("paper", "cells")


def _load(config: RunConfig) -> LoadedInput:
    return GameFileLoader(normalize=config.normalize).load(config.input)


def _emit(config: RunConfig, text: str) -> None:
    if config.output is None:
        print(text, end="")
        return
    try:
        Path(config.output).write_text(text, encoding="utf-8")
    except OSError as e:
        raise InputError(f"Cannot write {config.output}: {e}") from e
    logger.success(f"✅ Wrote {config.output}")


def _index_payload(result, shape: LatticeShape, weights=None) -> dict[str, Any]:
    payload: dict[str, Any] = {"method": result.method, "n": shape.n, "k": shape.k}
    if isinstance(result, BiIndexTable):
        if weights is not None:
            payload["weights"] = list(weights)
        payload["values"] = result.to_lists()
        payload["row_sums"] = result.row_sums().to_list()
    else:
        payload["values"] = result.to_list()
    payload["total"] = result.total()
    return payload


def _check(method: str, game: KAryGame, total: float) -> dict[str, float]:
    """Sum of the index next to what it must equal for that method"""
    if method in SUM_IDENTITY_METHODS:
        return {"sum": total, "diagonal_variation": sum_identity_rhs(game)}
    return {"sum": total, "top_value": game.top_value()}


def cmd_compute(config: RunConfig) -> int:
    """Compute one index for the game in --input"""
    loaded = _load(config)
    game = loaded.game if loaded.game is not None else zeta(loaded.moebius)
    method = config.method or "paper"
    result = compute_index(method, game, config.weights, config.hr_zero_level)
    payload = _index_payload(result, game.shape, config.weights)
    if config.check:
        payload["check"] = _check(method, game, result.total())
    _emit(config, ReportRenderer(config.format).index(payload))
    return EXIT_OK


def cmd_moebius(config: RunConfig) -> int:
    """Game in, Möbius table out; Möbius table in, game out"""
    loaded = _load(config)
    if loaded.kind == "moebius":
        payload = game_to_dict(zeta(loaded.moebius))
    else:
        payload = moebius_to_dict(moebius(loaded.game))
    _emit(config, ReportRenderer(config.format).table_file(payload))
    return EXIT_OK


def cmd_compare(config: RunConfig) -> int:
    """Every applicable index side by side"""
    loaded = _load(config)
    game = loaded.game if loaded.game is not None else zeta(loaded.moebius)
    columns: dict[str, list[float]] = {}
    bi_index: dict[str, list[list[float]]] = {}
    for method in applicable_methods(game):
        weights = config.weights if method == "hsiao-raghavan" else None
        result = compute_index(method, game, weights, config.hr_zero_level)
        if isinstance(result, BiIndexTable):
            bi_index[method] = result.to_lists()
            result = result.row_sums()
        columns[method] = result.to_list()
    payload = {
        "n": game.shape.n,
        "k": game.shape.k,
        "methods": list(columns),
        "columns": columns,
        "totals": {method: sum(values) for method, values in columns.items()},
        "sum_identity_rhs": sum_identity_rhs(game),
        "top_value": game.top_value(),
        "bi_index": bi_index,
    }
    _emit(config, ReportRenderer(config.format).compare(payload))
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    """Run the axiom suite on random games of the given shape"""
    shape = LatticeShape(config.n, config.k)
    method = config.method or "paper"
    if method == "shapley" and shape.k != 1:
        raise PreconditionError("--method shapley can only be verified with --k 1")
    harness = AxiomHarness(shape, config.tolerance)
    phi = index_functional(method, config.weights, config.hr_zero_level)
    reports = harness.run_suite(phi, config.trials, config.seed)
    passed = all(r.passed for r in reports)
    payload = {
        "method": method,
        "n": shape.n,
        "k": shape.k,
        "seed": config.seed,
        "trials": config.trials,
        "tolerance": config.tolerance,
        "passed": passed,
        "reports": [r.model_dump() for r in reports],
    }
    _emit(config, ReportRenderer(config.format).verify(payload))
    if not passed:
        failed = ", ".join(r.axiom for r in reports if not r.passed)
        logger.warning(f"❌ {method}: axioms violated: {failed}")
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def cmd_gai_eval(config: RunConfig) -> int:
    """Dense game table of a GAI model"""
    loaded = _load(config)
    if loaded.gai is None:
        raise InputError(f"{config.input} is not a GAI model (no \"terms\")")
    _emit(config, ReportRenderer(config.format).table_file(game_to_dict(loaded.game)))
    return EXIT_OK


COMMAND_HANDLERS: dict[str, Callable[[RunConfig], int]] = {
    "compute": cmd_compute,
    "moebius": cmd_moebius,
    "compare": cmd_compare,
    "verify": cmd_verify,
    "gai-eval": cmd_gai_eval,
}
