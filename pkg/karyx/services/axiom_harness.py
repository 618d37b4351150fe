"""
Executable axioms for importance indices.

Each check samples seeded random games, applies the index, and reports the
worst violation it saw together with a witness game when it fails. Trial t
of a check draws from ``default_rng([seed, t])``, so a report depends only
on (seed, trials).
"""
from dataclasses import dataclass
from typing import Any, Callable, Optional

import numpy as np
from loguru import logger

from ..exceptions import PreconditionError
from ..models.game import KAryGame
from ..models.lattice import LatticeShape, iter_points, kernel_size, support_size
from ..models.results import AxiomReport
from .game_builder import dirac, null_out, permute_game, random_game
from .game_io import game_to_dict
from .importance import importance, importance_by_cells


@dataclass(frozen=True)
class IndexFunctional:
    """A named map from games to one real per attribute"""

    name: str
    fn: Callable[[KAryGame], Any]

    def __call__(self, v: KAryGame) -> np.ndarray:
        result = self.fn(v)
        values = getattr(result, "values", result)
        return np.asarray(values, dtype=np.float64).reshape(-1)


PAPER_INDEX = IndexFunctional("paper", importance)


def _worse(gap: float, worst: float) -> bool:
    """NaN counts as the worst possible violation and sticks"""
    if np.isnan(worst):
        return False
    return bool(np.isnan(gap) or gap > worst)


def invariance_partner(v: KAryGame, i: int) -> KAryGame:
    """The game w whose increments along i are v's, shifted cyclically by one

    w(x_{-i}, 0) = 0, w's l-th increment is v's (l+1)-th for l < k, and w's
    last increment is v's first. v and w then satisfy the premise of the
    invariance axiom for attribute i.
    """
    if v.shape.k < 2:
        raise PreconditionError("The invariance partner needs k >= 2")
    increments = np.diff(v.tensor, axis=i)
    shifted = np.roll(increments, -1, axis=i)
    partner = np.concatenate([np.zeros_like(np.take(v.tensor, [0], axis=i)), np.cumsum(shifted, axis=i)], axis=i)
    return KAryGame(v.shape, partner.reshape(-1))


def invariance_premise_violation(v: KAryGame, w: KAryGame, i: int) -> float:
    """Largest mismatch in the premise equations of the invariance axiom"""
    k = v.shape.k
    dv = np.diff(v.tensor, axis=i)
    dw = np.diff(w.tensor, axis=i)
    # v(x+1_i) - v(x) = w(x) - w(x-1_i) for 0 < x_i < k
    interior = np.take(dv, range(1, k), axis=i) - np.take(dw, range(0, k - 1), axis=i)
    # v(x_{-i}, 1) - v(x_{-i}, 0) = w(x_{-i}, k) - w(x_{-i}, k-1)
    wrap = np.take(dv, [0], axis=i) - np.take(dw, [k - 1], axis=i)
    return float(max(np.max(np.abs(interior), initial=0.0), np.max(np.abs(wrap), initial=0.0)))


def dirac_efficiency_target(y, shape: LatticeShape) -> int:
    """Required total importance of delta_y

    +1 if y has a coordinate at k and none at 0, -1 if y has a coordinate at
    0 and none at k, 0 otherwise.
    """
    s, kk = support_size(y), kernel_size(y, shape)
    if kk != 0 and s == shape.n:
        return 1
    if kk == 0 and s < shape.n:
        return -1
    return 0


@dataclass(frozen=True, eq=False)
class DiracCoefficientTable:
    """phi(delta_y) for every y, row r for flat index r (row 0 is zero)"""

    shape: LatticeShape
    coefficients: np.ndarray

    def apply(self, v: KAryGame) -> np.ndarray:
        """phi(v) = sum over y of v(y) phi(delta_y)"""
        return v.values @ self.coefficients


def brute_force_index_from_axioms(shape: LatticeShape, phi: IndexFunctional = PAPER_INDEX) -> DiracCoefficientTable:
    """Index values on the Dirac basis, which determine a linear index entirely"""
    if shape.n > 3 or shape.k > 2:
        raise PreconditionError(f"Dirac-basis oracle is limited to n <= 3, k <= 2, got n={shape.n}, k={shape.k}")
    rows = np.zeros((shape.size, shape.n))
    for idx, y in enumerate(iter_points(shape)):
        if idx:
            rows[idx] = phi(dirac(shape, y))
    return DiracCoefficientTable(shape, rows)


class AxiomHarness:
    def __init__(self, shape: LatticeShape, tolerance: float = 1e-9):
        self.shape = shape
        self.tolerance = tolerance

    @staticmethod
    def _trial_rng(seed: int, trial: int) -> np.random.Generator:
        return np.random.default_rng([seed, trial])

    @staticmethod
    def _check_trials(trials: int):
        if trials < 1:
            raise PreconditionError(f"Need at least one trial, got {trials}")

    def _report(self, axiom: str, violation: float, trials: int, seed: Optional[int],
                witness: Optional[dict[str, Any]] = None, note: Optional[str] = None) -> AxiomReport:
        report = AxiomReport.from_violation(axiom, violation, self.tolerance, trials, seed, note, witness)
        logger.info(f"{axiom}: {'pass' if report.passed else 'FAIL'} (violation {report.violation:.3e})")
        return report

    def check_linearity(self, phi: IndexFunctional, trials: int, seed: int) -> AxiomReport:
        """phi(v + alpha w) = phi(v) + alpha phi(w)"""
        self._check_trials(trials)
        worst, witness = 0.0, None
        for t in range(trials):
            rng = self._trial_rng(seed, t)
            v, w = random_game(self.shape, rng), random_game(self.shape, rng)
            alpha = 0.0 if t == 0 else float(rng.uniform(-2.0, 2.0))
            gap = float(np.max(np.abs(phi(v + alpha * w) - phi(v) - alpha * phi(w))))
            if _worse(gap, worst):
                worst, witness = gap, {"v": game_to_dict(v), "w": game_to_dict(w), "alpha": alpha}
        return self._report("linearity", worst, trials, seed, witness)

    def check_null(self, phi: IndexFunctional, trials: int, seed: int) -> AxiomReport:
        """phi_i(v) = 0 whenever attribute i is null for v"""
        self._check_trials(trials)
        worst, witness = 0.0, None
        for t in range(trials):
            rng = self._trial_rng(seed, t)
            i = int(rng.integers(self.shape.n))
            v = null_out(random_game(self.shape, rng), i)
            gap = abs(float(phi(v)[i]))
            if _worse(gap, worst):
                worst, witness = gap, {"v": game_to_dict(v), "attribute": i + 1}
        return self._report("null", worst, trials, seed, witness)

    def check_symmetry(self, phi: IndexFunctional, trials: int, seed: int) -> AxiomReport:
        """phi_{sigma(i)}(sigma o v) = phi_i(v)"""
        self._check_trials(trials)
        worst, witness = 0.0, None
        for t in range(trials):
            rng = self._trial_rng(seed, t)
            v = random_game(self.shape, rng)
            sigma = [int(s) for s in rng.permutation(self.shape.n)]
            permuted = phi(permute_game(v, sigma))
            gap = float(np.max(np.abs(permuted[sigma] - phi(v))))
            if _worse(gap, worst):
                worst, witness = gap, {"v": game_to_dict(v), "sigma": [s + 1 for s in sigma]}
        return self._report("symmetry", worst, trials, seed, witness)

    def check_invariance(self, phi: IndexFunctional, trials: int, seed: int) -> AxiomReport:
        """phi_i(v) = phi_i(w) for w = invariance_partner(v, i)"""
        self._check_trials(trials)
        if self.shape.k < 2:
            return self._report("invariance", 0.0, trials, seed, note="skipped: the premise is empty when k = 1")
        worst, witness = 0.0, None
        for t in range(trials):
            rng = self._trial_rng(seed, t)
            i = int(rng.integers(self.shape.n))
            v = random_game(self.shape, rng)
            w = invariance_partner(v, i)
            gap = abs(float(phi(v)[i] - phi(w)[i]))
            if _worse(gap, worst):
                worst, witness = gap, {"v": game_to_dict(v), "w": game_to_dict(w), "attribute": i + 1}
        return self._report("invariance", worst, trials, seed, witness)

    def check_efficiency_dirac(self, phi: IndexFunctional) -> AxiomReport:
        """Total importance of every delta_y matches the three-case table"""
        worst, witness = 0.0, None
        cases = {1: 0, -1: 0, 0: 0}
        for idx, y in enumerate(iter_points(self.shape)):
            if idx == 0:
                continue
            target = dirac_efficiency_target(y, self.shape)
            cases[target] += 1
            gap = abs(float(np.sum(phi(dirac(self.shape, y)))) - target)
            if _worse(gap, worst):
                worst, witness = gap, {"y": list(y.coords), "target": target}
        note = f"+1 x {cases[1]}, -1 x {cases[-1]}, 0 x {cases[0]}"
        return self._report("efficiency", worst, self.shape.size - 1, None, witness, note)

    def check_cells_oracle(self, phi: IndexFunctional, trials: int, seed: int) -> AxiomReport:
        """phi agrees with the sum of per-cell Shapley values"""
        self._check_trials(trials)
        worst, witness = 0.0, None
        for t in range(trials):
            v = random_game(self.shape, self._trial_rng(seed, t))
            gap = float(np.max(np.abs(phi(v) - importance_by_cells(v).values)))
            if _worse(gap, worst):
                worst, witness = gap, {"v": game_to_dict(v)}
        return self._report("cells-oracle", worst, trials, seed, witness)

    def check_basis_reconstruction(self, phi: IndexFunctional, trials: int, seed: int) -> AxiomReport:
        """phi(v) agrees with its reconstruction from the Dirac basis"""
        self._check_trials(trials)
        table = brute_force_index_from_axioms(self.shape, phi)
        worst, witness = 0.0, None
        for t in range(trials):
            v = random_game(self.shape, self._trial_rng(seed, t))
            gap = float(np.max(np.abs(phi(v) - table.apply(v))))
            if _worse(gap, worst):
                worst, witness = gap, {"v": game_to_dict(v)}
        return self._report("dirac-basis", worst, trials, seed, witness)

    def run_suite(self, phi: IndexFunctional, trials: int, seed: int) -> list[AxiomReport]:
        reports = [
            self.check_linearity(phi, trials, seed),
            self.check_null(phi, trials, seed),
            self.check_symmetry(phi, trials, seed),
            self.check_invariance(phi, trials, seed),
            self.check_efficiency_dirac(phi),
            self.check_cells_oracle(phi, trials, seed),
        ]
        if self.shape.n <= 3 and self.shape.k <= 2:
            reports.append(self.check_basis_reconstruction(phi, trials, seed))
        return reports
