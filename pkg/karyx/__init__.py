"""
karyx: importance indices for k-ary (multichoice) games.
"""
from .models.game import GaiModel, KAryGame, MoebiusTable
from .models.lattice import LatticePoint, LatticeShape
from .models.results import AxiomReport, BiIndexTable, ImportanceVector, WeightScheme
from .services.axiom_harness import AxiomHarness, IndexFunctional
from .services.game_builder import dirac, from_gai, new_game, random_game, unanimity, zero_game
from .services.importance import importance, importance_by_cells, shapley_classical, sum_identity_rhs
from .services.moebius import moebius, zeta
from .services.multichoice_values import grabisch_lange, hsiao_raghavan, peters_zank

__version__ = "0.1.0"

__all__ = [
    "AxiomHarness",
    "AxiomReport",
    "BiIndexTable",
    "GaiModel",
    "ImportanceVector",
    "IndexFunctional",
    "KAryGame",
    "LatticePoint",
    "LatticeShape",
    "MoebiusTable",
    "WeightScheme",
    "dirac",
    "from_gai",
    "grabisch_lange",
    "hsiao_raghavan",
    "importance",
    "importance_by_cells",
    "moebius",
    "new_game",
    "peters_zank",
    "random_game",
    "shapley_classical",
    "sum_identity_rhs",
    "unanimity",
    "zero_game",
    "zeta",
]
