import numpy as np
import pytest
from pydantic import ValidationError

from karyx.exceptions import PreconditionError
from karyx.models.lattice import LatticeShape
from karyx.models.results import WeightScheme
from karyx.services.game_builder import null_out, unanimity, zero_game
from karyx.services.multichoice_values import grabisch_lange, hsiao_raghavan, peters_zank

SHAPES = [(n, k) for n in (2, 3, 4) for k in (1, 2, 3)]


def _only(table, entries: dict) -> None:
    expected = np.zeros_like(table.values)
    for (i, j), value in entries.items():
        expected[i, j - 1] = value
    np.testing.assert_allclose(table.values, expected, rtol=0, atol=1e-15)


def test_grabisch_lange_ignores_dirac_211(dirac_211) -> None:
    assert grabisch_lange(dirac_211).to_list() == [0.0, 0.0, 0.0]


def test_hsiao_raghavan_on_unanimity_210(unanimity_210) -> None:
    table = hsiao_raghavan(unanimity_210, WeightScheme(weights=[1, 2]))
    assert table.entry(0, 2) == pytest.approx(2 / 3, abs=1e-15)
    assert table.entry(1, 1) == pytest.approx(1 / 3, abs=1e-15)
    _only(table, {(0, 2): 2 / 3, (1, 1): 1 / 3})


def test_hsiao_raghavan_splits_equal_levels_uniformly() -> None:
    v = unanimity(LatticeShape(3, 2), (2, 2, 2))
    _only(hsiao_raghavan(v, WeightScheme(weights=[1, 5])), {(0, 2): 1 / 3, (1, 2): 1 / 3, (2, 2): 1 / 3})


def test_hsiao_raghavan_strict_zero_level(unanimity_210) -> None:
    with pytest.raises(PreconditionError):
        hsiao_raghavan(unanimity_210, zero_level="error")
    v = unanimity(LatticeShape(3, 2), (1, 2, 1))
    assert hsiao_raghavan(v, zero_level="error").total() == pytest.approx(1.0)


def test_hsiao_raghavan_needs_one_weight_per_level(unanimity_210) -> None:
    with pytest.raises(PreconditionError):
        hsiao_raghavan(unanimity_210, WeightScheme(weights=[1, 2, 3]))


@pytest.mark.parametrize("weights", [[2, 1], [0, 1], [1, 1], []])
def test_weight_schemes_must_increase_strictly(weights) -> None:
    with pytest.raises(ValidationError):
        WeightScheme(weights=weights)


def test_default_weight_scheme() -> None:
    scheme = WeightScheme.default(3)
    assert scheme.weights == [1.0, 2.0, 3.0]
    assert list(scheme.with_zero_level()) == [0.0, 1.0, 2.0, 3.0]


def test_peters_zank_on_unanimity_210(unanimity_210) -> None:
    table = peters_zank(unanimity_210)
    _only(table, {(0, 2): 0.5, (1, 1): 0.5})
    assert table.row_sums().to_list() == [0.5, 0.5, 0.0]


def test_bi_indices_of_zero_game(shape_32) -> None:
    assert peters_zank(zero_game(shape_32)).total() == 0.0
    assert hsiao_raghavan(zero_game(shape_32)).total() == 0.0


@pytest.mark.parametrize("n,k", SHAPES)
def test_rival_values_are_efficient(n, k, random_corpus) -> None:
    shape = LatticeShape(n, k)
    for v in random_corpus(shape):
        top = v.top_value()
        assert grabisch_lange(v).total() == pytest.approx(top, abs=1e-9)
        assert peters_zank(v).total() == pytest.approx(top, abs=1e-9)
        assert hsiao_raghavan(v, WeightScheme.default(k)).total() == pytest.approx(top, abs=1e-9)


def test_grabisch_lange_gives_null_attributes_zero(random_corpus) -> None:
    v = null_out(random_corpus(LatticeShape(3, 2), count=1)[0], 1)
    assert grabisch_lange(v)[1] == pytest.approx(0.0, abs=1e-15)
