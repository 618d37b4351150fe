import numpy as np
import pytest

from karyx.exceptions import PreconditionError
from karyx.models.game import GaiModel
from karyx.models.lattice import LatticeShape, iter_points, permute_point
from karyx.services.game_builder import (
    dirac,
    from_gai,
    gai_values,
    is_capacity,
    new_game,
    null_out,
    pad_to_common_k,
    permute_game,
    random_game,
    thermal_comfort_model,
    unanimity,
    zero_game,
)


def test_new_game_accepts_normalized_tables() -> None:
    v = new_game(LatticeShape(1, 2), [0, 1, 3])
    assert v((2,)) == 3.0
    assert v.top_value() == 3.0


def test_new_game_rejects_or_shifts_nonzero_origin() -> None:
    shape = LatticeShape(1, 2)
    with pytest.raises(PreconditionError):
        new_game(shape, [5, 6, 8])
    v = new_game(shape, [5, 6, 8], normalize=True)
    assert list(v.values) == [0.0, 1.0, 3.0]


def test_new_game_rejects_bad_tables() -> None:
    shape = LatticeShape(2, 1)
    with pytest.raises(PreconditionError):
        new_game(shape, [0, 1, 2])
    with pytest.raises(PreconditionError):
        new_game(shape, [0, 1, np.nan, 2])


def test_game_tables_are_read_only() -> None:
    v = zero_game(LatticeShape(2, 2))
    with pytest.raises(ValueError):
        v.values[1] = 1.0


def test_unanimity_is_the_indicator_of_an_up_set() -> None:
    u = unanimity(LatticeShape(2, 2), (1, 1))
    assert u((2, 1)) == 1.0
    assert u((1, 1)) == 1.0
    assert u((0, 2)) == 0.0
    assert u((2, 0)) == 0.0
    assert is_capacity(u)


def test_dirac_is_one_at_a_single_point(shape_32) -> None:
    d = dirac(shape_32, (2, 1, 1))
    assert d((2, 1, 1)) == 1.0
    assert d((2, 2, 1)) == 0.0
    assert d.values.sum() == 1.0
    assert not is_capacity(d)


def test_basis_games_exclude_the_origin(shape_32) -> None:
    with pytest.raises(PreconditionError):
        dirac(shape_32, (0, 0, 0))
    with pytest.raises(PreconditionError):
        unanimity(shape_32, (0, 0, 0))
    with pytest.raises(PreconditionError):
        unanimity(shape_32, (3, 0, 0))


def test_dirac_basis_reconstructs_a_game(shape_32) -> None:
    v = random_game(shape_32, np.random.default_rng(11))
    rebuilt = zero_game(shape_32)
    for x in list(iter_points(shape_32))[1:]:
        rebuilt = rebuilt + v(x) * dirac(shape_32, x)
    np.testing.assert_allclose(rebuilt.values, v.values, atol=1e-15)


def test_random_game_is_seeded_and_normalized(shape_32) -> None:
    a = random_game(shape_32, np.random.default_rng(3))
    b = random_game(shape_32, np.random.default_rng(3))
    assert a == b
    assert a.values[0] == 0.0
    assert np.all(np.abs(a.values) <= 1.0)
    dyadic = random_game(shape_32, np.random.default_rng(3), dyadic=True)
    assert np.all(dyadic.values * 4 == np.round(dyadic.values * 4))


def test_game_algebra(shape_32) -> None:
    rng = np.random.default_rng(5)
    v, w = random_game(shape_32, rng), random_game(shape_32, rng)
    assert (v + w)((1, 2, 0)) == pytest.approx(v((1, 2, 0)) + w((1, 2, 0)))
    assert (2 * v)((2, 2, 2)) == pytest.approx(2 * v.top_value())
    assert v - v == zero_game(shape_32)
    assert -v == v * -1
    with pytest.raises(PreconditionError):
        v + zero_game(LatticeShape(3, 1))


def test_pad_to_common_k_duplicates_the_top_level() -> None:
    v = pad_to_common_k([2, 1], [0, 1, 2, 3, 4, 6])
    assert v.shape == LatticeShape(2, 2)
    assert list(v.values) == [0, 1, 1, 2, 3, 3, 4, 6, 6]
    for x1 in range(3):
        assert v((x1, 2)) == v((x1, 1))


def test_pad_to_common_k_is_identity_on_uniform_input() -> None:
    values = [0, 1, 2, 3, 4, 5, 6, 7, 8]
    assert list(pad_to_common_k([2, 2], values).values) == values


def test_padding_keeps_monotone_games_monotone() -> None:
    v = pad_to_common_k([3, 1], [0, 1, 1, 2, 2, 4, 3, 5])
    assert is_capacity(v)


def test_from_gai_single_term() -> None:
    model = GaiModel.build(LatticeShape(2, 2), [((0,), [0, 2, 5])])
    v = from_gai(model)
    for x in iter_points(v.shape):
        assert v(x) == [0, 2, 5][x[0]]


def test_from_gai_two_singletons_is_additive() -> None:
    model = GaiModel.build(LatticeShape(2, 2), [((0,), [0, 1, 4]), ((1,), [0, 2, 3])])
    v = from_gai(model)
    dense = np.add.outer([0, 1, 4], [0, 2, 3]).reshape(-1)
    assert np.array_equal(v.values, dense)


def test_from_gai_orders_term_axes_like_the_lattice() -> None:
    shape = LatticeShape(2, 1)
    table = [0, 1, 2, 3]  # indexed (x2, x1)
    v = from_gai(GaiModel.build(shape, [((1, 0), table)]))
    assert v((1, 0)) == 1.0
    assert v((0, 1)) == 2.0


def test_from_gai_zero_terms_give_zero_game() -> None:
    model = GaiModel.build(LatticeShape(2, 1), [((0, 1), [0, 0, 0, 0])])
    assert from_gai(model) == zero_game(LatticeShape(2, 1))


def test_from_gai_shifts_the_origin() -> None:
    model = GaiModel.build(LatticeShape(1, 2), [((0,), [3, 4, 1])])
    assert list(from_gai(model).values) == [0.0, 1.0, -2.0]


def test_gai_terms_are_validated() -> None:
    shape = LatticeShape(2, 2)
    with pytest.raises(PreconditionError):
        gai_values(GaiModel.build(shape, [((0, 0), [0] * 9)]))
    with pytest.raises(PreconditionError):
        gai_values(GaiModel.build(shape, [((2,), [0, 1, 2])]))
    with pytest.raises(PreconditionError):
        gai_values(GaiModel.build(shape, [((0,), [0, 1])]))


def test_thermal_comfort_model_is_not_monotone() -> None:
    model = thermal_comfort_model()
    v = from_gai(model)
    assert v.shape == LatticeShape(3, 4)
    assert not is_capacity(v)
    with pytest.raises(PreconditionError):
        thermal_comfort_model(k=1)


def test_permute_game_moves_values_with_the_points(shape_32) -> None:
    v = random_game(shape_32, np.random.default_rng(8))
    sigma = [1, 2, 0]
    permuted = permute_game(v, sigma)
    for x in iter_points(shape_32):
        assert permuted(permute_point(x, sigma)) == v(x)
    with pytest.raises(PreconditionError):
        permute_game(v, [0, 0, 1])


def test_null_out_makes_an_attribute_null(shape_32) -> None:
    v = null_out(random_game(shape_32, np.random.default_rng(9)), 1)
    for x in iter_points(shape_32):
        assert v(x) == v((x[0], 0, x[2]))
