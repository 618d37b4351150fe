import json

import numpy as np
import pytest

from karyx.exceptions import InputError
from karyx.models.lattice import LatticeShape
from karyx.services.game_builder import from_gai, thermal_comfort_model, unanimity
from karyx.services.game_io import GameFileLoader, game_to_dict, moebius_to_dict
from karyx.services.moebius import moebius


def _write(tmp_path, document, name="game.json"):
    path = tmp_path / name
    path.write_text(json.dumps(document))
    return path


def test_load_dense_sample(samples_dir, dirac_211) -> None:
    loaded = GameFileLoader().load(samples_dir / "dirac_211.json")
    assert loaded.kind == "game"
    assert loaded.game == dirac_211


def test_load_sparse_sample(samples_dir, unanimity_210) -> None:
    assert GameFileLoader().load(samples_dir / "unanimity_210.json").game == unanimity_210


def test_sparse_default_fills_everything_but_the_origin() -> None:
    doc = {"n": 2, "k": 1, "values": {"sparse": [{"x": [1, 1], "v": 5}], "default": 2}}
    assert list(GameFileLoader().parse(doc).game.values) == [0.0, 2.0, 2.0, 5.0]


def test_mixed_levels_are_padded(samples_dir) -> None:
    game = GameFileLoader().load(samples_dir / "mixed_levels.json").game
    assert game.shape == LatticeShape(2, 2)
    assert list(game.values) == [0, 1, 1, 2, 3, 3, 4, 6, 6]


def test_gai_sample_is_the_thermal_comfort_model(samples_dir) -> None:
    loaded = GameFileLoader().load(samples_dir / "thermal_comfort_gai.json")
    assert loaded.kind == "gai"
    assert [term.attrs for term in loaded.gai.terms] == [(0,), (1,), (2,), (0, 2)]
    np.testing.assert_allclose(loaded.game.values, from_gai(thermal_comfort_model()).values, atol=1e-12)


def test_moebius_documents_round_trip(tmp_path) -> None:
    m = moebius(unanimity(LatticeShape(2, 2), (1, 2)))
    loaded = GameFileLoader().load(_write(tmp_path, moebius_to_dict(m)))
    assert loaded.kind == "moebius"
    assert np.array_equal(loaded.moebius.coeffs, m.coeffs)


def test_game_to_dict_is_a_loadable_document(shape_32, dirac_211) -> None:
    doc = game_to_dict(dirac_211)
    assert doc["kind"] == "game"
    assert len(doc["values"]["dense"]) == shape_32.size
    assert GameFileLoader().parse(doc).game == dirac_211


def test_nonzero_origin_needs_normalize() -> None:
    doc = {"n": 1, "k": 2, "values": {"dense": [5, 6, 8]}}
    with pytest.raises(InputError):
        GameFileLoader().parse(doc)
    assert list(GameFileLoader(normalize=True).parse(doc).game.values) == [0.0, 1.0, 3.0]


@pytest.mark.parametrize(
    "document",
    [
        {"n": 2, "k": 1, "values": {"dense": [0, 1, 2]}},
        {"n": 2, "k": 1, "values": {"sparse": [{"x": [1, 0], "v": 1}, {"x": [1, 0], "v": 2}]}},
        {"n": 2, "k": 1, "values": {"sparse": [{"x": [2, 0], "v": 1}]}},
        {"n": 2, "k": [1, 1, 1], "values": {"dense": [0, 1, 2, 3]}},
        {"n": 2, "k": 0, "values": {"dense": [0]}},
        {"n": 1, "k": 1, "values": {"dense": [0, 1], "extra": 1}},
        {"n": 1, "k": [1], "kind": "other", "values": {"dense": [0, 1]}},
        {"n": 1, "k": 2, "knd": "moebius", "values": {"dense": [0, 1, 2]}},
        {"n": 2, "k": [2, 1], "kind": "moebius", "values": {"dense": [0, 1, 2, 3, 4, 5]}},
        {"n": 2, "k": 1, "terms": [{"attrs": [3], "table": [0, 1]}]},
        {"n": 1, "k": 1, "terms": [{"attrs": [1], "table": [0, 1]}], "scale": 2},
        {"n": 2, "k": 1, "terms": [{"attrs": [1], "table": [0, 1, 2]}]},
        {"n": 2, "k": 1},
    ],
)
def test_invalid_documents_are_input_errors(document) -> None:
    with pytest.raises(InputError):
        GameFileLoader().parse(document)


def test_unreadable_files_are_input_errors(tmp_path) -> None:
    with pytest.raises(InputError):
        GameFileLoader().load(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    with pytest.raises(InputError):
        GameFileLoader().load(broken)
    with pytest.raises(InputError):
        GameFileLoader().load(_write(tmp_path, [1, 2, 3], "list.json"))
