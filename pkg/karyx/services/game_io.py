"""
Reading and writing game files.

Three JSON document kinds share one loader: dense or sparse games, Möbius
tables (``"kind": "moebius"``) and GAI models (documents with ``"terms"``).
Attribute numbers are 1-based in files and 0-based once loaded.
"""
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Union

import numpy as np
from loguru import logger
from pydantic import ValidationError

from ..exceptions import InputError, PreconditionError
from ..models.game import GaiModel, KAryGame, MoebiusTable
from ..models.lattice import LatticeShape
from ..models.schemas import DenseValues, GaiFile, GameFile
from .game_builder import from_gai, new_game, pad_to_common_k


@dataclass(frozen=True)
class LoadedInput:
    """What a file turned out to contain; exactly one of game / moebius is set"""

    source: str
    kind: str
    game: Optional[KAryGame] = None
    moebius: Optional[MoebiusTable] = None
    gai: Optional[GaiModel] = None


class GameFileLoader:
    def __init__(self, normalize: bool = False):
        self.normalize = normalize

    def load(self, path: Union[str, Path]) -> LoadedInput:
        path = Path(path)
        try:
            document = json.loads(path.read_text(encoding="utf-8"))
        except OSError as e:
            raise InputError(f"Cannot read {path}: {e}") from e
        except json.JSONDecodeError as e:
            raise InputError(f"{path} is not valid JSON: {e}") from e
        if not isinstance(document, dict):
            raise InputError(f"{path} must contain a JSON object")
        logger.debug(f"Loaded {path}")
        return self.parse(document, str(path))

    def parse(self, document: dict[str, Any], source: str = "<memory>") -> LoadedInput:
        try:
            if "terms" in document:
                return self._parse_gai(GaiFile.model_validate(document), source)
            return self._parse_game(GameFile.model_validate(document), source)
        except ValidationError as e:
            raise InputError(f"{source} does not match the expected schema: {e}") from e
        except PreconditionError as e:
            raise InputError(f"{source}: {e.detail}") from e

    def _parse_game(self, doc: GameFile, source: str) -> LoadedInput:
        tops = [doc.k] * doc.n if isinstance(doc.k, int) else list(doc.k)
        table = self._table(doc, tops)
        if doc.kind == "moebius":
            shape = LatticeShape(doc.n, tops[0])
            return LoadedInput(source, "moebius", moebius=MoebiusTable(shape, table))
        if len(set(tops)) == 1:
            game = new_game(LatticeShape(doc.n, tops[0]), table, normalize=self.normalize)
        else:
            if table[0] != 0.0 and self.normalize:
                table = table - table[0]
            game = pad_to_common_k(tops, table)
            logger.info(f"Padded levels {tops} to common k={game.shape.k}")
        return LoadedInput(source, "game", game=game)

    @staticmethod
    def _table(doc: GameFile, tops: list[int]) -> np.ndarray:
        dims = [t + 1 for t in tops]
        size = int(np.prod(dims))
        if isinstance(doc.values, DenseValues):
            if len(doc.values.dense) != size:
                raise PreconditionError(f"dense table has {len(doc.values.dense)} values, expected {size}")
            return np.array(doc.values.dense, dtype=np.float64)
        # sparse: unlisted points take the default, the origin stays 0 unless listed
        table = np.full(dims, doc.values.default, dtype=np.float64)
        table[(0,) * doc.n] = 0.0
        for entry in doc.values.sparse:
            if len(entry.x) != doc.n or any(not 0 <= c <= t for c, t in zip(entry.x, tops)):
                raise PreconditionError(f"sparse point {entry.x} lies outside the lattice")
            table[tuple(entry.x)] = entry.v
        return table.reshape(-1)

    @staticmethod
    def _parse_gai(doc: GaiFile, source: str) -> LoadedInput:
        tops = [doc.k] * doc.n if isinstance(doc.k, int) else list(doc.k)
        for term in doc.terms:
            if any(a > doc.n for a in term.attrs):
                raise PreconditionError(f"GAI term attributes {term.attrs} exceed n={doc.n}")
        model = GaiModel.build(
            LatticeShape(doc.n, max(tops)),
            [([a - 1 for a in term.attrs], term.table) for term in doc.terms],
            tops=None if len(set(tops)) == 1 else tops,
        )
        return LoadedInput(source, "gai", game=from_gai(model), gai=model)


def game_to_dict(v: KAryGame) -> dict[str, Any]:
    return {"n": v.shape.n, "k": v.shape.k, "kind": "game", "values": {"dense": [float(x) for x in v.values]}}


def moebius_to_dict(m: MoebiusTable) -> dict[str, Any]:
    return {"n": m.shape.n, "k": m.shape.k, "kind": "moebius", "values": {"dense": [float(x) for x in m.coeffs]}}
