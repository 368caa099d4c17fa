"""
CSV and JSON forms of band structures.

Floats are written in their shortest round-trip decimal form, so reading an
emitted file back reproduces every k and energy bit for bit, and identical runs
produce identical bytes.
"""

import csv
import io
import json
from collections import defaultdict
from typing import Any

import numpy as np
from pydantic import BaseModel

from ..exceptions import InvalidArgumentError
from ..lattice import BandStructure, BranchLabel, Engine, KGrid, LatticeParams

CSV_HEADER = ("k", "band_index", "branch_label", "energy_eV", "engine")


def _num(value: float) -> str:
    return repr(float(value))


# === JSON document ===


class ParamsDoc(BaseModel):
    alpha: float
    beta: float
    a: float


class KGridDoc(BaseModel):
    k_min: float
    k_max: float
    count: int


class EnergyDoc(BaseModel):
    branch: int | str
    value: float


class KPointDoc(BaseModel):
    k: float
    energies: list[EnergyDoc]


class BandDocument(BaseModel):
    """JSON mirror of a BandStructure."""

    params: ParamsDoc
    cell_size: int
    engine: Engine
    kgrid: KGridDoc
    bands: list[KPointDoc]

    @classmethod
    def of(cls, bands: BandStructure) -> "BandDocument":
        p = bands.params
        g = bands.kgrid
        return cls(
            params=ParamsDoc(alpha=p.alpha, beta=p.beta, a=p.a),
            cell_size=bands.cell_size,
            engine=bands.engine,
            kgrid=KGridDoc(k_min=g.k_min, k_max=g.k_max, count=g.count),
            bands=[
                KPointDoc(
                    k=float(k),
                    energies=[
                        EnergyDoc(branch=label, value=float(e))
                        for label, e in zip(bands.labels, row, strict=True)
                    ],
                )
                for k, row in zip(g.points, bands.energies, strict=True)
            ],
        )

    def to_band_structure(self) -> BandStructure:
        if not self.bands:
            raise InvalidArgumentError("band document has no k-points")
        return BandStructure(
            kgrid=KGrid(self.kgrid.k_min, self.kgrid.k_max, self.kgrid.count),
            energies=np.array([[e.value for e in point.energies] for point in self.bands]),
            labels=tuple(e.branch for e in self.bands[0].energies),
            engine=self.engine,
            params=LatticeParams(self.params.alpha, self.params.beta, self.params.a),
            cell_size=self.cell_size,
        )


def _dumps(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def write_band_json(structures: list[BandStructure]) -> str:
    """One document for a single engine, {"engine": "all", "structures": [...]} for several."""
    docs = [BandDocument.of(s).model_dump(mode="json") for s in structures]
    if len(docs) == 1:
        return _dumps(docs[0])
    return _dumps({"engine": "all", "structures": docs})


def read_band_json(text: str) -> list[BandStructure]:
    data = json.loads(text)
    items = data["structures"] if data.get("engine") == "all" else [data]
    return [BandDocument.model_validate(item).to_band_structure() for item in items]


# === CSV ===


def write_band_csv(structures: list[BandStructure]) -> str:
    """Rows of every structure under one header, LF line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for bands in structures:
        engine = bands.engine.value
        for k, row in zip(bands.kgrid.points, bands.energies, strict=True):
            for index, (label, energy) in enumerate(zip(bands.labels, row, strict=True)):
                writer.writerow((_num(k), index, label, _num(energy), engine))
    return buffer.getvalue()


def _label(text: str) -> BranchLabel:
    try:
        return int(text)
    except ValueError:
        return text


def read_band_csv(text: str, params: LatticeParams) -> list[BandStructure]:
    """Rebuild band structures from CSV; params are not part of the CSV form."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or tuple(header) != CSV_HEADER:
        raise InvalidArgumentError(f"unexpected CSV header: {header}")

    # engine -> k -> band_index -> (label, energy); dicts keep file order
    table: dict[str, dict[float, dict[int, tuple[BranchLabel, float]]]] = defaultdict(
        lambda: defaultdict(dict)
    )
    for k_text, index_text, label_text, energy_text, engine in reader:
        table[engine][float(k_text)][int(index_text)] = (_label(label_text), float(energy_text))

    structures: list[BandStructure] = []
    for engine, by_k in table.items():
        ks = list(by_k)
        cell_size = len(by_k[ks[0]])
        rows = [[by_k[k][i][1] for i in range(cell_size)] for k in ks]
        structures.append(
            BandStructure(
                kgrid=KGrid(ks[0], ks[-1], len(ks)),
                energies=np.array(rows),
                labels=tuple(by_k[ks[0]][i][0] for i in range(cell_size)),
                engine=Engine(engine),
                params=params,
                cell_size=cell_size,
            )
        )
    return structures
