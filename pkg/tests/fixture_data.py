"""Exact reference data shared by the tests and the fixture generator."""

from __future__ import annotations

import json
from pathlib import Path

from confstudy.clifford import EI, E3, embed_point, parse_terms
from confstudy.dorst import motion_from_blade
from confstudy.fourquat import FQ_ONE, split
from confstudy.rotor_poly import linear

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def even(text: str):
    """FourQuat of a sum of basis products such as "1 - 1/2 e3i + e3o"."""
    return split(parse_terms(text))


H = (
    even("-e1i + 2 e1o"),
    even("-e2i - 2 e2o"),
    even("1 - 1/2 e3i + e3o + eio"),
)
K = (
    even("-e2i - 2 e2o"),
    even("-1 + 1/2 e3i - e3o - eio"),
    even("2 - e1i + 2 e1o - e3i + 2 e3o + 2 eio"),
)
L = (
    even("1 + e23 - 1/2 e2i - e2o + 1/2 e3i + e3o"),
    even("-2 - e23 - 1/2 e2i - e2o - 2 e3o - eio"),
    even("2 - e1i + 2 e1o - e3i + 2 e3o + 2 eio"),
)

C = linear(H[0]) * linear(H[1]) * linear(H[2])

# Rotor from the sandwich example: 2 + (1 - sigma) e_{inf o} with sigma = 4.
SCALING = even("2 - 3 eio")


def fixture_objects() -> dict:
    return {
        "paperC.json": C.to_json(),
        "h1.json": H[0].to_json(),
        "h3.json": H[2].to_json(),
        "identity.json": FQ_ONE.to_json(),
        "scaling.json": SCALING.to_json(),
        "h3_line.json": linear(H[2]).to_json(),
        "origin_scaling.json": {"blade": motion_from_blade(embed_point(0, 0, 0), EI).blade.to_json()},
        "transversion.json": motion_from_blade(embed_point(0, 0, 0), E3).to_json(),
        "minimality_witnesses.json": {str(k): [str(x) for x in v] for k, v in MINIMALITY_WITNESSES.items()},
        "k3_blades.json": parse_terms("2 - e1i + 2 e1o - e3i + 2 e3o + 2 eio").to_json(),
    }


def write_fixtures(directory: Path = FIXTURES) -> None:
    directory.mkdir(exist_ok=True)
    for name, obj in fixture_objects().items():
        (directory / name).write_text(json.dumps(obj, indent=2) + "\n", encoding="utf-8")


def _coords(**nonzero):
    c = [0] * 16
    for k, v in nonzero.items():
        c[int(k[1:])] = v
    return c


# Point witnesses for generator minimality, from an exhaustive small-support
# search: only the listed generator is nonzero there. Generators 4-9 have none
# (see tests/test_study.py::test_vector_generator_obstruction).
MINIMALITY_WITNESSES = {
    0: _coords(c0=1, c4=1),
    1: _coords(c4=1, c12=1),
    2: _coords(c0=1, c8=1),
    3: _coords(c8=1, c12=1),
}


if __name__ == "__main__":
    write_fixtures()
