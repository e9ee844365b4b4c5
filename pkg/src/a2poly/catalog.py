"""Catalog of reference diagrams with their expected invariant values.

Files live under ``a2poly/catalog`` (override the directory with the
``A2POLY_CATALOG`` environment variable).  Each file carries a short
transcription note; correctness is established by the golden values below,
not by visual fidelity to any drawing.
"""

from __future__ import annotations

import os
from pathlib import Path

from a2poly.diagram import Diagram, parse_mgd
from a2poly.ring import A_CIRCLE, LaurentA, SurfacePoly

_A = A_CIRCLE


def catalog_dir() -> Path:
    override = os.environ.get("A2POLY_CATALOG")
    if override:
        return Path(override)
    return Path(__file__).parent / "catalog"


def names() -> list[str]:
    return sorted(p.stem for p in catalog_dir().glob("*.mgd"))


def load(name: str) -> Diagram:
    path = catalog_dir() / f"{name}.mgd"
    if not path.exists():
        raise FileNotFoundError(f"no catalog diagram named {name!r}")
    return parse_mgd(path.read_text())


def _sq_value() -> LaurentA:
    return LaurentA({-24: 1, -12: 1, -36: -1}) * LaurentA({12: 1, 24: 1, 36: -1})


# Expected writhe-normalized invariants of the closed catalog diagrams.
GOLDEN_CLOSED: dict[str, LaurentA] = {
    "unknot": LaurentA({0: 1}),
    "hopf-neg": LaurentA({-24: 1, -18: 1, -6: 1}),
    "hopf-pos": LaurentA({24: 1, 18: 1, 6: 1}),
    "trefoil-r": LaurentA({12: 1, 24: 1, 36: -1}),
    "trefoil-l4": LaurentA({-42: 1, -36: 1, -24: 1, -12: -1, -6: 1}),
    "ex42-5": LaurentA({-18: 1, -6: -1, 0: 1, 6: -1, 18: 1}),
    "composite-hopf": LaurentA({-24: 1, -18: 1, -6: 1}) * LaurentA({12: 1, 24: 1, 36: -1}),
    "composite-sq": _sq_value(),
}

# Expected invariants of the marked catalog diagrams.
GOLDEN_MARKED: dict[str, SurfacePoly] = {
    "yoshikawa-8_1": SurfacePoly(
        {(2, 0): _A, (0, 2): _A, (1, 1): _sq_value() + _A * _A}
    ),
    "yoshikawa-9_1": SurfacePoly(
        {
            (2, 0): _A,
            (0, 2): _A,
            (1, 1): LaurentA({-18: 1, -12: 1, -6: 1, 0: 5, 6: 1, 18: 1, 24: -1, 36: 1}),
        }
    ),
    "yoshikawa-10_2": SurfacePoly(
        {
            (2, 0): _A,
            (0, 2): _A,
            (1, 1): LaurentA(
                {
                    -36: 1,
                    -24: -1,
                    -18: 2,
                    -12: -1,
                    -6: -2,
                    0: 4,
                    6: -2,
                    12: -1,
                    18: 2,
                    24: -1,
                    36: 1,
                }
            ),
        }
    ),
    "gamma6-left": SurfacePoly({(1, 0): _A, (0, 1): LaurentA({0: 1})}),
    "gamma6p-left": SurfacePoly({(1, 0): LaurentA({0: 1}), (0, 1): _A}),
}
