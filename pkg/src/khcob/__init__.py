"""Khovanov-type link homology over R[X]/(X^2 - hX - t) with strictly
functorial (sign-adjusted) cobordism maps for elementary moves."""

from .rings import ZZ, QQ, ZHT, H, T, Poly, RingError, specialize
from .frobenius import (
    FrobeniusAlgebra,
    determination,
    khovanov_zz,
    lee_qq,
    split_qq,
    split_zz,
    universal,
)
from .diagram import (
    DiagramError,
    MoveError,
    PlanarDiagram,
    all_orientations,
    component_count,
    parse_pd,
    reverse_components,
    seifert_count,
    seifert_resolve,
    writhe,
)

__all__ = [
    "ZZ",
    "QQ",
    "ZHT",
    "H",
    "T",
    "Poly",
    "RingError",
    "specialize",
    "FrobeniusAlgebra",
    "determination",
    "khovanov_zz",
    "lee_qq",
    "split_qq",
    "split_zz",
    "universal",
    "DiagramError",
    "MoveError",
    "PlanarDiagram",
    "all_orientations",
    "component_count",
    "parse_pd",
    "reverse_components",
    "seifert_count",
    "seifert_resolve",
    "writhe",
]
