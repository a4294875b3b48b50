"""Canonical cycles: color every Seifert circle by the checkerboard rule
and expand the colors over the {1, X} storage basis.

For an orientation assignment o, the cycle lives at the cube vertex whose
bit at crossing k is 0 exactly when k is positive with respect to o; the
circles of that vertex are the Seifert circles of the reoriented diagram.
Each circle colored a contributes the factor X - u, each b-colored circle
X - v.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cube import ChainComplex, ChainElement, popcount
from .diagram import PlanarDiagram, reverse_components, seifert_resolve
from .frobenius import FrobeniusAlgebra, khovanov_zz
from .rings import RingError


@dataclass
class CanonicalCycle:
    orientation: frozenset
    degree: int
    vec: dict

    def chain(self) -> ChainElement:
        return ChainElement(self.degree, dict(self.vec))


def oriented_vertex_bits(D: PlanarDiagram, o=frozenset()) -> int:
    """Bitmask of the orientation-preserving resolution for o."""
    Do = reverse_components(D, o) if o else D
    bits = 0
    for ci in range(len(D.crossings)):
        if Do.crossing_sign(ci) < 0:
            bits |= 1 << ci
    return bits


def canonical_cycle(
    D: PlanarDiagram, o, A: FrobeniusAlgebra, C: ChainComplex | None = None
) -> CanonicalCycle:
    if not A.split:
        raise RingError("canonical cycles need split data (u, v)")
    o = frozenset(o)
    bits = oriented_vertex_bits(D, o)
    data = seifert_resolve(D, o)
    coloring = data.coloring()
    if C is not None:
        circles = C.circles[bits]
    else:
        circles = tuple(c.key for c in data.circles)
    factors = []
    for key in circles:
        e, x = A.color_factor(coloring[key])
        factors.append((e, x))
    vec: dict = {}
    ring = A.ring
    for labels in itertools.product((0, 1), repeat=len(circles)):
        coeff = ring.one()
        for (e, x), lab in zip(factors, labels):
            coeff = coeff * (x if lab else e)
        if not ring.is_zero(coeff):
            vec[(bits, labels)] = coeff
    degree = popcount(bits) - D.n_negative()
    return CanonicalCycle(orientation=o, degree=degree, vec=vec)


def alpha_cycle(D: PlanarDiagram, A: FrobeniusAlgebra) -> CanonicalCycle:
    """alpha(D): the canonical cycle of the diagram's own orientation."""
    return canonical_cycle(D, frozenset(), A)


def beta_cycle(D: PlanarDiagram, A: FrobeniusAlgebra) -> CanonicalCycle:
    """beta(D) = alpha(D, -o): every link component reversed."""
    return canonical_cycle(D, frozenset(range(D.component_count())), A)


def psi_class(D: PlanarDiagram) -> CanonicalCycle:
    """The transverse-invariant representative over (Z, 0, 0): with
    u = v = 0 both colors collapse to X, so this is the all-X labeling of
    the oriented resolution."""
    return alpha_cycle(D, khovanov_zz())
