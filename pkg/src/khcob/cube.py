"""The cube of resolutions and the chain complex it spans.

A generator is a pair (bits, labels): ``bits`` is the smoothing bitmask
(bit k = resolution of crossing k) and ``labels`` assigns 0 (the unit) or
1 (the class of X) to each circle of that resolution, in circle order.
Homological degree = popcount(bits) - n_minus.  The differential flips one
crossing 0 -> 1, applying the merge map m or the split map Delta to the
affected circles with the edge sign (-1)^(number of 1-bits below the
flipped crossing).

Chain vectors are dicts mapping generator keys to ring coefficients, so
they can be moved between complexes that share generator structure.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from .diagram import PlanarDiagram, _circles_for_smoothing
from .frobenius import FrobeniusAlgebra

GenKey = tuple  # (bits, labels)


def popcount(x: int) -> int:
    return bin(x).count("1")


class ChainComplex:
    """C(D; A) for a diagram D and Frobenius algebra A."""

    def __init__(self, diagram: PlanarDiagram, algebra: FrobeniusAlgebra):
        self.diagram = diagram
        self.algebra = algebra
        self.ring = algebra.ring
        n = len(diagram.crossings)
        self.n = n
        self.n_minus = diagram.n_negative()
        self.circles: dict[int, tuple] = {}
        self.gens: dict[int, list] = {}
        for bits in range(1 << n):
            circ = tuple(_circles_for_smoothing(diagram, lambda ci: (bits >> ci) & 1))
            self.circles[bits] = circ
            deg = popcount(bits) - self.n_minus
            bucket = self.gens.setdefault(deg, [])
            for labels in itertools.product((0, 1), repeat=len(circ)):
                bucket.append((bits, labels))
        for deg in self.gens:
            self.gens[deg].sort()
        self.degrees = sorted(self.gens)
        self.index: dict[GenKey, int] = {}
        for deg in self.degrees:
            for i, g in enumerate(self.gens[deg]):
                self.index[g] = i
        self._diff_cols: dict[GenKey, dict] = {}
        for deg in self.degrees:
            for g in self.gens[deg]:
                self._diff_cols[g] = self._column(g)

    # -- construction of one differential column -------------------------------

    def _column(self, gen: GenKey) -> dict:
        bits, labels = gen
        A = self.algebra
        circ = self.circles[bits]
        out: dict[GenKey, object] = {}
        for k in range(self.n):
            if (bits >> k) & 1:
                continue
            bits2 = bits | (1 << k)
            circ2 = self.circles[bits2]
            sign = -1 if popcount(bits & ((1 << k) - 1)) % 2 else 1
            common_positions = {}
            merged = [c for c in circ if c not in circ2]
            born = [c for c in circ2 if c not in circ]
            if len(merged) == 2 and len(born) == 1:
                # merge: m on the two vanishing circles
                ia, ib = circ.index(merged[0]), circ.index(merged[1])
                inew = circ2.index(born[0])
                base = {
                    circ2.index(c): labels[circ.index(c)]
                    for c in circ
                    if c in circ2
                }
                for lab, coeff in A.mult_basis(labels[ia], labels[ib]).items():
                    labels2 = dict(base)
                    labels2[inew] = lab
                    key = (bits2, tuple(labels2[i] for i in range(len(circ2))))
                    out[key] = out.get(key, A.ring.zero()) + A.ring.from_int(sign) * coeff
            elif len(merged) == 1 and len(born) == 2:
                # split: Delta on the vanishing circle
                iold = circ.index(merged[0])
                i1, i2 = circ2.index(born[0]), circ2.index(born[1])
                base = {
                    circ2.index(c): labels[circ.index(c)]
                    for c in circ
                    if c in circ2
                }
                for (l1, l2), coeff in A.comult_basis(labels[iold]).items():
                    labels2 = dict(base)
                    labels2[i1] = l1
                    labels2[i2] = l2
                    key = (bits2, tuple(labels2[i] for i in range(len(circ2))))
                    out[key] = out.get(key, A.ring.zero()) + A.ring.from_int(sign) * coeff
            else:
                raise AssertionError(
                    f"cube edge {bits:0{self.n}b}->{bits2:0{self.n}b} changes "
                    f"{len(merged)}->{len(born)} circles"
                )
        return {k: v for k, v in out.items() if not self.ring.is_zero(v)}

    # -- degree bookkeeping -----------------------------------------------------

    def degree_of(self, gen: GenKey) -> int:
        return popcount(gen[0]) - self.n_minus

    def gen_list(self, deg: int) -> list:
        return self.gens.get(deg, [])

    def gen_count(self, deg: int) -> int:
        return len(self.gens.get(deg, ()))

    # -- differential -----------------------------------------------------------

    def d_apply(self, vec: dict) -> dict:
        out: dict[GenKey, object] = {}
        for g, c in vec.items():
            for g2, c2 in self._diff_cols[g].items():
                out[g2] = out.get(g2, self.ring.zero()) + c * c2
        return {k: v for k, v in out.items() if not self.ring.is_zero(v)}

    def is_cycle(self, vec: dict) -> bool:
        return not self.d_apply(vec)

    def d_squared_is_zero(self) -> bool:
        for deg in self.degrees:
            for g in self.gens[deg]:
                if self.d_apply(self._diff_cols[g]):
                    return False
        return True

    def d_matrix(self, deg: int) -> list:
        """Dense matrix of d: C_deg -> C_{deg+1}; rows = target generators."""
        src = self.gens.get(deg, [])
        tgt = self.gens.get(deg + 1, [])
        tindex = {g: i for i, g in enumerate(tgt)}
        M = [[self.ring.zero() for _ in src] for _ in tgt]
        for j, g in enumerate(src):
            for g2, c in self._diff_cols[g].items():
                M[tindex[g2]][j] = c
        return M

    def vec_dense(self, deg: int, vec: dict) -> list:
        dense = [self.ring.zero()] * self.gen_count(deg)
        for g, c in vec.items():
            if self.degree_of(g) != deg:
                raise ValueError("vector is not homogeneous of the stated degree")
            dense[self.index[g]] = c
        return dense

    def vec_from_dense(self, deg: int, dense: list) -> dict:
        gens = self.gens.get(deg, [])
        return {
            gens[i]: c for i, c in enumerate(dense) if not self.ring.is_zero(c)
        }

    # -- export -------------------------------------------------------------------

    def to_obj(self) -> dict:
        def gen_obj(g):
            return {"bits": g[0], "labels": list(g[1])}

        out = {"n_crossings": self.n, "n_minus": self.n_minus, "degrees": {}}
        for deg in self.degrees:
            entries = []
            for g in self.gens[deg]:
                col = [
                    [gen_obj(g2), self.ring.to_obj(c)]
                    for g2, c in sorted(self._diff_cols[g].items())
                ]
                entries.append({"generator": gen_obj(g), "differential": col})
            out["degrees"][str(deg)] = entries
        return out


def build_complex(D: PlanarDiagram, A: FrobeniusAlgebra) -> ChainComplex:
    return ChainComplex(D, A)


@dataclass
class ChainElement:
    """A homogeneous chain: homological degree plus sparse coefficients."""

    degree: int
    vec: dict = field(default_factory=dict)

    def support(self):
        return set(self.vec)
