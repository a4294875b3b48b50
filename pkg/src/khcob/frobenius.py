"""The rank-2 Frobenius algebra A = R[X]/(X^2 - hX - t).

Elements are stored in the basis {1, X} as pairs (e, x) meaning e*1 + x*X.
When X^2 - hX - t factors as (X - u)(X - v) the algebra carries *split*
data, and the color basis a = X - u, b = X - v diagonalizes the structure
maps; the color basis is always computed on demand, never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .rings import QQ, ZHT, ZZ, H, Poly, Ring, RingError, T

# An algebra element e*1 + x*X as the pair (e, x).
AlgElement = tuple


@dataclass(frozen=True)
class FrobeniusAlgebra:
    ring: Ring
    h: object
    t: object
    u: object = None
    v: object = None

    def __post_init__(self):
        for val in (self.h, self.t):
            if not self.ring.contains(val):
                raise RingError(f"{val!r} is not an element of {self.ring}")
        if (self.u is None) != (self.v is None):
            raise RingError("split data requires both u and v")
        if self.split:
            if not self.ring.eq(self.u + self.v, self.h):
                raise RingError("split data: u + v must equal h")
            if not self.ring.eq(-(self.u * self.v), self.t):
                raise RingError("split data: -u*v must equal t")

    # -- basic structure ----------------------------------------------------

    @property
    def split(self) -> bool:
        return self.u is not None

    @property
    def c(self):
        """The square root v - u of h^2 + 4t; requires split data."""
        if not self.split:
            raise RingError("algebra has no split data (u, v)")
        return self.v - self.u

    @property
    def c_inv(self):
        c = self.c
        if not self.ring.is_unit(c):
            raise RingError(f"c = {c} is not a unit in {self.ring}")
        return self.ring.inverse(c)

    def has_unit_c(self) -> bool:
        return self.split and self.ring.is_unit(self.c)

    def one(self) -> AlgElement:
        return (self.ring.one(), self.ring.zero())

    def x(self) -> AlgElement:
        return (self.ring.zero(), self.ring.one())

    def color_a(self) -> AlgElement:
        """a = X - u."""
        return (-self.u, self.ring.one())

    def color_b(self) -> AlgElement:
        """b = X - v."""
        return (-self.v, self.ring.one())

    def elem_eq(self, p: AlgElement, q: AlgElement) -> bool:
        return self.ring.eq(p[0], q[0]) and self.ring.eq(p[1], q[1])

    def add(self, p: AlgElement, q: AlgElement) -> AlgElement:
        return (p[0] + q[0], p[1] + q[1])

    def scale(self, r, p: AlgElement) -> AlgElement:
        return (r * p[0], r * p[1])

    # -- structure maps ------------------------------------------------------

    def mult(self, p: AlgElement, q: AlgElement) -> AlgElement:
        """m(p (x) q): bilinear extension of m(X (x) X) = hX + t."""
        e1, x1 = p
        e2, x2 = q
        xx = x1 * x2
        return (e1 * e2 + self.t * xx, e1 * x2 + x1 * e2 + self.h * xx)

    def comult(self, p: AlgElement) -> list[tuple]:
        """Delta(p) as a list of (coefficient, (label1, label2)) with labels in
        {0: generator 1, 1: generator X} of A (x) A."""
        e, x = p
        zero = self.ring.zero()
        # Delta(1) = X(x)1 + 1(x)X - h(1(x)1);  Delta(X) = X(x)X + t(1(x)1)
        coeffs = {
            (0, 0): -self.h * e + self.t * x,
            (0, 1): e + zero,
            (1, 0): e + zero,
            (1, 1): x + zero,
        }
        return [(c, lab) for lab, c in sorted(coeffs.items()) if not self.ring.is_zero(c)]

    def unit_map(self, r) -> AlgElement:
        """iota: R -> A."""
        return (r, self.ring.zero())

    def counit(self, p: AlgElement):
        """epsilon: A -> R with epsilon(1) = 0, epsilon(X) = 1."""
        return p[1]

    # -- structure constants in the {1, X} labeling --------------------------
    # Labels: 0 <-> 1,  1 <-> X.  These drive the cube complex.

    def mult_basis(self, l1: int, l2: int) -> dict[int, object]:
        out: dict[int, object] = {}
        if l1 == 0 and l2 == 0:
            out[0] = self.ring.one()
        elif l1 == 1 and l2 == 1:
            if not self.ring.is_zero(self.t):
                out[0] = self.t
            if not self.ring.is_zero(self.h):
                out[1] = self.h
        else:
            out[1] = self.ring.one()
        return out

    def comult_basis(self, l: int) -> dict[tuple[int, int], object]:
        one = self.ring.one()
        if l == 0:
            out = {(0, 1): one, (1, 0): one}
            if not self.ring.is_zero(self.h):
                out[(0, 0)] = -self.h
            return out
        out = {(1, 1): one}
        if not self.ring.is_zero(self.t):
            out[(0, 0)] = self.t
        return out

    def basis_element(self, label: int) -> AlgElement:
        return self.one() if label == 0 else self.x()

    # -- color basis ----------------------------------------------------------

    def color_factor(self, color: str) -> AlgElement:
        """The element a or b expanded over {1, X}."""
        if not self.split:
            raise RingError("colors need split data (u, v)")
        return self.color_a() if color == "a" else self.color_b()

    def color_basis_decompose(self, p: AlgElement) -> tuple:
        """Write p = alpha*a + beta*b; needs c = v - u to be a unit.

        Uses 1 = c^{-1}(a - b) and X = c^{-1}(v*a - u*b).
        """
        ci = self.c_inv
        e, x = p
        return (ci * (e + self.v * x), -(ci * (e + self.u * x)))


def universal() -> FrobeniusAlgebra:
    """A over Z[h,t] with generic h, t (no split data)."""
    return FrobeniusAlgebra(ZHT, H, T)


def determination() -> FrobeniusAlgebra:
    """(Z, h=1, t=0) with u=0, v=1, so c = 1: the sign-determination algebra."""
    return FrobeniusAlgebra(ZZ, 1, 0, u=0, v=1)


def khovanov_zz() -> FrobeniusAlgebra:
    """(Z, h=0, t=0): the original theory; u = v = 0, c = 0."""
    return FrobeniusAlgebra(ZZ, 0, 0, u=0, v=0)


def lee_qq() -> FrobeniusAlgebra:
    """(Q, h=0, t=1) with u=-1, v=1, c = 2."""
    one = QQ.one()
    return FrobeniusAlgebra(QQ, QQ.zero(), one, u=-one, v=one)


def split_qq(u: int, v: int) -> FrobeniusAlgebra:
    """(Q, h=u+v, t=-uv) with integer split values."""
    uf, vf = QQ.from_int(u), QQ.from_int(v)
    return FrobeniusAlgebra(QQ, uf + vf, -(uf * vf), u=uf, v=vf)


def split_zz(u: int, v: int) -> FrobeniusAlgebra:
    """(Z, h=u+v, t=-uv) with integer split values."""
    return FrobeniusAlgebra(ZZ, u + v, -(u * v), u=u, v=v)
