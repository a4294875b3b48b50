"""Exact coefficient rings: the integers, the rationals, and Z[h,t].

Every value is exact (Python ints, ``fractions.Fraction``, or sparse integer
polynomials in the two central variables h, t).  No floating point is used
anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class RingError(ValueError):
    """Raised on invalid ring operations (non-units, mismatched rings)."""


# ---------------------------------------------------------------------------
# Bivariate polynomials over Z
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Poly:
    """Sparse polynomial sum(c * h^i * t^j), terms sorted by (i, j).

    Terms with zero coefficient are never stored, so equality of normal
    forms is structural equality of the ``terms`` tuple.
    """

    terms: tuple[tuple[tuple[int, int], int], ...]

    @staticmethod
    def from_dict(d: dict[tuple[int, int], int]) -> "Poly":
        return Poly(tuple(sorted((e, c) for e, c in d.items() if c != 0)))

    @staticmethod
    def const(n: int) -> "Poly":
        return Poly((((0, 0), n),)) if n else Poly(())

    @staticmethod
    def coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, int):
            return Poly.const(x)
        raise RingError(f"cannot coerce {x!r} into Z[h,t]")

    def __add__(self, other) -> "Poly":
        other = Poly.coerce(other)
        d = dict(self.terms)
        for e, c in other.terms:
            d[e] = d.get(e, 0) + c
        return Poly.from_dict(d)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other) -> "Poly":
        return self + (-Poly.coerce(other))

    def __rsub__(self, other) -> "Poly":
        return Poly.coerce(other) + (-self)

    def __mul__(self, other) -> "Poly":
        other = Poly.coerce(other)
        d: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self.terms:
            for (i2, j2), c2 in other.terms:
                e = (i1 + i2, j1 + j2)
                d[e] = d.get(e, 0) + c1 * c2
        return Poly.from_dict(d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise RingError("negative power of a polynomial")
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_const(self) -> bool:
        return all(e == (0, 0) for e, _ in self.terms)

    def const_value(self) -> int:
        if not self.terms:
            return 0
        if self.is_const():
            return self.terms[0][1]
        raise RingError(f"{self} is not a constant")

    def evaluate(self, h_val, t_val):
        """Substitute values for h and t; ring of the result follows the inputs."""
        out = None
        for (i, j), c in self.terms:
            term = c * h_val**i * t_val**j
            out = term if out is None else out + term
        if out is None:
            return 0 * h_val  # zero of the target ring
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms, key=lambda ec: (-ec[0][0], -ec[0][1])):
            mono = "*".join(
                ([f"h^{i}" if i > 1 else "h"] if i else [])
                + ([f"t^{j}" if j > 1 else "t"] if j else [])
            )
            if mono:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    __repr__ = __str__

    def to_obj(self) -> list:
        return [[i, j, c] for (i, j), c in self.terms]

    @staticmethod
    def from_obj(data) -> "Poly":
        return Poly.from_dict({(int(i), int(j)): int(c) for i, j, c in data})


H = Poly((((1, 0), 1),))
T = Poly((((0, 1), 1),))


# ---------------------------------------------------------------------------
# Ring objects
# ---------------------------------------------------------------------------


class Ring:
    """Interface for exact coefficient arithmetic.

    Elements are plain Python values (int / Fraction / Poly); the ring object
    supplies construction, unit tests, and serialization.  All rings here are
    commutative with 1, and all values are immutable.
    """

    name: str

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def eq(self, x, y) -> bool:
        return x == y

    def is_zero(self, x) -> bool:
        return x == self.zero()

    def is_unit(self, x) -> bool:
        raise NotImplementedError

    def inverse(self, x):
        raise NotImplementedError

    def to_obj(self, x):
        raise NotImplementedError

    def from_obj(self, data):
        raise NotImplementedError

    def random_element(self, rng):
        raise NotImplementedError

    def __repr__(self):
        return self.name


class IntegerRing(Ring):
    name = "Z"

    def from_int(self, n: int) -> int:
        return int(n)

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool)

    def is_unit(self, x) -> bool:
        return x in (1, -1)

    def inverse(self, x) -> int:
        if not self.is_unit(x):
            raise RingError(f"{x} is not a unit in Z")
        return x

    def to_obj(self, x):
        return x

    def from_obj(self, data) -> int:
        return int(data)

    def random_element(self, rng) -> int:
        return rng.randint(-9, 9)


class RationalRing(Ring):
    name = "Q"

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def contains(self, x) -> bool:
        return isinstance(x, (Fraction, int)) and not isinstance(x, bool)

    def eq(self, x, y) -> bool:
        return Fraction(x) == Fraction(y)

    def is_unit(self, x) -> bool:
        return Fraction(x) != 0

    def inverse(self, x) -> Fraction:
        if not self.is_unit(x):
            raise RingError("0 is not a unit in Q")
        return 1 / Fraction(x)

    def to_obj(self, x):
        f = Fraction(x)
        return [f.numerator, f.denominator]

    def from_obj(self, data) -> Fraction:
        if isinstance(data, list):
            return Fraction(int(data[0]), int(data[1]))
        return Fraction(int(data))

    def random_element(self, rng) -> Fraction:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


class BivariatePolyRing(Ring):
    name = "Z[h,t]"

    def from_int(self, n: int) -> Poly:
        return Poly.const(n)

    def contains(self, x) -> bool:
        return isinstance(x, Poly)

    def eq(self, x, y) -> bool:
        return Poly.coerce(x) == Poly.coerce(y)

    def is_unit(self, x) -> bool:
        x = Poly.coerce(x)
        return x.is_const() and x.const_value() in (1, -1)

    def inverse(self, x) -> Poly:
        if not self.is_unit(x):
            raise RingError(f"{x} is not a unit in Z[h,t]")
        return x

    def to_obj(self, x):
        return Poly.coerce(x).to_obj()

    def from_obj(self, data) -> Poly:
        return Poly.from_obj(data)

    def random_element(self, rng) -> Poly:
        d: dict[tuple[int, int], int] = {}
        for _ in range(rng.randint(0, 3)):
            d[(rng.randint(0, 2), rng.randint(0, 2))] = rng.randint(-4, 4)
        return Poly.from_dict(d)


ZZ = IntegerRing()
QQ = RationalRing()
ZHT = BivariatePolyRing()


def specialize(p: Poly, h_val, t_val, target: Ring):
    """Evaluate p in Z[h,t] at (h, t) = (h_val, t_val) inside ``target``.

    This is the base-change homomorphism Z[h,t] -> target.
    """
    if not target.contains(h_val) or not target.contains(t_val):
        raise RingError(
            f"substitution values {h_val!r}, {t_val!r} do not live in {target}"
        )
    p = Poly.coerce(p)
    result = target.zero()
    for (i, j), c in p.terms:
        result = result + target.from_int(c) * h_val**i * t_val**j
    return result
