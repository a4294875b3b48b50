"""Homology of cube complexes: Smith-normal-form presentations over Z,
rank computations over Q, and decomposition of cycles in the canonical
basis when the color difference c is a unit."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cube import ChainComplex, ChainElement
from .diagram import PlanarDiagram, all_orientations
from .frobenius import FrobeniusAlgebra
from .rings import QQ, ZZ, RingError


class HomologyError(ValueError):
    pass


@dataclass
class DegreeData:
    free_rank: int
    torsion: list  # divisibility chain of orders > 1
    # presentation machinery (Z only): cycles are coordinatized through the
    # kernel basis K and the row transform U of the SNF of the image.
    _gens: list = None
    _K: list = None  # kernel basis, list of columns
    _K_snf: object = None
    _U: list = None
    _diag: list = None  # length = dim ker; 0 beyond the image rank

    def class_coords(self, dense_cycle: list) -> tuple:
        """Canonical coordinates of a cycle's homology class.

        Free coordinates are reported exactly, torsion coordinates modulo
        their order; coordinates with order 1 are dropped.
        """
        k = len(self._K)
        if k == 0:
            if any(dense_cycle):
                raise HomologyError("nonzero vector in a degree with no cycles")
            return ()
        y = self._K_snf.solve(dense_cycle)
        if y is None:
            raise HomologyError("vector is not a cycle")
        w = linalg.mat_vec(self._U, y)
        out = []
        for i in range(k):
            d = self._diag[i]
            if d == 1:
                continue
            out.append(w[i] % d if d > 1 else w[i])
        return tuple(out)


@dataclass
class HomologyPresentation:
    ring: object
    degrees: dict  # degree -> DegreeData

    def free_rank(self, deg: int) -> int:
        data = self.degrees.get(deg)
        return data.free_rank if data else 0

    def torsion(self, deg: int) -> list:
        data = self.degrees.get(deg)
        return list(data.torsion) if data else []

    def total_free_rank(self) -> int:
        return sum(d.free_rank for d in self.degrees.values())

    def total_torsion(self) -> list:
        out = []
        for deg in sorted(self.degrees):
            out.extend(self.degrees[deg].torsion)
        return out

    def summary(self) -> dict:
        return {
            str(deg): {"rank": data.free_rank, "torsion": list(data.torsion)}
            for deg, data in sorted(self.degrees.items())
            if data.free_rank or data.torsion
        }


def _kernel_matrix_int(M: list, n: int) -> tuple:
    """(kernel basis columns, SNF object used to solve K y = z).

    ``M`` is the outgoing differential on an n-dimensional degree; an empty
    ``M`` means the target degree is zero-dimensional.
    """
    if not M or not M[0]:
        K = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    else:
        K = linalg.SNF(M).kernel_basis()
    if not K:
        return [], None
    Kmat = [[K[j][i] for j in range(len(K))] for i in range(n)]
    return K, linalg.SNF(Kmat)


def homology_snf(C: ChainComplex) -> HomologyPresentation:
    """Per-degree free rank and torsion via Smith normal form.

    Works over Z (full presentation with torsion) and over Q (ranks only).
    Polynomial coefficient rings are rejected.
    """
    ring = C.ring
    if ring is ZZ:
        return _homology_int(C)
    if ring is QQ:
        return _homology_rat(C)
    raise RingError(f"homology needs Z or Q coefficients, got {ring}")


def _homology_int(C: ChainComplex) -> HomologyPresentation:
    degrees = {}
    for deg in C.degrees:
        n = C.gen_count(deg)
        if n == 0:
            continue
        M_out = [[int(x) for x in row] for row in C.d_matrix(deg)]
        K, K_snf = _kernel_matrix_int(M_out, n)
        k = len(K)
        if k == 0:
            degrees[deg] = DegreeData(0, [])
            continue
        M_in = C.d_matrix(deg - 1)
        cols_in = len(M_in[0]) if M_in and M_in[0] else 0
        Z = []
        if cols_in:
            for j in range(cols_in):
                b = [int(M_in[i][j]) for i in range(n)]
                y = K_snf.solve(b)
                if y is None:
                    raise HomologyError("image is not contained in the kernel")
                Z.append(y)
        if Z:
            Zmat = [[Z[j][i] for j in range(len(Z))] for i in range(k)]
            zsnf = linalg.SNF(Zmat)
            U = zsnf.U
            diag = list(zsnf.diag) + [0] * (k - zsnf.rank)
            free = k - zsnf.rank
            torsion = [d for d in zsnf.diag if d > 1]
        else:
            U = linalg.identity(k)
            diag = [0] * k
            free = k
            torsion = []
        degrees[deg] = DegreeData(
            free_rank=free,
            torsion=torsion,
            _gens=C.gen_list(deg),
            _K=K,
            _K_snf=K_snf,
            _U=U,
            _diag=diag,
        )
    return HomologyPresentation(ring=ZZ, degrees=degrees)


def _homology_rat(C: ChainComplex) -> HomologyPresentation:
    degrees = {}
    for deg in C.degrees:
        n = C.gen_count(deg)
        if n == 0:
            continue
        M_out = C.d_matrix(deg)
        rank_out = linalg.q_rank(M_out) if M_out and M_out[0] else 0
        M_in = C.d_matrix(deg - 1)
        rank_in = linalg.q_rank(M_in) if M_in and M_in[0] else 0
        degrees[deg] = DegreeData(free_rank=n - rank_out - rank_in, torsion=[])
    return HomologyPresentation(ring=QQ, degrees=degrees)


# ---------------------------------------------------------------------------
# Decomposition in the canonical basis
# ---------------------------------------------------------------------------


def decompose_in_canonical_basis(
    z: ChainElement,
    D: PlanarDiagram,
    A: FrobeniusAlgebra,
    C: ChainComplex | None = None,
) -> dict:
    """Coefficients lambda_o with [z] = sum_o lambda_o [alpha(D, o)].

    Exact linear solve against the matrix [canonical cycles | boundaries];
    requires c = v - u to be a unit (over Z this means c = +-1) so that the
    canonical classes freely generate homology.
    """
    from .canonical import canonical_cycle  # local import to avoid a cycle

    if not A.has_unit_c():
        raise RingError("canonical-basis decomposition needs c to be a unit")
    if A.ring not in (ZZ, QQ):
        raise RingError("canonical-basis decomposition solves over Z or Q")
    if C is None:
        C = ChainComplex(D, A)
    if not C.is_cycle(z.vec):
        raise HomologyError("input chain is not a cycle")
    deg = z.degree
    n = C.gen_count(deg)
    target = C.vec_dense(deg, z.vec)
    cols = []
    col_orients = []
    for o in all_orientations(D):
        cyc = canonical_cycle(D, o, A)
        if cyc.degree == deg:
            cols.append(C.vec_dense(deg, cyc.vec))
            col_orients.append(o)
    n_canon = len(cols)
    M_in = C.d_matrix(deg - 1)
    cols_in = len(M_in[0]) if M_in and M_in[0] else 0
    for j in range(cols_in):
        cols.append([M_in[i][j] for i in range(n)])
    if not cols:
        if any(not A.ring.is_zero(x) for x in target):
            raise HomologyError("no canonical classes in this degree")
        return {}
    M = [[cols[j][i] for j in range(len(cols))] for i in range(n)]
    x = linalg.solve_linear(A.ring, M, target)
    if x is None:
        raise HomologyError(
            "cycle is not a canonical-class combination modulo boundaries; "
            "this contradicts free generation and signals an internal bug"
        )
    out = {}
    for j, o in enumerate(col_orients):
        lam = x[j] if A.ring is ZZ else Fraction(x[j])
        if lam:
            out[o] = lam
    return out
