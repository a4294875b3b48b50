"""Exact linear algebra: Smith normal form over Z, elimination over Q.

Matrices are dense lists of lists of Python ints or Fractions.  Sizes here
are desk scale (hundreds of rows), so clarity wins over asymptotics; the
Smith normal form uses minimum-pivot selection to keep entries small.
"""

from __future__ import annotations

from fractions import Fraction


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> list[list[int]]:
    return [[0] * n for _ in range(m)]


def mat_mul(A, B):
    m, k = len(A), len(A[0]) if A else 0
    n = len(B[0]) if B else 0
    out = [[0] * n for _ in range(m)]
    for i in range(m):
        Ai = A[i]
        for p in range(k):
            a = Ai[p]
            if a:
                Bp = B[p]
                row = out[i]
                for j in range(n):
                    if Bp[j]:
                        row[j] += a * Bp[j]
    return out


def mat_vec(A, v):
    return [sum(A[i][j] * v[j] for j in range(len(v)) if v[j]) for i in range(len(A))]


def transpose(A):
    if not A:
        return []
    return [list(col) for col in zip(*A)]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


class SNF:
    """U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}.

    ``diag`` lists the nonzero diagonal entries (all positive); ``rank`` is
    their count.
    """

    def __init__(self, A: list[list[int]]):
        m = len(A)
        n = len(A[0]) if m else 0
        D = [list(map(int, row)) for row in A]
        U = identity(m)
        V = identity(n)
        t = 0
        while True:
            pivot = None
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    a = D[i][j]
                    if a and (best is None or abs(a) < best):
                        best = abs(a)
                        pivot = (i, j)
                        if best == 1:
                            break
                if best == 1:
                    break
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                D[t], D[pi] = D[pi], D[t]
                U[t], U[pi] = U[pi], U[t]
            if pj != t:
                for row in D:
                    row[t], row[pj] = row[pj], row[t]
                for row in V:
                    row[t], row[pj] = row[pj], row[t]
            while True:
                # clear column t
                changed = False
                for i in range(t + 1, m):
                    if D[i][t]:
                        q = D[i][t] // D[t][t]
                        if q:
                            for j in range(n):
                                D[i][j] -= q * D[t][j]
                            for j in range(m):
                                U[i][j] -= q * U[t][j]
                        if D[i][t]:
                            # remainder smaller than pivot: swap up and restart
                            D[t], D[i] = D[i], D[t]
                            U[t], U[i] = U[i], U[t]
                            changed = True
                if changed:
                    continue
                # clear row t
                changed = False
                for j in range(t + 1, n):
                    if D[t][j]:
                        q = D[t][j] // D[t][t]
                        if q:
                            for i in range(m):
                                D[i][j] -= q * D[i][t]
                            for i in range(n):
                                V[i][j] -= q * V[i][t]
                        if D[t][j]:
                            for row in D:
                                row[t], row[j] = row[j], row[t]
                            for row in V:
                                row[t], row[j] = row[j], row[t]
                            changed = True
                if not changed and all(D[i][t] == 0 for i in range(t + 1, m)):
                    break
            # enforce divisibility of the remaining block by the pivot
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % D[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is not None:
                for j in range(n):
                    D[t][j] += D[bad][j]
                for j in range(m):
                    U[t][j] += U[bad][j]
                continue  # redo reduction at the same t
            if D[t][t] < 0:
                for j in range(n):
                    D[t][j] = -D[t][j]
                for j in range(m):
                    U[t][j] = -U[t][j]
            t += 1
        self.D = D
        self.U = U
        self.V = V
        self.rank = t
        self.diag = [D[i][i] for i in range(t)]
        self.shape = (m, n)

    def solve(self, b: list[int]):
        """An integer solution x of A x = b, or None."""
        m, n = self.shape
        c = mat_vec(self.U, b)
        y = [0] * n
        for i in range(m):
            if i < self.rank:
                d = self.D[i][i]
                if c[i] % d:
                    return None
                y[i] = c[i] // d
            elif c[i]:
                return None
        return mat_vec(self.V, y)

    def kernel_basis(self) -> list[list[int]]:
        """Columns spanning the (saturated) integer kernel lattice of A."""
        m, n = self.shape
        return [[self.V[i][j] for i in range(n)] for j in range(self.rank, n)]


def int_solve(A, b):
    return SNF(A).solve(b)


# ---------------------------------------------------------------------------
# Rational elimination
# ---------------------------------------------------------------------------


def q_echelon(A: list[list[Fraction]]):
    """Row echelon form (in place copy); returns (R, pivots)."""
    R = [[Fraction(x) for x in row] for row in A]
    m = len(R)
    n = len(R[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if R[i][c]:
                pr = i
                break
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        pv = R[r][c]
        R[r] = [x / pv for x in R[r]]
        for i in range(m):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, pivots


def q_rank(A) -> int:
    return len(q_echelon(A)[1])


def q_solve(A, b):
    """A rational solution x of A x = b, or None."""
    m = len(A)
    n = len(A[0]) if m else 0
    aug = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(m)]
    R, pivots = q_echelon(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = R[r][n] - sum(R[r][j] * x[j] for j in range(c + 1, n))
    return x


def q_kernel_basis(A) -> list[list[Fraction]]:
    m = len(A)
    n = len(A[0]) if m else 0
    R, pivots = q_echelon(A)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * n
        x[fc] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            x[c] = -sum(R[r][j] * x[j] for j in range(c + 1, n))
        basis.append(x)
    return basis


def solve_linear(ring, A, b):
    """Exact solve of A x = b over the given coefficient ring (Z or Q)."""
    from .rings import QQ, ZZ

    if ring is ZZ:
        return int_solve(A, b)
    if ring is QQ:
        return q_solve(A, b)
    raise ValueError(f"no exact solver for ring {ring}")
