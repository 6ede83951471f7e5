"""Exact linear algebra over the integers and the rationals.

Small dense matrices only.  Everything runs on Python's arbitrary-precision
integers or on fractions.Fraction; no floating point is used anywhere, so
Smith forms, solves, kernels and signatures are exact and reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

Vector = tuple[int, ...]
QVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix with entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count must equal rows * cols")
        for e in self.entries:
            if not isinstance(e, int):
                raise ValueError("matrix entries must be integers")

    @classmethod
    def from_rows(cls, data: Iterable[Iterable[int]]) -> "IntMatrix":
        rows = [list(r) for r in data]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("rows must all have the same length")
        return cls(nrows, ncols, tuple(x for row in rows for x in row))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def from_diagonal(cls, rows: int, cols: int, diag: Sequence[int]) -> "IntMatrix":
        m = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            m[i][i] = d
        return cls.from_rows(m)

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.at(i, j) == self.at(j, i)
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def diagonal(self) -> Vector:
        return tuple(self.at(i, i) for i in range(min(self.rows, self.cols)))

    def matvec(self, v: Sequence[int]) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length must equal column count")
        return tuple(
            sum(self.at(i, j) * v[j] for j in range(self.cols))
            for i in range(self.rows)
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions must agree")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.at(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def direct_sum(self, other: "IntMatrix") -> "IntMatrix":
        rows = self.rows + other.rows
        cols = self.cols + other.cols
        m = [[0] * cols for _ in range(rows)]
        for i in range(self.rows):
            for j in range(self.cols):
                m[i][j] = self.at(i, j)
        for i in range(other.rows):
            for j in range(other.cols):
                m[self.rows + i][self.cols + j] = other.at(i, j)
        return IntMatrix.from_rows(m)


def det(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise ValueError("determinant needs a square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = a.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot_row is None:
                return 0
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form U * A * V = D with U, V unimodular.

    The diagonal of D is nonnegative and each entry divides the next.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diag(self) -> Vector:
        return self.D.diagonal()

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d != 0)


def _identity_lists(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def smith_normal_form(a: IntMatrix) -> SnfResult:
    """Diagonalize an integer matrix by unimodular row/column operations.

    The pivot is always the smallest nonzero entry in absolute value, ties
    broken by lowest row then column, so U and V are reproducible.
    """
    r, c = a.rows, a.cols
    m = a.to_rows()
    u = _identity_lists(r)
    v = _identity_lists(c)

    def swap_rows(i: int, j: int) -> None:
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def negate_row(i: int) -> None:
        m[i] = [-x for x in m[i]]
        u[i] = [-x for x in u[i]]

    def row_sub(i: int, j: int, q: int) -> None:
        if q:
            mi, mj = m[i], m[j]
            for k in range(c):
                mi[k] -= q * mj[k]
            ui, uj = u[i], u[j]
            for k in range(r):
                ui[k] -= q * uj[k]

    def col_sub(i: int, j: int, q: int) -> None:
        if q:
            for row in m:
                row[i] -= q * row[j]
            for row in v:
                row[i] -= q * row[j]

    t = 0
    bound = min(r, c)
    while t < bound:
        best = None
        for i in range(t, r):
            for j in range(t, c):
                e = m[i][j]
                if e and (best is None or abs(e) < best[0]):
                    best = (abs(e), i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        if m[t][t] < 0:
            negate_row(t)
        p = m[t][t]
        for i in range(t + 1, r):
            row_sub(i, t, m[i][t] // p)
        for j in range(t + 1, c):
            col_sub(j, t, m[t][j] // p)
        if any(m[i][t] for i in range(t + 1, r)) or any(
            m[t][j] for j in range(t + 1, c)
        ):
            continue  # a remainder smaller than the pivot appeared; re-pivot
        bad_row = None
        for i in range(t + 1, r):
            if any(m[i][j] % p for j in range(t + 1, c)):
                bad_row = i
                break
        if bad_row is not None:
            row_sub(t, bad_row, -1)  # pull the non-multiple into row t
            continue
        t += 1

    return SnfResult(
        U=IntMatrix.from_rows(u) if r else IntMatrix(0, 0, ()),
        D=IntMatrix.from_rows(m) if r else IntMatrix(0, c, ()),
        V=IntMatrix.from_rows(v) if c else IntMatrix(0, 0, ()),
    )


@dataclass(frozen=True)
class RationalSolve:
    """Outcome of a rational linear solve.

    ``solution`` is None when b is outside the column space; ``kernel``
    is always a basis of the rational kernel of A.
    """

    solution: QVector | None
    kernel: tuple[QVector, ...]


def solve_rational(a: IntMatrix, b: Sequence[int | Fraction]) -> RationalSolve:
    """Solve A x = b over Q by Gauss-Jordan elimination with Fractions."""
    r, c = a.rows, a.cols
    if len(b) != r:
        raise ValueError("right-hand side length must equal row count")
    aug = [
        [Fraction(a.at(i, j)) for j in range(c)] + [Fraction(b[i])] for i in range(r)
    ]
    pivot_cols: list[int] = []
    prow = 0
    for col in range(c):
        pivot = next((i for i in range(prow, r) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[prow], aug[pivot] = aug[pivot], aug[prow]
        inv = 1 / aug[prow][col]
        aug[prow] = [x * inv for x in aug[prow]]
        for i in range(r):
            if i != prow and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[prow])]
        pivot_cols.append(col)
        prow += 1
        if prow == r:
            break

    consistent = all(aug[i][c] == 0 for i in range(prow, r))
    solution: QVector | None = None
    if consistent:
        x = [Fraction(0)] * c
        for k, col in enumerate(pivot_cols):
            x[col] = aug[k][c]
        solution = tuple(x)

    free_cols = [j for j in range(c) if j not in pivot_cols]
    kernel = []
    for f in free_cols:
        z = [Fraction(0)] * c
        z[f] = Fraction(1)
        for k, col in enumerate(pivot_cols):
            z[col] = -aug[k][f]
        kernel.append(tuple(z))
    return RationalSolve(solution=solution, kernel=tuple(kernel))


class SignatureTriple(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int


@lru_cache(maxsize=None)
def signature(s: IntMatrix) -> SignatureTriple:
    """Inertia of a symmetric integer matrix by congruence diagonalization.

    Exact over Q (Sylvester's law); a block with zero diagonal and a nonzero
    off-diagonal entry is split by the e_i -> e_i + e_j substitution, which
    contributes one positive and one negative square.
    """
    if not s.is_symmetric():
        raise ValueError("signature needs a symmetric matrix")
    n = s.rows
    m = [[Fraction(s.at(i, j)) for j in range(n)] for i in range(n)]

    def add_into(i: int, j: int, f: Fraction) -> None:
        # congruence: row_i += f*row_j then col_i += f*col_j
        for k in range(n):
            m[i][k] += f * m[j][k]
        for k in range(n):
            m[k][i] += f * m[k][j]

    def swap(i: int, j: int) -> None:
        m[i], m[j] = m[j], m[i]
        for row in m:
            row[i], row[j] = row[j], row[i]

    n_plus = n_minus = n_zero = 0
    k = 0
    while k < n:
        if m[k][k] == 0:
            nz_diag = next((i for i in range(k + 1, n) if m[i][i] != 0), None)
            if nz_diag is not None:
                swap(k, nz_diag)
            else:
                partner = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
                if partner is None:
                    n_zero += 1
                    k += 1
                    continue
                add_into(k, partner, Fraction(1))  # m[k][k] becomes 2*m[k][partner]
        p = m[k][k]
        if p > 0:
            n_plus += 1
        else:
            n_minus += 1
        for i in range(k + 1, n):
            if m[i][k] != 0:
                add_into(i, k, -m[i][k] / p)
        k += 1
    return SignatureTriple(n_plus, n_minus, n_zero)


def _normalize_sign(v: Sequence[int]) -> Vector:
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def kernel_basis(a: IntMatrix) -> tuple[Vector, ...]:
    """Basis of the integer kernel lattice of A (primitive and saturated).

    The basis vectors are the kernel columns of the Smith V, each normalized
    so its first nonzero coordinate is positive.
    """
    snf = smith_normal_form(a)
    rank = snf.rank
    return tuple(
        _normalize_sign(snf.V.column(j)) for j in range(rank, a.cols)
    )


def solve_integer(a: IntMatrix, b: Sequence[int]) -> Vector | None:
    """One integer solution of A x = b, or None if none exists."""
    if len(b) != a.rows:
        raise ValueError("right-hand side length must equal row count")
    snf = smith_normal_form(a)
    y = snf.U.matvec(tuple(b))
    diag = snf.diag
    xprime = [0] * a.cols
    for i in range(a.rows):
        d = diag[i] if i < len(diag) else 0
        if d:
            if y[i] % d:
                return None
            xprime[i] = y[i] // d
        elif y[i]:
            return None
    return snf.V.matvec(tuple(xprime))


@lru_cache(maxsize=None)
def unimodular_inverse(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a matrix with determinant +/-1."""
    inv = invert_rational(m)
    if inv is None:
        raise ValueError("matrix is singular")
    rows = []
    for row in inv:
        out = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            out.append(x.numerator)
        rows.append(out)
    return IntMatrix.from_rows(rows) if m.rows else IntMatrix(0, 0, ())


def invert_rational(a: IntMatrix) -> tuple[QVector, ...] | None:
    """Inverse of a square matrix over Q, or None when singular."""
    if a.rows != a.cols:
        raise ValueError("inverse needs a square matrix")
    n = a.rows
    aug = [
        [Fraction(a.at(i, j)) for j in range(n)]
        + [Fraction(1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def solve_mod2(a: IntMatrix, b: Sequence[int]) -> Vector | None:
    """One solution of A x = b over F_2 (free variables set to zero)."""
    if len(b) != a.rows:
        raise ValueError("right-hand side length must equal row count")
    r, c = a.rows, a.cols
    aug = [[a.at(i, j) & 1 for j in range(c)] + [b[i] & 1] for i in range(r)]
    pivot_cols: list[int] = []
    prow = 0
    for col in range(c):
        pivot = next((i for i in range(prow, r) if aug[i][col]), None)
        if pivot is None:
            continue
        aug[prow], aug[pivot] = aug[pivot], aug[prow]
        for i in range(r):
            if i != prow and aug[i][col]:
                aug[i] = [(x + y) & 1 for x, y in zip(aug[i], aug[prow])]
        pivot_cols.append(col)
        prow += 1
    if any(aug[i][c] for i in range(prow, r)):
        return None
    x = [0] * c
    for k, col in enumerate(pivot_cols):
        x[col] = aug[k][c]
    return tuple(x)


def rank_mod2(a: IntMatrix) -> int:
    """Rank of A over F_2."""
    r, c = a.rows, a.cols
    m = [[a.at(i, j) & 1 for j in range(c)] for i in range(r)]
    rank = 0
    for col in range(c):
        pivot = next((i for i in range(rank, r) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(r):
            if i != rank and m[i][col]:
                m[i] = [(x + y) & 1 for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank
