"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`; matrices are immutable
:class:`RatMatrix` values. Zero-row and zero-column matrices are legal and
behave as the zero map between the corresponding spaces.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

Rat = Fraction
Vector = tuple  # tuple of Fraction

__all__ = [
    "Rat",
    "RatMatrix",
    "NonSquareError",
    "NotIntegrallyGraded",
    "as_rat",
    "rref",
    "rank_kernel",
    "rank",
    "rank_factorization",
    "inverse",
    "is_nilpotent",
    "char_poly",
    "integer_roots",
    "integer_eigensplit",
    "column_space",
    "complement_basis",
]


class NonSquareError(ValueError):
    """Raised when an operation that needs a square matrix gets another shape."""


class NotIntegrallyGraded(ValueError):
    """Raised when a matrix has an eigenvalue outside the integers."""

    def __init__(self, message="not integrally graded"):
        super().__init__(message)


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction.

    Floats are refused so that no binary rounding can enter a computation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip().replace("−", "-")
        num, sep, den = text.partition("/")
        try:
            n = int(num)
            d = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"not a rational literal: {value!r}") from None
        if d == 0:
            raise ZeroDivisionError(f"zero denominator in {value!r}")
        return Fraction(n, d)
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


class RatMatrix:
    """Immutable ``rows x cols`` matrix of Fractions stored row-major."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable = ()):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        data = tuple(as_rat(x) for x in entries)
        if not data and rows * cols:
            data = (Fraction(0),) * (rows * cols)
        if len(data) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self.entries = data
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RatMatrix":
        columns = list(columns)
        if any(len(c) != rows for c in columns):
            raise ValueError("column length mismatch")
        return cls(rows, len(columns), [columns[j][i] for i in range(rows) for j in range(len(columns))])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.scalar(n, 1)

    @classmethod
    def scalar(cls, n: int, value) -> "RatMatrix":
        v = as_rat(value)
        z = Fraction(0)
        return cls(n, n, [v if i == j else z for i in range(n) for j in range(n)])

    @classmethod
    def block_diag(cls, *blocks: "RatMatrix") -> "RatMatrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = [[Fraction(0)] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls(rows, cols, [x for r in out for x in r])

    # access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.cols)]

    def replace(self, i: int, j: int, value) -> "RatMatrix":
        data = list(self.entries)
        data[i * self.cols + j] = as_rat(value)
        return RatMatrix(self.rows, self.cols, data)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RatMatrix":
        return RatMatrix(len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    # arithmetic ---------------------------------------------------------

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "RatMatrix":
        c = as_rat(c)
        return RatMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot compose {self.shape} with {other.shape}")
        ocols = [other.col(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in ocols:
                out.append(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)))
        return RatMatrix(self.rows, other.cols, out)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum((a * as_rat(b) for a, b in zip(self.row(i), v) if a), Fraction(0)) for i in range(self.rows))

    def shift(self, c) -> "RatMatrix":
        """Return ``self + c*I``."""
        if not self.is_square():
            raise NonSquareError("shift needs a square matrix")
        return self + RatMatrix.scalar(self.rows, c)

    def power(self, k: int) -> "RatMatrix":
        if not self.is_square():
            raise NonSquareError("power needs a square matrix")
        result = RatMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return RatMatrix(self.rows, self.cols + other.cols,
                         [x for i in range(self.rows) for x in self.row(i) + other.row(i)])

    def vstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return RatMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    # comparison / display -----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"


# --------------------------------------------------------------------------
# elimination


def _integer_rows(M: RatMatrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators; the row space is unchanged."""
    out = []
    for i in range(M.rows):
        r = M.row(i)
        lcm = 1
        for x in r:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        out.append([int(x * lcm) for x in r])
    return out


def _bareiss_echelon(A: list[list[int]], cols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination, in place.

    Every entry stays an integer minor of the input, so the divisions by the
    previous pivot are exact.
    """
    rows = len(A)
    prev = 1
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        k = next((i for i in range(r, rows) if A[i][c]), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        piv = A[r][c]
        prow = A[r]
        for i in range(r + 1, rows):
            row = A[i]
            a = row[c]
            for j in range(c + 1, cols):
                row[j] = (piv * row[j] - a * prow[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return A, pivots


def rref(M: RatMatrix) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    A, pivots = _bareiss_echelon(_integer_rows(M), M.cols)
    R = [[Fraction(x) for x in row] for row in A[:len(pivots)]]
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        p = R[r][c]
        R[r] = [x / p for x in R[r]]
        for i in range(r):
            a = R[i][c]
            if a:
                R[i] = [x - a * y for x, y in zip(R[i], R[r])]
    R.extend([[Fraction(0)] * M.cols for _ in range(M.rows - len(pivots))])
    return RatMatrix.from_rows(R, M.cols), pivots


def rank_kernel(M: RatMatrix) -> tuple[int, list[Vector]]:
    """Rank of ``M`` and a basis of its right kernel.

    Basis vectors are indexed by the free columns in increasing order; each
    has a 1 at its own free column and 0 at the other free columns.
    """
    R, pivots = rref(M)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * M.cols
        v[free] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -R[r, free]
        basis.append(tuple(v))
    return len(pivots), basis


def rank(M: RatMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    _, pivots = _bareiss_echelon(_integer_rows(M), M.cols)
    return len(pivots)


def rank_factorization(M: RatMatrix) -> tuple[RatMatrix, RatMatrix]:
    """Return ``(C, R)`` with ``C @ R == M``: pivot columns of M and nonzero RREF rows."""
    R, pivots = rref(M)
    C = M.submatrix(range(M.rows), pivots)
    return C, R.submatrix(range(len(pivots)), range(M.cols))


def inverse(M: RatMatrix) -> RatMatrix | None:
    """Exact inverse, or ``None`` when ``M`` is singular."""
    if not M.is_square():
        raise NonSquareError(f"inverse of a non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    R, pivots = rref(M.hstack(RatMatrix.identity(n)))
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return R.submatrix(range(n), range(n, 2 * n))


def is_nilpotent(M: RatMatrix) -> bool:
    """True iff ``M**n == 0`` with ``n`` the size of ``M``."""
    if not M.is_square():
        raise NonSquareError("nilpotency needs a square matrix")
    return M.power(M.rows).is_zero()


def column_space(M: RatMatrix) -> list[Vector]:
    """Basis of the column span, taken from the pivot columns of ``M``."""
    _, pivots = rref(M)
    return [M.col(j) for j in pivots]


def complement_basis(basis: Sequence[Vector], n: int) -> list[Vector]:
    """Standard basis vectors completing ``basis`` (assumed independent) to a basis of Q^n."""
    if not basis:
        return [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)]
    # RREF pivots are the coordinates the span already controls
    _, pivots = rref(RatMatrix.from_rows(basis, n))
    taken = set(pivots)
    return [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n) if j not in taken]


# --------------------------------------------------------------------------
# spectra


def char_poly(M: RatMatrix) -> list[Fraction]:
    """Characteristic polynomial ``det(xI - M)``, ascending coefficients (Faddeev-LeVerrier)."""
    if not M.is_square():
        raise NonSquareError("characteristic polynomial needs a square matrix")
    n = M.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = RatMatrix.zeros(n, n)
    for k in range(1, n + 1):
        Mk = (M @ Mk).shift(coeffs[n - k + 1])
        AM = M @ Mk
        trace = sum((AM[i, i] for i in range(n)), Fraction(0))
        coeffs[n - k] = -trace / k
    return coeffs


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _deflate(coeffs: list[Fraction], root: int) -> tuple[list[Fraction], Fraction]:
    """Synthetic division by ``(x - root)``: returns quotient and remainder."""
    out = []
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * root + c
        out.append(acc)
    remainder = out.pop()
    return out[::-1], remainder


def integer_roots(coeffs: Sequence) -> dict[int, int]:
    """Integer roots of a rational polynomial (ascending coefficients) with multiplicities."""
    poly = [as_rat(c) for c in coeffs]
    while poly and poly[-1] == 0:
        poly.pop()
    roots: dict[int, int] = {}
    if len(poly) <= 1:
        return roots
    while len(poly) > 1 and poly[0] == 0:
        poly.pop(0)
        roots[0] = roots.get(0, 0) + 1
    if len(poly) <= 1:
        return roots
    lcm = 1
    for c in poly:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    constant = int(poly[0] * lcm)
    for d in _divisors(constant):
        for r in (d, -d):
            while len(poly) > 1:
                q, rem = _deflate(poly, r)
                if rem:
                    break
                poly = q
                roots[r] = roots.get(r, 0) + 1
    return dict(sorted(roots.items()))


def integer_eigensplit(M: RatMatrix) -> dict[int, list[Vector]]:
    """Split ``Q^n`` into generalized eigenspaces of ``M`` for integer eigenvalues.

    Raises:
        NotIntegrallyGraded: if some eigenvalue of ``M`` is not an integer.
    """
    if not M.is_square():
        raise NonSquareError("eigensplit needs a square matrix")
    n = M.rows
    roots = integer_roots(char_poly(M))
    if sum(roots.values()) != n:
        raise NotIntegrallyGraded()
    pieces = {}
    for p, mult in roots.items():
        _, basis = rank_kernel(M.shift(-p).power(mult))
        pieces[p] = basis
    return pieces
