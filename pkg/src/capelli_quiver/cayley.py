"""Brute-force check of the Cayley-type identity for the pfaffian.

The pfaffian ``pf`` of the generic ``2m x 2m`` skew matrix is expanded as a
sparse polynomial in the entries ``x_ij`` (``i < j``). Applying the same
polynomial with ``x_ij`` replaced by ``∂/∂x_ij`` to ``pf^k`` must give

    pf(∂) pf^k = k (k + 2) ... (k + 2m - 2) pf^(k-1),

which is the scalar form of the ``Δ f`` relation of the skew algebra. The
constant is found by exact polynomial division, so the check does not
presuppose its value.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import perm, prod

from .algebra import AlgebraSpec
from .linalg import as_rat

__all__ = [
    "OracleGuardError",
    "SparsePoly",
    "DiffOp",
    "variables",
    "variable_names",
    "pfaffian",
    "apply_diff_op",
    "divide",
    "euler_operator",
    "CayleyVerdict",
    "verify_cayley",
    "CrossCheckReport",
    "cross_check_b",
    "MAX_M",
    "MAX_K",
]

MAX_M = 3
MAX_K = 6


class OracleGuardError(ValueError):
    """Requested size exceeds the desk-scale guard."""


class SparsePoly:
    """Sparse polynomial over Q: ``{exponent tuple: Fraction}`` without zero coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            c = as_rat(c)
            if c:
                exps = tuple(exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
                clean[exps] = c
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "SparsePoly":
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "SparsePoly":
        out = cls.__new__(cls)
        out.nvars = nvars
        out.terms = {k: v for k, v in terms.items() if v}
        return out

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def _check(self, other: "SparsePoly"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SparsePoly._raw(self.nvars, out)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly._raw(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def scale(self, c) -> "SparsePoly":
        c = as_rat(c)
        return SparsePoly._raw(self.nvars, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        self._check(other)
        out: dict = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                out[key] = out.get(key, 0) + va * vb
        return SparsePoly._raw(self.nvars, out)

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise ValueError("negative power")
        out = SparsePoly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self) -> list:
        """Terms in decreasing lexicographic order of exponents."""
        return sorted(self.terms.items(), reverse=True)

    def format(self, names=None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i}" for i in range(self.nvars)]
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"SparsePoly({self.format()})"


# A constant-coefficient operator is a polynomial read in the ∂ symbols.
DiffOp = SparsePoly


@lru_cache(maxsize=None)
def variables(m: int) -> tuple[tuple[int, int], ...]:
    """Index pairs ``(i, j)``, ``1 <= i < j <= 2m``, in lexicographic order."""
    n = 2 * m
    return tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


def variable_names(m: int) -> list[str]:
    return [f"x{i}{j}" if 2 * m < 10 else f"x{i}_{j}" for i, j in variables(m)]


@lru_cache(maxsize=None)
def pfaffian(m: int) -> SparsePoly:
    """Pfaffian of the generic ``2m x 2m`` skew matrix, by expansion along the first row."""
    if m < 1:
        raise ValueError("m must be positive")
    index = {pair: k for k, pair in enumerate(variables(m))}
    nvars = len(index)

    def expand(rows: tuple[int, ...]) -> dict:
        if not rows:
            return {(0,) * nvars: 1}
        first, rest = rows[0], rows[1:]
        out: dict = {}
        for pos, j in enumerate(rest):
            sign = -1 if pos % 2 else 1
            var = index[(first, j)]
            for exps, c in expand(rest[:pos] + rest[pos + 1:]).items():
                key = list(exps)
                key[var] += 1
                key = tuple(key)
                out[key] = out.get(key, 0) + sign * c
        return out

    return SparsePoly(nvars, expand(tuple(range(1, 2 * m + 1))))


def apply_diff_op(op: DiffOp, q: SparsePoly) -> SparsePoly:
    """Apply ``op`` (a polynomial in the partial derivatives) to ``q``."""
    op._check(q)
    out: dict = {}
    for alpha, c in op.terms.items():
        for beta, e in q.terms.items():
            if any(b < a for a, b in zip(alpha, beta)):
                continue
            factor = prod(perm(b, a) for a, b in zip(alpha, beta) if a)
            key = tuple(b - a for a, b in zip(alpha, beta))
            out[key] = out.get(key, 0) + c * e * factor
    return SparsePoly._raw(q.nvars, out)


def euler_operator(q: SparsePoly) -> SparsePoly:
    """``Σ x_i ∂_i q``, built from the individual partial derivatives."""
    out = SparsePoly(q.nvars)
    for i in range(q.nvars):
        x = SparsePoly.variable(q.nvars, i)
        out = out + x * apply_diff_op(x, q)
    return out


def divide(p: SparsePoly, g: SparsePoly) -> tuple[SparsePoly, SparsePoly]:
    """Multivariate division of ``p`` by ``g`` in lex order: ``p = quotient*g + remainder``.

    No monomial of the remainder is divisible by the leading monomial of ``g``.
    """
    p._check(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead, lc = max(g.terms.items())
    work = dict(p.terms)
    heap = [tuple(-e for e in k) for k in work]
    heapq.heapify(heap)
    quotient: dict = {}
    remainder: dict = {}
    while heap:
        key = tuple(-e for e in heapq.heappop(heap))
        c = work.pop(key, 0)
        if not c:
            continue
        if all(a >= b for a, b in zip(key, lead)):
            mono = tuple(a - b for a, b in zip(key, lead))
            q = c / lc
            quotient[mono] = quotient.get(mono, 0) + q
            for gk, gv in g.terms.items():
                if gk == lead:
                    continue
                tk = tuple(a + b for a, b in zip(mono, gk))
                if tk not in work:
                    heapq.heappush(heap, tuple(-e for e in tk))
                work[tk] = work.get(tk, 0) - q * gv
        else:
            remainder[key] = c
    return SparsePoly._raw(p.nvars, quotient), SparsePoly._raw(p.nvars, remainder)


# --------------------------------------------------------------------------
# verdicts


def _guard(m: int, k: int):
    if m < 1 or k < 1:
        raise ValueError("m and k must be positive")
    if m > MAX_M or k > MAX_K:
        raise OracleGuardError(f"(m={m}, k={k}) exceeds the guard m <= {MAX_M}, k <= {MAX_K}")


def predicted_constant(lambdas, k: int) -> Fraction:
    """``∏_j (k + λ_j)``: the value ``Δf`` takes on ``f^(k-1)``."""
    return prod((Fraction(k) + lam for lam in lambdas), start=Fraction(1))


@dataclass(frozen=True)
class CayleyVerdict:
    m: int
    k: int
    holds: bool
    constant: Fraction | None
    expected: Fraction
    residual: SparsePoly | None = None

    def __str__(self):
        c = "none" if self.constant is None else str(self.constant)
        return f"c = {c} {'PASS' if self.holds else 'FAIL'}"


@lru_cache(maxsize=None)
def measured_constant(m: int, k: int) -> tuple[Fraction | None, SparsePoly]:
    """Divide ``pf(∂) pf^k`` by ``pf^(k-1)``; the constant (or None) and the remainder.

    When the quotient is not a constant the second value is ``pf(∂)pf^k - q*pf^(k-1)``
    with the non-constant part of ``q`` kept, i.e. the full remainder of the
    failed match against a scalar multiple.
    """
    _guard(m, k)
    pf = pfaffian(m)
    lower = pf ** (k - 1)
    image = apply_diff_op(pf, lower * pf)
    quotient, remainder = divide(image, lower)
    zero = (0,) * pf.nvars
    if remainder.is_zero() and set(quotient.terms) <= {zero}:
        return quotient.terms.get(zero, Fraction(0)), remainder
    c = quotient.terms.get(zero, Fraction(0))
    return None, image - lower.scale(c)


def verify_cayley(m: int, k: int) -> CayleyVerdict:
    """Measure ``pf(∂) pf^k / pf^(k-1)`` and compare with ``∏_{j<m} (k + 2j)``."""
    expected = predicted_constant([2 * j for j in range(m)], k)
    constant, residual = measured_constant(m, k)
    if constant is None:
        return CayleyVerdict(m, k, False, None, expected, residual)
    holds = constant == expected
    res = None if holds else residual
    return CayleyVerdict(m, k, holds, constant, expected, res)


@dataclass(frozen=True)
class CrossCheckReport:
    rows: tuple  # (k, predicted, measured, match)

    @property
    def passed(self) -> bool:
        return all(r[3] for r in self.rows)

    def first_mismatch(self):
        return next((r for r in self.rows if not r[3]), None)

    def format(self) -> str:
        lines = ["k  predicted  measured  match"]
        for k, pred, meas, ok in self.rows:
            lines.append(f"{k}  {pred}  {'none' if meas is None else meas}  {'yes' if ok else 'no'}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def cross_check_b(spec: AlgebraSpec, m: int, kmax: int) -> CrossCheckReport:
    """Compare ``∏_j (k + λ_j)`` from ``spec`` with the pfaffian oracle for ``k = 1..kmax``."""
    if spec.d != m:
        raise ValueError(f"spec has d = {spec.d}, oracle needs d = m = {m}")
    _guard(m, kmax)
    rows = []
    for k in range(1, kmax + 1):
        predicted = predicted_constant(spec.lambdas, k)
        measured, _ = measured_constant(m, k)
        rows.append((k, predicted, measured, measured is not None and measured == predicted))
    return CrossCheckReport(tuple(rows))
