"""Graded windows: finite diagrams ``T_p ⇄ T_{p+d}`` with θ-blocks.

A :class:`GradedWindow` stores the pieces ``T_p`` of a graded module over
the algebra for the degrees ``p_min, p_min + d, ..., p_max``, together with

* ``theta[i]``: the action of θ on ``T_p`` (``(θ - p)`` must be nilpotent),
* ``fmaps[i]``: ``f`` from ``T_p`` to ``T_{p+d}``,
* ``dmaps[i]``: ``Δ`` from ``T_{p+d}`` back to ``T_p``.

Outside the window ``f`` and ``Δ`` are bijective (both b-polynomials are
units there), so a window covering every non-forced edge determines the
whole module; :func:`extend_window` reconstructs further pieces.

The torsion part is the largest sub-window on which ``f`` acts locally
nilpotently; reducing by it is how objects are compared in the quotient
category.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import AlgebraSpec, OperatorElement
from .linalg import (
    NotIntegrallyGraded,
    RatMatrix,
    column_space,
    complement_basis,
    integer_eigensplit,
    inverse,
    is_nilpotent,
    rank,
    rank_kernel,
    rref,
)

__all__ = [
    "WindowError",
    "GradedWindow",
    "Violation",
    "ValidationReport",
    "IsoVerdict",
    "validate_window",
    "nonforced_edges",
    "nonforced_roots",
    "canonical_degrees",
    "apply_operator",
    "torsion_spaces",
    "torsion_submodule",
    "mod_c0_reduce",
    "extend_window",
    "direct_sum",
    "change_basis",
    "intertwiner_space",
    "iso_test_mod_c0",
    "make_example",
    "zero_window",
]


class WindowError(ValueError):
    """Structural problem with a window or an unsupported request."""

    def __init__(self, code: str, message: str | None = None):
        super().__init__(message or code)
        self.code = code


@dataclass(frozen=True)
class GradedWindow:
    spec: AlgebraSpec
    p_min: int
    p_max: int
    dims: tuple
    theta: tuple
    fmaps: tuple
    dmaps: tuple

    def __post_init__(self):
        d = self.spec.d
        if self.p_max < self.p_min or (self.p_max - self.p_min) % d:
            raise WindowError("degrees", f"degrees [{self.p_min}, {self.p_max}] are not a progression of step {d}")
        n = (self.p_max - self.p_min) // d + 1
        dims = tuple(int(x) for x in self.dims)
        if len(dims) != n or any(x < 0 for x in dims):
            raise WindowError("dims", f"expected {n} nonnegative dimensions, got {list(self.dims)}")
        theta, fmaps, dmaps = tuple(self.theta), tuple(self.fmaps), tuple(self.dmaps)
        if len(theta) != n or len(fmaps) != n - 1 or len(dmaps) != n - 1:
            raise WindowError("shape", "need one theta block per degree and one f/delta map per edge")
        for i, t in enumerate(theta):
            if t.shape != (dims[i], dims[i]):
                raise WindowError("shape", f"theta at degree {self.p_min + i * d} has shape {t.shape}")
        for i in range(n - 1):
            if fmaps[i].shape != (dims[i + 1], dims[i]):
                raise WindowError("shape", f"f on edge {self.edge(i)} has shape {fmaps[i].shape}")
            if dmaps[i].shape != (dims[i], dims[i + 1]):
                raise WindowError("shape", f"delta on edge {self.edge(i)} has shape {dmaps[i].shape}")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "fmaps", fmaps)
        object.__setattr__(self, "dmaps", dmaps)

    @property
    def d(self) -> int:
        return self.spec.d

    @property
    def degrees(self) -> list[int]:
        return list(range(self.p_min, self.p_max + 1, self.spec.d))

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def index(self, p: int) -> int:
        if p < self.p_min or p > self.p_max or (p - self.p_min) % self.spec.d:
            raise WindowError("out-of-window", f"degree {p} is not in the window {self.degrees}")
        return (p - self.p_min) // self.spec.d

    def contains(self, p: int) -> bool:
        return self.p_min <= p <= self.p_max and (p - self.p_min) % self.spec.d == 0

    def edge(self, i: int) -> tuple[int, int]:
        p = self.p_min + i * self.spec.d
        return (p, p + self.spec.d)

    def dim(self, p: int) -> int:
        return self.dims[self.index(p)]

    def theta_at(self, p: int) -> RatMatrix:
        return self.theta[self.index(p)]

    def f_at(self, p: int) -> RatMatrix:
        """``f : T_p -> T_{p+d}``."""
        return self.fmaps[self.index(p)] if p < self.p_max else self._edge_missing(p)

    def delta_at(self, p: int) -> RatMatrix:
        """``Δ : T_{p+d} -> T_p``."""
        return self.dmaps[self.index(p)] if p < self.p_max else self._edge_missing(p)

    def _edge_missing(self, p):
        raise WindowError("out-of-window", f"edge ({p}, {p + self.spec.d}) leaves the window")

    def replace_map(self, kind: str, p: int, matrix: RatMatrix) -> "GradedWindow":
        """Copy with one block swapped; ``kind`` is ``"theta"``, ``"f"`` or ``"delta"``."""
        i = self.index(p)
        theta, fmaps, dmaps = list(self.theta), list(self.fmaps), list(self.dmaps)
        {"theta": theta, "f": fmaps, "delta": dmaps}[kind][i] = matrix
        return GradedWindow(self.spec, self.p_min, self.p_max, self.dims, theta, fmaps, dmaps)


def zero_window(spec: AlgebraSpec, p_min: int, p_max: int) -> GradedWindow:
    n = (p_max - p_min) // spec.d + 1
    z = RatMatrix.zeros(0, 0)
    return GradedWindow(spec, p_min, p_max, (0,) * n, (z,) * n, (z,) * (n - 1), (z,) * (n - 1))


# --------------------------------------------------------------------------
# forced and non-forced edges


def nonforced_roots(spec: AlgebraSpec, residue: int | None = 0) -> list[int]:
    """Integer ``p`` with ``Δf`` vanishing at ``θ = p``, i.e. ``p = -d(λ_j + 1)``.

    With ``residue`` set, only roots congruent to it modulo ``d`` are kept.
    """
    roots = set()
    for lam in spec.lambdas:
        p = -spec.d * (lam + 1)
        if p.denominator == 1:
            roots.add(int(p))
    if residue is not None:
        roots = {p for p in roots if (p - residue) % spec.d == 0}
    return sorted(roots)


def nonforced_edges(spec: AlgebraSpec, lo: int, hi: int, residue: int = 0) -> set[int]:
    """Lower degrees ``p`` in ``[lo, hi]`` of edges where ``f`` and ``Δ`` are not forced bijective."""
    if lo > hi:
        raise ValueError("need lo <= hi")
    b0, b1 = spec.b0, spec.b1
    start = lo + (residue - lo) % spec.d
    return {p for p in range(start, hi + 1, spec.d) if b1(p) == 0 or b0(p + spec.d) == 0}


def canonical_degrees(spec: AlgebraSpec, residue: int = 0) -> tuple[int, ...]:
    """Smallest step-``d`` progression holding both ends of every non-forced edge."""
    roots = nonforced_roots(spec, residue)
    if not roots:
        raise WindowError("no-nonforced-edges", "b never vanishes on this degree class")
    return tuple(range(roots[0], roots[-1] + spec.d + 1, spec.d))


# --------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    relation: str
    where: object  # degree for per-piece checks, (p, p+d) for edges
    residual: RatMatrix | None = None
    detail: str = ""

    def __str__(self):
        loc = f"p={self.where}" if isinstance(self.where, int) else f"edge {self.where}"
        text = f"{self.relation} at {loc}"
        return f"{text}: {self.detail}" if self.detail else text


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def relations(self) -> set[str]:
        return {v.relation for v in self.violations}

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(str(v) for v in self.violations)


def _spectrum_note(M: RatMatrix) -> str:
    try:
        pieces = integer_eigensplit(M)
    except NotIntegrallyGraded:
        return "not integrally graded"
    return "eigenvalues " + ", ".join(f"{p} (x{len(b)})" for p, b in pieces.items())


def validate_window(w: GradedWindow) -> ValidationReport:
    """Check nilpotency, the θ-commutation rules, both b-relations and edge coverage."""
    spec, d = w.spec, w.spec.d
    b0, b1 = spec.b0, spec.b1
    out = []
    for p, t in zip(w.degrees, w.theta):
        N = t.shift(-p)
        if not is_nilpotent(N):
            out.append(Violation("nilpotency", p, N.power(N.rows), _spectrum_note(t)))
    for i in range(len(w.dims) - 1):
        p, q = w.edge(i)
        tp, tq = w.theta[i], w.theta[i + 1]
        F, D = w.fmaps[i], w.dmaps[i]
        checks = (
            ("theta-f", tq @ F - F @ tp.shift(d)),
            ("theta-delta", tp @ D - D @ tq.shift(-d)),
            ("D∘F", D @ F - b1.eval_matrix(tp)),
            ("F∘D", F @ D - b0.eval_matrix(tq)),
        )
        for name, residual in checks:
            if not residual.is_zero():
                out.append(Violation(name, (p, q), residual))
    for e in nonforced_roots(spec, w.p_min):
        if not (w.p_min <= e and e + d <= w.p_max):
            out.append(Violation("coverage", (e, e + d), None, "non-forced edge outside the window"))
    return ValidationReport(tuple(out))


# --------------------------------------------------------------------------
# operators acting on windows


def apply_operator(w: GradedWindow, e: OperatorElement, p: int) -> RatMatrix:
    """Matrix of a homogeneous element from ``T_p`` to ``T_{p + weight}``."""
    if e.spec != w.spec:
        raise WindowError("spec-mismatch", "element and window use different algebras")
    if not e.is_homogeneous():
        raise WindowError("inhomogeneous", "element mixes several weights")
    n = w.dim(p)
    if e.is_zero():
        return RatMatrix.zeros(n, n)
    (level, poly), = e.layers.items()
    d = w.spec.d
    target = p + level * d
    w.index(target)
    if level >= 0:
        M = poly.eval_matrix(w.theta_at(p))
        for k in range(level):
            M = w.f_at(p + k * d) @ M
        return M
    M = RatMatrix.identity(n)
    for k in range(-level):
        M = w.delta_at(p - (k + 1) * d) @ M
    return poly.eval_matrix(w.theta_at(target)) @ M


# --------------------------------------------------------------------------
# subspaces and induced maps


def _basis_matrix(basis: Sequence, n: int) -> RatMatrix:
    return RatMatrix.from_columns(basis, n)


def _left_inverse(B: RatMatrix) -> RatMatrix:
    if B.cols == 0:
        return RatMatrix.zeros(0, B.rows)
    G = inverse(B.T @ B)
    return G @ B.T


def _span(vectors: Sequence, n: int) -> list:
    if not vectors:
        return []
    return column_space(_basis_matrix(vectors, n))


def torsion_spaces(w: GradedWindow) -> list[list[tuple]]:
    """Per-degree bases of the f-torsion: kernels of the f-chain up to ``p_max``, closed under the action."""
    n = len(w.dims)
    K = []
    chain = RatMatrix.identity(w.dims[-1])
    chains = [chain]
    for i in range(n - 2, -1, -1):
        chain = chain @ w.fmaps[i]
        chains.append(chain)
    chains.reverse()
    for i in range(n):
        _, basis = rank_kernel(chains[i])
        K.append(basis)
    while True:
        changed = False
        for i in range(n):
            vecs = list(K[i])
            vecs += [w.theta[i].apply(v) for v in K[i]]
            if i > 0:
                vecs += [w.fmaps[i - 1].apply(v) for v in K[i - 1]]
            if i < n - 1:
                vecs += [w.dmaps[i].apply(v) for v in K[i + 1]]
            span = _span(vecs, w.dims[i])
            if len(span) != len(K[i]):
                changed = True
            K[i] = span
        if not changed:
            return K


def _restrict(w: GradedWindow, bases: list) -> GradedWindow:
    B = [_basis_matrix(b, w.dims[i]) for i, b in enumerate(bases)]
    L = [_left_inverse(b) for b in B]
    n = len(w.dims)
    theta = [L[i] @ w.theta[i] @ B[i] for i in range(n)]
    fmaps = [L[i + 1] @ w.fmaps[i] @ B[i] for i in range(n - 1)]
    dmaps = [L[i] @ w.dmaps[i] @ B[i + 1] for i in range(n - 1)]
    return GradedWindow(w.spec, w.p_min, w.p_max, [len(b) for b in bases], theta, fmaps, dmaps)


def _quotient(w: GradedWindow, bases: list) -> GradedWindow:
    n = len(w.dims)
    Q, S = [], []
    for i, sub in enumerate(bases):
        dim = w.dims[i]
        comp = complement_basis(sub, dim)
        full = _basis_matrix(list(sub) + comp, dim)
        inv = inverse(full)
        Q.append(inv.submatrix(range(len(sub), dim), range(dim)))
        S.append(_basis_matrix(comp, dim))
    theta = [Q[i] @ w.theta[i] @ S[i] for i in range(n)]
    fmaps = [Q[i + 1] @ w.fmaps[i] @ S[i] for i in range(n - 1)]
    dmaps = [Q[i] @ w.dmaps[i] @ S[i + 1] for i in range(n - 1)]
    return GradedWindow(w.spec, w.p_min, w.p_max, [S[i].cols for i in range(n)], theta, fmaps, dmaps)


def torsion_submodule(w: GradedWindow) -> GradedWindow:
    """The f-torsion sub-window, written in the bases from :func:`torsion_spaces`."""
    return _restrict(w, torsion_spaces(w))


def mod_c0_reduce(w: GradedWindow) -> GradedWindow:
    """Quotient of ``w`` by its f-torsion."""
    return _quotient(w, torsion_spaces(w))


# --------------------------------------------------------------------------
# extension, sums, base change


def extend_window(w: GradedWindow, lo: int, hi: int) -> GradedWindow:
    """Grow the window to ``[lo, hi]`` using the forced bijections past its ends.

    Raises:
        WindowError: if ``lo``/``hi`` are in another degree class, or an edge
            to be crossed is non-forced.
    """
    spec, d = w.spec, w.spec.d
    if (lo - w.p_min) % d or (hi - w.p_min) % d:
        raise WindowError("degree-class", "target range is in another degree class")
    lo, hi = min(lo, w.p_min), max(hi, w.p_max)
    dims, theta = list(w.dims), list(w.theta)
    fmaps, dmaps = list(w.fmaps), list(w.dmaps)
    top = w.p_max
    while top < hi:
        if spec.b1(top) == 0:
            raise WindowError("nonforced-extension", f"edge ({top}, {top + d}) is not forced")
        t = theta[-1]
        dims.append(dims[-1])
        theta.append(t.shift(d))
        fmaps.append(RatMatrix.identity(t.rows))
        dmaps.append(spec.b1.eval_matrix(t))
        top += d
    bottom = w.p_min
    while bottom > lo:
        if spec.b0(bottom) == 0:
            raise WindowError("nonforced-extension", f"edge ({bottom - d}, {bottom}) is not forced")
        t = theta[0]
        dims.insert(0, dims[0])
        theta.insert(0, t.shift(-d))
        fmaps.insert(0, spec.b0.eval_matrix(t))
        dmaps.insert(0, RatMatrix.identity(t.rows))
        bottom -= d
    return GradedWindow(spec, lo, hi, dims, theta, fmaps, dmaps)


def _align(w1: GradedWindow, w2: GradedWindow) -> tuple[GradedWindow, GradedWindow]:
    if w1.spec != w2.spec:
        raise WindowError("spec-mismatch", "windows use different algebras")
    lo, hi = min(w1.p_min, w2.p_min), max(w1.p_max, w2.p_max)
    return extend_window(w1, lo, hi), extend_window(w2, lo, hi)


def direct_sum(w1: GradedWindow, w2: GradedWindow) -> GradedWindow:
    """Block-diagonal sum over the union of the two degree ranges."""
    a, b = _align(w1, w2)
    n = len(a.dims)
    return GradedWindow(
        a.spec, a.p_min, a.p_max,
        [x + y for x, y in zip(a.dims, b.dims)],
        [RatMatrix.block_diag(a.theta[i], b.theta[i]) for i in range(n)],
        [RatMatrix.block_diag(a.fmaps[i], b.fmaps[i]) for i in range(n - 1)],
        [RatMatrix.block_diag(a.dmaps[i], b.dmaps[i]) for i in range(n - 1)],
    )


def change_basis(w: GradedWindow, P: Sequence[RatMatrix]) -> GradedWindow:
    """Transport ``w`` along invertible ``P[i] : T_p -> T'_p``."""
    Pinv = [inverse(m) for m in P]
    if any(m is None for m in Pinv):
        raise WindowError("singular", "base change must be invertible at every degree")
    n = len(w.dims)
    return GradedWindow(
        w.spec, w.p_min, w.p_max, w.dims,
        [P[i] @ w.theta[i] @ Pinv[i] for i in range(n)],
        [P[i + 1] @ w.fmaps[i] @ Pinv[i] for i in range(n - 1)],
        [P[i] @ w.dmaps[i] @ Pinv[i + 1] for i in range(n - 1)],
    )


# --------------------------------------------------------------------------
# morphisms and isomorphism


def _entry_rows(pairs, n_unknowns):
    # pairs: list of dict {unknown index: coefficient} -> dense rows
    rows = []
    for coeffs in pairs:
        if coeffs:
            row = [Fraction(0)] * n_unknowns
            for k, c in coeffs.items():
                row[k] += c
            rows.append(row)
    return rows


def intertwiner_space(w1: GradedWindow, w2: GradedWindow) -> list[list[RatMatrix]]:
    """Basis of degree-preserving families ``H_p : T_p -> T'_p`` commuting with θ, f, Δ.

    Both windows must already share degrees.
    """
    if w1.spec != w2.spec or (w1.p_min, w1.p_max) != (w2.p_min, w2.p_max):
        raise WindowError("spec-mismatch", "windows must share algebra and degrees")
    n = len(w1.dims)
    offsets, total = [], 0
    for i in range(n):
        offsets.append(total)
        total += w2.dims[i] * w1.dims[i]

    def var(i, a, b):  # entry (a, b) of H_i
        return offsets[i] + a * w1.dims[i] + b

    equations = []

    def add_relation(i_right, X, Y, i_left):
        # H_{i_right} X - Y H_{i_left} = 0, with X : src -> T_{i_right}, Y : T'_{i_left} -> tgt
        rows, cols = Y.rows, X.cols
        for r in range(rows):
            for c in range(cols):
                eq = {}
                for k in range(X.rows):
                    x = X[k, c]
                    if x:
                        key = var(i_right, r, k)
                        eq[key] = eq.get(key, 0) + x
                for k in range(Y.cols):
                    y = Y[r, k]
                    if y:
                        key = var(i_left, k, c)
                        eq[key] = eq.get(key, 0) - y
                equations.append(eq)

    for i in range(n):
        add_relation(i, w1.theta[i], w2.theta[i], i)
    for i in range(n - 1):
        add_relation(i + 1, w1.fmaps[i], w2.fmaps[i], i)
        add_relation(i, w1.dmaps[i], w2.dmaps[i], i + 1)

    rows = _entry_rows(equations, total)
    system = RatMatrix.from_rows(rows, total) if rows else RatMatrix.zeros(0, total)
    _, kernel = rank_kernel(system)
    basis = []
    for v in kernel:
        basis.append([
            RatMatrix(w2.dims[i], w1.dims[i], v[offsets[i]:offsets[i] + w2.dims[i] * w1.dims[i]])
            for i in range(n)
        ])
    return basis


@dataclass(frozen=True)
class IsoVerdict:
    isomorphic: bool
    reason: str
    witness: tuple | None = None
    degrees: tuple = ()
    reduced: tuple = field(default=(), repr=False)

    def __bool__(self):
        return self.isomorphic


def _combine(basis, coeffs, i):
    M = basis[0][i].scale(coeffs[0])
    for c, H in zip(coeffs[1:], basis[1:]):
        if c:
            M = M + H[i].scale(c)
    return M


def _degree_admits_invertible(mats: list[RatMatrix], n: int, rng: random.Random) -> bool:
    """Whether the span of ``mats`` (n x n) contains an invertible matrix."""
    if n == 0:
        return True
    if not mats:
        return False
    independent = _independent(mats, n * n)
    if rank(_hcat(independent)) < n or rank(_vcat(independent)) < n:
        return False
    k = len(independent)
    for _ in range(32):
        coeffs = [rng.randint(-n, n) for _ in range(k)]
        if rank(_lin(independent, coeffs)) == n:
            return True
    # det of the generic combination has degree n, so a grid with n+1 values per axis decides it
    for coeffs in itertools.product(range(n + 1), repeat=k):
        if rank(_lin(independent, coeffs)) == n:
            return True
    return False


def _independent(mats: list[RatMatrix], size: int) -> list[RatMatrix]:
    flat = RatMatrix.from_rows([m.entries for m in mats], size)
    _, pivots = rref(flat.T)
    return [mats[k] for k in pivots]


def _lin(mats, coeffs):
    out = mats[0].scale(coeffs[0])
    for c, m in zip(coeffs[1:], mats[1:]):
        if c:
            out = out + m.scale(c)
    return out


def _hcat(mats):
    out = mats[0]
    for m in mats[1:]:
        out = out.hstack(m)
    return out


def _vcat(mats):
    out = mats[0]
    for m in mats[1:]:
        out = out.vstack(m)
    return out


def iso_test_mod_c0(w1: GradedWindow, w2: GradedWindow, seed: int = 0) -> IsoVerdict:
    """Decide whether ``w1`` and ``w2`` agree after removing f-torsion.

    An isomorphic verdict carries an explicit witness: invertible matrices
    ``H_p`` with ``H Θ = Θ' H``, ``H F = F' H`` and ``H D = D' H``.
    """
    if w1.spec != w2.spec:
        raise WindowError("spec-mismatch", "windows use different algebras")
    r1, r2 = mod_c0_reduce(w1), mod_c0_reduce(w2)
    d = w1.spec.d
    if (r1.p_min - r2.p_min) % d:
        if r1.total_dim == 0 and r2.total_dim == 0:
            return IsoVerdict(True, "both vanish after reduction", (), (), (r1, r2))
        return IsoVerdict(False, "degree classes differ", None, (), (r1, r2))
    r1, r2 = _align(r1, r2)
    degrees = tuple(r1.degrees)
    if r1.dims != r2.dims:
        return IsoVerdict(False, "dims differ after reduction", None, degrees, (r1, r2))
    basis = intertwiner_space(r1, r2)
    n_total = r1.total_dim
    if n_total == 0:
        return IsoVerdict(True, "both vanish after reduction", tuple(RatMatrix.zeros(0, 0) for _ in degrees), degrees, (r1, r2))
    rng = random.Random(seed)
    for i, p in enumerate(degrees):
        if not _degree_admits_invertible([H[i] for H in basis], r1.dims[i], rng):
            return IsoVerdict(False, f"no invertible intertwiner at degree {p}", None, degrees, (r1, r2))
    # every degree admits an invertible member, so the product of the
    # determinants is a nonzero polynomial of degree n_total in the coefficients
    k = len(basis)

    def try_coeffs(coeffs):
        family = [_combine(basis, coeffs, i) for i in range(len(degrees))]
        if all(rank(M) == M.rows for M in family):
            return tuple(family)
        return None

    for _ in range(32):
        found = try_coeffs([rng.randint(-n_total, n_total) for _ in range(k)])
        if found:
            return IsoVerdict(True, "invertible intertwiner found", found, degrees, (r1, r2))
    for coeffs in itertools.product(range(n_total + 1), repeat=k):
        found = try_coeffs(list(coeffs))
        if found:
            return IsoVerdict(True, "invertible intertwiner found", found, degrees, (r1, r2))
    raise AssertionError("grid search exhausted although every degree admits an invertible intertwiner")


# --------------------------------------------------------------------------
# standard examples


def make_example(spec: AlgebraSpec, kind: str, degrees: tuple[int, int] | None = None) -> GradedWindow:
    """Standard windows on the canonical degrees.

    ``"structure"``: the polynomial ring in f (one line at degree 0).
    ``"delta"``: one line at the bottom degree, all maps zero (f-torsion).
    ``"localized"``: a line at every degree, ``f = 1`` and ``Δ`` the scalar
    ``b0(p + d)`` on each edge. Only this kind accepts explicit ``degrees``
    ``(p_min, p_max)``, which may lie in any degree class.
    """
    d = spec.d
    if kind == "localized":
        p_min, p_max = degrees if degrees is not None else _canonical_range(spec)
        w = zero_window(spec, p_min, p_max)  # validates the progression
        n = len(w.dims)
        pts = w.degrees
        return GradedWindow(
            spec, p_min, p_max, (1,) * n,
            [RatMatrix.scalar(1, p) for p in pts],
            [RatMatrix.identity(1) for _ in range(n - 1)],
            [RatMatrix.scalar(1, spec.b0(p + d)) for p in pts[:-1]],
        )
    if kind not in ("structure", "delta"):
        raise WindowError("unknown-kind", f"unknown example kind {kind!r}")
    if degrees is not None:
        raise WindowError("unsupported", f"{kind} windows live on the canonical degrees")
    if not spec.is_skew_preset():
        raise WindowError("unsupported", f"{kind} example is defined for the skew presets only")
    p_min, p_max = _canonical_range(spec)
    n = (p_max - p_min) // d + 1
    slot = n - 1 if kind == "structure" else 0
    p = p_min + slot * d
    dims = [0] * n
    dims[slot] = 1
    theta = [RatMatrix.scalar(1, p) if i == slot else RatMatrix.zeros(0, 0) for i in range(n)]
    fmaps = [RatMatrix.zeros(dims[i + 1], dims[i]) for i in range(n - 1)]
    dmaps = [RatMatrix.zeros(dims[i], dims[i + 1]) for i in range(n - 1)]
    return GradedWindow(spec, p_min, p_max, dims, theta, fmaps, dmaps)


def _canonical_range(spec):
    degs = canonical_degrees(spec)
    return degs[0], degs[-1]
