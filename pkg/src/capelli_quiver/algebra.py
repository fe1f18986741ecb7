"""The invariant-operator algebra generated by ``f``, ``Δ`` and the Euler field ``θ``.

The algebra is fixed by a degree ``d`` and rationals ``λ_0 = 0, λ_1, ..., λ_{d-1}``:

    [θ, f] = d f,    [θ, Δ] = -d Δ,
    f Δ = ∏ (θ/d + λ_j),    Δ f = ∏ (θ/d + λ_j + 1).

Every element has a unique expansion in the basis ``f^a p(θ)`` (a ≥ 0) and
``p(θ) Δ^c`` (c ≥ 1); :class:`OperatorElement` stores exactly that expansion,
so equality of elements is equality of their layer maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

from .linalg import RatMatrix, as_rat

__all__ = [
    "AlgebraError",
    "AlgebraSpec",
    "ThetaPoly",
    "OperatorElement",
    "make_algebra",
    "skew_preset",
    "b_polynomial",
    "normalize_mul",
    "elements_equal",
]


class AlgebraError(ValueError):
    """Invalid algebra data. ``code`` is one of the short error tags below."""

    def __init__(self, code: str, message: str | None = None):
        super().__init__(message or code)
        self.code = code


# --------------------------------------------------------------------------
# univariate polynomials in θ


class ThetaPoly:
    """Dense univariate polynomial over Q, ascending coefficients, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rat(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def constant(cls, value) -> "ThetaPoly":
        return cls((value,))

    @classmethod
    def theta(cls) -> "ThetaPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, ThetaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ThetaPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "ThetaPoly") -> "ThetaPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return ThetaPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "ThetaPoly":
        return ThetaPoly([-x for x in self.coeffs])

    def __sub__(self, other: "ThetaPoly") -> "ThetaPoly":
        return self + (-other)

    def __mul__(self, other) -> "ThetaPoly":
        if not isinstance(other, ThetaPoly):
            c = as_rat(other)
            return ThetaPoly([c * x for x in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return ThetaPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return ThetaPoly(out)

    __rmul__ = __mul__

    def shift(self, c) -> "ThetaPoly":
        """Return ``p(θ + c)``."""
        c = as_rat(c)
        if c == 0 or len(self.coeffs) <= 1:
            return self
        n = len(self.coeffs)
        out = [Fraction(0)] * n
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            power = Fraction(1)
            for i in range(k, -1, -1):
                out[i] += a * comb(k, i) * power
                power *= c
        return ThetaPoly(out)

    def __call__(self, x) -> Fraction:
        x = as_rat(x)
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def eval_matrix(self, M: RatMatrix) -> RatMatrix:
        """Horner evaluation at a square matrix."""
        n = M.rows
        acc = RatMatrix.zeros(n, n)
        for a in reversed(self.coeffs):
            acc = (acc @ M).shift(a)
        return acc

    def __repr__(self):
        return f"ThetaPoly({self.format()})"

    def format(self, var: str = "t") -> str:
        """Render as e.g. ``t^2 + 3/2*t - 1``; the output parses back."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[k]
            if not a:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _product(factors: Iterable[ThetaPoly]) -> ThetaPoly:
    out = ThetaPoly.constant(1)
    for p in factors:
        out = out * p
    return out


# --------------------------------------------------------------------------
# algebra data


@dataclass(frozen=True)
class AlgebraSpec:
    """Degree ``d`` of ``f`` and the rationals ``λ_0 = 0, ..., λ_{d-1}``."""

    d: int
    lambdas: tuple

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise AlgebraError("d-nonpositive", f"d must be a positive integer, got {self.d!r}")
        lams = tuple(as_rat(x) for x in self.lambdas)
        if len(lams) != self.d:
            raise AlgebraError("length-mismatch", f"expected {self.d} lambdas, got {len(lams)}")
        if lams[0] != 0:
            raise AlgebraError("lambda0-nonzero", f"lambda_0 must be 0, got {lams[0]}")
        object.__setattr__(self, "lambdas", lams)

    @property
    def b0(self) -> ThetaPoly:
        """The polynomial equal to ``f Δ``."""
        return b_polynomial(self, 0)

    @property
    def b1(self) -> ThetaPoly:
        """The polynomial equal to ``Δ f``."""
        return b_polynomial(self, 1)

    def is_skew_preset(self) -> bool:
        return all(lam == 2 * j for j, lam in enumerate(self.lambdas))

    # generators
    @property
    def f(self) -> "OperatorElement":
        return OperatorElement(self, {1: ThetaPoly.constant(1)})

    @property
    def delta(self) -> "OperatorElement":
        return OperatorElement(self, {-1: ThetaPoly.constant(1)})

    @property
    def theta(self) -> "OperatorElement":
        return OperatorElement(self, {0: ThetaPoly.theta()})

    def scalar(self, c) -> "OperatorElement":
        return OperatorElement(self, {0: ThetaPoly.constant(c)})

    def poly(self, p: ThetaPoly, level: int = 0) -> "OperatorElement":
        return OperatorElement(self, {level: p})

    def zero(self) -> "OperatorElement":
        return OperatorElement(self, {})

    def describe(self) -> str:
        lams = ", ".join(str(x) for x in self.lambdas)
        return f"d = {self.d}, lambdas = ({lams})"


def make_algebra(d: int, lambdas: Sequence) -> AlgebraSpec:
    """Validated :class:`AlgebraSpec`; raises :class:`AlgebraError` with a code on bad data."""
    if not lambdas and isinstance(d, int) and d >= 1:
        raise AlgebraError("length-mismatch", "empty lambda sequence")
    return AlgebraSpec(d, tuple(lambdas))


def skew_preset(m: int) -> AlgebraSpec:
    """Spec for 2m x 2m skew-symmetric matrices: ``d = m`` and ``λ_j = 2j``."""
    return make_algebra(m, [2 * j for j in range(m)])


@lru_cache(maxsize=None)
def b_polynomial(spec: AlgebraSpec, shift=0) -> ThetaPoly:
    """Expand ``∏_j (θ/d + λ_j + shift)`` over Q."""
    shift = as_rat(shift)
    inv_d = Fraction(1, spec.d)
    return _product(ThetaPoly((lam + shift, inv_d)) for lam in spec.lambdas)


@lru_cache(maxsize=None)
def _f_pow_delta_pow(spec: AlgebraSpec, c: int) -> ThetaPoly:
    # f^c Δ^c = ∏_{i<c} b0(θ - i d)
    b0 = spec.b0
    return _product(b0.shift(-i * spec.d) for i in range(c))


@lru_cache(maxsize=None)
def _delta_pow_f_pow(spec: AlgebraSpec, c: int) -> ThetaPoly:
    # Δ^c f^c = ∏_{i<c} b1(θ + i d)
    b1 = spec.b1
    return _product(b1.shift(i * spec.d) for i in range(c))


def _mul_layers(spec: AlgebraSpec, a: int, p: ThetaPoly, b: int, q: ThetaPoly) -> tuple[int, ThetaPoly]:
    """Normal form of (layer a, p) times (layer b, q); always a single layer."""
    d = spec.d
    if a >= 0 and b >= 0:
        # f^a p f^b q = f^{a+b} p(θ + bd) q
        return a + b, p.shift(b * d) * q
    if a <= 0 and b <= 0:
        # p Δ^A q Δ^B = p q(θ + Ad) Δ^{A+B}
        return a + b, p * q.shift(-a * d)
    if a > 0:
        # f^a (pq) Δ^c
        c = -b
        r = p * q
        k = min(a, c)
        return a - c, r.shift(-k * d) * _f_pow_delta_pow(spec, k)
    # p Δ^A f^b q
    A = -a
    k = min(A, b)
    core = _delta_pow_f_pow(spec, k)
    if A >= b:
        # Δ^{A-b} (core q) then move the polynomial left of Δ^{A-b}
        return b - A, p * (core * q).shift((A - b) * d)
    # core f^{b-A} q, then move p*core right of f^{b-A}
    return b - A, (p * core).shift((b - A) * d) * q


# --------------------------------------------------------------------------
# elements


class OperatorElement:
    """Normal-form element: a finite map ``level -> ThetaPoly``.

    Level ``ℓ > 0`` stands for ``f^ℓ p(θ)``, level 0 for ``p(θ)`` and
    ``ℓ < 0`` for ``p(θ) Δ^{-ℓ}``. Zero layers are never stored.
    """

    __slots__ = ("spec", "layers")

    def __init__(self, spec: AlgebraSpec, layers: Mapping[int, ThetaPoly] | None = None):
        self.spec = spec
        items = {}
        for level, poly in (layers or {}).items():
            if not isinstance(poly, ThetaPoly):
                poly = ThetaPoly(poly)
            if poly:
                items[int(level)] = poly
        self.layers = dict(sorted(items.items(), reverse=True))

    # structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.layers

    def is_homogeneous(self) -> bool:
        return len(self.layers) <= 1

    @property
    def weight(self) -> int:
        """θ-weight ``ℓ d`` of a homogeneous element (0 for the zero element)."""
        if len(self.layers) > 1:
            raise ValueError("element is not homogeneous")
        return next(iter(self.layers), 0) * self.spec.d

    def homogeneous_parts(self) -> list["OperatorElement"]:
        return [OperatorElement(self.spec, {lv: p}) for lv, p in self.layers.items()]

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "OperatorElement":
        if isinstance(other, OperatorElement):
            if other.spec != self.spec:
                raise ValueError("elements belong to different algebras")
            return other
        return self.spec.scalar(other)

    def __add__(self, other) -> "OperatorElement":
        other = self._coerce(other)
        out = dict(self.layers)
        for lv, p in other.layers.items():
            out[lv] = out[lv] + p if lv in out else p
        return OperatorElement(self.spec, out)

    __radd__ = __add__

    def __neg__(self) -> "OperatorElement":
        return OperatorElement(self.spec, {lv: -p for lv, p in self.layers.items()})

    def __sub__(self, other) -> "OperatorElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "OperatorElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "OperatorElement":
        return normalize_mul(self.spec, self, self._coerce(other))

    def __rmul__(self, other) -> "OperatorElement":
        return normalize_mul(self.spec, self._coerce(other), self)

    def __pow__(self, k: int) -> "OperatorElement":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.spec.scalar(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def commutator(self, other) -> "OperatorElement":
        other = self._coerce(other)
        return self * other - other * self

    # comparison / display -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, OperatorElement):
            return elements_equal(self, other)
        if isinstance(other, (int, Fraction)):
            return elements_equal(self, self.spec.scalar(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, tuple(self.layers.items())))

    def __repr__(self):
        return f"OperatorElement({self})"

    def __str__(self):
        if not self.layers:
            return "0"
        terms = []
        for lv, p in self.layers.items():
            terms.append(_format_layer(lv, p))
        text = terms[0]
        for t in terms[1:]:
            text += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return text


def _format_layer(level: int, p: ThetaPoly) -> str:
    if level == 0:
        return p.format()
    gen = "f" if level > 0 else "D"
    k = abs(level)
    mono = gen if k == 1 else f"{gen}^{k}"
    if p == 1:
        return mono
    if p == -1:
        return "-" + mono
    if p.degree == 0:
        c = p.coeffs[0]
        return ("-" if c < 0 else "") + f"{abs(c)}*{mono}"
    if level > 0:
        return f"{mono}*({p.format()})"
    return f"({p.format()})*{mono}"


def normalize_mul(spec: AlgebraSpec, a: OperatorElement, b: OperatorElement) -> OperatorElement:
    """Normal form of the product ``a * b``.

    Each pair of layers multiplies to a single layer whose level is the sum
    of the two levels, so products of homogeneous elements stay homogeneous
    with additive weight.
    """
    out: dict[int, ThetaPoly] = {}
    for la, pa in a.layers.items():
        for lb, pb in b.layers.items():
            lv, poly = _mul_layers(spec, la, pa, lb, pb)
            out[lv] = out[lv] + poly if lv in out else poly
    return OperatorElement(spec, out)


def elements_equal(a: OperatorElement, b: OperatorElement) -> bool:
    """Equality via identical normal forms."""
    return a.spec == b.spec and a.layers == b.layers
