"""Window constructors and strategies shared by the window and acceptance tests."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from capelli_quiver.algebra import skew_preset
from capelli_quiver.linalg import RatMatrix, inverse
from capelli_quiver.window import (
    GradedWindow,
    canonical_degrees,
    change_basis,
    direct_sum,
    extend_window,
    make_example,
)


def jordan_localized(spec, size, lo=None, hi=None):
    """Localized-type window whose θ-blocks are single Jordan blocks of ``size``."""
    if lo is None:
        degs = canonical_degrees(spec)
        lo, hi = degs[0], degs[-1]
    pts = list(range(lo, hi + 1, spec.d))
    N = RatMatrix(size, size, [1 if j == i + 1 else 0 for i in range(size) for j in range(size)])
    theta = [N.shift(p) for p in pts]
    return GradedWindow(
        spec, lo, hi, [size] * len(pts), theta,
        [RatMatrix.identity(size) for _ in pts[:-1]],
        [spec.b0.eval_matrix(t) for t in theta[1:]],
    )


def cut_window(spec):
    """Skew m=2: ``T_{-4} = T_{-2} = T_0 = Q`` with f zero on the edge (-2, 0).

    ``T_{-4}`` and ``T_{-2}`` form the f-torsion; the quotient is the structure window.
    """
    degs = canonical_degrees(spec)
    dims = [0, 1, 1, 1]
    return GradedWindow(
        spec, degs[0], degs[-1], dims,
        [RatMatrix.scalar(n, p) for n, p in zip(dims, degs)],
        [RatMatrix.zeros(1, 0), RatMatrix.identity(1), RatMatrix.zeros(1, 1)],
        [RatMatrix.zeros(0, 1), RatMatrix.scalar(1, spec.b0(-2)), RatMatrix.identity(1)],
    )


def random_invertible(n, rng, spread=3):
    while True:
        M = RatMatrix(n, n, [Fraction(rng.randint(-spread, spread)) for _ in range(n * n)])
        if n == 0 or inverse(M) is not None:
            return M


def random_base_change(w, rng):
    return change_basis(w, [random_invertible(n, rng) for n in w.dims])


def atoms(m):
    spec = skew_preset(m)
    out = [make_example(spec, k) for k in ("structure", "delta", "localized")]
    out.append(jordan_localized(spec, 2))
    if m == 2:
        out.append(cut_window(spec))
    return out


@st.composite
def valid_windows(draw, m=None, max_summands=3):
    """Direct sums of standard pieces, in random coordinates."""
    if m is None:
        m = draw(st.integers(1, 2))
    pieces = atoms(m)
    chosen = draw(st.lists(st.sampled_from(pieces), min_size=1, max_size=max_summands))
    w = chosen[0]
    for extra in chosen[1:]:
        w = direct_sum(w, extra)
    if draw(st.booleans()):
        w = extend_window(w, w.p_min - m * draw(st.integers(0, 1)), w.p_max + m * draw(st.integers(0, 2)))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    return random_base_change(w, rng)
