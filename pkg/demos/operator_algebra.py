"""
Normal forms in the operator algebra
====================================

Every element is a sum of ``f^a p(θ)`` and ``p(θ) Δ^c``; products are
rewritten into that shape, so two elements are equal exactly when their
normal forms agree.
"""

from capelli_quiver import parse_expression, skew_preset

# the skew-symmetric preset for 4x4 matrices: d = 2, lambdas (0, 2)
spec = skew_preset(2)
print(spec.describe())

# fΔ and Δf are polynomials in θ
f, D, t = spec.f, spec.delta, spec.theta
print("f*D =", f * D)
print("D*f =", D * f)

# θ moves past f at the cost of a shift by d
print("t*f =", t * f)

# the parser accepts the same notation and returns the normal form
x = parse_expression(spec, "(f + D)^2 - 1/2*t")
print("(f + D)^2 - t/2 =", x)

# printing is parseable, so a normal form survives a round trip
assert parse_expression(spec, str(x)) == x
