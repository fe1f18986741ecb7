"""
Graded windows and their relations
==================================

A module is stored as the pieces ``T_p`` around the degrees where f or Δ
may fail to be bijective, together with θ, f and Δ between them.
"""

from capelli_quiver import (
    RatMatrix,
    apply_operator,
    canonical_degrees,
    extend_window,
    make_example,
    nonforced_roots,
    skew_preset,
    validate_window,
)

spec = skew_preset(2)
print("canonical degrees:", canonical_degrees(spec))
print("non-forced edges start at:", nonforced_roots(spec))

# the localized window has a line at every degree
loc = make_example(spec, "localized")
print("Δ scalars:", " ".join(str(loc.delta_at(p)[0, 0]) for p in loc.degrees[:-1]))
print("validates:", validate_window(loc).ok)

# break θ on the structure window and read the report
s = make_example(spec, "structure")
broken = s.replace_map("theta", 0, RatMatrix.identity(1))
print(validate_window(broken))

# outside the window f and Δ are forced; extending reconstructs the pieces
big = extend_window(s, -6, 4)
print("Δf at degree 0:", apply_operator(big, spec.delta * spec.f, 0))
