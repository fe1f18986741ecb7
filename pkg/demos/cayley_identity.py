"""
The pfaffian identity, by brute force
=====================================

Expand the pfaffian of a generic skew matrix, let ``pf(∂)`` act on
``pf^k`` and divide by ``pf^(k-1)``. The quotient is a constant, and it
matches what the algebra predicts from ``Δf``.
"""

from capelli_quiver import cross_check_b, pfaffian, skew_preset, verify_cayley
from capelli_quiver.cayley import variable_names

# m = 2: the pfaffian of a 4x4 skew matrix has three terms
print("pf =", pfaffian(2).format(variable_names(2)))

for m, k in [(1, 3), (2, 2), (3, 1), (3, 2)]:
    print(f"m={m} k={k}:", verify_cayley(m, k))

# the table compares the constants with the b-polynomial of the preset
print(cross_check_b(skew_preset(2), 2, 4).format())
