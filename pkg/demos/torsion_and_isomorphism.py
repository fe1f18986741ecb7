"""
Comparing windows modulo f-torsion
==================================

The f-torsion of a window is the part killed by powers of f. Two windows
are compared after dividing it out; an isomorphism comes with explicit
intertwining matrices.
"""

import random

from capelli_quiver import (
    change_basis,
    direct_sum,
    iso_test_mod_c0,
    make_example,
    mod_c0_reduce,
    skew_preset,
    torsion_submodule,
)
from capelli_quiver.linalg import RatMatrix, inverse

spec = skew_preset(2)
s, dl = make_example(spec, "structure"), make_example(spec, "delta")
both = direct_sum(s, dl)

print("torsion dims of structure + delta:", torsion_submodule(both).dims)
print("after reduction:", mod_c0_reduce(both).dims)

verdict = iso_test_mod_c0(s, both)
print("structure vs structure + delta:", verdict.reason)
print("structure vs delta:", iso_test_mod_c0(s, dl).reason)

# scramble the coordinates of a sum and recover an isomorphism
rng = random.Random(1)


def random_invertible(n):
    while True:
        M = RatMatrix(n, n, [rng.randint(-3, 3) for _ in range(n * n)])
        if inverse(M) is not None:
            return M


w = direct_sum(make_example(spec, "localized"), s)
scrambled = change_basis(w, [random_invertible(n) for n in w.dims])
verdict = iso_test_mod_c0(w, scrambled)
print("after a random base change:", verdict.reason)
for p, H in zip(verdict.degrees, verdict.witness):
    print(f"  H at {p}:", [[str(x) for x in row] for row in H.to_rows()])
