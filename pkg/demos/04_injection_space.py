"""Growing coset-injective functions from known ones.

Fix G injective on the nonzero cubes C_3 and a nonzero gamma.  The
Boolean functions h with G + gamma*h still injective on C_3 form a
linear space: the null space of a small 0/1 matrix with one row per
colliding pair.  Solving it gives new injective maps wholesale.
"""

import numpy as np

from zdbkit import get_field, injection_space
from zdbkit.constructions import extend_to_permutation, quadratic_h_filter
from zdbkit.funcspace import FnTable, PolyFn, evaluate, is_injective_on, power_coset

f = get_field("f256_paper")
ident = FnTable(f, np.arange(256))
coset = power_coset(f, 3)

for gamma in (7, 40, 200):
    space = injection_space(ident, gamma)
    print(f"gamma = {f.format_elem(gamma)}: {space.constraint_count} "
          f"constraining pairs, solution space dimension {space.dim}")

# every basis vector is re-verified internally; combinations stay inside
space = injection_space(ident, 7)
h = space.basis[0] ^ space.basis[1] ^ space.basis[2]
ok, _ = is_injective_on(space.member(h), coset)
print("a 3-term combination keeps the restriction injective:", ok)

# For bookkeeping of which h keep G(x^3) quadratic, exponents must stay
# weight-2 after tripling.
print("x^4 passes the quadratic filter:",
      quadratic_h_filter(f, PolyFn(f, ((4, 1),))))
print("x^7 passes the quadratic filter:",
      quadratic_h_filter(f, PolyFn(f, ((7, 1),))))

# Coset-injective maps extend to full permutations deterministically.
f16 = get_field("f16")
g16 = FnTable(f16, np.arange(16))
perm = extend_to_permutation(g16, 3)
print("extension of the identity restricted to C_3 u {0} in F_16 is a "
      "permutation:", sorted(int(v) for v in perm.values) == list(range(16)))
