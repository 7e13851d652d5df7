"""Build finite fields and poke at their structure.

Every element is an integer code: the coefficient vector of the element
in the power basis of w, packed base p.  For p = 2 that's simply the
usual bitstring representation.
"""

import numpy as np

from zdbkit import build_field, get_field
from zdbkit.gf import FieldSpec

# The 256-element field used throughout, defined by x^8+x^4+x^3+x^2+1.
f = get_field("f256_paper")
print(f)
print("generator w has code", f.w, "and order", f.q - 1)
print("w^8 =", f.format_elem(f.pow(f.w, 8)), "= code", f.pow(f.w, 8))

# Arithmetic runs through exp/log tables.
a, b = f.parse_elem("w^10"), f.parse_elem("w^245")
print("w^10 * w^245 =", f.format_elem(f.mul(a, b)))
print("inverse of w^7 =", f.format_elem(f.inv(f.parse_elem("w^7"))))

# The absolute trace maps onto F_p and is balanced.
print("elements of trace 0:", int(np.sum(f.trace_table == 0)), "of", f.q)

# Character orthogonality: sum of (-1)^Tr(bx) vanishes for b != 0.
for b in (0, 1, 77):
    signs = 1 - 2 * f.trace_table[f.mul_vec(np.arange(f.q), b)]
    print(f"sum over x of (-1)^Tr({f.format_elem(b)} x) =", int(signs.sum()))

# Odd characteristic works the same way.
f81 = get_field("f81")
print("\n", f81, "  Tr(w) =", f81.trace(f81.w))

# Building from an explicit spec validates primality, irreducibility and
# primitivity, in that order.
try:
    build_field(FieldSpec(3, 2, (1, 0, 1)))  # x^2 + 1 over F_3
except Exception as e:
    print("x^2+1 over F_3 rejected:", e)
