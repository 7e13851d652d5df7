"""From image sets to certified partial difference sets.

The image (minus 0) of a zero-difference p^t-balanced quadratic map is
a regular PDS in the additive group.  Certification is double-entry:
exhaustive difference counting plus exact character sums; both must
agree before a certificate is issued.
"""

from zdbkit import get_field, image_pds, predicted_params, verify_design
from zdbkit.designs import character_values, cyclotomic_pds, pcp_pds
from zdbkit.funcspace import PolyFn, evaluate

f = get_field("f256_paper")
D = image_pds(evaluate(PolyFn(f, ((3, 1),))))
pred = predicted_params(2, 1, 8)
print("predicted:", pred.params, pred.kind, "type:", pred.latin_type,
      f"(N={pred.latin_n}, r={pred.latin_r})")
cert = verify_design(f, D, pred.params)
print("certified: |D| =", len(D), "regular =", cert.regular,
      "chi values =", sorted(set(cert.char_values)))
_, xs = character_values(f, D, d=3)
print("X_a = 1 + 3*chi_a values:", sorted(set(xs)))

# Odd characteristic: x^4 over F_81, x^2 over F_27 and F_25.
f81 = get_field("f81")
cert81 = verify_design(f81, image_pds(evaluate(PolyFn(f81, ((4, 1),)))),
                       predicted_params(3, 1, 4).params)
print("\nx^4 / F_81 :", cert81.params, "regular:", cert81.regular)

f27 = get_field("f27")
pred27 = predicted_params(3, 0, 3)
cert27 = verify_design(f27, image_pds(evaluate(PolyFn(f27, ((2, 1),)))),
                       pred27.params, kind=pred27.kind)
print("x^2 / F_27 :", cert27.params, cert27.kind,
      "(27 = 3 mod 4: a plain difference set)")

f25 = get_field("f25")
pred25 = predicted_params(5, 0, 2)
cert25 = verify_design(f25, image_pds(evaluate(PolyFn(f25, ((2, 1),)))),
                       pred25.params)
print("x^2 / F_25 :", cert25.params, "(Paley partial difference set)")

# Comparison constructions over the same groups.
D0, params0 = cyclotomic_pds(f, 2, [0])
print("\ncyclotomic classes, q=2, m=4, one class:", params0)
f16 = get_field("f16")
Dc, pc = cyclotomic_pds(f16, 2, [0])
print("cyclotomic q=2, m=2 (the Clebsch parameters):", pc)
Dl, pl = pcp_pds(f16, [0, 1])
print("two lines of AG(2, 4):", pl, "(Latin square type)")
