"""Differential spectrum, zero-difference profile, Walsh spectrum.

The cube map on F_256 is the classic example: differential uniformity 2
(APN), zero-difference 2-balanced, and Walsh values {0, +-16, +-32}.
"""

from zdbkit import analyze_function, get_field, walsh_power_sum_check
from zdbkit.catalog import catalog_entry
from zdbkit.funcspace import PolyFn, evaluate, poly_str

f = get_field("f256_paper")
cube = evaluate(PolyFn(f, ((3, 1),)))

report = analyze_function(cube)
print("F(x) = x^3 on F_256")
print("  delta_F:", report.spectrum.delta_max, "| APN:", report.spectrum.is_apn)
print("  zero-difference:", report.zdb_class.kind, report.zdb_class.delta)
print("  walsh values:", sorted(report.walsh_report.value_set))
print("  nonlinearity:", report.walsh_report.nonlinearity)

# The power-sum identity characterizing zero-difference balance: with
# delta = 2 the sums must be 2^16 - 2*2^8 away from zero shift and
# 3*2^16 - 2*2^8 at the zero shift.
psc = walsh_power_sum_check(cube, 2)
print("  power sums:", int(psc.sums[1]), "(a != 0),", int(psc.sums[0]),
      "(a = 0)  ok:", psc.ok)

# Any shipped catalog entry runs through the same analysis.
entry = catalog_entry(2)
print("\ncatalog no. 2:", poly_str(entry.poly))
rep2 = analyze_function(entry.table())
print("  delta_F:", rep2.spectrum.delta_max,
      "| zdb:", rep2.zdb_class.kind, rep2.zdb_class.delta,
      "| walsh:", sorted(rep2.walsh_report.value_set))

# Odd characteristic: x^2 over F_9 is planar (delta = 1).
f9 = get_field("f9")
rep9 = analyze_function(evaluate(PolyFn(f9, ((2, 1),))))
print("\nx^2 on F_9: delta_F =", rep9.spectrum.delta_max,
      "| PN:", rep9.spectrum.is_pn)
