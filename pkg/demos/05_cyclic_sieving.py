"""
Cyclic sieving in action.

The subgroup generated by the long cycle acts on each set of permutations
with fixed cycle type and excedance count; the cycle-type q-Eulerian
polynomial evaluated at a primitive d-th root of unity counts the fixed
points of the order-d elements.  Every value is computed along five
independent routes and compared exactly.
"""
import json

from eulerian_csp import (
    CentElt,
    Partition,
    Permutation,
    circor_check,
    csp_check,
    decode,
    cent_statistics,
    theta_poly,
    triple_identity,
)

# The centralizer coordinates: exponents on the d-cycles of gamma_n^{-k}
# plus a block permutation.
c = CentElt(4, 2, 2, (1, 0), Permutation((2, 1)))
print("coordinates (e, rho) = ((1,0), 21) decode to:", decode(c))
print("closed-form statistics:", cent_statistics(c))
print()

# The full five-route report for one cycle type.
report = csp_check(Partition((4, 2)))
print("sieving report for lambda = 4,2 (pass =", report.passed, "):")
for check in report.checks:
    if any(v != 0 for v in check.values.values()):
        print(
            f"  d={check.d} j={check.j}:",
            {k: int(v) for k, v in check.values.items()},
        )
print()

# theta polynomials: excedance distribution over the centralizer members
# of one cycle type.
print("theta((4), d=2) =", theta_poly(Partition((4,)), 2))
print()

# The coarser three-way identity in t (excedances) and s (fixed points).
rep = triple_identity(6, 3)
print("three-way identity at n=6, d=3:", rep.passed)
print("  common value:", rep.centralizer_sum)
print()

# And the n-cycle variant at divisors of n-1.
rep = circor_check(5, 2)
print("n-cycle specialization at n=5, d=2:", rep.passed)
print(json.dumps(rep.to_json_dict(), indent=2))
