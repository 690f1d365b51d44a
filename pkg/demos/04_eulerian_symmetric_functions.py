"""
Eulerian symmetric functions three ways.

The same family of symmetric functions is built (1) from a closed-form
power-sum expansion with coprimality filters, (2) by inverting the
complete homogeneous generating series with the plethystic logarithm, and
(3) straight from the definition as a sum of fundamental quasisymmetric
functions over finitely many variables.  The package's whole reason to
exist is that all three agree, exactly.
"""
import json

from eulerian_csp import (
    Partition,
    expand_in_variables,
    g_nu,
    omega_bridge,
    q_circular_direct,
    q_circular_via_L,
    q_lambda,
    q_lambda_direct,
    a_lambda_all,
)

n = 4
direct = q_circular_direct(n)
via_log = q_circular_via_L(n)
print(f"single-{n}-cycle symmetric function, power-sum basis:")
print("  closed form     :", direct)
print("  plethystic log  :", via_log)
print("  equal           :", direct == via_log)
print()

# The chi table (coefficients of z_nu^{-1} p_nu) carries the values of the
# q-Eulerian numbers at roots of unity, graded by t^j.
print("chi table as JSON:")
print(json.dumps(direct.to_json_dict(), indent=2))
print()

# G_nu is the filtered polynomial appearing as each chi value.
for nu in [Partition((4,)), Partition((2, 2)), Partition((2, 1, 1))]:
    print(f"G_{nu} =", g_nu(nu))
print()

# Arbitrary cycle types come from plethysm with complete homogeneous
# functions; the stable principal specialization bridges back to the
# enumerated q-statistics.
lam = Partition((2, 2))
F = q_lambda(lam)
print(f"Q_{lam} :", F)
print("bridge    :", omega_bridge(F))
print("enumerated:", a_lambda_all(lam))
print()

# And in actual variables, the plethysm route agrees with the defining
# quasisymmetric sum.
m = 2
lhs = q_lambda_direct(lam, m)
rhs = expand_in_variables(F, m)
print(f"definition vs plethysm in x_1..x_{m}:", lhs == rhs)
print("  ", lhs)
