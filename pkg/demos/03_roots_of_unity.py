"""
Exact evaluation at roots of unity.

A primitive d-th root is the residue class of q modulo the d-th cyclotomic
polynomial, so "evaluate at omega_d" is polynomial reduction and every
rational answer is provably rational, never a float that happens to look
like an integer.
"""
from eulerian_csp import (
    Partition,
    a_lambda_j,
    cyclotomic_poly,
    eval_at_root,
    eval_rational,
    partition_stats,
    partitions_of,
    q_int,
    q_multinomial,
    q_multinomial_at_root,
    t_mu_poly,
)

for d in (1, 2, 3, 4, 6, 12):
    print(f"Phi_{d}(q) =", cyclotomic_poly(d))
print()

print("[3]_q at omega_3        :", eval_at_root(q_int(3), 3), "(vanishes)")
print("[4 over 2,2]_q at omega_2:", eval_rational(q_multinomial(2, 2), 2))
print("closed form (Prop-style) :", q_multinomial_at_root((2, 2), 2))
print()

# The polynomials T_mu(q) vanish at omega_d unless mu is a d-rectangle
# (possibly with one extra 1), where they produce the centralizer order.
n = 6
print(f"T_mu(omega_2) for mu of {n}:")
for mu in partitions_of(n):
    val = eval_rational(t_mu_poly(mu), 2)
    z = partition_stats(mu).z
    print(f"  mu={str(mu):12s} T_mu(w_2)={val!s:>4}   z_mu={z}")
print()

# a_{(2,1),1}(q) = 1 + q + q^2 dies at a primitive cube root of unity:
val = eval_rational(a_lambda_j(Partition((2, 1)), 1), 3)
print("a_(2,1),1(omega_3) =", val)
