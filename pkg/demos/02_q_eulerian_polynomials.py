"""
q-analogues and cycle-type q-Eulerian polynomials.

All coefficients are exact rationals; q-multinomials come from exact
polynomial division and the cycle-type polynomials from exhaustive
enumeration of the symmetric group.
"""
from eulerian_csp import (
    Partition,
    a_lambda_j,
    cycle_stat_polynomial,
    eulerian_poly,
    filter_coprime,
    filter_gcd,
    parse_poly,
    q_int,
    q_multinomial,
)

print("[4]_q          :", q_int(4))
print("[4 over 2,2]_q :", q_multinomial(2, 2))
print()

for n in range(5):
    print(f"A_{n}(t) =", eulerian_poly(n))
print()

# The refinement by cycle type: a_{lambda,j}(q) sums q^{maj-exc} over the
# permutations of type lambda with j excedances.
lam = Partition((2, 1))
print(f"A_{lam} (q, t)      :", cycle_stat_polynomial(lam))
print(f"a_{lam}, j=1 (q)    :", a_lambda_j(lam, 1))
for j in range(1, 4):
    print(f"a_(4), j={j} (q)     :", a_lambda_j(Partition((4,)), j))
print()

# Coprimality and gcd filters on t-polynomials, the combinatorial core of
# the closed forms for values at roots of unity.
f = parse_poly("t + 3*t^2 + -5*t^3 + 7*t^4")
print("f               :", f)
print("f filtered (2)  :", filter_coprime(f, 2))
g = parse_poly("1 + 2*t + 3*t^2 + 4*t^3 + 5*t^4")
print("g gcd-filter 6,2:", filter_gcd(g, 6, 2))
