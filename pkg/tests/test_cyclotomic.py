import itertools
import math
import random

import pytest

from eulerian_csp.combinat import Partition, partition_stats, partitions_of
from eulerian_csp.cyclotomic import (
    CycloNum,
    NonRationalValueError,
    cyclotomic_poly,
    downcast_rational,
    eval_at_root,
    eval_rational,
    phi,
    q_multinomial_at_root,
    specialize_q,
)
from eulerian_csp.polyring import (
    MultiPoly,
    a_lambda_j,
    parse_poly,
    poly_from_dense,
    q_int,
    q_multinomial,
    t_mu_poly,
)

Q = MultiPoly.var("q")
T = MultiPoly.var("t")


def rand_qpoly(rng, maxdeg=10):
    return poly_from_dense("q", [rng.randint(-4, 4) for _ in range(rng.randint(1, maxdeg + 1))])


class TestCyclotomicPoly:
    def test_goldens(self):
        assert cyclotomic_poly(1) == Q - 1
        assert cyclotomic_poly(4) == Q * Q + 1
        assert cyclotomic_poly(6) == Q * Q - Q + 1

    def test_degree_is_totient(self):
        def totient(d):
            return sum(1 for j in range(1, d + 1) if math.gcd(j, d) == 1)

        for d in range(1, 13):
            assert phi(d) == totient(d)

    def test_product_over_divisors(self):
        for d in range(1, 13):
            prod = MultiPoly.one()
            for e in range(1, d + 1):
                if d % e == 0:
                    prod = prod * cyclotomic_poly(e)
            assert prod == MultiPoly.var("q", d) - 1

    def test_integer_monic(self):
        for d in range(1, 13):
            coeffs = cyclotomic_poly(d).univariate("q")
            assert coeffs[max(coeffs)] == 1
            assert all(c.denominator == 1 for c in coeffs.values())


class TestCycloNum:
    def test_root_powers(self):
        for d in range(1, 10):
            w = CycloNum.root(d)
            assert (w**d) == CycloNum.of(d, 1)
            for e in range(1, d):
                assert w**e != CycloNum.of(d, 1)

    def test_ring_homomorphism(self):
        rng = random.Random(7)
        for d in range(1, 9):
            for _ in range(100):
                f, g = rand_qpoly(rng), rand_qpoly(rng)
                assert eval_at_root(f + g, d) == eval_at_root(f, d) + eval_at_root(g, d)
                assert eval_at_root(f * g, d) == eval_at_root(f, d) * eval_at_root(g, d)

    def test_str(self):
        assert str(CycloNum.root(3)) == "[0, 1]@3"

    def test_mixed_orders_rejected(self):
        with pytest.raises(ValueError):
            CycloNum.root(3) + CycloNum.root(4)


class TestEvalAtRoot:
    def test_qint_vanishes(self):
        assert eval_at_root(q_int(3), 3).is_zero()

    def test_qmultinomial_value(self):
        assert eval_rational(q_multinomial(2, 2), 2) == 2

    def test_qpower_is_one(self):
        for d in range(1, 8):
            assert eval_rational(MultiPoly.var("q", d), d) == 1

    def test_multivariate_rejected(self):
        with pytest.raises(ValueError):
            eval_at_root(Q * T, 2)


class TestSpecialize:
    def test_twist_cancels(self):
        g = specialize_q(Q * T, 2, twist=True)
        assert downcast_rational(g) == T

    def test_a21_at_omega3(self):
        # A_{(2,1)}(q, t) = (1 + q + q^2) q^0... the t-coefficient after the
        # twist is a_{(2,1),1}(omega_3) = 1 + w + w^2 = 0.
        biv = parse_poly("t + q*t + q^2*t")  # q^{maj-exc} t^{exc} form, pre-twisted
        val = downcast_rational(specialize_q(biv.subs("t", T), 3, twist=False))
        # substitute q->w directly on the shifted polynomial
        assert val.coeff_of("t", 1).is_zero()

    def test_twist_at_d1_is_identity_eval(self):
        rng = random.Random(8)
        for _ in range(20):
            f = MultiPoly.zero()
            for _ in range(5):
                f = f + MultiPoly.monomial(
                    {"q": rng.randint(0, 4), "t": rng.randint(0, 3), "s": rng.randint(0, 2)},
                    rng.randint(-3, 3),
                )
            got = downcast_rational(specialize_q(f, 1, twist=True))
            assert got == f.subs("q", MultiPoly.one())

    def test_downcast_detects_irrational(self):
        g = specialize_q(Q * T, 3, twist=False)
        with pytest.raises(NonRationalValueError) as err:
            downcast_rational(g)
        assert err.value.monomial == (("t", 1),)

    def test_downcast_constants(self):
        # q*t is twist-invariant: omega * (t omega^{-1}) = t.
        g = specialize_q(MultiPoly.const(7) + 2 * Q * T, 5, twist=True)
        assert downcast_rational(g) == MultiPoly.const(7) + 2 * T


class TestQMultinomialAtRoot:
    def test_examples(self):
        assert q_multinomial_at_root((2, 2), 2) == 2
        assert q_multinomial_at_root((3, 1), 2) == 0
        for d in (1, 2, 3, 6):
            assert q_multinomial_at_root((6,), d) == 1

    def test_divisibility_guard(self):
        with pytest.raises(ValueError):
            q_multinomial_at_root((2, 1), 2)

    def test_agrees_with_reduction(self):
        # Closed form vs. reduction mod Phi_d over all compositions of
        # n <= 12 into at most 4 positive parts and all divisors d of n.
        for n in range(1, 13):
            divisors = [d for d in range(1, n + 1) if n % d == 0]
            for m in range(1, 5):
                for cuts in itertools.combinations(range(1, n), m - 1):
                    bounds = (0,) + cuts + (n,)
                    ks = tuple(b - a for a, b in zip(bounds, bounds[1:]))
                    f = q_multinomial(*ks)
                    for d in divisors:
                        assert eval_rational(f, d) == q_multinomial_at_root(ks, d), (
                            ks,
                            d,
                        )


class TestTMuAtRoots:
    def test_rectangular_value(self):
        # T_{d^k}(omega_d) = k! d^k, the centralizer order.
        assert eval_rational(t_mu_poly(Partition((2, 2))), 2) == 8
        assert eval_rational(t_mu_poly(Partition((3, 3))), 3) == 18

    def test_full_table(self):
        # T_mu(omega_d) = z_mu exactly when mu is d^k or 1d^k, else 0,
        # over all mu of n <= 8 and the relevant d.
        for n in range(1, 9):
            for mu in partitions_of(n):
                for d in range(1, n + 1):
                    if n % d and (n - 1) % d:
                        continue
                    val = eval_rational(t_mu_poly(mu), d)
                    parts = mu.parts
                    is_dk = all(p == d for p in parts)
                    is_1dk = (
                        parts.count(1) == 1
                        and all(p == d for p in parts if p != 1)
                        and d != 1
                    ) or (d == 1 and is_dk)
                    if is_dk or is_1dk:
                        assert val == partition_stats(mu).z, (mu, d)
                    else:
                        assert val == 0, (mu, d)


class TestAAtRootsViaEval:
    def test_a21_vanishes_at_omega3(self):
        assert eval_rational(a_lambda_j(Partition((2, 1)), 1), 3) == 0

    def test_values_are_integers(self):
        for n in range(1, 7):
            for lam in partitions_of(n):
                for d in range(1, n + 1):
                    if n % d:
                        continue
                    for j in range(n):
                        val = eval_rational(a_lambda_j(lam, j), d)
                        assert val.denominator == 1
                        assert val >= 0
