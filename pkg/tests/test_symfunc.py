import random
from fractions import Fraction

import pytest

from eulerian_csp.combinat import (
    Partition,
    partitions_of,
    rectangle,
)
from eulerian_csp.polyring import (
    MultiPoly,
    a_lambda_all,
    a_lambda_j,
    filter_coprime,
    parse_poly,
    q_int,
    t_mu_poly,
)
from eulerian_csp.symfunc import (
    GradedSeries,
    PSymFunc,
    a_at_root,
    apply_H,
    apply_L,
    chi_lambda_closed,
    chi_rm_closed,
    expand_in_variables,
    fundamental_qsym,
    g_nu,
    g_nu_resum,
    h_to_p,
    omega_bridge,
    pleth_h,
    pleth_power,
    q_circular_direct,
    q_circular_via_L,
    q_lambda,
    q_lambda_direct,
    qnj_symfunc,
)

T = MultiPoly.var("t")


def p(*parts) -> PSymFunc:
    return PSymFunc.p(Partition(parts))


def rand_series(rng: random.Random, bound: int) -> GradedSeries:
    comps = {}
    for n in range(1, bound + 1):
        coeffs = {}
        for nu in partitions_of(n):
            if rng.random() < 0.5:
                coeffs[nu] = MultiPoly.const(rng.randint(-3, 3)) + T * rng.randint(0, 2)
        f = PSymFunc(n, coeffs)
        if not f.is_zero():
            comps[n] = f
    return GradedSeries(bound, comps)


class TestPSymFunc:
    def test_h_expansion(self):
        assert h_to_p(1) == p(1)
        expected = PSymFunc(
            2, {Partition((2,)): Fraction(1, 2), Partition((1, 1)): Fraction(1, 2)}
        )
        assert h_to_p(2) == expected

    def test_h_chi_all_one(self):
        for m in range(1, 7):
            hm = h_to_p(m)
            for nu in partitions_of(m):
                assert hm.chi(nu) == MultiPoly.one()

    def test_product_concatenates(self):
        assert p(2) * p(1) == p(2, 1)
        assert (p(2) * p(2)) == p(2, 2)

    def test_degree_guard(self):
        with pytest.raises(ValueError):
            p(2) + p(1)
        with pytest.raises(ValueError):
            PSymFunc(2, {Partition((3,)): 1})

    def test_json_shape(self):
        d = qnj_symfunc(2).to_json_dict()
        assert d["degree"] == 2
        assert [t["nu"] for t in d["terms"]] == ["2", "1,1"]


class TestPlethysm:
    def test_p1_identity(self):
        f = qnj_symfunc(3)
        assert pleth_power(f, 1) == f

    def test_p2_on_monomial(self):
        f = PSymFunc.p(Partition((2, 1)), T)
        got = pleth_power(f, 2)
        assert got == PSymFunc.p(Partition((4, 2)), T * T)

    def test_homomorphism_random(self):
        rng = random.Random(9)
        for _ in range(20):
            f = rand_series(rng, 3).component(rng.randint(1, 3))
            g = rand_series(rng, 3).component(rng.randint(1, 3))
            d = rng.randint(1, 3)
            assert pleth_power(f * g, d) == pleth_power(f, d) * pleth_power(g, d)

    def test_pleth_h_identity_cases(self):
        g = GradedSeries.from_psym(qnj_symfunc(2), 4)
        assert pleth_h(1, g) == g
        # h_m[p_1] = h_m
        p1 = GradedSeries.from_psym(p(1), 5)
        for m in range(1, 6):
            assert pleth_h(m, p1).component(m) == h_to_p(m)

    def test_pleth_h_rectangle(self):
        # h_2 applied to the degree-1 circular function gives the type
        # (1,1) function: identity permutations only, so chi = 1 at t^0.
        got = pleth_h(2, GradedSeries.from_psym(q_circular_direct(1), 2)).component(2)
        assert got == q_lambda(Partition((1, 1)))
        assert got == h_to_p(2)


class TestLAndH:
    def test_inverse_on_random_series(self):
        rng = random.Random(10)
        for _ in range(5):
            g = rand_series(rng, 6)
            assert apply_L(apply_H(g)) == g
            assert apply_H(apply_L(g)) == g

    def test_leading_component(self):
        rng = random.Random(11)
        g = rand_series(rng, 4)
        assert apply_L(g).component(1) == g.component(1)

    def test_h_of_p1(self):
        p1 = GradedSeries.from_psym(p(1), 5)
        out = apply_H(p1)
        for m in range(1, 6):
            assert out.component(m) == h_to_p(m)


class TestQnj:
    def test_degree_one(self):
        assert qnj_symfunc(1) == p(1)

    def test_degree_two_golden(self):
        half = Fraction(1, 2)
        expect = PSymFunc(
            2,
            {
                Partition((2,)): half * (MultiPoly.one() + T),
                Partition((1, 1)): half * (MultiPoly.one() + T),
            },
        )
        assert qnj_symfunc(2) == expect

    def test_bridge_n3(self):
        got = omega_bridge(qnj_symfunc(3))
        expect = MultiPoly.zero()
        for lam in partitions_of(3):
            expect = expect + a_lambda_all(lam)
        assert got == expect

    def test_sum_of_qlambda(self):
        for n in range(1, 7):
            total = PSymFunc.zero(n)
            for lam in partitions_of(n):
                total = total + q_lambda(lam)
            assert total == qnj_symfunc(n)


class TestGnu:
    def test_single_part(self):
        assert g_nu(Partition((4,))) == parse_poly("t + t^3")

    def test_two_parts(self):
        assert g_nu(Partition((2, 1))) == parse_poly("t + t^2")
        assert g_nu(Partition((2, 2))) == parse_poly("t + t^3")

    def test_single_part_is_coprime_filter(self):
        for n in range(2, 9):
            expect = filter_coprime(T * q_int(n, "t"), n)
            assert g_nu(Partition((n,))) == expect

    def test_resum_agrees_exhaustive(self):
        for n in range(1, 9):
            for nu in partitions_of(n):
                assert g_nu(nu) == g_nu_resum(nu), nu

    def test_resum_agrees_random(self):
        rng = random.Random(12)
        pool = [nu for n in range(1, 21) for nu in partitions_of(n)]
        for _ in range(50):
            nu = rng.choice(pool)
            assert g_nu(nu) == g_nu_resum(nu), nu


class TestCircular:
    def test_degree_one_is_p1(self):
        assert q_circular_direct(1) == p(1)
        assert q_circular_via_L(1) == p(1)

    def test_two_pipelines_agree(self):
        for n in range(1, 6):
            assert q_circular_direct(n) == q_circular_via_L(n), n

    def test_chi_22_golden(self):
        assert q_circular_direct(4).chi(Partition((2, 2))) == parse_poly("t + t^3")

    def test_chi_3_golden(self):
        assert q_circular_direct(3).chi(Partition((3,))) == parse_poly("t + t^2")


class TestQLambda:
    def test_single_cycle(self):
        for n in range(1, 6):
            assert q_lambda(Partition((n,))) == q_circular_direct(n)

    def test_identity_type(self):
        for n in range(1, 6):
            assert q_lambda(Partition((1,) * n)) == h_to_p(n)

    def test_bridge_21(self):
        got = omega_bridge(q_lambda(Partition((2, 1))))
        assert got == parse_poly("t + q*t + q^2*t")

    def test_bridge_enumeration(self):
        for n in range(1, 6):
            for lam in partitions_of(n):
                assert omega_bridge(q_lambda(lam)) == a_lambda_all(lam), lam

    def test_chi_integrality(self):
        for n in range(1, 8):
            for lam in partitions_of(n):
                F = q_lambda(lam)
                for nu in partitions_of(n):
                    for c in F.chi(nu).univariate("t").values():
                        assert c.denominator == 1 and c >= 0, (lam, nu)


class TestOmegaBridge:
    def test_h_n_gives_one(self):
        for n in range(1, 7):
            assert omega_bridge(h_to_p(n)) == MultiPoly.one()

    def test_p_n_gives_t_single(self):
        for n in range(1, 7):
            assert omega_bridge(p(n)) == t_mu_poly(Partition((n,)))


class TestAAtRoot:
    def test_examples(self):
        assert a_at_root(Partition((2, 1)), 1, 3) == 0
        assert a_at_root(Partition((3,)), 1, 3) == 1

    def test_d_one_counts(self):
        from eulerian_csp.combinat import enumerate_by_type

        for n in range(1, 6):
            for lam in partitions_of(n):
                for j in range(n):
                    assert a_at_root(lam, j, 1) == len(enumerate_by_type(lam, j))

    def test_one_dk_case(self):
        # dk = n-1 route (the n-cycle at d | n-1).
        from eulerian_csp.cyclotomic import eval_rational

        for n in range(2, 7):
            for d in range(1, n):
                if (n - 1) % d:
                    continue
                for j in range(n):
                    assert a_at_root(Partition((n,)), j, d) == eval_rational(
                        a_lambda_j(Partition((n,)), j), d
                    )

    def test_invalid_d(self):
        # d = 3 divides neither n = 5 nor n - 1 = 4.
        with pytest.raises(ValueError):
            a_at_root(Partition((3, 2)), 0, 3)


class TestChiClosedForms:
    def test_rectangle_golden(self):
        assert chi_rm_closed(4, 1, 2) == parse_poly("t + t^3")

    def test_d1_full_distribution(self):
        # d = 1 recovers the plain excedance distribution over S_{r^m}.
        from eulerian_csp.combinat import enumerate_by_type, perm_statistics

        for r, m in [(1, 3), (2, 2), (3, 1), (2, 3)]:
            lam = rectangle(r, m)
            expect = MultiPoly.zero()
            for sigma in enumerate_by_type(lam):
                expect = expect + MultiPoly.var("t", perm_statistics(sigma).exc)
            assert chi_rm_closed(r, m, 1) == expect

    def test_lambda_zero_clause(self):
        assert chi_lambda_closed(Partition((2, 1)), 3).is_zero()

    def test_lambda_single_part(self):
        assert chi_lambda_closed(Partition((4,)), 2) == parse_poly("t + t^3")

    def test_agrees_with_chi_extraction(self):
        for n in range(1, 7):
            for lam in partitions_of(n):
                for d in range(1, n + 1):
                    if n % d:
                        continue
                    nu = rectangle(d, n // d)
                    assert chi_lambda_closed(lam, d) == q_lambda(lam).chi(nu), (lam, d)


class TestVariableExpansion:
    def test_p1(self):
        assert expand_in_variables(p(1), 2) == parse_poly("x1 + x2")

    def test_h2(self):
        assert expand_in_variables(h_to_p(2), 2) == parse_poly("x1^2 + x1*x2 + x2^2")

    def test_collapse_at_one_variable(self):
        assert expand_in_variables(p(2) - p(1, 1), 1).is_zero()

    def test_fundamental_qsym_shapes(self):
        # F_emptyset in n variables of degree n is the complete homogeneous.
        assert fundamental_qsym(2, frozenset(), 2) == parse_poly(
            "x1^2 + x1*x2 + x2^2"
        )
        # Full descent set forces strictly decreasing indices.
        assert fundamental_qsym(2, frozenset({1}), 2) == parse_poly("x1*x2")


class TestQLambdaDirect:
    def test_degree_one(self):
        assert q_lambda_direct(Partition((1,)), 2) == parse_poly("x1 + x2")

    def test_two_cycle(self):
        assert q_lambda_direct(Partition((2,)), 2) == parse_poly(
            "x1^2*t + x1*x2*t + x2^2*t"
        )

    def test_matches_plethysm_route(self):
        for n in range(1, 5):
            for lam in partitions_of(n):
                for m in (1, n):
                    assert q_lambda_direct(lam, m) == expand_in_variables(
                        q_lambda(lam), m
                    ), (lam, m)

    def test_bound_guard(self):
        from eulerian_csp.combinat import BoundExceededError

        with pytest.raises(BoundExceededError):
            q_lambda_direct(Partition((6,)), 2)
