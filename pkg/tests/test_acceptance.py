"""
Acceptance sweep: one test per criterion, each printing a pass/fail line
with its runtime.  All equality checks are exact rational arithmetic with
tolerance zero; the time limits are generous single-threaded budgets.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""
import itertools
import random
import time
from contextlib import contextmanager

from eulerian_csp.combinat import (
    Partition,
    partition_stats,
    partitions_of,
    rectangle,
)
from eulerian_csp.cyclotomic import eval_rational
from eulerian_csp.csp import (
    circor_check,
    csp_check,
    csp_check_snj,
    theta_poly,
    triple_identity,
)
from eulerian_csp.polyring import (
    MultiPoly,
    a_lambda_all,
    a_lambda_j,
    eulerian_poly,
    filter_coprime,
    filter_gcd,
    identity_euleq,
    identity_exfor,
    identity_expgen,
    parse_poly,
    poly_from_dense,
    q_int,
    q_multinomial,
    t_mu_poly,
)
from eulerian_csp.symfunc import (
    expand_in_variables,
    g_nu,
    g_nu_resum,
    omega_bridge,
    q_circular_direct,
    q_circular_via_L,
    q_lambda,
    q_lambda_direct,
)

T = MultiPoly.var("t")


@contextmanager
def criterion(number: int, description: str, limit_seconds: float):
    start = time.perf_counter()
    failed = None
    try:
        yield
    except BaseException as exc:
        failed = exc
    elapsed = time.perf_counter() - start
    status = "PASS" if failed is None else "FAIL"
    print(f"criterion {number:2d} [{status}] {description} ({elapsed:.2f}s)")
    if failed is not None:
        raise failed
    assert elapsed < limit_seconds, f"criterion {number} exceeded {limit_seconds}s"


def test_criterion_01_sieving_sweep():
    with criterion(1, "five-route sieving agreement, n <= 7", 60.0):
        for n in range(1, 8):
            for lam in partitions_of(n):
                report = csp_check(lam)
                assert report.passed, report.to_json_dict()


def test_criterion_02_circular_pipelines():
    with criterion(2, "direct vs plethystic-log circular expansion, n <= 7", 10.0):
        for n in range(1, 8):
            assert q_circular_direct(n) == q_circular_via_L(n), n


def test_criterion_03_definition_consistency():
    with criterion(3, "quasisymmetric definition vs plethysm, n <= 5", 60.0):
        for n in range(1, 6):
            for lam in partitions_of(n):
                for m in {1, n}:
                    assert q_lambda_direct(lam, m) == expand_in_variables(
                        q_lambda(lam), m
                    ), (lam, m)


def test_criterion_04_specialization_bridge():
    with criterion(4, "principal specialization bridge, n <= 6", 30.0):
        for n in range(1, 7):
            for lam in partitions_of(n):
                assert omega_bridge(q_lambda(lam)) == a_lambda_all(lam), lam


def test_criterion_05_three_way_identity():
    with criterion(5, "three-way (exc, fix) identity, n <= 8", 60.0):
        for n in range(1, 9):
            for d in range(1, n + 1):
                if n % d:
                    continue
                report = triple_identity(n, d)
                assert report.passed, (n, d)
                # at s = 1 the common value is A_{n/d}(t) [d]_t^{n/d}
                at_s1 = report.specialized.subs("s", MultiPoly.one())
                assert at_s1 == eulerian_poly(n // d) * q_int(d, "t") ** (n // d)


def test_criterion_06_long_cycle_specialization():
    with criterion(6, "n-cycle specialization identity, n <= 8", 10.0):
        for n in range(2, 9):
            for d in range(1, n):
                if (n - 1) % d == 0:
                    assert circor_check(n, d).passed, (n, d)


def test_criterion_07_excedance_class_sieving():
    with criterion(7, "excedance-class sieving sweep, n <= 6", 30.0):
        for n in range(1, 7):
            assert csp_check_snj(n).passed, n


def test_criterion_08_series_identities():
    with criterion(8, "generating-function identities", 30.0):
        assert identity_expgen(5).passed
        assert identity_exfor(6).passed
        for k in range(1, 6):
            assert identity_euleq(k, 20).passed, k


def test_criterion_09_tmu_root_table():
    with criterion(9, "T_mu root-of-unity table, n <= 8", 10.0):
        for n in range(1, 9):
            for mu in partitions_of(n):
                for d in range(1, n + 1):
                    if n % d and (n - 1) % d:
                        continue
                    val = eval_rational(t_mu_poly(mu), d)
                    unique = set(mu.parts)
                    is_dk = unique == {d}
                    is_1dk = d != 1 and mu.parts.count(1) == 1 and unique == {d, 1}
                    if is_dk or is_1dk:
                        assert val == partition_stats(mu).z, (mu, d)
                    else:
                        assert val == 0, (mu, d)
        # the centralizer-order special value
        for d, k in [(2, 2), (2, 3), (3, 2), (4, 2)]:
            import math

            assert eval_rational(t_mu_poly(rectangle(d, k)), d) == (
                math.factorial(k) * d**k
            )


def _rand_tpoly(rng, maxdeg=10):
    return poly_from_dense(
        "t", [rng.randint(-5, 5) for _ in range(rng.randint(1, maxdeg + 1))]
    )


def test_criterion_10_polynomial_identities():
    with criterion(10, "filter and recurrence identities", 10.0):
        rng = random.Random(0)

        # Moebius resummation: exhaustive n <= 8 plus 50 random partitions.
        for n in range(1, 9):
            for nu in partitions_of(n):
                assert g_nu(nu) == g_nu_resum(nu), nu
        pool = [nu for n in range(1, 19) for nu in partitions_of(n)]
        for _ in range(50):
            nu = rng.choice(pool)
            assert g_nu(nu) == g_nu_resum(nu), nu

        # gcd-filter contraction: exhaustive k <= 4, c | b <= 8 plus random.
        def ftbc(k, b, c):
            lhs = filter_gcd(T * eulerian_poly(k - 1) * q_int(b, "t") ** k, b, c)
            tc = MultiPoly.var("t", c)
            inner = tc * eulerian_poly(k - 1).subs("t", tc)
            inner = inner * poly_from_dense(
                "t", [1 if e % c == 0 else 0 for e in range(b - c + 1)]
            ) ** k
            assert lhs == c ** (k - 1) * filter_gcd(inner, b, c), (k, b, c)

        for k in range(1, 5):
            for b in range(1, 9):
                for c in range(1, b + 1):
                    if b % c == 0:
                        ftbc(k, b, c)
        for _ in range(50):
            k, b = rng.randint(1, 5), rng.randint(1, 10)
            ftbc(k, b, rng.choice([e for e in range(1, b + 1) if b % e == 0]))

        # coprime filter respects substituted products (50 random).
        for _ in range(50):
            g, h, d = _rand_tpoly(rng), _rand_tpoly(rng, 4), rng.randint(1, 6)
            hd = h.subs("t", MultiPoly.var("t", d))
            assert filter_coprime(g * hd, d) == filter_coprime(g, d) * hd

        # gcd filter respects substituted products when c | b (50 random).
        for _ in range(50):
            b = rng.randint(1, 10)
            c = rng.choice([e for e in range(1, b + 1) if b % e == 0])
            g, h = _rand_tpoly(rng), _rand_tpoly(rng, 4)
            hb = h.subs("t", MultiPoly.var("t", b))
            assert filter_gcd(g * hb, b, c) == filter_gcd(g, b, c) * hb

        # q-multinomial Pascal recurrence: exhaustive n <= 12 into <= 4
        # positive parts, plus 50 random compositions.
        def pascal(ks):
            total = MultiPoly.zero()
            for i in range(len(ks)):
                smaller = list(ks)
                smaller[i] -= 1
                shift = sum(ks[i + 1 :])
                total = total + MultiPoly.var("q", shift) * q_multinomial(*smaller)
            assert total == q_multinomial(*ks), ks

        for n in range(1, 13):
            for m in range(1, 5):
                for cuts in itertools.combinations(range(1, n), m - 1):
                    bounds = (0,) + cuts + (n,)
                    pascal(tuple(b - a for a, b in zip(bounds, bounds[1:])))
        for _ in range(50):
            pascal(tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 4))))


def test_criterion_11_golden_micro_values():
    with criterion(11, "frozen worked micro-instances", 10.0):
        from eulerian_csp.combinat import dex_set, parse_permutation

        assert a_lambda_j(Partition((2, 1)), 1) == parse_poly("1 + q + q^2")
        assert a_lambda_j(Partition((3,)), 1) == MultiPoly.one()
        assert a_lambda_j(Partition((3,)), 2) == MultiPoly.one()
        assert theta_poly(Partition((4,)), 2) == parse_poly("t + t^3")
        assert q_lambda(Partition((4,))).chi(Partition((2, 2))) == parse_poly(
            "t + t^3"
        )
        assert dex_set(parse_permutation("6,4,1,5,3,2")) == frozenset({1, 3, 5})
