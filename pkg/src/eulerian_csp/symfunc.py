"""
Symmetric functions in the power-sum basis, with coefficients in Q[t].

A degree-n element is stored as a map from partitions of n to t-polynomial
coefficients of p_nu.  The chi accessor returns the coefficient of
z_nu^{-1} p_nu instead, which is the normalization in which all the
root-of-unity evaluations of the q-Eulerian numbers are read off.

Three independent constructions of the same family of symmetric functions
live here (a power-sum closed form, a plethystic-logarithm pipeline, and a
direct quasisymmetric expansion into finitely many variables); the test
suite's job is to confirm they agree.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Optional, Union

from .combinat import (
    Partition,
    _check_bound,
    dex_set,
    mobius,
    partition_stats,
    partitions_of,
    par_mdr,
    perm_statistics,
    perms_by_type,
    pi_nu,
    rectangle,
)
from .polyring import (
    MultiPoly,
    Scalar,
    _mono,
    cycle_eulerian_poly,
    eulerian_poly,
    filter_coprime,
    filter_gcd,
    q_int,
    t_mu_poly,
)

T = MultiPoly.var("t")

CoeffLike = Union[MultiPoly, Scalar]


def _t_poly(x: CoeffLike) -> MultiPoly:
    f = x if isinstance(x, MultiPoly) else MultiPoly.const(x)
    if not f.variables() <= {"t"}:
        raise ValueError("coefficients must be polynomials in t")
    return f


class PSymFunc:
    """
    Homogeneous symmetric function of fixed degree in the power-sum basis.

    >>> f = PSymFunc.p(Partition((2,))) * PSymFunc.p(Partition((1,)))
    >>> str(f)
    'p[2,1]'
    >>> str(h_to_p(2))
    '1/2*p[2] + 1/2*p[1,1]'
    """

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Optional[Mapping[Partition, CoeffLike]] = None):
        self.degree = degree
        canon: dict[Partition, MultiPoly] = {}
        for nu, c in (coeffs or {}).items():
            if nu.n != degree:
                raise ValueError(f"{nu} is not a partition of {degree}")
            f = _t_poly(c)
            if not f.is_zero():
                canon[nu] = f
        self._coeffs = canon

    @staticmethod
    def zero(degree: int) -> "PSymFunc":
        return PSymFunc(degree)

    @staticmethod
    def one() -> "PSymFunc":
        return PSymFunc(0, {Partition(()): MultiPoly.one()})

    @staticmethod
    def p(nu: Partition, coeff: CoeffLike = 1) -> "PSymFunc":
        return PSymFunc(nu.n, {nu: coeff})

    def coeff(self, nu: Partition) -> MultiPoly:
        """Coefficient of p_nu."""
        return self._coeffs.get(nu, MultiPoly.zero())

    def chi(self, nu: Partition) -> MultiPoly:
        """Coefficient of z_nu^{-1} p_nu, i.e. z_nu times the p_nu coefficient."""
        return self.coeff(nu) * partition_stats(nu).z

    def is_zero(self) -> bool:
        return not self._coeffs

    def items(self) -> Iterator[tuple[Partition, MultiPoly]]:
        """(partition, coefficient) pairs in reverse-lexicographic order."""
        order = {nu: i for i, nu in enumerate(partitions_of(self.degree))}
        return iter(sorted(self._coeffs.items(), key=lambda kv: order[kv[0]]))

    def __add__(self, other: "PSymFunc") -> "PSymFunc":
        if self.degree != other.degree:
            raise ValueError("cannot add symmetric functions of different degrees")
        out = dict(self._coeffs)
        for nu, c in other._coeffs.items():
            out[nu] = out.get(nu, MultiPoly.zero()) + c
        return PSymFunc(self.degree, out)

    def __sub__(self, other: "PSymFunc") -> "PSymFunc":
        return self + other.scale(-1)

    def scale(self, c: CoeffLike) -> "PSymFunc":
        f = _t_poly(c)
        return PSymFunc(self.degree, {nu: v * f for nu, v in self._coeffs.items()})

    def __mul__(self, other: "PSymFunc") -> "PSymFunc":
        out: dict[Partition, MultiPoly] = {}
        for nu1, c1 in self._coeffs.items():
            for nu2, c2 in other._coeffs.items():
                nu = Partition(tuple(sorted(nu1.parts + nu2.parts, reverse=True)))
                out[nu] = out.get(nu, MultiPoly.zero()) + c1 * c2
        return PSymFunc(self.degree + other.degree, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PSymFunc):
            return NotImplemented
        return self.degree == other.degree and self._coeffs == other._coeffs

    def __str__(self) -> str:
        parts = []
        for nu, c in self.items():
            basis = f"p[{nu}]" if nu.parts else "1"
            cs = str(c)
            if cs == "1":
                parts.append(basis)
            elif "+" in cs or cs.startswith("-"):
                parts.append(f"({cs})*{basis}")
            else:
                parts.append(f"{cs}*{basis}")
        return " + ".join(parts) if parts else "0"

    def to_json_dict(self) -> dict:
        """Serialize listing chi values, partitions in reverse-lex order."""
        return {
            "degree": self.degree,
            "terms": [
                {"nu": str(nu), "chi": str(self.chi(nu))} for nu, _ in self.items()
            ],
        }


class GradedSeries:
    """
    A symmetric power series with zero constant term, stored as one
    homogeneous component per degree up to a truncation bound.
    """

    __slots__ = ("bound", "_components")

    def __init__(
        self, bound: int, components: Optional[Mapping[int, PSymFunc]] = None
    ):
        self.bound = bound
        self._components = {}
        for n, f in (components or {}).items():
            if f.degree != n:
                raise ValueError("component degree mismatch")
            if 1 <= n <= bound and not f.is_zero():
                self._components[n] = f

    @staticmethod
    def zero(bound: int) -> "GradedSeries":
        return GradedSeries(bound)

    @staticmethod
    def from_psym(f: PSymFunc, bound: int) -> "GradedSeries":
        return GradedSeries(bound, {f.degree: f})

    def component(self, n: int) -> PSymFunc:
        return self._components.get(n, PSymFunc.zero(n))

    def components(self) -> dict[int, PSymFunc]:
        return dict(self._components)

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        bound = min(self.bound, other.bound)
        out = {}
        for n in range(1, bound + 1):
            f = self.component(n) + other.component(n)
            if not f.is_zero():
                out[n] = f
        return GradedSeries(bound, out)

    def __sub__(self, other: "GradedSeries") -> "GradedSeries":
        return self + other.scale(-1)

    def scale(self, c: CoeffLike) -> "GradedSeries":
        return GradedSeries(
            self.bound, {n: f.scale(c) for n, f in self._components.items()}
        )

    def __mul__(self, other: "GradedSeries") -> "GradedSeries":
        bound = min(self.bound, other.bound)
        out: dict[int, PSymFunc] = {}
        for a, fa in self._components.items():
            for b, fb in other._components.items():
                if a + b > bound:
                    continue
                prod = fa * fb
                out[a + b] = out.get(a + b, PSymFunc.zero(a + b)) + prod
        return GradedSeries(bound, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return self.bound == other.bound and self._components == other._components

    def min_degree(self) -> int:
        return min(self._components, default=self.bound + 1)


def h_to_p(m: int) -> PSymFunc:
    """Complete homogeneous h_m expanded in the power-sum basis: all chi are 1."""
    if m < 1:
        raise ValueError("h_to_p requires m >= 1")
    return PSymFunc(
        m, {mu: Fraction(1, partition_stats(mu).z) for mu in partitions_of(m)}
    )


def pleth_power(f: Union[PSymFunc, GradedSeries], d: int):
    """
    Plethysm by the power sum p_d: substitutes t -> t^d in every coefficient
    and re-indexes p_nu to p_{d*nu}; on a series, components past the bound
    are truncated away.
    """
    if d < 1:
        raise ValueError("pleth_power requires d >= 1")
    if isinstance(f, GradedSeries):
        out = {}
        for n, comp in f.components().items():
            if n * d <= f.bound:
                out[n * d] = pleth_power(comp, d)
        return GradedSeries(f.bound, out)
    td = MultiPoly.var("t", d)
    return PSymFunc(
        f.degree * d,
        {nu.scaled(d): c.subs("t", td) for nu, c in f._coeffs.items()},
    )


def pleth_h(m: int, g: GradedSeries) -> GradedSeries:
    """
    Plethysm h_m[g] for a positive-degree series g, via the power-sum
    expansion of h_m: sum over mu of z_mu^{-1} prod_i p_{mu_i}[g].
    """
    if m < 1:
        raise ValueError("pleth_h requires m >= 1")
    if g.min_degree() < 1:
        raise ValueError("pleth_h requires a series with zero constant term")
    out = GradedSeries.zero(g.bound)
    for mu in partitions_of(m):
        prod = pleth_power(g, mu.parts[0])
        for part in mu.parts[1:]:
            prod = prod * pleth_power(g, part)
        out = out + prod.scale(Fraction(1, partition_stats(mu).z))
    return out


def apply_H(g: GradedSeries) -> GradedSeries:
    """Plethystic composition with H = sum_{m>=1} h_m."""
    out = GradedSeries.zero(g.bound)
    for m in range(1, g.bound + 1):
        out = out + pleth_h(m, g)
    return out


def apply_L(g: GradedSeries) -> GradedSeries:
    """
    Plethystic composition with the logarithm-type inverse of H:
    L = sum_d (mu(d)/d) sum_i ((-1)^{i-1}/i) p_d^i.
    """
    out = GradedSeries.zero(g.bound)
    for d in range(1, g.bound + 1):
        md = mobius(d)
        if md == 0:
            continue
        pd_g = pleth_power(g, d)
        if pd_g.min_degree() > g.bound:
            continue
        power = None
        for i in range(1, g.bound // d + 1):
            power = pd_g if power is None else power * pd_g
            out = out + power.scale(Fraction(md * (-1) ** (i - 1), d * i))
    return out


def qnj_symfunc(n: int) -> PSymFunc:
    """
    The degree-n Eulerian symmetric function, all excedance gradings at
    once: sum over nu of z_nu^{-1} A_{l(nu)}(t) prod_i [nu_i]_t p_nu.
    """
    if n < 1:
        raise ValueError("qnj_symfunc requires n >= 1")
    coeffs = {}
    for nu in partitions_of(n):
        st = partition_stats(nu)
        c = eulerian_poly(st.l) * Fraction(1, st.z)
        for part in nu.parts:
            c = c * q_int(part, "t")
        coeffs[nu] = c
    return PSymFunc(n, coeffs)


@lru_cache(maxsize=None)
def q_circular_via_L(n: int) -> PSymFunc:
    """
    The circular (single-cycle) component extracted with the plethystic
    logarithm: degree-n part of L applied to the positive-degree series of
    the qnj_symfunc values.
    """
    if n < 1:
        raise ValueError("q_circular_via_L requires n >= 1")
    g = GradedSeries(n, {i: qnj_symfunc(i) for i in range(1, n + 1)})
    return apply_L(g).component(n)


def g_nu(nu: Partition) -> MultiPoly:
    """
    Coprimality-filtered factor of the circular expansion:
    (t A_{k-1}(t) prod [nu_i]_t) filtered to exponents coprime to gcd(nu),
    k the number of parts.

    >>> str(g_nu(Partition((2, 2))))
    't + t^3'
    """
    if not nu.parts:
        raise ValueError("empty partition")
    st = partition_stats(nu)
    f = T * eulerian_poly(st.l - 1)
    for part in nu.parts:
        f = f * q_int(part, "t")
    return filter_coprime(f, st.g)


def g_nu_resum(nu: Partition) -> MultiPoly:
    """
    Moebius resummation of the same polynomial:
    sum over d | gcd(nu) of mu(d) d^{l-1} t^d A_{l-1}(t^d) prod [nu_i/d]_{t^d}.
    """
    if not nu.parts:
        raise ValueError("empty partition")
    st = partition_stats(nu)
    total = MultiPoly.zero()
    for d in range(1, st.g + 1):
        if st.g % d:
            continue
        md = mobius(d)
        if md == 0:
            continue
        td = MultiPoly.var("t", d)
        term = MultiPoly.var("t", d) * eulerian_poly(st.l - 1).subs("t", td)
        for part in nu.parts:
            term = term * MultiPoly({_mono({"t": d * i}): 1 for i in range(part // d)})
        total = total + term * (md * d ** (st.l - 1))
    return total


@lru_cache(maxsize=None)
def q_circular_direct(n: int) -> PSymFunc:
    """
    The circular component assembled from the filtered polynomials:
    sum over nu of z_nu^{-1} G_nu(t) p_nu.

    The formula's n = 1 case needs care: the unique 1-cycle is the identity
    of S_1 with no excedance, so the true value is p_1 (coefficient t^0),
    while a verbatim reading of the filtered product would give t*p_1.
    We return the enumeration-backed value.
    """
    if n < 1:
        raise ValueError("q_circular_direct requires n >= 1")
    if n == 1:
        return PSymFunc.p(Partition((1,)))
    return PSymFunc(
        n,
        {
            nu: g_nu(nu) * Fraction(1, partition_stats(nu).z)
            for nu in partitions_of(n)
        },
    )


@lru_cache(maxsize=None)
def q_lambda(lam: Partition) -> PSymFunc:
    """
    The cycle-type Eulerian symmetric function for an arbitrary partition,
    as the plethystic product over part sizes i of h_{m_i}[circular part of
    size i].
    """
    if lam.n < 1:
        raise ValueError("q_lambda requires a nonempty partition")
    out = PSymFunc.one()
    for i, mi in sorted(partition_stats(lam).m.items()):
        inner = GradedSeries.from_psym(q_circular_direct(i), i * mi)
        factor = pleth_h(mi, inner).component(i * mi)
        out = out * factor
    return out


def omega_bridge(F: PSymFunc) -> MultiPoly:
    """
    Product of (1-q^i) times the stable principal specialization of F,
    computed termwise through the polynomials T_mu(q):
    sum over mu of chi^F_mu z_mu^{-1} T_mu(q).
    """
    out = MultiPoly.zero()
    for mu, c in F.items():
        out = out + c * t_mu_poly(mu)
    return out


def a_at_root(lam: Partition, j: int, d: int) -> Fraction:
    """
    Value of the cycle-type q-Eulerian number a_{lam,j} at a primitive d-th
    root of unity, read off as an expansion coefficient: the chi value at
    d^k when dk = n, at 1d^k when dk = n-1.
    """
    n = lam.n
    if d >= 1 and n % d == 0:
        nu = rectangle(d, n // d)
    elif d >= 1 and n >= 2 and (n - 1) % d == 0:
        nu = Partition((d,) * ((n - 1) // d) + (1,))
    else:
        raise ValueError(f"d={d} divides neither n={n} nor n-1")
    poly = q_lambda(lam).chi(nu)
    return poly.univariate("t").get(j, Fraction(0))


def chi_rm_closed(r: int, m: int, d: int) -> MultiPoly:
    """
    Closed form for the chi values of the rectangular cycle type r^m at
    nu = d^{rm/d}: a sum over the divisibility-constrained partitions of m
    of multiplicity-normalized multinomials times gcd-filtered products.

    The per-part factor uses the excedance polynomial of single cycles,
    whose value at cycle length 1 is 1 (not t); see cycle_eulerian_poly.
    """
    n = r * m
    if d < 1 or n % d:
        raise ValueError("chi_rm_closed requires d | r*m")
    total = MultiPoly.zero()
    for mu in par_mdr(m, d, r):
        term = MultiPoly.const(pi_nu(mu.scaled(r, d)))
        for part in mu.parts:
            k = r * part // d
            term = term * filter_gcd(cycle_eulerian_poly(k) * q_int(d, "t") ** k, d, part)
        total = total + term
    return total


def chi_lambda_closed(lam: Partition, d: int) -> MultiPoly:
    """
    Closed form for the chi values of an arbitrary cycle type lam at
    nu = d^{n/d}: zero unless d divides r*m_r(lam) for every part size r,
    else a multinomial times the product of the rectangular closed forms.
    """
    n = lam.n
    if d < 1 or n % d:
        raise ValueError("chi_lambda_closed requires d | n")
    mults = partition_stats(lam).m
    if any((r * mr) % d for r, mr in mults.items()):
        return MultiPoly.zero()
    coef = Fraction(math.factorial(n // d))
    for r, mr in mults.items():
        coef /= math.factorial(r * mr // d)
    assert coef.denominator == 1
    out = MultiPoly.const(coef)
    for r, mr in sorted(mults.items()):
        out = out * chi_rm_closed(r, mr, d)
    return out


def expand_in_variables(F: PSymFunc, m: int) -> MultiPoly:
    """Substitute p_k -> x_1^k + ... + x_m^k and expand."""
    if m < 1:
        raise ValueError("expand_in_variables requires m >= 1")
    power_sums = {}

    def psum(k: int) -> MultiPoly:
        if k not in power_sums:
            power_sums[k] = MultiPoly(
                {_mono({f"x{i}": k}): 1 for i in range(1, m + 1)}
            )
        return power_sums[k]

    out = MultiPoly.zero()
    for nu, c in F.items():
        term = c
        for part in nu.parts:
            term = term * psum(part)
        out = out + term
    return out


def fundamental_qsym(n: int, S: frozenset[int], m: int) -> MultiPoly:
    """
    Fundamental quasisymmetric function F_S restricted to x_1..x_m: the sum
    of all monomials x_{j_1}...x_{j_n} with j_1 >= ... >= j_n in [m] and
    strict descent at every position in S.
    """
    out = MultiPoly.zero()

    def rec(pos: int, prev: int, counts: dict[int, int]):
        nonlocal out
        if pos == n:
            out = out + MultiPoly.monomial({f"x{i}": e for i, e in counts.items()})
            return
        top = prev - 1 if pos and pos in S else prev
        for j in range(top, 0, -1):
            counts[j] = counts.get(j, 0) + 1
            rec(pos + 1, j, counts)
            counts[j] -= 1
            if not counts[j]:
                del counts[j]

    rec(0, m, {})
    return out


def q_lambda_direct(lam: Partition, m: int, bound: int = 5) -> MultiPoly:
    """
    The defining quasisymmetric expansion, by brute force: sum over
    permutations of cycle type lam of t^{exc} times the fundamental
    quasisymmetric function of the Dex set, in x_1..x_m.

    Capped by default at n <= 5 (the monomial count grows like m^n).
    """
    n = lam.n
    _check_bound(n, bound)
    if m < 1:
        raise ValueError("q_lambda_direct requires m >= 1")
    out = MultiPoly.zero()
    for sigma in perms_by_type(n, bound=n).get(lam, ()):
        exc = perm_statistics(sigma).exc
        out = out + MultiPoly.var("t", exc) * fundamental_qsym(n, dex_set(sigma), m)
    return out
