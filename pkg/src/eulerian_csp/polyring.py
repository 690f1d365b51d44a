"""
Exact sparse multivariate polynomials and truncated formal power series.

The variable set is fixed: q, t, s, r and x1, x2, ...  Coefficients are
arbitrary-precision rationals; nothing in this package ever touches a
float.  A monomial is a tuple of (variable, exponent) pairs sorted by the
global variable order q < t < s < r < x1 < x2 < ..., with all exponents
positive; the zero polynomial has no terms.

Printing follows one grammar, accepted back by :func:`parse_poly`:
terms are joined by " + ", each term is ``coeff``, ``mono`` or
``coeff*mono`` (``-mono`` for coefficient -1), coefficients print as
integers or "p/q", and monomials as e.g. ``q^2*t``.  Terms are sorted by
(total degree, exponent vector), which keeps golden outputs stable.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Union

from .combinat import (
    BoundExceededError,
    Partition,
    _check_bound,
    perm_statistics,
    perms_by_type,
)

Scalar = Union[int, Fraction]
Mono = tuple[tuple[str, int], ...]

_FIXED_VARS = {"q": 0, "t": 1, "s": 2, "r": 3}


class InexactDivisionError(ArithmeticError):
    """Polynomial division that was required to be exact left a remainder."""


def var_index(name: str) -> int:
    if name in _FIXED_VARS:
        return _FIXED_VARS[name]
    m = re.fullmatch(r"x(\d+)", name)
    if m and int(m.group(1)) >= 1:
        return 3 + int(m.group(1))
    raise ValueError(f"unknown variable {name!r}")


def _mono(varexps: Mapping[str, int]) -> Mono:
    items = [(v, e) for v, e in varexps.items() if e]
    for v, e in items:
        var_index(v)
        if e < 0:
            raise ValueError(f"negative exponent on {v}")
    return tuple(sorted(items, key=lambda ve: var_index(ve[0])))


def _mono_mul(a: Mono, b: Mono) -> Mono:
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda ve: var_index(ve[0])))


class MultiPoly:
    """
    Sparse exact-rational polynomial in the fixed variable set.

    >>> f = MultiPoly.var("q") + 1
    >>> str(f * f)
    '1 + 2*q + q^2'
    >>> str(MultiPoly.zero())
    '0'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Mono, Scalar]] = None):
        canon: dict[Mono, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if not c:
                continue
            canon[_mono(dict(mono))] = c
        self._terms = canon

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "MultiPoly":
        return MultiPoly()

    @staticmethod
    def const(c: Scalar) -> "MultiPoly":
        return MultiPoly({(): c})

    @staticmethod
    def one() -> "MultiPoly":
        return MultiPoly.const(1)

    @staticmethod
    def var(name: str, exp: int = 1) -> "MultiPoly":
        return MultiPoly.monomial({name: exp})

    @staticmethod
    def monomial(varexps: Mapping[str, int], coeff: Scalar = 1) -> "MultiPoly":
        return MultiPoly({_mono(varexps): coeff})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if not isinstance(other, (MultiPoly, int, Fraction)):
            return NotImplemented
        other = _coerce(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            val = out.get(mono, Fraction(0)) + c
            if val:
                out[mono] = val
            else:
                out.pop(mono, None)
        res = MultiPoly.__new__(MultiPoly)
        res._terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        res = MultiPoly.__new__(MultiPoly)
        res._terms = {m: -c for m, c in self._terms.items()}
        return res

    def __sub__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "MultiPoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            res = MultiPoly.__new__(MultiPoly)
            res._terms = {} if not c else {m: v * c for m, v in self._terms.items()}
            return res
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: dict[Mono, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                val = out.get(m, Fraction(0)) + c1 * c2
                if val:
                    out[m] = val
                else:
                    out.pop(m, None)
        res = MultiPoly.__new__(MultiPoly)
        res._terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> set[str]:
        return {v for mono in self._terms for v, _ in mono}

    def total_degree(self) -> int:
        return max((sum(e for _, e in m) for m in self._terms), default=0)

    def degree_in(self, name: str) -> int:
        return max((dict(m).get(name, 0) for m in self._terms), default=0)

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def coeff_of(self, name: str, k: int) -> "MultiPoly":
        """Coefficient of name^k, a polynomial in the remaining variables."""
        out: dict[Mono, Fraction] = {}
        for mono, c in self._terms.items():
            d = dict(mono)
            if d.pop(name, 0) == k:
                out[_mono(d)] = c
        return MultiPoly(out)

    def univariate(self, name: str) -> dict[int, Fraction]:
        """Exponent -> coefficient map; error if another variable occurs."""
        out: dict[int, Fraction] = {}
        for mono, c in self._terms.items():
            d = dict(mono)
            e = d.pop(name, 0)
            if d:
                raise ValueError(f"polynomial is not univariate in {name}")
            out[e] = c
        return out

    def subs(self, name: str, value: Union["MultiPoly", Scalar]) -> "MultiPoly":
        """Substitute a polynomial (or constant) for a variable."""
        value = _coerce(value)
        powers: dict[int, MultiPoly] = {0: MultiPoly.one()}

        def power(e: int) -> MultiPoly:
            if e not in powers:
                powers[e] = power(e - 1) * value
            return powers[e]

        out = MultiPoly.zero()
        for mono, c in self._terms.items():
            d = dict(mono)
            e = d.pop(name, 0)
            out = out + MultiPoly({_mono(d): c}) * power(e)
        return out

    def iter_terms(self) -> Iterator[tuple[Mono, Fraction]]:
        """Terms in the canonical print order."""
        return iter(sorted(self._terms.items(), key=lambda mc: _term_key(mc[0])))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly('{format_poly(self)}')"


def _coerce(x: Union[MultiPoly, Scalar]) -> MultiPoly:
    return x if isinstance(x, MultiPoly) else MultiPoly.const(x)


def _term_key(mono: Mono) -> tuple:
    deg = sum(e for _, e in mono)
    return (deg, tuple(sorted(((var_index(v), e) for v, e in mono))))


def format_poly(f: MultiPoly) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for mono, c in f.iter_terms():
        mono_str = "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono_str)
        elif c == -1:
            parts.append(f"-{mono_str}")
        else:
            parts.append(f"{c}*{mono_str}")
    return " + ".join(parts)


def parse_poly(text: str) -> MultiPoly:
    """
    Parse the grammar produced by :func:`format_poly`.

    >>> parse_poly("1 + q + q^2") == q_int(3)
    True
    >>> parse_poly(str(parse_poly("-t + 5/2*q^2*t"))) == parse_poly("-t + 5/2*q^2*t")
    True
    """
    text = text.strip()
    if text == "0":
        return MultiPoly.zero()
    total = MultiPoly.zero()
    for chunk in text.split(" + "):
        chunk = chunk.strip()
        coeff = Fraction(1)
        if chunk.startswith("-") and not re.match(r"-\d", chunk):
            coeff = Fraction(-1)
            chunk = chunk[1:]
        varexps: dict[str, int] = {}
        for factor in chunk.split("*"):
            factor = factor.strip()
            if re.fullmatch(r"-?\d+(/\d+)?", factor):
                coeff *= Fraction(factor)
                continue
            m = re.fullmatch(r"([a-z]\d*)(?:\^(\d+))?", factor)
            if not m:
                raise ValueError(f"bad polynomial factor {factor!r}")
            name, exp = m.group(1), int(m.group(2) or 1)
            varexps[name] = varexps.get(name, 0) + exp
        total = total + MultiPoly.monomial(varexps, coeff)
    return total


# -- dense univariate helpers (used for exact division) ---------------------


def dense_coeffs(f: MultiPoly, name: str) -> list[Fraction]:
    """Coefficient list [c0, c1, ...] of a polynomial univariate in name."""
    uni = f.univariate(name)
    out = [Fraction(0)] * (max(uni, default=0) + 1)
    for e, c in uni.items():
        out[e] = c
    return out


def poly_from_dense(name: str, coeffs: Iterable[Scalar]) -> MultiPoly:
    return MultiPoly({_mono({name: e}): c for e, c in enumerate(coeffs)})


def _dense_divmod(
    num: list[Fraction], den: list[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    num = list(num)
    while num and not num[-1]:
        num.pop()
    den = list(den)
    while den and not den[-1]:
        den.pop()
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    quo = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    while len(num) >= len(den):
        c = num[-1] / den[-1]
        shift = len(num) - len(den)
        quo[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
        while num and not num[-1]:
            num.pop()
    return quo, num


def div_exact(f: MultiPoly, g: MultiPoly, name: str) -> MultiPoly:
    """Exact division of polynomials univariate in name; remainder aborts."""
    quo, rem = _dense_divmod(dense_coeffs(f, name), dense_coeffs(g, name))
    if rem:
        raise InexactDivisionError(f"{f} is not divisible by {g}")
    return poly_from_dense(name, quo)


# -- q-analogues and Eulerian polynomials ------------------------------------

Q = MultiPoly.var("q")
T = MultiPoly.var("t")
S = MultiPoly.var("s")
R = MultiPoly.var("r")


def q_int(n: int, name: str = "q") -> MultiPoly:
    """
    [n]_q = 1 + q + ... + q^{n-1}.

    >>> str(q_int(3))
    '1 + q + q^2'
    """
    if n < 0:
        raise ValueError("q_int requires n >= 0")
    return MultiPoly({_mono({name: j}): 1 for j in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> MultiPoly:
    """[n]_q! with [0]_q! = 1."""
    if n < 0:
        raise ValueError("q_factorial requires n >= 0")
    return MultiPoly.one() if n == 0 else q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def _q_multinomial_cached(ks: tuple[int, ...]) -> MultiPoly:
    out = q_factorial(sum(ks))
    for k in ks:
        out = div_exact(out, q_factorial(k), "q")
    for c in out.univariate("q").values():
        assert c.denominator == 1 and c >= 0, "q-multinomial not in N[q]"
    return out


def q_multinomial(*ks: int) -> MultiPoly:
    """
    The q-multinomial coefficient [sum(ks); k1,...,km]_q, by exact division.

    >>> str(q_multinomial(2, 2))
    '1 + q + 2*q^2 + q^3 + q^4'
    """
    if any(k < 0 for k in ks):
        raise ValueError("q_multinomial requires nonnegative arguments")
    return _q_multinomial_cached(tuple(sorted(ks)))


def q_binomial(n: int, k: int) -> MultiPoly:
    if not 0 <= k <= n:
        return MultiPoly.zero()
    return q_multinomial(k, n - k)


@lru_cache(maxsize=None)
def _eulerian_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _eulerian_row(n - 1)
    row = [0] * n
    for k in range(n):
        left = (k + 1) * prev[k] if k < len(prev) else 0
        right = (n - k) * prev[k - 1] if k >= 1 else 0
        row[k] = left + right
    return tuple(row)


def eulerian_poly(n: int) -> MultiPoly:
    """
    Eulerian polynomial A_n(t), by the classical number triangle.

    >>> str(eulerian_poly(3))
    '1 + 4*t + t^2'
    """
    if n < 0:
        raise ValueError("eulerian_poly requires n >= 0")
    return MultiPoly({_mono({"t": k}): c for k, c in enumerate(_eulerian_row(n)) if c})


def cycle_eulerian_poly(l: int) -> MultiPoly:
    """
    Excedance generating polynomial of the l-cycles in S_l.

    Equals t*A_{l-1}(t) for l >= 2.  The lone 1-cycle is the identity of
    S_1 with no excedance, so the value at l = 1 is 1, not t.

    >>> str(cycle_eulerian_poly(3))
    't + t^2'
    >>> str(cycle_eulerian_poly(1))
    '1'
    """
    if l < 1:
        raise ValueError("cycle_eulerian_poly requires l >= 1")
    if l == 1:
        return MultiPoly.one()
    return T * eulerian_poly(l - 1)


# -- statistic generating polynomials (exhaustive enumeration) ---------------


def stat_polynomial(n: int, bound: Optional[int] = None) -> MultiPoly:
    """
    The trivariate generating polynomial of (maj, exc, fix) over S_n,
    in q, t, r.

    >>> str(stat_polynomial(2))
    'q*t + r^2'
    """
    _check_bound(n, bound)
    out: dict[Mono, Fraction] = {}
    for sigmas in perms_by_type(n, bound=n).values():
        for sigma in sigmas:
            st = perm_statistics(sigma)
            m = _mono({"q": st.maj, "t": st.exc, "r": st.fix})
            out[m] = out.get(m, Fraction(0)) + 1
    return MultiPoly(out)


def cycle_stat_polynomial(lam: Partition, bound: Optional[int] = None) -> MultiPoly:
    """Generating polynomial of (maj, exc) in q, t over permutations of type lam."""
    _check_bound(lam.n, bound)
    out: dict[Mono, Fraction] = {}
    for sigma in perms_by_type(lam.n, bound=lam.n).get(lam, ()):
        st = perm_statistics(sigma)
        m = _mono({"q": st.maj, "t": st.exc})
        out[m] = out.get(m, Fraction(0)) + 1
    return MultiPoly(out)


@lru_cache(maxsize=None)
def _a_lambda_table(lam: Partition) -> dict[int, MultiPoly]:
    table: dict[int, dict[Mono, Fraction]] = {}
    for sigma in perms_by_type(lam.n, bound=lam.n).get(lam, ()):
        st = perm_statistics(sigma)
        assert st.maj >= st.exc, "maj >= exc must hold"
        m = _mono({"q": st.maj - st.exc})
        row = table.setdefault(st.exc, {})
        row[m] = row.get(m, Fraction(0)) + 1
    return {j: MultiPoly(row) for j, row in table.items()}


def a_lambda_j(lam: Partition, j: int, bound: Optional[int] = None) -> MultiPoly:
    """
    Cycle-type q-Eulerian number: sum of q^{maj-exc} over permutations of
    cycle type lam with exactly j excedances.

    >>> str(a_lambda_j(Partition((2, 1)), 1))
    '1 + q + q^2'
    """
    _check_bound(lam.n, bound)
    return _a_lambda_table(lam).get(j, MultiPoly.zero())


def a_lambda_all(lam: Partition, bound: Optional[int] = None) -> MultiPoly:
    """Sum_j a_{lam,j}(q) t^j, i.e. the cycle-type polynomial with q^{maj-exc}."""
    _check_bound(lam.n, bound)
    out = MultiPoly.zero()
    for j, f in _a_lambda_table(lam).items():
        out = out + f * MultiPoly.var("t", j)
    return out


def shift_t_by_qinv(f: MultiPoly) -> MultiPoly:
    """
    Substitute t -> t/q exactly: q^a t^b maps to q^{a-b} t^b.  Every term
    must satisfy a >= b (maj >= exc guarantees this for the polynomials in
    scope).
    """
    out: dict[Mono, Fraction] = {}
    for mono, c in f._terms.items():
        d = dict(mono)
        a, b = d.get("q", 0), d.get("t", 0)
        if a < b:
            raise ValueError("substitution t -> t/q would need a negative q power")
        d["q"] = a - b
        m = _mono(d)
        out[m] = out.get(m, Fraction(0)) + c
    return MultiPoly(out)


# -- coprimality / gcd filters ------------------------------------------------


def _filtered(f: MultiPoly, keep) -> MultiPoly:
    if not f.variables() <= {"t"}:
        raise ValueError("filter requires a polynomial univariate in t")
    return MultiPoly(
        {_mono({"t": e}): c for e, c in f.univariate("t").items() if keep(e)}
    )


def filter_coprime(f: MultiPoly, k: int) -> MultiPoly:
    """
    Keep the terms a_j t^j with gcd(j, k) = 1 (note gcd(0, k) = k).

    >>> str(filter_coprime(parse_poly("t + 3*t^2 + -5*t^3 + 7*t^4"), 2))
    't + -5*t^3'
    """
    if k < 1:
        raise ValueError("filter_coprime requires k >= 1")
    return _filtered(f, lambda e: math.gcd(e, k) == 1)


def filter_gcd(f: MultiPoly, b: int, c: int) -> MultiPoly:
    """
    Keep the terms a_i t^i with gcd(i, b) = c exactly.

    >>> str(filter_gcd(parse_poly("1 + 2*t + 3*t^2 + 4*t^3 + 5*t^4"), 6, 2))
    '3*t^2 + 5*t^4'
    """
    if b < 1 or c < 1:
        raise ValueError("filter_gcd requires b, c >= 1")
    return _filtered(f, lambda e: math.gcd(e, b) == c)


def t_mu_poly(mu: Partition) -> MultiPoly:
    """
    T_mu(q) = prod_{i=1}^n (1 - q^i) / prod_i (1 - q^{mu_i}); the division
    is exact for every partition.

    >>> str(t_mu_poly(Partition((1, 1))))
    '1 + q'
    """
    n = mu.n
    num = MultiPoly.one()
    for i in range(1, n + 1):
        num = num * (MultiPoly.one() - MultiPoly.var("q", i))
    for p in mu.parts:
        num = div_exact(num, MultiPoly.one() - MultiPoly.var("q", p), "q")
    return num


# -- truncated formal power series in z ---------------------------------------


class TruncatedSeries:
    """
    Formal power series in z truncated at a fixed order, with MultiPoly
    coefficients.

    A series with ``qnorm=True`` stores, as its k-th entry, the k-th
    coefficient multiplied by [k]_q!; multiplication then uses q-binomial
    convolution.  This represents series like exp_q exactly without a
    rational-function type: all stored data stays polynomial and
    comparisons clear denominators degree by degree.
    """

    __slots__ = ("order", "coeffs", "qnorm")

    def __init__(self, coeffs: Iterable[MultiPoly], order: int, qnorm: bool = False):
        cs = [_coerce(c) for c in coeffs]
        cs = cs[: order + 1]
        cs += [MultiPoly.zero()] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)
        self.qnorm = qnorm

    @staticmethod
    def zero(order: int, qnorm: bool = False) -> "TruncatedSeries":
        return TruncatedSeries([], order, qnorm)

    @staticmethod
    def one(order: int, qnorm: bool = False) -> "TruncatedSeries":
        return TruncatedSeries([MultiPoly.one()], order, qnorm)

    def coefficient(self, k: int) -> MultiPoly:
        return self.coeffs[k]

    def _compat(self, other: "TruncatedSeries") -> int:
        if self.qnorm != other.qnorm:
            raise ValueError("cannot mix plain and q-normalized series")
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = self._compat(other)
        return TruncatedSeries(
            [self.coeffs[k] + other.coeffs[k] for k in range(order + 1)],
            order,
            self.qnorm,
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = self._compat(other)
        return TruncatedSeries(
            [self.coeffs[k] - other.coeffs[k] for k in range(order + 1)],
            order,
            self.qnorm,
        )

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction, MultiPoly)):
            return TruncatedSeries(
                [c * other for c in self.coeffs], self.order, self.qnorm
            )
        order = self._compat(other)
        out = []
        for k in range(order + 1):
            acc = MultiPoly.zero()
            for a in range(k + 1):
                term = self.coeffs[a] * other.coeffs[k - a]
                if self.qnorm:
                    term = term * q_binomial(k, a)
                acc = acc + term
            out.append(acc)
        return TruncatedSeries(out, order, self.qnorm)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.qnorm == other.qnorm
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __str__(self) -> str:
        parts = [f"({c})*z^{k}" for k, c in enumerate(self.coeffs) if not c.is_zero()]
        return " + ".join(parts) if parts else "0"


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    """Formal exp of a plain series with zero constant term."""
    if f.qnorm:
        raise ValueError("series_exp is defined for plain series")
    if not f.coeffs[0].is_zero():
        raise ValueError("series_exp requires zero constant term")
    out = TruncatedSeries.one(f.order)
    term = TruncatedSeries.one(f.order)
    for i in range(1, f.order + 1):
        term = term * f * Fraction(1, i)
        out = out + term
    return out


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    """Formal log of a plain series with constant term 1."""
    if f.qnorm:
        raise ValueError("series_log is defined for plain series")
    if f.coeffs[0] != MultiPoly.one():
        raise ValueError("series_log requires constant term 1")
    g = f - TruncatedSeries.one(f.order)
    out = TruncatedSeries.zero(f.order)
    power = TruncatedSeries.one(f.order)
    for i in range(1, f.order + 1):
        power = power * g
        out = out + power * Fraction((-1) ** (i - 1), i)
    return out


def exp_q_series(order: int) -> TruncatedSeries:
    """
    exp_q(z) = sum z^n/[n]_q!, in the q-normalized representation where
    every stored coefficient is 1.
    """
    return TruncatedSeries([MultiPoly.one()] * (order + 1), order, qnorm=True)


def neg_power_expansion(k: int, order: int, name: str = "t") -> MultiPoly:
    """(1 - t)^{-k} truncated at the given degree."""
    return MultiPoly(
        {_mono({name: i}): math.comb(k - 1 + i, i) for i in range(order + 1)}
    )


# -- generating-function identity checks --------------------------------------


@dataclass(frozen=True)
class IdentityReport:
    name: str
    passed: bool
    lhs: tuple[MultiPoly, ...]
    rhs: tuple[MultiPoly, ...]

    def mismatches(self) -> list[int]:
        return [k for k, (a, b) in enumerate(zip(self.lhs, self.rhs)) if a != b]


def identity_expgen(order: int) -> IdentityReport:
    """
    The (q, r)-exponential generating function identity for the joint
    (maj, exc, fix) distribution, checked through z^order after clearing
    all [n]_q! denominators:

        (sum_n A_n(q,t,r) z^n/[n]_q!) * (exp_q(ztq) - tq exp_q(z))
            = (1 - tq) exp_q(rz).

    Both sides live in the q-normalized series representation; the
    denominator series has unit-free data so no division is performed.
    """
    if not 0 <= order <= 7:
        raise BoundExceededError("identity_expgen supports order <= 7")
    tq = T * Q
    lhs_num = TruncatedSeries(
        [stat_polynomial(n) for n in range(order + 1)], order, qnorm=True
    )
    denom = TruncatedSeries(
        [tq**b - tq for b in range(order + 1)], order, qnorm=True
    )
    rhs = TruncatedSeries(
        [(MultiPoly.one() - tq) * R**b for b in range(order + 1)], order, qnorm=True
    )
    lhs = lhs_num * denom
    return IdentityReport("expgen", lhs == rhs, lhs.coeffs, rhs.coeffs)


def identity_exfor(order: int) -> IdentityReport:
    """
    Exponential-formula identity for Eulerian polynomials:

        sum_k A_k(t) z^k/k! = exp( sum_{l>=1} C_l(t) z^l/l! ),

    where C_l(t) is the excedance polynomial of the l-cycles (C_1 = 1,
    C_l = t A_{l-1}(t) for l >= 2).
    """
    inner = TruncatedSeries(
        [MultiPoly.zero()]
        + [cycle_eulerian_poly(l) * Fraction(1, math.factorial(l)) for l in range(1, order + 1)],
        order,
    )
    lhs = series_exp(inner)
    rhs = TruncatedSeries(
        [eulerian_poly(k) * Fraction(1, math.factorial(k)) for k in range(order + 1)],
        order,
    )
    return IdentityReport("exfor", lhs == rhs, lhs.coeffs, rhs.coeffs)


def identity_euleq(k: int, order: int) -> IdentityReport:
    """
    t A_{k-1}(t) / (1-t)^k = sum_{j>=1} j^{k-1} t^j, through degree order.
    """
    if k < 1 or order < 1:
        raise ValueError("identity_euleq requires k, order >= 1")
    prod = T * eulerian_poly(k - 1) * neg_power_expansion(k, order)
    lhs = MultiPoly(
        {_mono({"t": e}): c for e, c in prod.univariate("t").items() if e <= order}
    )
    rhs = MultiPoly({_mono({"t": j}): j ** (k - 1) for j in range(1, order + 1)})
    return IdentityReport("euleq", lhs == rhs, (lhs,), (rhs,))
