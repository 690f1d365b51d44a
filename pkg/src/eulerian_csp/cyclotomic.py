"""
Exact evaluation at primitive roots of unity.

A primitive d-th root of unity is realized as the residue class of q
modulo the cyclotomic polynomial Phi_d, never as a floating-point number.
Every quantity this package evaluates at a root of unity is provably
rational, and :func:`downcast_rational` asserts that instead of assuming
it: a non-constant residue raises, which is the primary diagnostic of a
failed sieving identity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional, Union

from .polyring import (
    Mono,
    MultiPoly,
    Scalar,
    _dense_divmod,
    _mono,
    dense_coeffs,
    poly_from_dense,
)


class NonRationalValueError(ValueError):
    """A cyclotomic residue expected to be rational was not."""

    def __init__(self, monomial: Mono, residue: "CycloNum"):
        self.monomial = monomial
        self.residue = residue
        mono_str = "*".join(f"{v}^{e}" for v, e in monomial) or "1"
        super().__init__(f"coefficient of {mono_str} is irrational: {residue}")


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> MultiPoly:
    """
    The d-th cyclotomic polynomial in q, by exact division of q^d - 1 by
    the cyclotomic polynomials of the proper divisors of d.

    >>> str(cyclotomic_poly(6))
    '1 + -q + q^2'
    """
    if d < 1:
        raise ValueError("cyclotomic_poly requires d >= 1")
    num = [Fraction(-1)] + [Fraction(0)] * (d - 1) + [Fraction(1)]
    for e in range(1, d):
        if d % e == 0:
            num, rem = _dense_divmod(num, dense_coeffs(cyclotomic_poly(e), "q"))
            assert not rem
    return poly_from_dense("q", num)


def phi(d: int) -> int:
    """Euler totient, as the degree of Phi_d."""
    return cyclotomic_poly(d).degree_in("q")


@lru_cache(maxsize=None)
def _modulus(d: int) -> tuple[Fraction, ...]:
    return tuple(dense_coeffs(cyclotomic_poly(d), "q"))


def _reduce(d: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    _, rem = _dense_divmod(coeffs, list(_modulus(d)))
    rem += [Fraction(0)] * (phi(d) - len(rem))
    return tuple(rem)


@dataclass(frozen=True)
class CycloNum:
    """
    An element of Q(omega_d), stored as a residue modulo Phi_d of length
    phi(d).  The class of q is a primitive d-th root of unity; arithmetic
    is exact.

    >>> w = CycloNum.root(3)
    >>> (w * w + w + 1).is_rational()
    True
    >>> str(w)
    '[0, 1]@3'
    """

    d: int
    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(d: int, value: Scalar) -> "CycloNum":
        return CycloNum(d, _reduce(d, [Fraction(value)]))

    @staticmethod
    def root(d: int, power: int = 1) -> "CycloNum":
        """The class of q^power (power may be any integer; reduced mod d)."""
        power %= d
        return CycloNum(d, _reduce(d, [Fraction(0)] * power + [Fraction(1)]))

    def _lift(self) -> list[Fraction]:
        return list(self.coeffs)

    def __add__(self, other: Union["CycloNum", Scalar]) -> "CycloNum":
        other = self._coerce(other)
        return CycloNum(
            self.d, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.d, tuple(-a for a in self.coeffs))

    def __sub__(self, other: Union["CycloNum", Scalar]) -> "CycloNum":
        return self + (-self._coerce(other))

    def __mul__(self, other: Union["CycloNum", Scalar]) -> "CycloNum":
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.d, tuple(a * Fraction(other) for a in self.coeffs))
        if self.d != other.d:
            raise ValueError("mixed cyclotomic orders")
        prod = [Fraction(0)] * (2 * max(len(self.coeffs), 1))
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for k, b in enumerate(other.coeffs):
                prod[i + k] += a * b
        return CycloNum(self.d, _reduce(self.d, prod))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CycloNum":
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = CycloNum.of(self.d, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other: Union["CycloNum", Scalar]) -> "CycloNum":
        if isinstance(other, (int, Fraction)):
            return CycloNum.of(self.d, other)
        if other.d != self.d:
            raise ValueError("mixed cyclotomic orders")
        return other

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + f"]@{self.d}"


def eval_at_root(f: MultiPoly, d: int) -> CycloNum:
    """
    Reduce a polynomial univariate in q modulo Phi_d, i.e. evaluate it at a
    primitive d-th root of unity.

    >>> from .polyring import q_int
    >>> eval_at_root(q_int(3), 3).is_zero()
    True
    """
    if not f.variables() <= {"q"}:
        raise ValueError("eval_at_root requires a polynomial univariate in q")
    return CycloNum(d, _reduce(d, dense_coeffs(f, "q")))


class CycloPoly:
    """A polynomial in t, s (and friends) whose coefficients live in Q(omega_d)."""

    __slots__ = ("d", "_terms")

    def __init__(self, d: int, terms: Optional[Mapping[Mono, CycloNum]] = None):
        self.d = d
        self._terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    def add_term(self, mono: Mono, value: CycloNum) -> None:
        cur = self._terms.get(mono)
        val = value if cur is None else cur + value
        if val.is_zero():
            self._terms.pop(mono, None)
        else:
            self._terms[mono] = val

    def items(self) -> list[tuple[Mono, CycloNum]]:
        from .polyring import _term_key

        return sorted(self._terms.items(), key=lambda mc: _term_key(mc[0]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycloPoly):
            return NotImplemented
        return self.d == other.d and self._terms == other._terms

    def __str__(self) -> str:
        parts = [
            "({})*{}".format(c, "*".join(f"{v}^{e}" for v, e in m) or "1")
            for m, c in self.items()
        ]
        return " + ".join(parts) if parts else "0"


def specialize_q(f: MultiPoly, d: int, twist: bool = False) -> CycloPoly:
    """
    Substitute q -> omega_d, and when twist is set also t -> t*omega_d^{-1}
    (realized as omega_d^{d-1}, so no negative powers appear); collect the
    result by monomials in the remaining variables.
    """
    out = CycloPoly(d)
    for mono, c in f.iter_terms():
        exps = dict(mono)
        a = exps.pop("q", 0)
        if twist:
            a += (d - 1) * exps.get("t", 0)
        out.add_term(_mono(exps), CycloNum.root(d, a) * c)
    return out


def downcast_rational(g: CycloPoly) -> MultiPoly:
    """
    Turn a CycloPoly whose coefficients are all rational into a MultiPoly;
    raises NonRationalValueError at the first non-constant residue.
    """
    out: dict[Mono, Fraction] = {}
    for mono, c in g.items():
        if not c.is_rational():
            raise NonRationalValueError(mono, c)
        out[mono] = c.to_rational()
    return MultiPoly(out)


def eval_rational(f: MultiPoly, d: int) -> Fraction:
    """Evaluate a univariate-in-q polynomial at omega_d, asserting rationality."""
    val = eval_at_root(f, d)
    if not val.is_rational():
        raise NonRationalValueError((), val)
    return val.to_rational()


def q_multinomial_at_root(ks: tuple[int, ...], d: int) -> Fraction:
    """
    Closed-form value of the q-multinomial [n; k1,...,km]_q at omega_d,
    for d | n: the ordinary multinomial (n/d; k1/d,...,km/d) when d divides
    every k_i, and 0 otherwise.

    >>> q_multinomial_at_root((2, 2), 2)
    Fraction(2, 1)
    >>> q_multinomial_at_root((3, 1), 2)
    Fraction(0, 1)
    """
    n = sum(ks)
    if d < 1 or n % d:
        raise ValueError("q_multinomial_at_root requires d | sum(ks)")
    if any(k % d for k in ks):
        return Fraction(0)
    val = Fraction(math.factorial(n // d))
    for k in ks:
        val /= math.factorial(k // d)
    assert val.denominator == 1
    return val
