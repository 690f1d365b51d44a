"""
Permutations, integer partitions, and their statistics.

Conventions used throughout the package (stated here, once):

- Permutations are 1-indexed and act on the RIGHT: the image of i under
  sigma is written ``i*sigma`` in the math and equals ``sigma.word[i-1]``
  here.  Composition is left-to-right, ``i(sigma*tau) = (i sigma)tau``.
- One-line notation lists the images: the word 2,3,1 maps 1->2, 2->3, 3->1.
- Enumerations run in lexicographic one-line order, so every
  sequence-valued operation is deterministic.
- Fixed points count as cycles of length 1 in a cycle type.
- Exhaustive enumeration refuses degrees above an explicit bound
  (default 10) instead of truncating silently.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Callable, Iterator, Optional

DEFAULT_ENUM_BOUND = 10


class BoundExceededError(ValueError):
    """Raised when an exhaustive enumeration is asked to exceed its size bound."""


def _check_bound(n: int, bound: Optional[int]) -> None:
    limit = DEFAULT_ENUM_BOUND if bound is None else bound
    if n > limit:
        raise BoundExceededError(f"enumeration over S_{n} exceeds bound {limit}")


@dataclass(frozen=True)
class Permutation:
    """
    A permutation of [n] in one-line notation.

    >>> Permutation((2, 3, 1))(1)
    2
    >>> str(Permutation((2, 3, 1)) * Permutation((2, 3, 1)))
    '3,1,2'
    """

    word: tuple[int, ...]

    def __post_init__(self):
        n = len(self.word)
        if sorted(self.word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [{n}]: {self.word}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Right action: return i*sigma."""
        return self.word[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Left-to-right composition: i(self*other) = (i self)other."""
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.word[v - 1] for v in self.word))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.word):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.word)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def gamma(n: int) -> Permutation:
    """
    The long cycle mapping i to i+1 mod n, one-line word 2,3,...,n,1.

    >>> str(gamma(3))
    '2,3,1'
    """
    if n < 1:
        raise ValueError("gamma requires n >= 1")
    return Permutation(tuple(range(2, n + 1)) + (1,))


def conjugate(sigma: Permutation, pi: Permutation) -> Permutation:
    """Return pi^{-1} * sigma * pi (same degree required)."""
    if sigma.n != pi.n:
        raise ValueError("degree mismatch")
    return pi.inverse() * sigma * pi


@dataclass(frozen=True)
class PermStats:
    exc_set: frozenset[int]
    des_set: frozenset[int]
    fix_set: frozenset[int]
    exc: int
    des: int
    maj: int
    fix: int


@lru_cache(maxsize=None)
def perm_statistics(sigma: Permutation) -> PermStats:
    """
    Excedance, descent, major-index and fixed-point statistics of sigma.

    >>> st = perm_statistics(Permutation((6, 4, 1, 5, 3, 2)))
    >>> sorted(st.exc_set), st.maj, st.fix
    ([1, 2, 4], 12, 0)
    """
    w = sigma.word
    n = sigma.n
    exc = frozenset(i for i in range(1, n) if w[i - 1] > i)
    des = frozenset(i for i in range(1, n) if w[i - 1] > w[i])
    fix = frozenset(i for i in range(1, n + 1) if w[i - 1] == i)
    return PermStats(exc, des, fix, len(exc), len(des), sum(des), len(fix))


def dex_set(sigma: Permutation) -> frozenset[int]:
    """
    Descent set of the word obtained by overlining the letters in excedance
    positions, under the order 1' < ... < n' < 1 < ... < n (primed letters
    are the overlined ones and all compare below the plain ones).

    >>> sorted(dex_set(Permutation((6, 4, 1, 5, 3, 2))))
    [1, 3, 5]
    >>> sorted(dex_set(Permutation((2, 3, 1))))
    []
    """
    w = sigma.word
    exc = perm_statistics(sigma).exc_set
    # Key (0, v) for overlined letters, (1, v) for plain; tuples compare
    # exactly in the required order.
    keys = [(0 if i + 1 in exc else 1, v) for i, v in enumerate(w)]
    return frozenset(i for i in range(1, sigma.n) if keys[i - 1] > keys[i])


def cycles(sigma: Permutation) -> tuple[tuple[int, ...], ...]:
    """Disjoint cycles, each starting at its smallest element, ordered by it."""
    seen = [False] * sigma.n
    out = []
    for i in range(1, sigma.n + 1):
        if seen[i - 1]:
            continue
        cyc = []
        j = i
        while not seen[j - 1]:
            seen[j - 1] = True
            cyc.append(j)
            j = sigma(j)
        out.append(tuple(cyc))
    return tuple(out)


def cycle_type(sigma: Permutation) -> "Partition":
    """
    Cycle type of sigma as a partition (fixed points count as 1-cycles).

    >>> str(cycle_type(Permutation((2, 1, 4, 3))))
    '2,2'
    """
    return Partition(tuple(sorted((len(c) for c in cycles(sigma)), reverse=True)))


@dataclass(frozen=True)
class Partition:
    """
    An integer partition: weakly decreasing positive parts.

    >>> Partition((4, 2, 1)).n
    7
    >>> Partition.parse("2^3").parts
    (2, 2, 2)
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        for i, p in enumerate(self.parts):
            if p < 1:
                raise ValueError(f"nonpositive part in {self.parts}")
            if i and self.parts[i - 1] < p:
                raise ValueError(f"parts not weakly decreasing: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def mult(self, j: int) -> int:
        """Number of parts equal to j."""
        return sum(1 for p in self.parts if p == j)

    def scaled(self, num: int, den: int = 1) -> "Partition":
        """Part-wise scaling by num/den; every scaled part must be a positive integer."""
        out = []
        for p in self.parts:
            if (p * num) % den:
                raise ValueError(f"{num}/{den} * {self.parts} is not a partition")
            out.append(p * num // den)
        return Partition(tuple(out))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @staticmethod
    def parse(text: str) -> "Partition":
        """Parse '4,2,1' or exponent shorthand like '2^3' (mixes allowed)."""
        parts: list[int] = []
        for tok in text.split(","):
            tok = tok.strip()
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ValueError(f"bad partition token {tok!r}")
            parts.extend([int(m.group(1))] * int(m.group(2) or 1))
        return Partition(tuple(sorted(parts, reverse=True)))


def rectangle(d: int, k: int) -> Partition:
    """The partition d^k."""
    return Partition((d,) * k)


def parse_permutation(text: str) -> Permutation:
    """Parse a comma-separated one-line word such as '6,4,1,5,3,2'."""
    try:
        word = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad permutation text {text!r}") from exc
    return Permutation(word)


@dataclass(frozen=True)
class PartitionStats:
    z: int
    g: int
    l: int
    m: dict[int, int]

    def __post_init__(self):
        object.__setattr__(self, "m", dict(self.m))


def partition_stats(lam: Partition) -> PartitionStats:
    """
    z_lambda = prod j^{m_j} m_j!, the gcd of the parts, the number of parts,
    and the multiplicity map.

    >>> partition_stats(Partition((4, 2))).z
    8
    """
    if not lam.parts:
        raise ValueError("empty partition has no statistics")
    m: dict[int, int] = {}
    for p in lam.parts:
        m[p] = m.get(p, 0) + 1
    z = 1
    for j, mj in m.items():
        z *= j**mj * math.factorial(mj)
    g = reduce(math.gcd, lam.parts)
    return PartitionStats(z, g, len(lam.parts), m)


def pi_nu(nu: Partition) -> int:
    """
    Number of set partitions of [n] with block sizes nu: the multinomial
    coefficient divided by the product of multiplicity factorials.

    >>> pi_nu(Partition((2, 2)))
    3
    """
    if not nu.parts:
        raise ValueError("empty partition")
    val = Fraction(math.factorial(nu.n))
    for p in nu.parts:
        val /= math.factorial(p)
    for mj in partition_stats(nu).m.values():
        val /= math.factorial(mj)
    assert val.denominator == 1
    return int(val)


def partitions_of(
    n: int, predicate: Optional[Callable[[Partition], bool]] = None
) -> tuple[Partition, ...]:
    """
    All partitions of n in reverse-lexicographic order, optionally filtered.

    >>> [str(p) for p in partitions_of(4)]
    ['4', '3,1', '2,2', '2,1,1', '1,1,1,1']
    """
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(rest: int, maxpart: int, prefix: tuple[int, ...]) -> Iterator[Partition]:
        if rest == 0:
            yield Partition(prefix)
            return
        for p in range(min(rest, maxpart), 0, -1):
            yield from gen(rest - p, p, prefix + (p,))

    out = tuple(gen(n, n if n else 1, ()))
    if predicate is not None:
        out = tuple(lam for lam in out if predicate(lam))
    return out


def par_mdr(m: int, d: int, r: int) -> tuple[Partition, ...]:
    """Partitions mu of m with mu_i | d | r*mu_i for every part."""
    return partitions_of(
        m, lambda mu: all(d % p == 0 and (r * p) % d == 0 for p in mu.parts)
    )


def all_permutations(n: int, bound: Optional[int] = None) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order."""
    _check_bound(n, bound)
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


@lru_cache(maxsize=None)
def _perms_by_type(n: int) -> dict[Partition, tuple[Permutation, ...]]:
    buckets: dict[Partition, list[Permutation]] = {}
    for sigma in all_permutations(n, bound=n):
        buckets.setdefault(cycle_type(sigma), []).append(sigma)
    return {lam: tuple(sigmas) for lam, sigmas in buckets.items()}


def perms_by_type(
    n: int, bound: Optional[int] = None
) -> dict[Partition, tuple[Permutation, ...]]:
    """S_n bucketed by cycle type, each bucket in lexicographic order."""
    _check_bound(n, bound)
    return _perms_by_type(n)


def enumerate_by_type(
    lam: Partition, j: Optional[int] = None, bound: Optional[int] = None
) -> tuple[Permutation, ...]:
    """
    All permutations of cycle type lam (and exactly j excedances, when j is
    given), in lexicographic one-line order.

    >>> [str(s) for s in enumerate_by_type(Partition((2, 1)), j=1)]
    ['1,3,2', '2,1,3', '3,2,1']
    """
    n = lam.n
    _check_bound(n, bound)
    sigmas = perms_by_type(n, bound=n).get(lam, ())
    if j is None:
        return sigmas
    if not 0 <= j <= max(n - 1, 0):
        raise ValueError(f"j={j} out of range for n={n}")
    return tuple(s for s in sigmas if perm_statistics(s).exc == j)


def mobius(n: int) -> int:
    """Classical Moebius function, by trial-division factorization."""
    if n < 1:
        raise ValueError("mobius requires n >= 1")
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    if n > 1:
        out = -out
    return out
