"""Exact integer arithmetic: factorization, p-adic valuations, radicals,
powerful-number tests and primitive projective coordinates.

Everything here is deterministic and allocation-light; values are immutable
and every function is pure, so concurrent use needs no coordination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd, isqrt

INFINITY = math.inf  # multiplicity of a reduced boundary mark; sorts above every int

DEFAULT_RHO_THRESHOLD = 10**8

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# increments of the mod-30 wheel starting at 41 (residues 11,13,17,19,23,29,1,7)
_WHEEL = (2, 4, 2, 4, 6, 2, 6, 4)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the fixed base set is exact below 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by a plain sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i in range(2, n + 1) if sieve[i]]


def _brent_rho(n: int) -> int:
    """Brent's cycle variant of Pollard rho with a deterministic parameter
    sweep.  n must be composite, odd and not a perfect power of a small prime
    (callers strip those first)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # pragma: no cover


@dataclass(frozen=True)
class Factorization:
    """Prime factorization value = prod p^e, primes strictly increasing."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def radical(self) -> int:
        r = 1
        for p, _ in self.factors:
            r *= p
        return r

    def min_exponent(self) -> float:
        """Smallest prime exponent; +inf for the empty factorization of 1."""
        return min((e for _, e in self.factors), default=INFINITY)


def factorize(n: int, rho_threshold: int = DEFAULT_RHO_THRESHOLD) -> Factorization:
    """Factor a positive integer by trial division, handing cofactors larger
    than rho_threshold to Brent-rho.  factorize(1) has an empty factor list.

    >>> factorize(72).factors
    ((2, 3), (3, 2))
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"factorize requires a positive integer, got {n!r}")
    acc: dict[int, int] = {}
    m = n
    for p in _SMALL_PRIMES:
        while m % p == 0:
            acc[p] = acc.get(p, 0) + 1
            m //= p
    if m > 1:
        _factor_tail(m, acc, rho_threshold)
    return Factorization(n, tuple(sorted(acc.items())))


def _factor_tail(m: int, acc: dict[int, int], rho_threshold: int) -> None:
    # m has no prime factor <= 37 here
    stack = [m]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            acc[m] = acc.get(m, 0) + 1
            continue
        if m > rho_threshold:
            d = _brent_rho(m)
            stack.append(d)
            stack.append(m // d)
            continue
        f, i = 41, 0
        while f * f <= m:
            if m % f == 0:
                acc[f] = acc.get(f, 0) + 1
                m //= f
            else:
                f += _WHEEL[i]
                i = (i + 1) & 7
        if m > 1:
            acc[m] = acc.get(m, 0) + 1


def valuation(p: int, n: int) -> int:
    """Exponent of the prime p in n; n must be nonzero (the valuation of 0
    is infinite and rejected)."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def radical(n: int) -> int:
    """Product of the distinct primes dividing n; radical(1) = 1."""
    return factorize(n).radical()


def check_multiplicity(m, minimum: int = 1):
    """Validate a multiplicity: an integer >= minimum, or INFINITY."""
    if m == INFINITY:
        return m
    if isinstance(m, int) and not isinstance(m, bool) and m >= minimum:
        return m
    raise ValueError(f"multiplicity must be an integer >= {minimum} or infinite, got {m!r}")


def is_n_powerful(n: int, m) -> bool:
    """True iff every prime exponent of |n| is >= m.  Units pass vacuously,
    m = 1 accepts everything, and m = INFINITY accepts only |n| = 1."""
    check_multiplicity(m)
    if n == 0:
        raise ValueError("0 is on the boundary of every powerful test")
    n = abs(n)
    if n == 1 or m == 1:
        return True
    if m == INFINITY:
        return False
    return all(e >= m for _, e in factorize(n).factors)


@dataclass(frozen=True)
class ProjectivePointQ:
    """Primitive integer coordinates of a rational projective point: gcd 1,
    first nonzero coordinate positive.  Build via canonicalize()."""

    coords: tuple[int, ...]

    def __post_init__(self):
        cs = tuple(int(x) for x in self.coords)
        object.__setattr__(self, "coords", cs)
        if not cs or all(x == 0 for x in cs):
            raise ValueError("projective point needs a nonzero coordinate")
        g = 0
        for x in cs:
            g = gcd(g, x)
        if g != 1:
            raise ValueError(f"coordinates {cs} are not primitive")
        lead = next(x for x in cs if x != 0)
        if lead < 0:
            raise ValueError(f"coordinates {cs} are not sign-normalized")

    def __str__(self):
        return "(" + ":".join(str(x) for x in self.coords) + ")"


def canonicalize(coords) -> ProjectivePointQ:
    """Primitive representative of the projective class of an integer tuple.

    >>> canonicalize((3, 9, 12)).coords
    (1, 3, 4)
    """
    cs = tuple(int(x) for x in coords)
    if not cs or all(x == 0 for x in cs):
        raise ValueError("all-zero tuple defines no projective point")
    g = 0
    for x in cs:
        g = gcd(g, x)
    cs = tuple(x // g for x in cs)
    if next(x for x in cs if x != 0) < 0:
        cs = tuple(-x for x in cs)
    return ProjectivePointQ(cs)


def powerful_numbers(m, limit: int) -> list[int]:
    """Sorted list of the m-powerful integers in [1, limit]."""
    check_multiplicity(m)
    if limit < 1:
        return []
    if m == INFINITY:
        return [1]
    if m == 1:
        return list(range(1, limit + 1))
    root = int(round(limit ** (1.0 / m)))
    while root**m > limit:
        root -= 1
    while (root + 1) ** m <= limit:
        root += 1
    ps = primes_up_to(root)
    out = [1]

    def explore(i: int, v: int) -> None:
        for j in range(i, len(ps)):
            w = v * ps[j] ** m
            if w > limit:
                break
            while w <= limit:
                out.append(w)
                explore(j + 1, w)
                w *= ps[j]

    explore(0, 1)
    out.sort()
    return out
