"""Heights over the rationals, counting functions for coordinate-form
divisors, abc quality and the Vojta-style gap on the line x + y + z = 0.

With primitive integer coordinates the finite places contribute nothing to
the naive height, so H is just the maximum absolute coordinate and all the
analytic content lives in the prime-counting sums, which are computed from
exact factorizations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from .arith import ProjectivePointQ, factorize, radical
from .errors import MathDomainError, PointOnBoundaryError, UnsupportedFieldError


@dataclass(frozen=True)
class Form:
    """Homogeneous integer form in nvars variables, content 1, stored as
    sorted (exponent tuple, coefficient) terms."""

    nvars: int
    terms: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self):
        merged: dict[tuple[int, ...], int] = {}
        for exps, coeff in self.terms:
            e = tuple(int(x) for x in exps)
            if len(e) != self.nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent tuple {e} for {self.nvars} variables")
            merged[e] = merged.get(e, 0) + int(coeff)
        terms = tuple(sorted((e, c) for e, c in merged.items() if c != 0))
        if not terms:
            raise ValueError("the zero form is not allowed")
        degrees = {sum(e) for e, _ in terms}
        if len(degrees) != 1:
            raise ValueError(f"form is not homogeneous: degrees {sorted(degrees)}")
        content = 0
        for _, c in terms:
            content = gcd(content, c)
        if content != 1:
            raise ValueError(f"form has content {content} != 1")
        object.__setattr__(self, "terms", terms)

    @property
    def degree(self) -> int:
        return sum(self.terms[0][0])

    @classmethod
    def coordinate(cls, index: int, nvars: int) -> "Form":
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, ((exps, 1),))

    def evaluate(self, coords) -> int:
        coords = tuple(int(x) for x in coords)
        if len(coords) != self.nvars:
            raise ValueError("wrong number of coordinates")
        total = 0
        for exps, coeff in self.terms:
            t = coeff
            for x, e in zip(coords, exps):
                t *= x**e
            total += t
        return total


@dataclass(frozen=True)
class FormDivisor:
    """Divisor cut out by a product of irreducible coordinate-space forms."""

    forms: tuple[Form, ...]

    def __post_init__(self):
        if not self.forms:
            raise ValueError("divisor needs at least one form")
        if len({f.nvars for f in self.forms}) != 1:
            raise ValueError("forms live in different coordinate spaces")

    @classmethod
    def coordinate_axes(cls, nvars: int) -> "FormDivisor":
        return cls(tuple(Form.coordinate(i, nvars) for i in range(nvars)))


@dataclass(frozen=True)
class HeightReport:
    H: int
    h: float


@dataclass(frozen=True)
class CountingReport:
    N: float
    N_trunc: float
    per_prime: tuple[tuple[int, int], ...]


def naive_height(point: ProjectivePointQ) -> HeightReport:
    """H = max |x_i| on primitive coordinates, h = log H."""
    h = max(abs(x) for x in point.coords)
    return HeightReport(h, math.log(h))


def counting_function(divisor: FormDivisor, point: ProjectivePointQ, excluded=frozenset()) -> CountingReport:
    """Prime-weighted intersection tally of the point with the divisor.

    The multiplicity at p sums the valuations of every form value; the
    truncated variant counts each prime once.  Primes in the excluded set
    contribute nothing.  Points on the divisor are rejected."""
    excluded = frozenset(excluded)
    values = []
    for f in divisor.forms:
        v = f.evaluate(point.coords)
        if v == 0:
            raise PointOnBoundaryError(f"{point} lies on the divisor")
        values.append(abs(v))
    mults: dict[int, int] = {}
    for v in values:
        for p, e in factorize(v).factors:
            if p not in excluded:
                mults[p] = mults.get(p, 0) + e
    per_prime = tuple(sorted(mults.items()))
    n = sum(e * math.log(p) for p, e in per_prime)
    n_trunc = sum(math.log(p) for p, _ in per_prime)
    return CountingReport(n, n_trunc, per_prime)


@dataclass(frozen=True)
class AbcTriple:
    """Coprime positive integers with a + b = c."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if min(a, b, c) < 1:
            raise ValueError("triple entries must be positive")
        if a + b != c:
            raise ValueError(f"{a} + {b} != {c}")
        if gcd(a, b) != 1:
            raise ValueError(f"gcd({a}, {b}) != 1: triple is not coprime")

    @cached_property
    def factorizations(self):
        return (factorize(self.a), factorize(self.b), factorize(self.c))

    @cached_property
    def radical_product(self) -> int:
        fa, fb, fc = self.factorizations
        return fa.radical() * fb.radical() * fc.radical()

    @property
    def quality(self) -> float:
        return math.log(self.c) / math.log(self.radical_product)


def abc_quality(triple: AbcTriple) -> float:
    """log c / log rad(abc); above 1 exactly when c beats its radical."""
    return triple.quality


def log_discriminant_term(field_tag: str) -> float:
    """Relative logarithmic discriminant of the field of definition over the
    rationals.  Only the rationals themselves are supported, where it is 0."""
    if field_tag in ("Q", "ℚ"):
        return 0.0
    raise UnsupportedFieldError(f"unsupported field {field_tag!r}; only Q is implemented")


def vojta_gap(point: ProjectivePointQ, eps_prime: float) -> float:
    """(1 - eps') * h(P) - N1(D, P) for a point on the line x + y + z = 0,
    with D the coordinate-axes divisor and no excluded finite primes.
    Points with a zero coordinate sit on D and are rejected."""
    if not 0 < eps_prime < 1:
        raise ValueError("eps_prime must lie in (0, 1)")
    coords = point.coords
    if len(coords) != 3:
        raise MathDomainError("expected a point of the projective plane")
    if sum(coords) != 0:
        raise MathDomainError(f"{point} is not on the line x + y + z = 0")
    if any(x == 0 for x in coords):
        raise PointOnBoundaryError(f"{point} is degenerate: a coordinate vanishes")
    report = counting_function(FormDivisor.coordinate_axes(3), point)
    return (1 - eps_prime) * naive_height(point).h - report.N_trunc


def _rad_table(limit: int) -> list[int]:
    """Radicals of 0..limit via a smallest-prime-factor sieve (pure python;
    the numpy variant lives in the scan worker)."""
    spf = list(range(limit + 1))
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            for q in range(p * p, limit + 1, p):
                if spf[q] == q:
                    spf[q] = p
    rad = [1] * (limit + 1)
    for n in range(2, limit + 1):
        p = spf[n]
        m = n // p
        rad[n] = rad[m] if m % p == 0 else rad[m] * p
    return rad


@dataclass(frozen=True)
class GapEvent:
    a: int
    b: int
    c: int
    gap: float


def scan_vojta_gap(eps_prime: float, max_c: int) -> list[GapEvent]:
    """Running-maximum trace of the gap over 0 < a < b, c = a + b <= max_c,
    scanned in (c, a) order.  The last event carries the empirical O(1)
    constant for the window."""
    if not 0 < eps_prime < 1:
        raise ValueError("eps_prime must lie in (0, 1)")
    if max_c < 2:
        raise ValueError("max_c must be at least 2")
    rad = _rad_table(max_c)
    events: list[GapEvent] = []
    best = -math.inf
    for c in range(2, max_c + 1):
        hc = (1 - eps_prime) * math.log(c)
        for a in range(1, (c - 1) // 2 + 1):
            if gcd(a, c) != 1:
                continue
            g = hc - math.log(rad[a] * rad[c - a] * rad[c])
            if g > best:
                best = g
                events.append(GapEvent(a, c - a, c, g))
    return events


@dataclass(frozen=True)
class AbcHit:
    a: int
    b: int
    c: int
    rad: int
    quality: float


def _quality_at_least(c: int, radprod: int, threshold: Fraction) -> bool:
    # log c / log radprod >= p/q  <=>  c^q >= radprod^p, exactly
    return c**threshold.denominator >= radprod**threshold.numerator


def _numpy_rad_sieve(limit: int):
    import numpy as np

    rad = np.ones(limit + 1, dtype=np.int64)
    composite = np.zeros(limit + 1, dtype=bool)
    for p in range(2, limit + 1):
        if not composite[p]:
            rad[p::p] *= p
            if p * p <= limit:
                composite[p * p :: p] = True
    return rad


def _scan_abc_chunk(lo: int, hi: int, min_quality: Fraction) -> list[AbcHit]:
    import numpy as np

    rad = _numpy_rad_sieve(hi)
    exponent = 1.0 / float(min_quality)
    hits: list[AbcHit] = []
    for c in range(max(lo, 2), hi + 1):
        half = c // 2
        if half < 1:
            continue
        # the float cutoff generously over-covers the exact rule; survivors
        # are adjudicated with integer powers below
        logcut = exponent * math.log(c)
        cutoff = 1e16 if logcut >= 36.8 else math.exp(logcut) * (1 + 1e-9) + 2
        radprod = rad[1 : half + 1] * rad[c - 1 : c - half - 1 : -1] * int(rad[c])
        for idx in np.nonzero(radprod <= cutoff)[0]:
            a = int(idx) + 1
            b = c - a
            if gcd(a, c) != 1:
                continue
            rp = int(radprod[idx])
            if _quality_at_least(c, rp, min_quality):
                hits.append(AbcHit(a, b, c, rp, math.log(c) / math.log(rp)))
    return hits


def scan_abc(max_c: int, min_quality: Fraction, workers: int = 1) -> list[AbcHit]:
    """All coprime triples a + b = c <= max_c, a <= b, whose quality reaches
    min_quality, sorted by quality descending (ties by c then a).

    The threshold test is exact -- c^q >= rad^p for min_quality = p/q -- so
    the result is independent of floating-point behavior; the float quality
    in each hit is for display.  Worker counts never change the output."""
    if max_c < 2:
        raise ValueError("max_c must be at least 2")
    min_quality = Fraction(min_quality)
    if min_quality <= 0:
        raise ValueError("min_quality must be positive")
    if workers > 1 and max_c > 16:
        import multiprocessing

        w = min(workers, max(1, max_c // 8))
        # balance by quadratic work: chunk k covers c in (max_c*sqrt(k/w), ..]
        edges = [int(max_c * math.sqrt(i / w)) for i in range(1, w)]
        spans = []
        lo = 2
        for e in edges + [max_c]:
            hi = min(max(lo, e), max_c)
            if lo <= hi:
                spans.append((lo, hi, min_quality))
                lo = hi + 1
        with multiprocessing.get_context("fork").Pool(len(spans)) as pool:
            parts = pool.starmap(_scan_abc_chunk, spans)
        hits = [h for part in parts for h in part]
    else:
        hits = _scan_abc_chunk(2, max_c, min_quality)
    hits.sort(key=lambda h: (-h.quality, h.c, h.a))
    return hits
