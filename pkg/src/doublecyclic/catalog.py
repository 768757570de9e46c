"""Exhaustive catalogs of two-block cyclic codes for given lengths.

Enumeration runs over the divisor lattice of x^r - 1 and x^s - 1: for
each pair (b, a) the admissible cross generators are exactly the
multiples of b / gcd(b, (x^s - 1)/a) below b, so no candidate is ever
rejected. Entries are deduplicated by RREF canonical form and sorted for
reproducible output.

Factorization of x^n - 1 is trial division in ascending degree; with
n <= 24 nothing faster is worth the audit cost. Note x^(2k) - 1 equals
(x^k - 1)^2 over GF(2), so repeated factors are the norm here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import oracle
from .codes import (
    CodeParams,
    DoubleCyclicCode,
    GeneratorTriple,
    is_separable,
    spanning_set,
    validate,
)
from .gf2poly import Gf2Poly, gcd, xn_minus_one
from .oracle import CapExceededError

MAX_FACTOR_LENGTH = 24
DEFAULT_MAX_LEN = 8


@dataclass(frozen=True)
class CatalogEntry:
    """One code of the catalog with its tabulated parameters."""

    params: CodeParams
    triple: GeneratorTriple
    k: int
    d: int | None
    separable: bool
    selfdual: bool


@lru_cache(maxsize=None)
def factor_xn_minus_1(n: int) -> tuple:
    """Irreducible factors of x^n - 1 with multiplicity, ascending."""
    if not 1 <= n <= MAX_FACTOR_LENGTH:
        raise ValueError(f"n must be in 1..{MAX_FACTOR_LENGTH}, got {n}")
    remaining = xn_minus_one(n)
    factors = []
    degree = 1
    while remaining.degree >= 1:
        if degree > remaining.degree // 2:
            factors.append(remaining)
            break
        for bits in range(1 << degree, 1 << (degree + 1)):
            candidate = Gf2Poly(bits)
            while not remaining % candidate:
                factors.append(candidate)
                remaining = remaining // candidate
        degree += 1
    return tuple(sorted(factors, key=lambda p: (p.degree, p.bits)))


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple:
    """All monic divisors of x^n - 1, from 1 up to x^n - 1 itself."""
    multiplicities = Counter(factor_xn_minus_1(n))
    primes = sorted(multiplicities, key=lambda p: (p.degree, p.bits))
    out = []
    for exponents in product(*(range(multiplicities[p] + 1) for p in primes)):
        d = Gf2Poly(1)
        for prime, e in zip(primes, exponents):
            for _ in range(e):
                d = d * prime
        out.append(d)
    return tuple(sorted(set(out), key=lambda p: (p.degree, p.bits)))


def _cross_candidates(b: Gf2Poly, a: Gf2Poly, s: int):
    """All ell with b | ((x^s-1)/a) * ell and deg ell < deg b: the
    multiples of b/g below b, where g = gcd(b, (x^s-1)/a)."""
    g = gcd(b, xn_minus_one(s) // a)
    step = b // g
    for t in range(1 << int(g.degree)):
        yield step * Gf2Poly(t)


def enumerate_codes(r: int, s: int, *, max_len: int = DEFAULT_MAX_LEN,
                    distance_dim_cap: int | None = None) -> list:
    """Catalog every code for the given block lengths.

    Raises CapExceededError above max_len (defaults to 8 per side) or when
    r + s is beyond the oracle length cap. Entries whose dimension exceeds
    distance_dim_cap (when given) carry d = None instead of an enumerated
    minimum distance.
    """
    params = CodeParams(r, s)
    if r > max_len or s > max_len:
        raise CapExceededError(f"block length above cap {max_len}")
    if params.n > oracle.CAP_LENGTH:
        raise CapExceededError(f"length {params.n} exceeds cap {oracle.CAP_LENGTH}")
    seen = {}
    for b in divisors(r):
        for a in divisors(s):
            for ell in _cross_candidates(b, a, s):
                code = validate(GeneratorTriple(params, b, ell, a))
                canon = oracle.canonical_rows(code)
                if canon in seen:
                    continue
                seen[canon] = _entry(code, distance_dim_cap)
    return sorted(
        seen.values(),
        key=lambda e: (
            int(e.triple.b.degree),
            e.triple.b.bits,
            int(e.triple.a.degree),
            e.triple.a.bits,
            e.triple.ell.bits,
        ),
    )


def _entry(code: DoubleCyclicCode, distance_dim_cap) -> CatalogEntry:
    if distance_dim_cap is not None and code.dimension > distance_dim_cap:
        d = None
    else:
        d = oracle.min_distance(oracle.enumerate_codewords(code))
    rows = [w.pack() for w in spanning_set(code)]
    dual_rows = oracle.rref(oracle.nullspace_basis(rows, code.params.n))
    selfdual = oracle.rref(rows) == dual_rows
    return CatalogEntry(
        code.params, code.triple, code.dimension, d, is_separable(code), selfdual
    )


def random_triple(rng, r: int, s: int, *, separable: bool | None = None) -> GeneratorTriple:
    """Draw a uniformly assembled valid triple for the given lengths.

    separable=True forces ell = 0; separable=False redraws (b, a) until a
    nonzero cross generator exists and then picks one.
    """
    params = CodeParams(r, s)
    while True:
        b = rng.choice(divisors(r))
        a = rng.choice(divisors(s))
        g = gcd(b, xn_minus_one(s) // a)
        if separable is True:
            t = 0
        elif separable is False:
            if g.degree < 1:
                continue
            t = rng.randrange(1, 1 << int(g.degree))
        else:
            t = rng.randrange(1 << int(g.degree))
        return GeneratorTriple(params, b, (b // g) * Gf2Poly(t), a)
