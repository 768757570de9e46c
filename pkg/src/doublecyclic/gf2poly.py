"""Exact polynomial arithmetic over GF(2).

A polynomial is stored bit-packed in a single Python int: bit i is the
coefficient of x^i. This makes the representation canonical for free
(ints carry no leading zeros), the zero polynomial is the int 0, and
addition is XOR. All degrees in this package are desk scale, so the
schoolbook algorithms below are the right tool; there is deliberately no
FFT multiplication and no sparse form.

degree() of the zero polynomial is the NEG_INF sentinel, not -1, so that
a slipped degree can never silently become a valid shift amount.

Two text grammars are understood by parse():

* algebraic: ``x^3+x+1`` with terms in any order; repeated terms cancel.
* bitstring: ``1101`` where character i is the coefficient of x^i.

str()/format_poly() always emit the algebraic form with descending
exponents, ``0`` for the zero polynomial, and parse(str(p)) == p.
"""

from __future__ import annotations

import re

NEG_INF = float("-inf")

_TERM_RE = re.compile(r"0|1|x(?:\^([0-9]+))?")


class Gf2PolyParseError(ValueError):
    """Polynomial text that fits neither grammar; carries the offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class NotInvertibleError(ValueError):
    """Raised by modinv when the element shares a factor with the modulus."""

    def __init__(self, element: "Gf2Poly", modulus: "Gf2Poly", common: "Gf2Poly"):
        super().__init__(
            f"{element} is not invertible modulo {modulus}; common factor {common}"
        )
        self.common_factor = common


class Gf2Poly:
    """Immutable polynomial over GF(2), bit-packed little-endian in ``bits``."""

    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise ValueError("negative bit pattern")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("Gf2Poly is immutable")

    @classmethod
    def from_coeffs(cls, coeffs) -> "Gf2Poly":
        """Build from an iterable of 0/1 coefficients, index i -> x^i."""
        bits = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << i
        return cls(bits)

    @property
    def degree(self):
        """Highest set index, or NEG_INF for the zero polynomial."""
        return self.bits.bit_length() - 1 if self.bits else NEG_INF

    def coeffs(self, length: int | None = None) -> tuple:
        """Coefficients x^0..x^(length-1); length defaults to degree+1."""
        if length is None:
            length = self.bits.bit_length()
        return tuple((self.bits >> i) & 1 for i in range(length))

    def __bool__(self):
        return self.bits != 0

    def __eq__(self, other):
        return isinstance(other, Gf2Poly) and self.bits == other.bits

    def __hash__(self):
        return hash(("Gf2Poly", self.bits))

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "Gf2Poly") -> "Gf2Poly":
        a, b = self.bits, other.bits
        if a == 0 or b == 0:
            return ZERO
        if a.bit_length() > b.bit_length():
            a, b = b, a
        acc = 0
        shift = 0
        while a:
            if a & 1:
                acc ^= b << shift
            a >>= 1
            shift += 1
        return Gf2Poly(acc)

    def __divmod__(self, other: "Gf2Poly"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        p, d = self.bits, other.bits
        dlen = d.bit_length()
        q = 0
        while p.bit_length() >= dlen:
            shift = p.bit_length() - dlen
            q ^= 1 << shift
            p ^= d << shift
        return Gf2Poly(q), Gf2Poly(p)

    def __floordiv__(self, other: "Gf2Poly") -> "Gf2Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Gf2Poly") -> "Gf2Poly":
        return divmod(self, other)[1]

    def reciprocal(self) -> "Gf2Poly":
        """Coefficient reversal x^deg * p(1/x); reciprocal(0) == 0."""
        if not self.bits:
            return ZERO
        return Gf2Poly(int(format(self.bits, "b")[::-1], 2))

    def compose_x_power(self, n: int) -> "Gf2Poly":
        """Substitute x -> x^n (n >= 1), spreading every term's exponent."""
        if n < 1:
            raise ValueError("substitution power must be >= 1")
        bits = self.bits
        out = 0
        i = 0
        while bits:
            if bits & 1:
                out |= 1 << (i * n)
            bits >>= 1
            i += 1
        return Gf2Poly(out)

    def __str__(self):
        if not self.bits:
            return "0"
        terms = []
        for i in range(self.bits.bit_length() - 1, -1, -1):
            if (self.bits >> i) & 1:
                terms.append("x^%d" % i if i > 1 else ("x" if i == 1 else "1"))
        return "+".join(terms)

    def __repr__(self):
        return f"Gf2Poly({str(self)!r})"


ZERO = Gf2Poly(0)
ONE = Gf2Poly(1)
X = Gf2Poly(2)


def x_to(k: int) -> Gf2Poly:
    """The monomial x^k."""
    if k < 0:
        raise ValueError("negative exponent")
    return Gf2Poly(1 << k)


def xn_minus_one(n: int) -> Gf2Poly:
    """x^n - 1, which over GF(2) is x^n + 1."""
    if n < 1:
        raise ValueError("length must be >= 1")
    return Gf2Poly((1 << n) | 1)


def theta(m: int) -> Gf2Poly:
    """All-ones polynomial 1 + x + ... + x^(m-1), so (x-1)*theta(m) = x^m-1."""
    if m < 1:
        raise ValueError("theta needs m >= 1")
    return Gf2Poly((1 << m) - 1)


def gcd(p: Gf2Poly, q: Gf2Poly) -> Gf2Poly:
    """Greatest common divisor; gcd(p, 0) == p, gcd(0, 0) is an error."""
    a, b = p.bits, q.bits
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, divmod(Gf2Poly(a), Gf2Poly(b))[1].bits
    return Gf2Poly(a)


def egcd(p: Gf2Poly, q: Gf2Poly):
    """Extended Euclid: (g, u, v) with u*p + v*q == g == gcd(p, q)."""
    if not p and not q:
        raise ValueError("gcd(0, 0) is undefined")
    r0, r1 = p, q
    u0, u1 = ONE, ZERO
    v0, v1 = ZERO, ONE
    while r1:
        quot, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 + quot * u1
        v0, v1 = v1, v0 + quot * v1
    return r0, u0, v0


def modinv(p: Gf2Poly, modulus: Gf2Poly) -> Gf2Poly:
    """Inverse of p modulo ``modulus`` (degree >= 1 required).

    Raises NotInvertibleError carrying the offending gcd when p and the
    modulus share a factor.
    """
    if modulus.degree is NEG_INF or modulus.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    reduced = p % modulus
    if not reduced:
        raise NotInvertibleError(p, modulus, modulus)
    g, u, _ = egcd(reduced, modulus)
    if g != ONE:
        raise NotInvertibleError(p, modulus, g)
    return u % modulus


def parse(text: str) -> Gf2Poly:
    """Parse either polynomial grammar; see the module docstring."""
    stripped = text.strip()
    if not stripped:
        raise Gf2PolyParseError("empty polynomial text", 0)
    if all(c in "01" for c in stripped):
        bits = 0
        for i, ch in enumerate(stripped):
            if ch == "1":
                bits |= 1 << i
        return Gf2Poly(bits)
    bits = 0
    pos = 0
    for chunk in text.split("+"):
        term = chunk.strip()
        term_pos = pos + len(chunk) - len(chunk.lstrip())
        if not term:
            raise Gf2PolyParseError("missing term", term_pos)
        m = _TERM_RE.fullmatch(term)
        if m is None:
            raise Gf2PolyParseError(f"unrecognized term {term!r}", term_pos)
        if term == "0":
            pass
        elif term == "1":
            bits ^= 1
        elif m.group(1) is None:
            bits ^= 2
        else:
            bits ^= 1 << int(m.group(1))
        pos += len(chunk) + 1
    return Gf2Poly(bits)


def format_poly(p: Gf2Poly) -> str:
    """Canonical algebraic text of p; inverse of parse()."""
    return str(p)
