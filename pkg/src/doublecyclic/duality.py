"""Dual codes in closed form.

The dual (standard inner product over all r + s coordinates) of a code
that is cyclic on both blocks is again cyclic on both blocks, and its
generator triple can be written directly from the primal one. With
g = gcd(b, ell), m = lcm(r, s) and p* the coefficient reversal of p:

    dual b   = (x^r - 1) / g*
    dual a   = (x^s - 1) * g* / (a* b*)
    dual ell = (x^r - 1) / b* * lam

where lam is the unit correction obtained by inverting rho* = (ell/g)*
modulo b*/g* and multiplying by x^(m - deg a + deg ell). For a separable
code (ell = 0) the cross generator of the dual vanishes and the two
blocks dualize independently.

circle_product() is the bilinear form on word pairs that vanishes exactly
when one word is orthogonal to the other and to all of its simultaneous
rotations; it is what makes the closed forms above provable, and it is
exposed here so the relationship can be tested directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import (
    Codeword,
    CodeParams,
    DoubleCyclicCode,
    GeneratorTriple,
    InternalConsistencyError,
    is_separable,
    validate,
)
from .gf2poly import ZERO, Gf2Poly, gcd, modinv, theta, x_to, xn_minus_one


@dataclass(frozen=True)
class DualTriple:
    """Generators (b, ell, a) of the dual code, plus the two working
    quantities of the non-separable construction.

    rho is the primal cross generator divided by gcd(b, ell); lam is the
    modular unit scaling (x^r - 1)/b* into the dual's cross generator.
    Both are None for separable codes, where no correction is needed.
    """

    params: CodeParams
    b: Gf2Poly
    ell: Gf2Poly
    a: Gf2Poly
    rho: Gf2Poly | None
    lam: Gf2Poly | None

    def as_triple(self) -> GeneratorTriple:
        return GeneratorTriple(self.params, self.b, self.ell, self.a)


def circle_product(u: Codeword, v: Codeword, params: CodeParams) -> Gf2Poly:
    """Bilinear pairing of two words, reduced mod x^m - 1 (m = lcm(r, s)).

    Each block contributes u_block * theta(m/len)(x^len) * x^(m-1-deg v_block)
    * reversal(v_block); a block whose u or v part is the zero polynomial
    contributes nothing, so the degree of a zero polynomial is never taken.
    """
    m = params.m
    u_left, u_right = u.to_polys()
    v_left, v_right = v.to_polys()
    acc = ZERO
    for u_poly, v_poly, length in (
        (u_left, v_left, params.r),
        (u_right, v_right, params.s),
    ):
        if not u_poly or not v_poly:
            continue
        term = u_poly * theta(m // length).compose_x_power(length)
        term = term * x_to(m - 1 - int(v_poly.degree)) * v_poly.reciprocal()
        acc = acc + term
    return acc % xn_minus_one(m)


def orthogonal_to_all_shifts(u: Codeword, v: Codeword, params: CodeParams) -> bool:
    """True iff u is orthogonal to v and to every simultaneous rotation
    of v; equivalent to the circle product vanishing."""
    return not circle_product(u, v, params)


def _exact_div(numerator: Gf2Poly, denominator: Gf2Poly, what: str) -> Gf2Poly:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InternalConsistencyError(f"{what} is not an exact division")
    return quotient


def dual_bbar(code: DoubleCyclicCode) -> Gf2Poly:
    """Left generator of the dual: (x^r - 1) / gcd(b, ell)*."""
    g = gcd(code.b, code.ell)
    return _exact_div(xn_minus_one(code.params.r), g.reciprocal(), "dual b")


def dual_abar(code: DoubleCyclicCode) -> Gf2Poly:
    """Right generator of the dual: (x^s - 1) gcd(b, ell)* / (a* b*)."""
    g = gcd(code.b, code.ell)
    numerator = xn_minus_one(code.params.s) * g.reciprocal()
    denominator = code.a.reciprocal() * code.b.reciprocal()
    return _exact_div(numerator, denominator, "dual a")


def _rho(code: DoubleCyclicCode) -> Gf2Poly:
    return _exact_div(code.ell, gcd(code.b, code.ell), "rho")


def dual_lambda(code: DoubleCyclicCode) -> Gf2Poly:
    """Unit correction for the dual's cross generator (non-separable only).

    Computed as x^(m - deg a + deg ell) * (rho*)^-1 modulo b*/g*; the
    modulus has degree kappa >= 1 here, and rho* is invertible for every
    valid triple (modinv re-checks that at runtime). The result has
    degree below kappa.
    """
    if is_separable(code):
        raise ValueError("separable code: the dual has no cross generator")
    g = gcd(code.b, code.ell)
    modulus = _exact_div(code.b.reciprocal(), g.reciprocal(), "modulus b*/g*")
    exponent = code.params.m - int(code.a.degree) + int(code.ell.degree)
    inverse = modinv(_rho(code).reciprocal(), modulus)
    return (x_to(exponent) % modulus) * inverse % modulus


def dual_triple(code: DoubleCyclicCode) -> DualTriple:
    """Closed-form generator triple of the dual code.

    The cross generator comes back already reduced below the dual's left
    generator, so the result is a normalized triple.
    """
    params = code.params
    left_annihilator = _exact_div(
        xn_minus_one(params.r), code.b.reciprocal(), "left annihilator"
    )
    if is_separable(code):
        return DualTriple(
            params,
            left_annihilator,
            ZERO,
            right_annihilator_generator(code),
            None,
            None,
        )
    bbar = dual_bbar(code)
    abar = dual_abar(code)
    lam = dual_lambda(code)
    ellbar = (left_annihilator * lam) % xn_minus_one(params.r) % bbar
    return DualTriple(params, bbar, ellbar, abar, _rho(code), lam)


def dual_code(code: DoubleCyclicCode) -> DoubleCyclicCode:
    """The dual as a validated code; its dimension is n - dimension."""
    return validate(dual_triple(code).as_triple())


def right_annihilator_generator(code: DoubleCyclicCode) -> Gf2Poly:
    """Generator of the zero-left slice of the dual: the words (0 | p)
    orthogonal to the code form the cyclic span of (x^s - 1) / a*."""
    return _exact_div(
        xn_minus_one(code.params.s), code.a.reciprocal(), "right annihilator"
    )
