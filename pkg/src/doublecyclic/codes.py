"""Binary codes cyclic on each half of a two-block coordinate split.

A code of length n = r + s lives in Z2^r x Z2^s and is closed under the
simultaneous right rotation of both blocks. Every such code is the span,
under shifts and addition, of two generator rows (b | 0) and (ell | a)
whose polynomials satisfy

    b | x^r - 1,   a | x^s - 1,   b | ((x^s - 1) / a) * ell,

with ell reduced below b. validate() is the gate that checks exactly
that and computes the two derived quantities: the cross rank
kappa = deg b - deg gcd(b, ell) and the dimension r + s - deg b - deg a.

Absent generators are stored in divisor form: b = x^r - 1 and/or
a = x^s - 1 (both reduce to the zero row in the quotient), which keeps
every formula in this package total.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .gf2poly import ZERO, Gf2Poly, gcd, xn_minus_one


class ValidationError(Exception):
    """A generator triple that does not describe a code."""


class UnsupportedDegenerateLength(ValidationError):
    """r = 0 or s = 0; plain cyclic codes are out of scope here."""


class NotADivisorLeft(ValidationError):
    """b does not divide x^r - 1."""


class NotADivisorRight(ValidationError):
    """a does not divide x^s - 1."""


class CompatibilityViolation(ValidationError):
    """b does not divide ((x^s - 1) / a) * ell; carries the remainder."""

    def __init__(self, message: str, remainder: Gf2Poly):
        super().__init__(f"{message}; remainder {remainder}")
        self.remainder = remainder


class InternalConsistencyError(RuntimeError):
    """A should-be-unreachable arithmetic identity failed; signals a bug."""


@dataclass(frozen=True)
class CodeParams:
    """Block lengths of the coordinate split."""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise UnsupportedDegenerateLength(
                f"block lengths must be >= 1, got r={self.r}, s={self.s}"
            )

    @property
    def n(self) -> int:
        return self.r + self.s

    @property
    def m(self) -> int:
        """lcm(r, s): the common period of the two rotations."""
        return math.lcm(self.r, self.s)


@dataclass(frozen=True)
class Codeword:
    """A length r + s word split into its two blocks."""

    left: tuple
    right: tuple

    @property
    def r(self) -> int:
        return len(self.left)

    @property
    def s(self) -> int:
        return len(self.right)

    @classmethod
    def zero(cls, params: CodeParams) -> "Codeword":
        return cls((0,) * params.r, (0,) * params.s)

    @classmethod
    def from_polys(cls, params: CodeParams, left: Gf2Poly, right: Gf2Poly) -> "Codeword":
        left = left % xn_minus_one(params.r)
        right = right % xn_minus_one(params.s)
        return cls(left.coeffs(params.r), right.coeffs(params.s))

    def to_polys(self):
        return Gf2Poly.from_coeffs(self.left), Gf2Poly.from_coeffs(self.right)

    def shift(self, i: int = 1) -> "Codeword":
        """Rotate both blocks right by i positions (negative i inverts)."""
        r, s = self.r, self.s
        i_l, i_r = i % r, i % s
        return Codeword(
            self.left[-i_l:] + self.left[:-i_l] if i_l else self.left,
            self.right[-i_r:] + self.right[:-i_r] if i_r else self.right,
        )

    def __xor__(self, other: "Codeword") -> "Codeword":
        if self.r != other.r or self.s != other.s:
            raise ValueError("mismatched block lengths")
        return Codeword(
            tuple(a ^ b for a, b in zip(self.left, other.left)),
            tuple(a ^ b for a, b in zip(self.right, other.right)),
        )

    def weight(self) -> int:
        return sum(self.left) + sum(self.right)

    def pack(self) -> int:
        """Big-endian packed form: coordinate 0 is the most significant bit,
        so integer order equals lexicographic order on coordinates."""
        word = 0
        for bit in self.left + self.right:
            word = (word << 1) | bit
        return word

    @classmethod
    def unpack(cls, params: CodeParams, word: int) -> "Codeword":
        n = params.n
        bits = tuple((word >> (n - 1 - i)) & 1 for i in range(n))
        return cls(bits[: params.r], bits[params.r :])

    def __str__(self):
        return "".join(map(str, self.left)) + "|" + "".join(map(str, self.right))


def shift(word: Codeword, i: int = 1) -> Codeword:
    """Simultaneous rotation of both blocks; module-level alias."""
    return word.shift(i)


@dataclass(frozen=True)
class GeneratorTriple:
    """Raw generator data (b, ell, a); validate() is the gate."""

    params: CodeParams
    b: Gf2Poly
    ell: Gf2Poly
    a: Gf2Poly


@dataclass(frozen=True)
class DoubleCyclicCode:
    """A validated, normalized triple plus its derived invariants."""

    triple: GeneratorTriple
    kappa: int
    dimension: int

    @property
    def params(self) -> CodeParams:
        return self.triple.params

    @property
    def b(self) -> Gf2Poly:
        return self.triple.b

    @property
    def ell(self) -> Gf2Poly:
        return self.triple.ell

    @property
    def a(self) -> Gf2Poly:
        return self.triple.a


@dataclass(frozen=True)
class BinaryMatrix:
    """Rows over GF(2) with an explicit column permutation record.

    col_perm[j] is the original coordinate shown at column j; the identity
    tuple means no permutation. Permutations produced here always map left
    block columns to left block columns and right to right, so the r|s
    split stays meaningful after permuting.
    """

    params: CodeParams
    rows: tuple
    col_perm: tuple


def normalize(triple: GeneratorTriple) -> GeneratorTriple:
    """Reduce ell below b; the generated code is unchanged. Idempotent."""
    if not triple.b:
        raise NotADivisorLeft("b must be nonzero")
    return GeneratorTriple(triple.params, triple.b, triple.ell % triple.b, triple.a)


def validate(triple: GeneratorTriple) -> DoubleCyclicCode:
    """Check the generator invariants and build the code.

    Rejects rather than repairs: a failed divisibility or compatibility
    check raises instead of substituting a nearby valid triple. The one
    canonicalization applied is the code-preserving reduction of ell
    below b.
    """
    params = triple.params
    left_modulus = xn_minus_one(params.r)
    right_modulus = xn_minus_one(params.s)
    b, a = triple.b, triple.a
    if not b or left_modulus % b:
        raise NotADivisorLeft(f"b = {b} does not divide x^{params.r}+1")
    if not a or right_modulus % a:
        raise NotADivisorRight(f"a = {a} does not divide x^{params.s}+1")
    ell = triple.ell % b
    remainder = ((right_modulus // a) * ell) % b
    if remainder:
        raise CompatibilityViolation(
            f"b = {b} does not divide (x^{params.s}+1)/a * ell", remainder
        )
    kappa = int(b.degree - gcd(b, ell).degree)
    dimension = params.n - int(b.degree) - int(a.degree)
    return DoubleCyclicCode(GeneratorTriple(params, b, ell, a), kappa, dimension)


def is_separable(code: DoubleCyclicCode) -> bool:
    """True iff the code is the direct product of its two projections,
    which for a normalized triple is exactly ell == 0."""
    return not code.ell


def project_left(code: DoubleCyclicCode) -> Gf2Poly:
    """Generator polynomial of the cyclic code obtained by keeping the
    left block: gcd(b, ell)."""
    return gcd(code.b, code.ell)


def project_right(code: DoubleCyclicCode) -> Gf2Poly:
    """Generator polynomial of the right-block projection: a."""
    return code.a


def spanning_set(code: DoubleCyclicCode) -> list:
    """The (r - deg b) + (s - deg a) shift rows that span the code.

    First the shifts of (b | 0), then the shifts of (ell | a); each row is
    the previous one rotated once. Generators that equal x^len - 1 reduce
    to the zero row and contribute no shifts, so the counts stay exact.
    """
    params = code.params
    rows = []
    word = Codeword.from_polys(params, code.b, ZERO)
    for _ in range(params.r - int(code.b.degree)):
        rows.append(word)
        word = word.shift(1)
    word = Codeword.from_polys(params, code.ell, code.a)
    for _ in range(params.s - int(code.a.degree)):
        rows.append(word)
        word = word.shift(1)
    return rows


def generator_matrix(code: DoubleCyclicCode) -> BinaryMatrix:
    """Spanning rows as a matrix, identity column order."""
    params = code.params
    rows = tuple(w.left + w.right for w in spanning_set(code))
    return BinaryMatrix(params, rows, tuple(range(params.n)))


def encode(code: DoubleCyclicCode, message) -> Codeword:
    """XOR together the spanning rows selected by the message bits."""
    bits = list(message)
    if len(bits) != code.dimension:
        raise ValueError(
            f"message length {len(bits)} != dimension {code.dimension}"
        )
    word = Codeword.zero(code.params)
    for bit, row in zip(bits, spanning_set(code)):
        if bit & 1:
            word = word ^ row
    return word


class SubcodeCardinalities(NamedTuple):
    """Sizes of the six projection/dual subcodes, all powers of two."""

    left_projection: int
    right_projection: int
    left_projection_dual: int
    right_projection_dual: int
    dual_left_projection: int
    dual_right_projection: int


def subcode_cardinalities(code: DoubleCyclicCode) -> SubcodeCardinalities:
    """Closed-form sizes of the projections of the code and of its dual,
    and of the duals of its projections."""
    r, s = code.params.r, code.params.s
    deg_b, deg_a = int(code.b.degree), int(code.a.degree)
    kappa = code.kappa
    return SubcodeCardinalities(
        1 << (r - deg_b + kappa),
        1 << (s - deg_a),
        1 << (deg_b - kappa),
        1 << deg_a,
        1 << deg_b,
        1 << (deg_a + kappa),
    )


def _eliminate(rows, cols, n):
    """Gauss-Jordan restricted to the given columns, scanned in order.

    Row operations apply to whole rows. Returns (pivot_cols, pivot_rows,
    rest); rest rows are zero on every column in cols.
    """
    pending = list(rows)
    pivot_cols, pivot_rows = [], []
    for c in cols:
        mask = 1 << (n - 1 - c)
        hit = next((i for i, w in enumerate(pending) if w & mask), None)
        if hit is None:
            continue
        pivot = pending.pop(hit)
        pivot_rows = [w ^ pivot if w & mask else w for w in pivot_rows]
        pending = [w ^ pivot if w & mask else w for w in pending]
        pivot_cols.append(c)
        pivot_rows.append(pivot)
    return pivot_cols, pivot_rows, pending


def _permute_packed(word, perm, n):
    out = 0
    for j, c in enumerate(perm):
        if word & (1 << (n - 1 - c)):
            out |= 1 << (n - 1 - j)
    return out


def standard_form(code: DoubleCyclicCode) -> BinaryMatrix:
    """Column-permuted three-block generator matrix.

    Row blocks: the left-generator shifts, then kappa cross rows, then the
    remaining right rows. After permuting, the matrix shows an identity of
    size r - deg b on the leading left columns, a full-rank kappa x kappa
    block followed by an identity of size kappa, and an identity of size
    s - deg a - kappa on the trailing right columns, with the zero blocks
    of the template actually zero. Pivot columns are chosen left to right
    within each block.
    """
    params = code.params
    r, s, n = params.r, params.s, params.n
    k1 = r - int(code.b.degree)
    kappa = code.kappa
    k3 = s - int(code.a.degree) - kappa
    packed = [w.pack() for w in spanning_set(code)]
    block1_src, cross_src = packed[:k1], packed[k1:]

    left_cols = range(r)
    piv1, block1, rest1 = _eliminate(block1_src, left_cols, n)
    if piv1 != list(range(k1)) or rest1:
        raise InternalConsistencyError("left generator rows lost rank")

    # clear the leading identity columns out of the cross rows
    for c, pivot in zip(piv1, block1):
        mask = 1 << (n - 1 - c)
        cross_src = [w ^ pivot if w & mask else w for w in cross_src]

    piv2, block2, block3 = _eliminate(cross_src, range(k1, r), n)
    if len(piv2) != kappa:
        raise InternalConsistencyError("cross rank does not match kappa")

    piv3, block3, rest3 = _eliminate(block3, range(r, n), n)
    if len(piv3) != k3 or rest3:
        raise InternalConsistencyError("rank does not match dimension")

    for c, pivot in zip(piv3, block3):
        mask = 1 << (n - 1 - c)
        block2 = [w ^ pivot if w & mask else w for w in block2]

    right_rest = [c for c in range(r, n) if c not in set(piv3)]
    piv2r, block2, rest2 = _eliminate(block2, right_rest, n)
    if len(piv2r) != kappa or rest2:
        raise InternalConsistencyError("cross rows lost rank on the right")

    left_rest = [c for c in range(k1, r) if c not in set(piv2)]
    anchor_cols = [c for c in right_rest if c not in set(piv2r)]
    perm = list(range(k1)) + piv2 + left_rest + anchor_cols + piv2r + piv3
    rows = [_permute_packed(w, perm, n) for w in block1 + block2 + block3]
    unpacked = tuple(Codeword.unpack(params, w) for w in rows)
    return BinaryMatrix(
        params, tuple(w.left + w.right for w in unpacked), tuple(perm)
    )
