"""Brute-force ground truth for small codes.

Everything here works by exhaustive enumeration or plain GF(2) linear
algebra on bit-packed words. This module is the referee for the closed
forms elsewhere in the package, so it deliberately never imports from
the duality or catalog modules.

Words are packed big-endian (coordinate 0 in the most significant bit),
so integer order equals lexicographic order on coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import CodeParams, Codeword, DoubleCyclicCode, spanning_set

CAP_DIMENSION = 24
CAP_LENGTH = 24


class CapExceededError(Exception):
    """Requested enumeration is over the desk-scale cap."""


@dataclass(frozen=True)
class CodewordSet:
    """Distinct codewords of one code, packed and lexicographically sorted."""

    params: CodeParams
    words: tuple

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, item):
        word = item.pack() if isinstance(item, Codeword) else item
        return word in set(self.words)

    def codewords(self):
        for word in self.words:
            yield Codeword.unpack(self.params, word)

    @classmethod
    def from_words(cls, params: CodeParams, words, check_linear: bool = False):
        ordered = tuple(sorted(set(words)))
        made = cls(params, ordered)
        if check_linear:
            k = len(rref(ordered))
            if len(ordered) != 1 << k:
                raise ValueError("word set is not closed under addition")
        return made

    @classmethod
    def from_basis(cls, params: CodeParams, rows):
        rows = [w for w in rows if w]
        if len(rows) > CAP_DIMENSION:
            raise CapExceededError(
                f"enumeration dimension {len(rows)} exceeds cap {CAP_DIMENSION}"
            )
        return cls(params, tuple(sorted(set(_span(rows)))))


def _span(rows):
    words = [0]
    for row in rows:
        words += [w ^ row for w in words]
    return words


def rref(rows):
    """Fully reduced canonical basis of the span of the given packed rows.

    Pivots are taken in lexicographic column order; every pivot column
    carries a single 1, so equal spans give equal tuples.
    """
    pivots = {}
    for word in rows:
        # clear every pivot column, keeping the non-pivot bits as they surface
        kept = 0
        while word:
            msb = word.bit_length() - 1
            if msb in pivots:
                word ^= pivots[msb]
            else:
                kept |= 1 << msb
                word ^= 1 << msb
        if not kept:
            continue
        msb = kept.bit_length() - 1
        for other_msb, other in pivots.items():
            if (other >> msb) & 1:
                pivots[other_msb] = other ^ kept
        pivots[msb] = kept
    return tuple(sorted(pivots.values(), reverse=True))


def nullspace_basis(rows, n):
    """Basis of {v : row . v = 0 for all rows}, one vector per free column."""
    reduced = rref(rows)
    pivot_bits = {row.bit_length() - 1 for row in reduced}
    basis = []
    for free in range(n - 1, -1, -1):
        if free in pivot_bits:
            continue
        v = 1 << free
        for row in reduced:
            if (row >> free) & 1:
                v ^= 1 << (row.bit_length() - 1)
        basis.append(v)
    return basis


def _shift1(word, r, s):
    left = word >> s
    right = word & ((1 << s) - 1)
    left = (left >> 1) | ((left & 1) << (r - 1))
    right = (right >> 1) | ((right & 1) << (s - 1))
    return (left << s) | right


def _packed_rows(code: DoubleCyclicCode):
    return [w.pack() for w in spanning_set(code)]


def enumerate_codewords(code: DoubleCyclicCode) -> CodewordSet:
    """All 2^dimension codewords, dimension capped at CAP_DIMENSION."""
    if code.dimension > CAP_DIMENSION:
        raise CapExceededError(
            f"dimension {code.dimension} exceeds cap {CAP_DIMENSION}"
        )
    return CodewordSet.from_basis(code.params, _packed_rows(code))


def nullspace_dual(source) -> CodewordSet:
    """Every word orthogonal to the whole code, by linear algebra.

    Accepts a DoubleCyclicCode or a CodewordSet; length capped at
    CAP_LENGTH.
    """
    if isinstance(source, CodewordSet):
        params, rows = source.params, source.words
    else:
        params, rows = source.params, _packed_rows(source)
    if params.n > CAP_LENGTH:
        raise CapExceededError(f"length {params.n} exceeds cap {CAP_LENGTH}")
    return CodewordSet.from_basis(params, nullspace_basis(rows, params.n))


def verify_double_cyclic(cwset: CodewordSet) -> bool:
    """True iff the set is closed under the simultaneous block rotation."""
    r, s = cwset.params.r, cwset.params.s
    members = set(cwset.words)
    return all(_shift1(w, r, s) in members for w in cwset.words)


def min_distance(cwset: CodewordSet):
    """Minimum Hamming weight over nonzero words; None for the zero code."""
    if not cwset.words:
        raise ValueError("empty codeword set")
    best = None
    for word in cwset.words:
        if word:
            weight = bin(word).count("1")
            if best is None or weight < best:
                best = weight
    return best


def canonical_rows(source):
    """RREF canonical basis of a code or codeword set."""
    if isinstance(source, CodewordSet):
        return rref(source.words)
    return rref(_packed_rows(source))


def codes_equal(first, second) -> bool:
    """Row-space equality via canonical RREF; params must match."""
    if first.params != second.params:
        raise ValueError(
            f"mismatched params: {first.params} vs {second.params}"
        )
    return canonical_rows(first) == canonical_rows(second)


def closure_under_shift_and_add(params: CodeParams, seeds) -> CodewordSet:
    """Smallest shift-closed linear code containing the seed words.

    Works by growing a reduction basis and queueing the rotation of every
    newly independent word; independent of the spanning-set construction.
    """
    r, s = params.r, params.s
    basis = {}

    def reduce(word):
        while word:
            msb = word.bit_length() - 1
            if msb not in basis:
                return word
            word ^= basis[msb]
        return 0

    stack = [w.pack() if isinstance(w, Codeword) else w for w in seeds]
    while stack:
        word = reduce(stack.pop())
        if word:
            basis[word.bit_length() - 1] = word
            stack.append(_shift1(word, r, s))
    return CodewordSet.from_basis(params, list(basis.values()))
