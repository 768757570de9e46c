"""Shared brute-force referees and instance pools for the test suite.

The subspace scan below enumerates every subspace of Z2^n as an RREF
matrix, independently of anything in the package, so it can referee the
catalog's completeness claim. Known subspace counts (Galois numbers) pin
the scan itself.
"""

from itertools import combinations, product
import random

from doublecyclic import CodeParams, GeneratorTriple, validate
from doublecyclic.catalog import random_triple

# number of subspaces of Z2^n for n = 0..6
GALOIS_NUMBERS = (1, 2, 5, 16, 67, 374, 2825)


def all_subspaces(n):
    """Yield every subspace of Z2^n as a tuple of RREF rows (packed
    big-endian, sorted by pivot column)."""
    yield ()
    for k in range(1, n + 1):
        for pivots in combinations(range(n), k):
            free_slots = [
                [c for c in range(n) if c > pivots[i] and c not in pivots]
                for i in range(k)
            ]
            flat = [(i, c) for i in range(k) for c in free_slots[i]]
            for assignment in product((0, 1), repeat=len(flat)):
                rows = [1 << (n - 1 - pivots[i]) for i in range(k)]
                for (i, c), bit in zip(flat, assignment):
                    if bit:
                        rows[i] |= 1 << (n - 1 - c)
                yield tuple(rows)


def shift_packed(word, r, s):
    left = word >> s
    right = word & ((1 << s) - 1)
    left = (left >> 1) | ((left & 1) << (r - 1))
    right = (right >> 1) | ((right & 1) << (s - 1))
    return (left << s) | right


def in_rowspace(word, rref_rows):
    for row in rref_rows:
        if word.bit_length() == row.bit_length():
            word ^= row
    return word == 0


def is_shift_closed(rref_rows, r, s):
    return all(
        in_rowspace(shift_packed(row, r, s), rref_rows) for row in rref_rows
    )


def shift_closed_subspaces(r, s):
    """Canonical RREF tuples of every shift-closed subspace of Z2^r x Z2^s."""
    return {
        rows for rows in all_subspaces(r + s) if is_shift_closed(rows, r, s)
    }


def dot(u, v):
    return bin(u & v).count("1") & 1


def build_pool(seed, count, max_r, max_s, force_separable, force_nonseparable):
    """Deterministic pool of validated codes with both kinds guaranteed."""
    rng = random.Random(seed)
    pool = []
    for index in range(count):
        r = rng.randint(1, max_r)
        s = rng.randint(1, max_s)
        if index < force_separable:
            kind = True
        elif index < force_separable + force_nonseparable:
            kind = False
        else:
            kind = None
        pool.append(validate(random_triple(rng, r, s, separable=kind)))
    return pool
