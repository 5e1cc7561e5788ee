"""The A2 root system in epsilon-coordinates: inner products, the convex
order alpha2 < alpha1+alpha2 < alpha1, root-sum bookkeeping, and the weight
assignment for the six cotangent generators.
"""

from __future__ import annotations

ALPHA1 = (1, -1, 0)
ALPHA2 = (0, 1, -1)
THETA = (1, 0, -1)  # alpha1 + alpha2

EPSILON = ((1, 0, 0), (0, 1, 0), (0, 0, 1))

# positive roots in convex order induced by the reduced word s2 s1 s2
POSITIVE_ROOTS = (ALPHA2, THETA, ALPHA1)
ALL_ROOTS = POSITIVE_ROOTS + tuple(tuple(-x for x in r) for r in POSITIVE_ROOTS)

CARTAN_MATRIX = ((2, -1), (-1, 2))

# letter names of the cotangent alphabet, in rank order; every rule of the
# exterior algebra is strictly decreasing for this ranking
LETTERS = ("f_a2", "f_a12", "f_a1", "e_a2", "e_a12", "e_a1")
LETTER_ROOTS = (ALPHA2, THETA, ALPHA1, ALPHA2, THETA, ALPHA1)
LETTER_SIGNS = (-1, -1, -1, 1, 1, 1)  # f_gamma carries -gamma, e_gamma carries +gamma


def add(v, w):
    return tuple(x + y for x, y in zip(v, w))


def negate(v):
    return tuple(-x for x in v)


def inner_product(beta, gamma) -> int:
    """Euclidean pairing in epsilon-coordinates."""
    return sum(x * y for x, y in zip(beta, gamma))


def is_root(v) -> bool:
    return tuple(v) in ALL_ROOTS


def is_positive_root(v) -> bool:
    return tuple(v) in POSITIVE_ROOTS


def convex_compare(beta, gamma) -> int:
    """-1, 0, or 1 according to the convex order on positive roots."""
    beta, gamma = tuple(beta), tuple(gamma)
    if beta not in POSITIVE_ROOTS or gamma not in POSITIVE_ROOTS:
        raise ValueError("convex order is defined on positive roots only")
    i, j = POSITIVE_ROOTS.index(beta), POSITIVE_ROOTS.index(gamma)
    return (i > j) - (i < j)


def generator_weight(letter: str):
    """Root-lattice weight of a cotangent letter: e_gamma -> gamma, f_gamma -> -gamma."""
    try:
        idx = LETTERS.index(letter)
    except ValueError:
        raise ValueError("unknown letter %r" % letter) from None
    sign, root = LETTER_SIGNS[idx], LETTER_ROOTS[idx]
    return tuple(sign * x for x in root)


def word_weight(word, alphabet=None):
    """Additive extension of generator_weight to words of letter indices."""
    total = (0, 0, 0)
    for index in word:
        letter = LETTERS[index] if alphabet is None else alphabet.letters[index]
        total = add(total, generator_weight(letter))
    return total


def root_sum_table():
    """All 36 ordered sums of roots with their is-a-root flags.

    Rows and columns run over alpha1, alpha2, alpha1+alpha2 and their
    negatives, in that order.
    """
    order = (ALPHA1, ALPHA2, THETA,
             negate(ALPHA1), negate(ALPHA2), negate(THETA))
    return [[(add(r, c), is_root(add(r, c))) for c in order] for r in order]


# fundamental-weight coordinates: alpha1 = 2w1 - w2, alpha2 = -w1 + 2w2
FUNDAMENTAL = {"alpha1": (2, -1), "alpha2": (-1, 2)}

# P+-grading of the quantum coordinate generators by column: -w1, w1-w2, w2
COLUMN_WEIGHTS = ((-1, 0), (1, -1), (0, 1))


def column_weight(j: int):
    """Fundamental-weight grading of a generator in column j (1-based)."""
    return COLUMN_WEIGHTS[j - 1]
