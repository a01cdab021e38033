"""Homomorphism from the free group of reduced words into SO(3).

The generator a acts as a rotation by arccos(1/3) about the x-axis and b
as the same angle about the z-axis; their inverses are the transposes.
Every entry lies in Q(sqrt(2)) and the map is exact.
"""

from __future__ import annotations

from collections.abc import Iterable

from gmpy2 import mpq

from .mat3 import Mat3, identity
from .scalar import QSqrt2, ONE, ZERO
from .words import Letter, is_reduced, reduce_word, word_inverse

_THIRD = QSqrt2(mpq(1, 3))
_TWO_SQRT2_THIRD = QSqrt2(0, mpq(2, 3))

A_PLUS = Mat3(
    (
        (ONE, ZERO, ZERO),
        (ZERO, _THIRD, -_TWO_SQRT2_THIRD),
        (ZERO, _TWO_SQRT2_THIRD, _THIRD),
    )
)
B_PLUS = Mat3(
    (
        (_THIRD, -_TWO_SQRT2_THIRD, ZERO),
        (_TWO_SQRT2_THIRD, _THIRD, ZERO),
        (ZERO, ZERO, ONE),
    )
)
A_MINUS = A_PLUS.transpose()
B_MINUS = B_PLUS.transpose()

GENERATORS = {
    Letter.A: A_PLUS,
    Letter.A_INV: A_MINUS,
    Letter.B: B_PLUS,
    Letter.B_INV: B_MINUS,
}


def generator(letter: Letter) -> Mat3:
    """Generator matrix for one letter."""
    return GENERATORS[letter]


def rotation(word: Iterable[Letter]) -> Mat3:
    """Image of a word: the product X1 x X2 x ... x Xn of generator
    matrices, left-associated.  The empty word maps to the identity.

    Weak words are reduced first, so rotation(w) = rotation(reduce(w)).
    """
    word = tuple(word)
    if not is_reduced(word):
        word = reduce_word(word)
    result = identity()
    for letter in word:
        result = result @ GENERATORS[letter]
    return result


def rotation_of_inverse(word: Iterable[Letter]) -> Mat3:
    """rotation of the group inverse of ``word``; equals both the matrix
    inverse and the transpose of rotation(word)."""
    return rotation(word_inverse(tuple(word)))
