from gmpy2 import mpq
from hypothesis import given, strategies as st

from freerot.mat3 import identity
from freerot.rotmap import (
    A_MINUS,
    A_PLUS,
    B_MINUS,
    B_PLUS,
    generator,
    rotation,
    rotation_of_inverse,
)
from freerot.scalar import ONE, QSqrt2, ZERO
from freerot.words import LETTERS, compose, reduce_word, word_inverse

A, AI, B, BI = LETTERS

weak_words = st.lists(st.sampled_from(LETTERS), max_size=12).map(tuple)
reduced_words = weak_words.map(reduce_word)

THIRD = QSqrt2(mpq(1, 3))
TWO_SQRT2_THIRD = QSqrt2(0, mpq(2, 3))


class TestGeneratorTable:
    def test_a_plus_entries(self):
        assert A_PLUS.rows == (
            (ONE, ZERO, ZERO),
            (ZERO, THIRD, -TWO_SQRT2_THIRD),
            (ZERO, TWO_SQRT2_THIRD, THIRD),
        )

    def test_b_plus_entries(self):
        assert B_PLUS.rows == (
            (THIRD, -TWO_SQRT2_THIRD, ZERO),
            (TWO_SQRT2_THIRD, THIRD, ZERO),
            (ZERO, ZERO, ONE),
        )

    def test_letter_association(self):
        assert generator(A) is A_PLUS
        assert generator(AI) is A_MINUS
        assert generator(B) is B_PLUS
        assert generator(BI) is B_MINUS

    def test_inverse_letter_is_transpose(self):
        for letter in LETTERS:
            assert generator(letter.inverse) == generator(letter).transpose()

    def test_all_unit_determinant(self):
        for letter in LETTERS:
            assert generator(letter).det() == ONE

    def test_all_orthogonal(self):
        for letter in LETTERS:
            g = generator(letter)
            assert g.transpose() @ g == identity()


class TestRotation:
    def test_empty_word(self):
        assert rotation(()) == identity()

    def test_single_letter(self):
        assert rotation((A,)) == A_PLUS

    def test_two_letters(self):
        m = rotation((A, B))
        assert m == A_PLUS @ B_PLUS
        assert m[0, 0] == THIRD

    def test_weak_word_reduces_first(self):
        assert rotation((A, AI, B)) == rotation((B,))

    @given(reduced_words, reduced_words)
    def test_homomorphism(self, w1, w2):
        assert rotation(w1) @ rotation(w2) == rotation(compose(w1, w2))

    @given(reduced_words)
    def test_image_is_rotation(self, w):
        assert rotation(w).is_rotation()

    @given(reduced_words)
    def test_denominator_divides_power_of_three(self, w):
        bound = 3 ** len(w)
        for row in rotation(w).rows:
            for entry in row:
                assert bound % entry.rat.denominator == 0
                assert bound % entry.irr.denominator == 0


class TestRotationOfInverse:
    def test_empty(self):
        assert rotation_of_inverse(()) == identity()

    def test_single_letter(self):
        assert rotation_of_inverse((A,)) == A_MINUS

    def test_two_letters(self):
        assert rotation_of_inverse((A, B)) == B_MINUS @ A_MINUS

    @given(reduced_words)
    def test_matches_matrix_inverse_and_transpose(self, w):
        m = rotation(w)
        ri = rotation_of_inverse(w)
        assert ri == m.inverse()
        assert ri == m.transpose()
        assert ri == rotation(word_inverse(w))
