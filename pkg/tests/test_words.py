import pytest
from hypothesis import given, strategies as st

from freerot.words import (
    LETTERS,
    Letter,
    ReducedWord,
    WordClass,
    WordParseError,
    classify,
    compose,
    count_reduced,
    enumerate_reduced,
    flip,
    format_word,
    is_reduced,
    parse_word,
    parse_words_file,
    reduce_word,
    reduce_word_recursive,
    word_inverse,
)

A, AI, B, BI = LETTERS

letters = st.sampled_from(LETTERS)
weak_words = st.lists(letters, max_size=50).map(tuple)
reduced_words = weak_words.map(reduce_word)


class TestLetter:
    def test_inverse_pairs(self):
        assert A.inverse is AI
        assert B.inverse is BI

    def test_inverse_involution(self):
        for letter in LETTERS:
            assert letter.inverse.inverse is letter


class TestIsReduced:
    def test_paper_examples(self):
        assert is_reduced((A, B, AI))
        assert not is_reduced((A, AI, B))

    def test_empty(self):
        assert is_reduced(())

    @given(weak_words)
    def test_matches_definition(self, w):
        expected = all(w[i + 1] is not w[i].inverse for i in range(len(w) - 1))
        assert is_reduced(w) == expected


class TestReducedWordType:
    def test_rejects_adjacent_inverses(self):
        with pytest.raises(ValueError):
            ReducedWord((A, AI))

    def test_accepts_reduced(self):
        assert tuple(ReducedWord((A, B, AI))) == (A, B, AI)


class TestClassify:
    @pytest.mark.parametrize(
        "word,expected",
        [
            ((), WordClass.EMPTY),
            ((A, B, AI), WordClass.A_WORD),
            ((AI,), WordClass.A_INV_WORD),
            ((B, A), WordClass.B_WORD),
            ((BI, A), WordClass.B_INV_WORD),
        ],
    )
    def test_examples(self, word, expected):
        assert classify(word) == expected


class TestReduce:
    def test_single_cancellation(self):
        assert reduce_word((A, AI)) == ()

    def test_leading_pair(self):
        assert reduce_word((A, AI, B)) == (B,)

    def test_cascade(self):
        assert reduce_word((A, B, BI, AI)) == ()

    @given(weak_words)
    def test_result_is_reduced(self, w):
        assert is_reduced(reduce_word(w))

    @given(weak_words)
    def test_length_parity(self, w):
        r = reduce_word(w)
        assert len(r) <= len(w)
        assert (len(w) - len(r)) % 2 == 0

    @given(reduced_words)
    def test_idempotent(self, w):
        assert reduce_word(w) == w

    @given(weak_words)
    def test_oracle_equivalence(self, w):
        assert reduce_word(w) == reduce_word_recursive(w)

    def test_recursive_oracle_examples(self):
        assert reduce_word_recursive((A, AI)) == ()
        assert reduce_word_recursive((B, B, BI)) == (B,)

    @given(weak_words, weak_words, weak_words)
    def test_fix_fusion(self, x, y, z):
        whole = reduce_word(x + y + z)
        assert reduce_word(x + tuple(reduce_word(y + z))) == whole
        assert reduce_word(tuple(reduce_word(x + y)) + z) == whole

    @given(weak_words)
    def test_reversal_commutation(self, w):
        # Holds for all weak words, not only reduced ones.
        assert reduce_word(w[::-1]) == tuple(reduce_word(w))[::-1]


class TestCompose:
    def test_paper_example(self):
        assert compose((A, B, B), (BI,)) == (A, B)

    @given(reduced_words)
    def test_identity_element(self, w):
        assert compose(w, ()) == w
        assert compose((), w) == w

    def test_full_cancellation(self):
        assert compose((A, B), (BI, AI)) == ()

    @given(reduced_words, reduced_words)
    def test_closure(self, x, y):
        assert is_reduced(compose(x, y))

    @given(reduced_words, reduced_words, reduced_words)
    def test_associativity(self, x, y, z):
        assert compose(compose(x, y), z) == compose(x, compose(y, z))


class TestInverse:
    def test_flip_example(self):
        assert flip((A, AI, BI)) == (AI, A, B)

    def test_flip_involution(self):
        w = (A, B, BI, AI, B)
        assert flip(flip(w)) == w

    def test_paper_example(self):
        assert word_inverse((A, AI, BI)) == (B, A, AI)

    def test_empty(self):
        assert word_inverse(()) == ()
        assert flip(()) == ()

    @given(weak_words)
    def test_involution(self, w):
        assert word_inverse(word_inverse(w)) == w

    @given(reduced_words)
    def test_maps_reduced_to_reduced(self, w):
        assert is_reduced(word_inverse(w))

    @given(reduced_words)
    def test_two_sided_inverse(self, w):
        assert compose(w, word_inverse(w)) == ()
        assert compose(word_inverse(w), w) == ()

    @given(reduced_words, reduced_words)
    def test_anti_homomorphism(self, x, y):
        assert word_inverse(compose(x, y)) == tuple(
            compose(word_inverse(y), word_inverse(x))
        )


class TestEnumerate:
    def test_length_zero(self):
        assert list(enumerate_reduced(0)) == [()]

    def test_length_one(self):
        assert list(enumerate_reduced(1)) == [(A,), (AI,), (B,), (BI,)]

    def test_length_two_brute_force(self):
        # All 16 two-letter sequences minus the 4 with an adjacent inverse.
        brute = [
            (x, y)
            for x in LETTERS
            for y in LETTERS
            if y is not x.inverse
        ]
        got = list(enumerate_reduced(2))
        assert len(got) == 12
        assert set(got) == set(map(tuple, brute))

    @pytest.mark.parametrize("n", range(8))
    def test_count(self, n):
        assert sum(1 for _ in enumerate_reduced(n)) == count_reduced(n)

    def test_lexicographic_order(self):
        order = {letter: i for i, letter in enumerate(LETTERS)}
        words = [tuple(order[l] for l in w) for w in enumerate_reduced(4)]
        assert words == sorted(words)

    def test_all_reduced(self):
        assert all(is_reduced(w) for w in enumerate_reduced(5))


class TestParsing:
    def test_round_trip(self):
        assert parse_word("abBA") == (A, B, BI, AI)
        assert format_word((A, B, BI, AI)) == "abBA"

    def test_empty(self):
        assert parse_word("") == ()

    def test_invalid_letter_position(self):
        with pytest.raises(WordParseError) as exc:
            parse_word("abx")
        assert exc.value.index == 2

    @given(weak_words)
    def test_format_parse_round_trip(self, w):
        assert parse_word(format_word(w)) == w

    def test_file_format(self):
        text = "# comment\nabB\n\nA\n"
        assert parse_words_file(text) == [(A, B, BI), (), (AI,)]

    def test_file_error_carries_line(self):
        with pytest.raises(WordParseError) as exc:
            parse_words_file("ab\nabq\n")
        assert exc.value.line == 2
