"""Words over the alphabet {a, a^-1, b, b^-1} and the free group F2 of
reduced words.

A *weak word* is any finite sequence of letters; a *reduced word* contains
no letter adjacent to its own inverse.  Reduced words under
concatenate-then-reduce form the free group on two generators.
"""

from __future__ import annotations

import enum
from collections import deque
from collections.abc import Iterable, Iterator
from typing import Union


class Letter(enum.Enum):
    """One of the four generators.  The single-character text alphabet is
    a/A/b/B with uppercase meaning inverse."""

    A = "a"
    A_INV = "A"
    B = "b"
    B_INV = "B"

    @property
    def inverse(self) -> "Letter":
        return _INVERSE[self]

    @property
    def char(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return f"Letter({self.value!r})"


_INVERSE = {
    Letter.A: Letter.A_INV,
    Letter.A_INV: Letter.A,
    Letter.B: Letter.B_INV,
    Letter.B_INV: Letter.B,
}

# Fixed enumeration order: a < a^-1 < b < b^-1.
LETTERS = (Letter.A, Letter.A_INV, Letter.B, Letter.B_INV)

_CHAR_TO_LETTER = {letter.value: letter for letter in LETTERS}

Word = tuple  # any tuple of Letter; validity enforced only at parse time


class WordClass(enum.Enum):
    """Partition of reduced words by first letter (plus the empty word)."""

    EMPTY = "empty"
    A_WORD = "a"
    A_INV_WORD = "A"
    B_WORD = "b"
    B_INV_WORD = "B"


class ReducedWord(tuple):
    """A word with no adjacent inverse pair.  Construction validates the
    invariant, so a ReducedWord in hand is always in canonical form."""

    def __new__(cls, letters: Iterable[Letter] = ()) -> "ReducedWord":
        letters = tuple(letters)
        for i in range(len(letters) - 1):
            if letters[i + 1] is letters[i].inverse:
                raise ValueError(
                    f"adjacent inverse pair at index {i}: "
                    f"{letters[i].char}{letters[i + 1].char}"
                )
        return super().__new__(cls, letters)

    def __repr__(self) -> str:
        return f"ReducedWord({format_word(self)!r})"

    @classmethod
    def _trusted(cls, letters: tuple) -> "ReducedWord":
        # Fast path for internal callers that already guarantee reducedness.
        return tuple.__new__(cls, letters)


EMPTY_WORD = ReducedWord()


def is_reduced(word: Iterable[Letter]) -> bool:
    """True iff no letter is adjacent to its own inverse."""
    word = tuple(word)
    return all(word[i + 1] is not word[i].inverse for i in range(len(word) - 1))


def classify(word: Iterable[Letter]) -> WordClass:
    """Class of a reduced word: empty, or determined by its first letter."""
    word = tuple(word)
    if not word:
        return WordClass.EMPTY
    return _CLASS_OF_FIRST[word[0]]


_CLASS_OF_FIRST = {
    Letter.A: WordClass.A_WORD,
    Letter.A_INV: WordClass.A_INV_WORD,
    Letter.B: WordClass.B_WORD,
    Letter.B_INV: WordClass.B_INV_WORD,
}


def reduce_word(word: Iterable[Letter]) -> ReducedWord:
    """Unique reduced word freely equal to ``word``.

    Single left-to-right pass with an explicit stack: push each letter,
    or pop when it cancels the letter on top.
    """
    stack: list[Letter] = []
    for letter in word:
        if stack and stack[-1] is letter.inverse:
            stack.pop()
        else:
            stack.append(letter)
    return ReducedWord._trusted(tuple(stack))


def reduce_word_recursive(word: Iterable[Letter]) -> ReducedWord:
    """Tail-first recursive reduction: fix the tail of the word, then either
    cancel the head against the fixed tail's first letter or prepend it.

    Kept as an independently-coded oracle for :func:`reduce_word`; the two
    agree on every input.
    """
    word = tuple(word)

    def fix(i: int) -> deque:
        if i == len(word):
            return deque()
        fixed_tail = fix(i + 1)
        head = word[i]
        if fixed_tail and fixed_tail[0] is head.inverse:
            fixed_tail.popleft()
        else:
            fixed_tail.appendleft(head)
        return fixed_tail

    return ReducedWord._trusted(tuple(fix(0)))


def compose(x: Iterable[Letter], y: Iterable[Letter]) -> ReducedWord:
    """Group operation of F2: reduce the concatenation."""
    return reduce_word(tuple(x) + tuple(y))


def flip(word: Iterable[Letter]) -> tuple:
    """Replace each letter by its inverse, preserving order."""
    return tuple(letter.inverse for letter in word)


def word_inverse(word: Iterable[Letter]) -> tuple:
    """Group inverse: reverse of the flip.  Maps reduced words to reduced
    words but performs no reduction of its own."""
    return flip(word)[::-1]


def enumerate_reduced(n: int) -> Iterator[ReducedWord]:
    """All reduced words of length exactly ``n`` in lexicographic order
    under a < a^-1 < b < b^-1.  Yields 1 word for n = 0, else 4 * 3^(n-1)."""
    if n < 0:
        raise ValueError("word length must be nonnegative")
    if n == 0:
        yield EMPTY_WORD
        return

    def extend(prefix: list[Letter]) -> Iterator[ReducedWord]:
        if len(prefix) == n:
            yield ReducedWord._trusted(tuple(prefix))
            return
        forbidden = prefix[-1].inverse if prefix else None
        for letter in LETTERS:
            if letter is not forbidden:
                prefix.append(letter)
                yield from extend(prefix)
                prefix.pop()

    yield from extend([])


def count_reduced(n: int) -> int:
    """Number of reduced words of length exactly ``n``."""
    if n < 0:
        raise ValueError("word length must be nonnegative")
    return 1 if n == 0 else 4 * 3 ** (n - 1)


def count_reduced_upto(n: int) -> int:
    """Number of reduced words of length at most ``n``, including the
    empty word: 1 + 2 * (3^n - 1)."""
    return 1 + 2 * (3**n - 1)


class WordParseError(ValueError):
    """Raised on a character outside the a/A/b/B alphabet."""

    def __init__(self, char: str, index: int, line: Union[int, None] = None):
        where = f"line {line}, column {index + 1}" if line else f"index {index}"
        super().__init__(f"invalid letter {char!r} at {where}")
        self.char = char
        self.index = index
        self.line = line


def parse_word(text: str) -> tuple:
    """Parse one word: a single character per letter from {a, A, b, B}.
    The empty string is the empty word."""
    letters = []
    for i, char in enumerate(text):
        letter = _CHAR_TO_LETTER.get(char)
        if letter is None:
            raise WordParseError(char, i)
        letters.append(letter)
    return tuple(letters)


def format_word(word: Iterable[Letter]) -> str:
    """Inverse of :func:`parse_word`."""
    return "".join(letter.char for letter in word)


def parse_words_file(text: str) -> list[tuple]:
    """Parse the one-word-per-line format.  An empty line is the empty word;
    lines starting with ``#`` are comments."""
    words = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        try:
            words.append(parse_word(stripped))
        except WordParseError as exc:
            raise WordParseError(exc.char, exc.index, line=lineno) from None
    return words
