"""Machine certification that the rotation map is injective: no nonempty
reduced word maps to the identity matrix.

Two complementary routes:

1. Exhaustive exact check to a length bound: DFS over all reduced words,
   one incremental matrix product per tree node, asserting for each word
   that its rotation is not the identity and that the scaled integer
   triple obtained from rotation(w) * (0,1,0) is nonzero mod 3.

2. A finite certificate covering ALL lengths: prepending a letter acts on
   the integer triple by a fixed integer-linear map, so the triple mod 3
   together with the word's first letter evolves inside a finite state
   space (at most 4 * 27 states).  Breadth-first closure of that space,
   verifying no reachable state has class (0,0,0), certifies freeness for
   every word length at once.
"""

from __future__ import annotations

import random
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .mat3 import Mat3, identity
from .rotmap import GENERATORS, rotation
from .scalar import ONE, ZERO
from .words import (
    LETTERS,
    Letter,
    WordClass,
    classify,
    compose,
    count_reduced_upto,
    enumerate_reduced,
    format_word,
    word_inverse,
)

BASE_POINT = (ZERO, ONE, ZERO)

# Integer-linear action of PREPENDING a letter on the scaled triple
# (x, y, z).  Derived from the generator matrices acting on the vector
# (x*sqrt2, y, z*sqrt2) / 3^n; re-verified against the exact arithmetic
# by test oracles and by every run of check_nonidentity_upto.
STEP_TABLE = {
    Letter.A: ((3, 0, 0), (0, 1, -4), (0, 2, 1)),
    Letter.A_INV: ((3, 0, 0), (0, 1, 4), (0, -2, 1)),
    Letter.B: ((1, -2, 0), (4, 1, 0), (0, 0, 3)),
    Letter.B_INV: ((1, 2, 0), (-4, 1, 0), (0, 0, 3)),
}


@dataclass(frozen=True)
class InvariantTriple:
    """Integer triple 3^n * (x'/sqrt2, y', z'/sqrt2) where (x', y', z') is
    rotation(w) applied to (0,1,0) and n = |w|."""

    value: tuple
    length: int

    def mod3(self) -> tuple:
        x, y, z = self.value
        return (x % 3, y % 3, z % 3)


def invariant_exact(word: Iterable[Letter]) -> InvariantTriple:
    """Extract the triple from the exact rotation matrix."""
    word = tuple(word)
    return _extract_triple(rotation(word), len(word))


def _extract_triple(matrix: Mat3, length: int) -> InvariantTriple:
    image = matrix.apply(BASE_POINT)
    x = image[0].div_sqrt2().scale_pow3(length).as_integer()
    y = image[1].scale_pow3(length).as_integer()
    z = image[2].div_sqrt2().scale_pow3(length).as_integer()
    return InvariantTriple((x, y, z), length)


def invariant_step(letter: Letter, triple: InvariantTriple) -> InvariantTriple:
    """Triple of the word obtained by prepending ``letter``; agrees with
    invariant_exact whenever the prepend does not cancel."""
    rows = STEP_TABLE[letter]
    v = triple.value
    new = tuple(r[0] * v[0] + r[1] * v[1] + r[2] * v[2] for r in rows)
    return InvariantTriple(new, triple.length + 1)


# ---------------------------------------------------------------------------
# Exhaustive check to a length bound


@dataclass
class FreenessReport:
    max_len: int
    words_checked: dict = field(default_factory=dict)  # length -> count
    violations: list = field(default_factory=list)
    observed_states: set = field(default_factory=set)  # (first-letter char, cls)

    @property
    def total_words(self) -> int:
        return sum(self.words_checked.values())

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "max_len": self.max_len,
            "words_checked": {str(n): c for n, c in sorted(self.words_checked.items())},
            "total_words": self.total_words,
            "violations": list(self.violations),
            "observed_states": sorted(
                [tag, list(cls)] for tag, cls in self.observed_states
            ),
        }


def _check_subtree(root: Letter, max_len: int) -> FreenessReport:
    """DFS over all reduced words whose LAST letter is ``root``.  Each
    child prepends one letter, so the rotation extends by a single matrix
    product and the integer triple by a single step-table application; the
    step triple is cross-checked against the exact matrix at every node."""
    report = FreenessReport(max_len)
    ident = identity()

    # ``rword`` holds the word in reverse: rword[0] is the last letter of
    # the word, rword[-1] its first.
    def visit(rword: list, matrix: Mat3, triple: InvariantTriple) -> None:
        n = len(rword)
        word = rword[::-1]
        if matrix == ident:
            report.violations.append(
                {"word": format_word(word), "reason": "rotation equals identity"}
            )
        if _extract_triple(matrix, n) != triple:
            report.violations.append(
                {"word": format_word(word), "reason": "step table disagrees"}
            )
        cls = triple.mod3()
        if cls == (0, 0, 0):
            report.violations.append(
                {"word": format_word(word), "reason": "invariant vanishes mod 3"}
            )
        report.words_checked[n] = report.words_checked.get(n, 0) + 1
        report.observed_states.add((rword[-1].char, cls))
        if n == max_len:
            return
        forbidden = rword[-1].inverse
        for letter in LETTERS:
            if letter is not forbidden:
                rword.append(letter)
                visit(rword, GENERATORS[letter] @ matrix, invariant_step(letter, triple))
                rword.pop()

    visit([root], GENERATORS[root], invariant_step(root, InvariantTriple((0, 1, 0), 0)))
    return report


def _merge_reports(reports: list) -> FreenessReport:
    merged = FreenessReport(reports[0].max_len)
    for rep in reports:
        for n, c in rep.words_checked.items():
            merged.words_checked[n] = merged.words_checked.get(n, 0) + c
        merged.violations.extend(rep.violations)
        merged.observed_states |= rep.observed_states
    merged.violations.sort(key=lambda v: v["word"])
    return merged


def check_nonidentity_upto(max_len: int, jobs: int = 1) -> FreenessReport:
    """Exhaustively verify, for every nonempty reduced word of length at
    most ``max_len``, that its rotation differs from the identity, that its
    mod-3 invariant is nonzero, and that the integer step recurrences agree
    with the exact arithmetic.

    The four first-letter subtrees are independent; ``jobs`` > 1 runs them
    in separate processes.  The merged report is deterministic regardless
    of ``jobs``.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, 4)) as pool:
            reports = list(
                pool.map(_check_subtree, LETTERS, [max_len] * len(LETTERS))
            )
    else:
        reports = [_check_subtree(first, max_len) for first in LETTERS]
    return _merge_reports(reports)


# ---------------------------------------------------------------------------
# Finite mod-3 certificate, all lengths


@dataclass
class Mod3Certificate:
    reachable: set  # {(tag char, cls triple)}
    witnesses: dict  # state -> witness word string
    failure: dict | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def as_dict(self) -> dict:
        return {
            "reachable_states": sorted(
                [tag, list(cls)] for tag, cls in self.reachable
            ),
            "state_count": len(self.reachable),
            "witness_paths": {
                f"{tag}:{cls[0]}{cls[1]}{cls[2]}": word
                for (tag, cls), word in sorted(self.witnesses.items())
            },
            "ok": self.ok,
            "failure": self.failure,
        }


def _step_mod3(letter: Letter, cls: tuple) -> tuple:
    rows = STEP_TABLE[letter]
    return tuple(
        (r[0] * cls[0] + r[1] * cls[1] + r[2] * cls[2]) % 3 for r in rows
    )


def certify_mod3_machine() -> Mod3Certificate:
    """Breadth-first closure of the finite space of (first letter, triple
    mod 3) states under letter prepends that do not cancel.

    Because the space is finite and closed under every admissible prepend,
    the absence of a reachable state with class (0,0,0) certifies that no
    nonempty reduced word of ANY length maps to the identity rotation.
    """
    start_cls = {
        letter: _step_mod3(letter, (0, 1, 0)) for letter in LETTERS
    }
    reachable: set = set()
    witnesses: dict = {}
    frontier: list = []
    for letter in LETTERS:
        state = (letter.char, start_cls[letter])
        reachable.add(state)
        witnesses[state] = letter.char
        frontier.append((letter, start_cls[letter]))

    while frontier:
        next_frontier = []
        for tag, cls in frontier:
            for letter in LETTERS:
                if letter is tag.inverse:
                    continue
                new_cls = _step_mod3(letter, cls)
                state = (letter.char, new_cls)
                if state in reachable:
                    continue
                witness = letter.char + witnesses[(tag.char, cls)]
                if new_cls == (0, 0, 0):
                    return Mod3Certificate(
                        reachable,
                        witnesses,
                        failure={"word": witness, "reason": "class (0,0,0) reachable"},
                    )
                reachable.add(state)
                witnesses[state] = witness
                next_frontier.append((letter, new_cls))
        frontier = next_frontier

    assert all(cls != (0, 0, 0) for _, cls in reachable)
    return Mod3Certificate(reachable, witnesses)


# ---------------------------------------------------------------------------
# Injectivity and partition


@dataclass
class InjectivityReport:
    max_len: int
    distinct_matrices: int
    expected: int
    collisions: list = field(default_factory=list)
    pair_checks: int = 0

    @property
    def ok(self) -> bool:
        return not self.collisions and self.distinct_matrices == self.expected

    def as_dict(self) -> dict:
        return {
            "max_len": self.max_len,
            "distinct_matrices": self.distinct_matrices,
            "expected": self.expected,
            "collisions": list(self.collisions),
            "pair_checks": self.pair_checks,
            "ok": self.ok,
        }


def check_injectivity_upto(
    max_len: int, seed: int = 0, pair_checks: int = 200
) -> InjectivityReport:
    """Distinct reduced words of length <= max_len must map to distinct
    matrices.  Also spot-checks the quotient argument: for random pairs
    w1 != w2, rotation(compose(w1, inverse(w2))) is not the identity."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    seen: dict = {}
    collisions = []
    words = []
    for n in range(max_len + 1):
        for word in enumerate_reduced(n):
            m = rotation(word)
            if m in seen:
                collisions.append(
                    {"word": format_word(word), "other": format_word(seen[m])}
                )
            else:
                seen[m] = word
            words.append(word)

    rng = random.Random(seed)
    ident = identity()
    done = 0
    while done < pair_checks:
        w1, w2 = rng.sample(words, 2)
        if w1 == w2:
            continue
        if rotation(compose(w1, word_inverse(w2))) == ident:
            collisions.append(
                {"word": format_word(w1), "other": format_word(w2)}
            )
        done += 1

    report = InjectivityReport(
        max_len,
        distinct_matrices=len(seen),
        expected=count_reduced_upto(max_len),
        collisions=collisions,
        pair_checks=done,
    )
    return report


@dataclass
class PartitionReport:
    max_len: int
    bucket_sizes: dict  # WordClass value -> count
    overlaps: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.overlaps

    def as_dict(self) -> dict:
        return {
            "max_len": self.max_len,
            "bucket_sizes": {k: v for k, v in sorted(self.bucket_sizes.items())},
            "overlaps": list(self.overlaps),
            "ok": self.ok,
        }


def partition_census(max_len: int) -> PartitionReport:
    """Bucket the images rotation(w), |w| <= max_len, by the first letter
    of w; the five buckets must be pairwise disjoint as matrix sets and
    jointly exhaust all images."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    buckets: dict = {cls: {} for cls in WordClass}
    overlaps = []
    for n in range(max_len + 1):
        for word in enumerate_reduced(n):
            m = rotation(word)
            buckets[classify(word)][m] = word
    for i, c1 in enumerate(WordClass):
        for c2 in list(WordClass)[i + 1 :]:
            common = buckets[c1].keys() & buckets[c2].keys()
            for m in common:
                overlaps.append(
                    {
                        "word": format_word(buckets[c1][m]),
                        "other": format_word(buckets[c2][m]),
                    }
                )
    sizes = {cls.value: len(bucket) for cls, bucket in buckets.items()}
    total = len(set().union(*(b.keys() for b in buckets.values())))
    if total != sum(sizes.values()) and not overlaps:
        overlaps.append({"word": "", "other": "", "reason": "union cardinality"})
    return PartitionReport(max_len, sizes, overlaps)
