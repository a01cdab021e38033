"""Randomized and enumerative verification suites behind the CLI.

Each suite returns a plain-dict report with an ``ok`` flag and, on
failure, a replayable counterexample.  All randomness derives from a
single seed through ``random.Random`` so failures reproduce exactly.
"""

from __future__ import annotations

import random

from .mat3 import identity, norm_sq
from .rotmap import rotation
from .scalar import ONE, QSqrt2
from .words import (
    LETTERS,
    Letter,
    compose,
    count_reduced_upto,
    enumerate_reduced,
    format_word,
    is_reduced,
    reduce_word,
    reduce_word_recursive,
    word_inverse,
)
from .freeness import (
    certify_mod3_machine,
    check_injectivity_upto,
    check_nonidentity_upto,
    partition_census,
)


def random_weak_word(rng: random.Random, max_len: int) -> tuple:
    n = rng.randint(0, max_len)
    return tuple(rng.choice(LETTERS) for _ in range(n))


def random_reduced_word(rng: random.Random, max_len: int) -> tuple:
    n = rng.randint(0, max_len)
    letters: list[Letter] = []
    for _ in range(n):
        choices = [l for l in LETTERS if not letters or l is not letters[-1].inverse]
        letters.append(rng.choice(choices))
    return tuple(letters)


def _fail(report: dict, **counterexample) -> dict:
    report["ok"] = False
    report["counterexample"] = {
        k: format_word(v) if isinstance(v, tuple) else v
        for k, v in counterexample.items()
    }
    return report


def group_suite(seed: int = 0, trials: int = 10_000, max_len: int = 40) -> dict:
    """Group axioms of the free group on random reduced-word triples:
    closure, associativity, two-sided identity, two-sided inverse."""
    rng = random.Random(seed)
    report = {"suite": "group", "seed": seed, "trials": trials, "ok": True}
    empty = ()
    for _ in range(trials):
        x = random_reduced_word(rng, max_len)
        y = random_reduced_word(rng, max_len)
        z = random_reduced_word(rng, max_len)
        xy = compose(x, y)
        if not is_reduced(xy):
            return _fail(report, law="closure", x=x, y=y)
        if compose(xy, z) != compose(x, compose(y, z)):
            return _fail(report, law="associativity", x=x, y=y, z=z)
        if compose(x, empty) != x or compose(empty, x) != x:
            return _fail(report, law="identity", x=x)
        xi = word_inverse(x)
        if compose(x, xi) != empty or compose(xi, x) != empty:
            return _fail(report, law="inverse", x=x)
    return report


def reduction_suite(
    seed: int = 0,
    trials: int = 100_000,
    max_len: int = 100,
    triple_trials: int = 10_000,
) -> dict:
    """Equality of the two reduction algorithms on random weak words, plus
    the fusion and reversal laws of reduction."""
    rng = random.Random(seed)
    report = {
        "suite": "reduction",
        "seed": seed,
        "trials": trials,
        "triple_trials": triple_trials,
        "ok": True,
    }
    for _ in range(trials):
        w = random_weak_word(rng, max_len)
        if reduce_word(w) != reduce_word_recursive(w):
            return _fail(report, law="oracle equivalence", w=w)
    for _ in range(triple_trials):
        x = random_weak_word(rng, 30)
        y = random_weak_word(rng, 30)
        z = random_weak_word(rng, 30)
        whole = reduce_word(x + y + z)
        if reduce_word(x + reduce_word(y + z)) != whole:
            return _fail(report, law="fix-fusion right", x=x, y=y, z=z)
        if reduce_word(tuple(reduce_word(x + y)) + z) != whole:
            return _fail(report, law="fix-fusion left", x=x, y=y, z=z)
        if reduce_word(x[::-1]) != tuple(reduce_word(x))[::-1]:
            return _fail(report, law="reversal commutation", x=x)
    return report


def homomorphism_suite(seed: int = 0, trials: int = 10_000, max_len: int = 15) -> dict:
    """rotation(w1) x rotation(w2) = rotation(compose(w1, w2)) exactly."""
    rng = random.Random(seed)
    report = {"suite": "homomorphism", "seed": seed, "trials": trials, "ok": True}
    for _ in range(trials):
        w1 = random_reduced_word(rng, max_len)
        w2 = random_reduced_word(rng, max_len)
        if rotation(w1) @ rotation(w2) != rotation(compose(w1, w2)):
            return _fail(report, law="homomorphism", w1=w1, w2=w2)
    return report


def rotation_axioms_suite(max_len: int = 6) -> dict:
    """Every reduced word of length <= max_len maps to a genuine rotation:
    determinant one, orthogonal, inverse equal to transpose."""
    report = {"suite": "rotation-axioms", "max_len": max_len, "ok": True, "words": 0}
    ident = identity()
    for n in range(max_len + 1):
        for word in enumerate_reduced(n):
            m = rotation(word)
            if m.det() != ONE:
                return _fail(report, law="det", w=tuple(word))
            if m.transpose() @ m != ident:
                return _fail(report, law="orthogonality", w=tuple(word))
            if m.inverse() != m.transpose():
                return _fail(report, law="inverse equals transpose", w=tuple(word))
            report["words"] += 1
    assert report["words"] == count_reduced_upto(max_len)
    return report


def matrix_lemma_suite(seed: int = 0, trials: int = 1_000, max_len: int = 10) -> dict:
    """Matrix-algebra lemmas on random rotation pairs and rational points:
    det multiplicativity, rotation closure under product and inverse,
    product-inverse reversal, exact distance preservation."""
    rng = random.Random(seed)
    report = {"suite": "matrix-lemmas", "seed": seed, "trials": trials, "ok": True}
    for _ in range(trials):
        w1 = random_reduced_word(rng, max_len)
        w2 = random_reduced_word(rng, max_len)
        m1, m2 = rotation(w1), rotation(w2)
        prod = m1 @ m2
        if prod.det() != m1.det() * m2.det():
            return _fail(report, law="det multiplicativity", w1=w1, w2=w2)
        if not prod.is_rotation() or not m1.inverse().is_rotation():
            return _fail(report, law="rotation closure", w1=w1, w2=w2)
        if prod.inverse() != m2.inverse() @ m1.inverse():
            return _fail(report, law="product inverse reversal", w1=w1, w2=w2)
        point = tuple(
            QSqrt2(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(3)
        )
        if norm_sq(m1.apply(point)) != norm_sq(point):
            return _fail(report, law="distance preservation", w1=w1)
    return report


def freeness_suite(max_len: int = 10, jobs: int = 1) -> dict:
    """Exhaustive nonidentity check to max_len plus the all-lengths mod-3
    certificate."""
    exhaustive = check_nonidentity_upto(max_len, jobs=jobs)
    certificate = certify_mod3_machine()
    return {
        "suite": "freeness",
        "ok": exhaustive.ok and certificate.ok,
        "exhaustive": exhaustive.as_dict(),
        "certificate": certificate.as_dict(),
    }


def injectivity_suite(max_len: int = 7, seed: int = 0) -> dict:
    """Distinct-image count plus the five-way partition census."""
    inj = check_injectivity_upto(max_len, seed=seed)
    census = partition_census(min(max_len, 5))
    return {
        "suite": "injectivity",
        "ok": inj.ok and census.ok,
        "injectivity": inj.as_dict(),
        "partition": census.as_dict(),
    }


SUITES = {
    "group": lambda cfg: group_suite(seed=cfg["seed"]),
    "rotation-axioms": lambda cfg: rotation_axioms_suite(max_len=min(cfg["max_len"], 8)),
    "freeness": lambda cfg: freeness_suite(max_len=cfg["max_len"], jobs=cfg["jobs"]),
    "injectivity": lambda cfg: injectivity_suite(
        max_len=min(cfg["max_len"], 8), seed=cfg["seed"]
    ),
}


def run_suites(name: str, config: dict) -> dict:
    """Run one named suite, or every suite for ``all``.  Returns a report
    whose top-level ``ok`` is the conjunction of the member suites."""
    names = list(SUITES) if name == "all" else [name]
    reports = [SUITES[n](config) for n in names]
    return {
        "command": "verify",
        "requested": name,
        "max_len": config["max_len"],
        "seed": config["seed"],
        "ok": all(r["ok"] for r in reports),
        "suites": reports,
    }
