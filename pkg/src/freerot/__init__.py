"""Exact free group of rotations: reduced words over {a, a^-1, b, b^-1},
their homomorphic image in SO(3) over the field Q(sqrt(2)), and machine
checks that the image is a free group of rank 2."""

from .words import (
    Letter,
    ReducedWord,
    WordClass,
    classify,
    compose,
    enumerate_reduced,
    flip,
    format_word,
    is_reduced,
    parse_word,
    reduce_word,
    reduce_word_recursive,
    word_inverse,
)
from .scalar import QSqrt2, NonIntegralError, ONE, SQRT2, ZERO
from .mat3 import Mat3, SingularMatrixError, identity, norm_sq
from .rotmap import GENERATORS, generator, rotation, rotation_of_inverse
from .freeness import (
    InvariantTriple,
    Mod3Certificate,
    STEP_TABLE,
    certify_mod3_machine,
    check_injectivity_upto,
    check_nonidentity_upto,
    invariant_exact,
    invariant_step,
    partition_census,
)

__version__ = "0.1.0"

__all__ = [
    "Letter",
    "ReducedWord",
    "WordClass",
    "classify",
    "compose",
    "enumerate_reduced",
    "flip",
    "format_word",
    "is_reduced",
    "parse_word",
    "reduce_word",
    "reduce_word_recursive",
    "word_inverse",
    "QSqrt2",
    "NonIntegralError",
    "ZERO",
    "ONE",
    "SQRT2",
    "Mat3",
    "SingularMatrixError",
    "identity",
    "norm_sq",
    "GENERATORS",
    "generator",
    "rotation",
    "rotation_of_inverse",
    "InvariantTriple",
    "Mod3Certificate",
    "STEP_TABLE",
    "certify_mod3_machine",
    "check_injectivity_upto",
    "check_nonidentity_upto",
    "invariant_exact",
    "invariant_step",
    "partition_census",
]
