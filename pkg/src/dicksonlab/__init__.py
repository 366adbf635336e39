"""Finite nearfields built by coset-twisting field multiplication.

The package constructs F_{q^n} for an admissible pair (q, n), replaces
its multiplication by a Frobenius-twisted product, and verifies the
resulting structure by brute force: axioms, center, kernel, and the
subfield identities they collapse to.
"""

from .dickson import (
    CosetIndexTable,
    DicksonPair,
    PairVerdict,
    apply_coupling,
    bracket,
    bracket_mod,
    build_coset_table,
    coset_index,
    enumerate_pairs,
    make_pair,
    pair_report,
    validate_pair,
)
from .errors import (
    BracketOverflowError,
    InvalidCodeError,
    NotADivisorError,
    NotPrimeError,
    OrderCapError,
    PairInvalidError,
    ZeroCosetError,
)
from .ff import (
    DEFAULT_ORDER_CAP,
    FieldSpec,
    FieldTable,
    PrimePower,
    build_field,
    field_from_spec,
    is_prime,
    prime_factors,
    prime_power,
    with_generator,
)
from .nearfield import (
    DEFAULT_EXHAUSTIVE_CAP,
    DEFAULT_EXPORT_CAP,
    DicksonNearfield,
    StructureReport,
    Verdict,
    build_nearfield,
    center,
    center_formula,
    export_cayley,
    kernel,
    kernel_oracle,
    verify_axioms,
    verify_bracket_lemma,
    verify_center_theorems,
    verify_coupling,
    verify_structure,
)

__version__ = "0.1.0"

__all__ = [
    "BracketOverflowError",
    "CosetIndexTable",
    "DEFAULT_EXHAUSTIVE_CAP",
    "DEFAULT_EXPORT_CAP",
    "DEFAULT_ORDER_CAP",
    "DicksonNearfield",
    "DicksonPair",
    "FieldSpec",
    "FieldTable",
    "InvalidCodeError",
    "NotADivisorError",
    "NotPrimeError",
    "OrderCapError",
    "PairInvalidError",
    "PairVerdict",
    "PrimePower",
    "StructureReport",
    "Verdict",
    "ZeroCosetError",
    "apply_coupling",
    "bracket",
    "bracket_mod",
    "build_coset_table",
    "build_field",
    "build_nearfield",
    "center",
    "center_formula",
    "coset_index",
    "enumerate_pairs",
    "export_cayley",
    "field_from_spec",
    "is_prime",
    "kernel",
    "kernel_oracle",
    "make_pair",
    "pair_report",
    "prime_factors",
    "prime_power",
    "validate_pair",
    "verify_axioms",
    "verify_bracket_lemma",
    "verify_center_theorems",
    "verify_coupling",
    "verify_structure",
    "with_generator",
]
