"""Exact homology of Littlewood complexes via modification rules.

Two independent formulations of each rule (border strips and a signed
sorting algorithm), the complexes they describe, character oracles built
from tableau combinatorics, and a verification suite that plays them
against each other.
"""

from .complexes import ComplexTerms, complex_terms, enumerate_q, predicted_homology
from .modrules import (
    ModOutcome,
    RuleDisagreement,
    modrule,
    modrule_gl_strip,
    modrule_gl_weyl,
    modrule_o_strip,
    modrule_o_weyl,
    modrule_sp_strip,
    modrule_sp_weyl,
)
from .partitions import (
    InadmissibleInput,
    Partition,
    PartitionPair,
    SkewShape,
    all_partitions_up_to,
    bar,
    format_pair,
    format_partition,
    from_frobenius,
    is_admissible,
    parse_partition,
    partitions_of,
    remove_border_strip,
    sigma_conjugate,
)
from .resolutions import Presentation, presentation
from .schur import (
    SingularEvaluation,
    eval_gl_rational,
    eval_schur,
    eval_skew,
    eval_sp_character,
    lr_coefficient,
    skew_expand,
)
from .verify import (
    BettiTable,
    VerificationReport,
    betti_table,
    euler_sum,
    sample_points,
    verify_bijection,
    verify_euler,
    verify_littlewood_identity,
)
from .weyl import BottOutcome, WindowTooShort, bott, greedy_modify

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "BottOutcome",
    "ComplexTerms",
    "InadmissibleInput",
    "ModOutcome",
    "Partition",
    "PartitionPair",
    "Presentation",
    "RuleDisagreement",
    "SingularEvaluation",
    "SkewShape",
    "VerificationReport",
    "WindowTooShort",
    "all_partitions_up_to",
    "bar",
    "betti_table",
    "bott",
    "complex_terms",
    "enumerate_q",
    "euler_sum",
    "eval_gl_rational",
    "eval_schur",
    "eval_skew",
    "eval_sp_character",
    "format_pair",
    "format_partition",
    "from_frobenius",
    "greedy_modify",
    "is_admissible",
    "lr_coefficient",
    "modrule",
    "modrule_gl_strip",
    "modrule_gl_weyl",
    "modrule_o_strip",
    "modrule_o_weyl",
    "modrule_sp_strip",
    "modrule_sp_weyl",
    "parse_partition",
    "partitions_of",
    "predicted_homology",
    "presentation",
    "remove_border_strip",
    "sample_points",
    "sigma_conjugate",
    "skew_expand",
    "verify_bijection",
    "verify_euler",
    "verify_littlewood_identity",
    "__version__",
]
