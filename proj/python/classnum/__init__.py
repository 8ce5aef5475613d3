"""Congruence checks on prime factors of class numbers."""

from ._core import (
    BoundValue,
    CyclicTower,
    DatasetError,
    DescentStep,
    DescentTrace,
    ExpressionError,
    FactorExpression,
    Family,
    FieldRecord,
    ReportRow,
    StepOutcome,
    SubfieldClassNumber,
    VerificationReport,
    Verdict,
    VerdictKind,
    all_bundled_records,
    bundled_dataset_text,
    bundled_records,
    check_corollary_odd_degree,
    check_geometric,
    check_theorem1,
    class_number_bound,
    coprimality_witness,
    descend,
    euler_phi,
    evaluate_expression,
    exceeds_bound,
    factor,
    gcd,
    is_prime,
    make_tower,
    mod_pow,
    multiplicative_order,
    odd_part,
    parse_class_expression,
    parse_dataset,
    parse_tower_literal,
    rank_product,
    report_text,
    report_tsv,
    serialize_record,
    solvable_prime_admissible,
    tower_literal,
    validate_tower,
    verify_record,
    verify_records,
)

__all__ = [
    "BoundValue",
    "CyclicTower",
    "DatasetError",
    "DescentStep",
    "DescentTrace",
    "ExpressionError",
    "FactorExpression",
    "Family",
    "FieldRecord",
    "ReportRow",
    "StepOutcome",
    "SubfieldClassNumber",
    "VerificationReport",
    "Verdict",
    "VerdictKind",
    "all_bundled_records",
    "bundled_dataset_text",
    "bundled_records",
    "check_corollary_odd_degree",
    "check_geometric",
    "check_theorem1",
    "class_number_bound",
    "coprimality_witness",
    "descend",
    "euler_phi",
    "evaluate_expression",
    "exceeds_bound",
    "factor",
    "gcd",
    "is_prime",
    "make_tower",
    "mod_pow",
    "multiplicative_order",
    "odd_part",
    "parse_class_expression",
    "parse_dataset",
    "parse_tower_literal",
    "rank_product",
    "report_text",
    "report_tsv",
    "serialize_record",
    "solvable_prime_admissible",
    "tower_literal",
    "validate_tower",
    "verify_record",
    "verify_records",
]
