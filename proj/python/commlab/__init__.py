"""Higher commutators of finite algebras and a verifier for the constructed
simple algebra A, backed by a C++ core."""

from ._core import (
    BudgetError,
    Congruence,
    DomainError,
    Element,
    Error,
    FiniteAlgebra,
    InvariantError,
    Params,
    ParseError,
    SignatureError,
    Term,
    UnboundVariable,
    base_atoms,
    bounded_subuniverse,
    central_series,
    cg,
    check_simplicity_chains,
    eval_term,
    evaluate,
    f_cube,
    higher_commutator,
    is_simple,
    is_tc_failure,
    paper_verify,
    search_tc_witness,
    supernilpotence_degree,
    tc_holds,
)

__all__ = [
    "BudgetError",
    "Congruence",
    "DomainError",
    "Element",
    "Error",
    "FiniteAlgebra",
    "InvariantError",
    "Params",
    "ParseError",
    "SignatureError",
    "Term",
    "UnboundVariable",
    "base_atoms",
    "bounded_subuniverse",
    "central_series",
    "cg",
    "check_simplicity_chains",
    "eval_term",
    "evaluate",
    "f_cube",
    "higher_commutator",
    "is_simple",
    "is_tc_failure",
    "paper_verify",
    "search_tc_witness",
    "supernilpotence_degree",
    "tc_holds",
]
