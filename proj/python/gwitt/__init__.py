"""Exact arithmetic in generalized Witt algebras W(g_p, n)."""

from ._core import (
    Algebra,
    Element,
    NotADerivation,
    ParseError,
    SearchExhausted,
    ad_diag,
    bracket,
    decompose_derivation,
    grade,
    ideal_witness,
    integrate,
    lemma1,
    lex_cmp,
    lp,
    string_number,
    verify_derivation,
)

__all__ = [
    "Algebra",
    "Element",
    "NotADerivation",
    "ParseError",
    "SearchExhausted",
    "ad_diag",
    "bracket",
    "decompose_derivation",
    "grade",
    "ideal_witness",
    "integrate",
    "lemma1",
    "lex_cmp",
    "lp",
    "string_number",
    "verify_derivation",
]
