"""Affine-logic antithesis translation, pair semantics, cut intervals, finite
subcovers and finite topology checks."""

from ._core import (
    PROVEN,
    REFUTED,
    UNDETERMINED,
    BudgetError,
    Error,
    EvalError,
    Formula,
    Interpretation,
    PairValue,
    ParseError,
    basis_interior,
    check_disjointness,
    compactness_props,
    cover,
    equivalence_oracle,
    eval_pair,
    eval_translated,
    filter_count,
    is_filter,
    lemma_suite,
    lollipop,
    negate,
    of_course,
    par,
    parse,
    plus,
    tensor,
    topo_suite,
    topo_suite_names,
    translate,
    why_not,
    with_,
)

__all__ = [name for name in dir() if not name.startswith("_")]
