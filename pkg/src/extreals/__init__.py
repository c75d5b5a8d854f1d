"""Exact extended real arithmetic built from Dedekind cuts."""

from .extreal import (
    NEG_INF,
    POS_INF,
    ExtReal,
    Mode,
    add,
    diff,
    ext,
    fin,
    fold_inf,
    fold_sup,
    inf_add,
    inf_diff,
    neg,
    parse_extreal,
    scalar_mul,
    sup_add,
    sup_diff,
)

__version__ = "0.1.0"
