"""Truncated forward-mode derivative arithmetic in (x, t)."""

from beamsym.services.jets.jet import (
    ORDER_T,
    ORDER_X,
    Jet,
    jet_cos,
    jet_div,
    jet_exp,
    jet_ln,
    jet_mul,
    jet_pow,
    jet_sin,
    jet_sqrt,
)

__all__ = [
    "ORDER_T",
    "ORDER_X",
    "Jet",
    "jet_cos",
    "jet_div",
    "jet_exp",
    "jet_ln",
    "jet_mul",
    "jet_pow",
    "jet_sin",
    "jet_sqrt",
]
