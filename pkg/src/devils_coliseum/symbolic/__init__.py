"""Symbolic coding of Julia components, orders, exponents and classifiers."""

from devils_coliseum.symbolic.coding import invert_t, t_value_of_word
from devils_coliseum.symbolic.components import (
    component_constancy,
    component_of_word,
    sample_lambda_typical,
    t_value_gate,
)
from devils_coliseum.symbolic.exponents import dim_lower_bound, sum_inv_deg, u_exponent
from devils_coliseum.symbolic.holder import empirical_holder
from devils_coliseum.symbolic.kernel import kernel_julia_probe
from devils_coliseum.symbolic.order import (
    classify_3gen,
    monotonicity_audit,
    order_generators,
    surrounding_compare,
)
from devils_coliseum.symbolic.types import (
    ComponentDescriptor,
    HolderEstimate,
    SurroundOrder,
    TrichotomyCase,
    Word,
)
from devils_coliseum.symbolic.words import compare_lex, parse_word, shift

__all__ = [
    "ComponentDescriptor",
    "HolderEstimate",
    "SurroundOrder",
    "TrichotomyCase",
    "Word",
    "classify_3gen",
    "compare_lex",
    "component_constancy",
    "component_of_word",
    "dim_lower_bound",
    "empirical_holder",
    "invert_t",
    "kernel_julia_probe",
    "monotonicity_audit",
    "order_generators",
    "parse_word",
    "sample_lambda_typical",
    "shift",
    "sum_inv_deg",
    "surrounding_compare",
    "t_value_gate",
    "t_value_of_word",
    "u_exponent",
]
