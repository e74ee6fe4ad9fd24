"""Exact arithmetic for index-zero quasi-Jacobi forms (C++ core)."""

from ._qjalg import (
    DomainError,
    Form,
    ParseError,
    PrecisionError,
    alcuin,
    bernoulli,
    bracket,
    derive,
    dim,
    dim_brute,
    eval,
    eval_numeric,
    expand,
    member,
    q_coefficient,
    stability,
    transvectant_by_recurrence,
    verify,
)

wp = Form.generator("wp")
dwp = Form.generator("dwp")
e4 = Form.generator("e4")
e1 = Form.generator("e1")
e2 = Form.generator("e2")

__all__ = [
    "DomainError", "Form", "ParseError", "PrecisionError", "alcuin", "bernoulli", "bracket", "derive", "dim",
    "dim_brute", "eval", "eval_numeric", "expand", "member", "q_coefficient", "stability",
    "transvectant_by_recurrence", "verify", "wp", "dwp", "e4", "e1", "e2",
]
