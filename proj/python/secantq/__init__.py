"""Secant planes, difference vector quotients and G2 identities."""

from ._core import (
    CollinearPoints,
    EvalError,
    Multivector,
    NonFiniteValue,
    SyntaxError,
    Vector2,
    all_quotients,
    evaluate,
    ga_check,
    normalize,
    oriented_area,
    q_quotient,
    run_cli,
    sweep,
    vec_dot,
    vec_wedge,
)

__all__ = [
    "CollinearPoints",
    "EvalError",
    "Multivector",
    "NonFiniteValue",
    "SyntaxError",
    "Vector2",
    "all_quotients",
    "evaluate",
    "ga_check",
    "normalize",
    "oriented_area",
    "q_quotient",
    "run_cli",
    "sweep",
    "vec_dot",
    "vec_wedge",
]
