from src.jets.jet import (
    Jet3,
    constant,
    seed,
    variables,
    linear,
    quadratic,
    add,
    sub,
    mul,
    div,
    scale,
    sqrt,
    powi,
    powf,
    log,
    compose1,
)
from src.jets.fd import FdDiscrepancy, fd_check

__all__ = [
    "Jet3",
    "constant",
    "seed",
    "variables",
    "linear",
    "quadratic",
    "add",
    "sub",
    "mul",
    "div",
    "scale",
    "sqrt",
    "powi",
    "powf",
    "log",
    "compose1",
    "FdDiscrepancy",
    "fd_check",
]
