"""Built-in example spaces.

Names are stable: a base name (``so3``) gives the default norm of that space,
``<base>-riemannian`` the identity inner product, ``<base>-randers-b<val>``
the Randers norm with A = identity and u = b times the invariant axis, and
``randers-b<val>-n<k>`` the Randers norm on the abelian algebra of dimension k.
``<val>`` is written without the point when it starts with 0 (``b05`` is 0.5).
"""

import re
from typing import List

import numpy as np

from src.exception import ConfigParseError, UnsupportedCaseError
from src.logger import logger
from src.liealg import abelian, e2, e2xr1, heisenberg3, so3, solvable2, LieAlgebraData
from src.norms import NormSpec
from src.cli.schema import Space
from src.registry import SPACE

_RANDERS_SUFFIX = re.compile(r"^(?P<base>[a-z0-9]+)-randers-b(?P<b>[0-9.]+)$")
_RANDERS_ABELIAN = re.compile(r"^randers-b(?P<b>[0-9.]+)-n(?P<n>[0-9]+)$")


def parse_b(text: str) -> float:
    """``05`` -> 0.5, ``095`` -> 0.95, ``0.3`` -> 0.3."""
    if "." in text:
        return float(text)
    if text.startswith("0"):
        return float("0." + text[1:]) if len(text) > 1 else 0.0
    raise ConfigParseError(f"cannot read b from {text!r}; write it as 05 or 0.5", context="space name", logger=logger)


def _space(name: str, data: LieAlgebraData, norm: str, b: float, axis: int | None) -> Space:
    n = data.dim_m
    if norm == "riemannian":
        return Space(name, data, NormSpec.riemannian(np.eye(n)))
    if norm == "randers":
        if axis is None:
            raise UnsupportedCaseError(
                f"{data.name}: no nonzero vector of m is fixed by h, so no invariant Randers norm",
                logger=logger,
            )
        u = np.zeros(n)
        u[axis] = b
        return Space(name, data, NormSpec.randers(np.eye(n), u))
    raise UnsupportedCaseError(f"unknown built-in norm {norm!r}", logger=logger)


@SPACE.register_module(name="abelian2", force=True)
def abelian2_space(norm: str = "riemannian", b: float = 0.5, name: str = "abelian2") -> Space:
    return _space(name, abelian(2), norm, b, axis=0)


@SPACE.register_module(name="abelian3", force=True)
def abelian3_space(norm: str = "riemannian", b: float = 0.5, name: str = "abelian3") -> Space:
    return _space(name, abelian(3), norm, b, axis=0)


@SPACE.register_module(name="heisenberg3", force=True)
def heisenberg3_space(norm: str = "riemannian", b: float = 0.5, name: str = "heisenberg3") -> Space:
    return _space(name, heisenberg3(), norm, b, axis=0)


@SPACE.register_module(name="so3", force=True)
def so3_space(norm: str = "riemannian", b: float = 0.5, name: str = "so3") -> Space:
    return _space(name, so3(), norm, b, axis=0)


@SPACE.register_module(name="solvable2", force=True)
def solvable2_space(norm: str = "randers", b: float = 0.5, name: str = "solvable2") -> Space:
    return _space(name, solvable2(), norm, b, axis=0)


@SPACE.register_module(name="e2", force=True)
def e2_space(norm: str = "riemannian", b: float = 0.5, name: str = "e2") -> Space:
    # rotations fix no translation
    return _space(name, e2(), norm, b, axis=None)


@SPACE.register_module(name="e2xr1", force=True)
def e2xr1_space(norm: str = "randers", b: float = 0.5, name: str = "e2xr1") -> Space:
    # m = (t1, t2, z); the rotations fix z
    return _space(name, e2xr1(), norm, b, axis=2)


def build_space(name: str) -> Space:
    """Resolve a built-in name, including its norm-variant suffixes."""
    match = _RANDERS_ABELIAN.match(name)
    if match:
        n = int(match.group("n"))
        data = abelian(n)
        return _space(name, data, "randers", parse_b(match.group("b")), axis=0)
    base, cfg = name, {}
    if name.endswith("-riemannian"):
        base, cfg = name[: -len("-riemannian")], {"norm": "riemannian"}
    else:
        match = _RANDERS_SUFFIX.match(name)
        if match:
            base, cfg = match.group("base"), {"norm": "randers", "b": parse_b(match.group("b"))}
    if base not in SPACE.module_dict:
        raise ConfigParseError(f"no config file or built-in space named {name!r}", context="space", logger=logger)
    return SPACE.build(dict(type=base, name=name, **cfg))


def builtin_names() -> List[str]:
    """Base names with their Riemannian and b = 0.5 Randers variants."""
    names = []
    for base in sorted(SPACE.module_dict):
        names += [base, f"{base}-riemannian"]
        if base != "e2":
            names.append(f"{base}-randers-b05")
    return names + ["randers-b05-n2", "randers-b05-n3"]
