"""The space configuration document: Lie algebra split plus norm data.

Example (JSON syntax, 1-based sparse brackets)::

    {
      "name": "solvable2",
      "dim_h": 0,
      "dim_m": 2,
      "brackets": [[1, 2, 2, 1.0]],
      "norm": {"family": "randers", "A": [[1, 0], [0, 1]], "u": [0.5, 0]}
    }
"""

import os
from dataclasses import dataclass
from typing import Any, Dict, List, Literal, Optional, Tuple

import json5
import numpy as np
import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from src.exception import ConfigParseError, LieAlgebraError
from src.logger import logger
from src.liealg import LieAlgebraData
from src.norms import Family, NormSpec, build_profile


class PhiConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: Literal["randers", "polynomial"]
    coefficients: Optional[List[float]] = None

    @model_validator(mode="after")
    def check_coefficients(self) -> "PhiConfig":
        if self.name == "polynomial" and not self.coefficients:
            raise ValueError("a polynomial profile needs a nonempty coefficient list")
        return self


class NormConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    family: Family
    A: List[List[float]]
    u: Optional[List[float]] = None
    phi: Optional[PhiConfig] = None

    @field_validator("phi", mode="before")
    @classmethod
    def named_phi(cls, value: Any) -> Any:
        if isinstance(value, str):
            return {"name": value}
        return value


class SpaceConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = ""
    dim_h: int = Field(ge=0)
    dim_m: int = Field(ge=1)
    brackets: List[Tuple[int, int, int, float]] = Field(default_factory=list)
    norm: NormConfig

    @model_validator(mode="after")
    def check_shapes(self) -> "SpaceConfig":
        dim_g = self.dim_h + self.dim_m
        for position, entry in enumerate(self.brackets):
            for index in entry[:3]:
                if not 1 <= index <= dim_g:
                    raise ValueError(f"brackets[{position}]: index {index} outside 1..{dim_g}")
        a = self.norm.A
        if len(a) != self.dim_m or any(len(row) != self.dim_m for row in a):
            raise ValueError(f"norm.A must be {self.dim_m} x {self.dim_m}")
        if self.norm.u is not None and len(self.norm.u) != self.dim_m:
            raise ValueError(f"norm.u must have length {self.dim_m}, got {len(self.norm.u)}")
        return self


@dataclass(frozen=True, eq=False)
class Space:
    """A homogeneous space G/H at the level of its model data."""

    name: str
    data: LieAlgebraData
    spec: NormSpec

    def same_as(self, other: "Space") -> bool:
        return self.data.same_as(other.data) and self.spec.same_as(other.spec)

    def dict(self):
        return to_document(self)


def _error_context(error: ValidationError) -> Tuple[str, str]:
    first = error.errors()[0]
    field = ".".join(str(part) for part in first.get("loc", ())) or "document"
    return field, first.get("msg", str(error))


def parse_document(text: str, fmt: str = "json", source: str = "<config>") -> SpaceConfig:
    """Parse and schema-check a space document; every failure is a ConfigParseError."""
    try:
        raw = yaml.safe_load(text) if fmt == "yaml" else json5.loads(text)
    except (ValueError, yaml.YAMLError) as e:
        # json5 and yaml both report the line and column in their messages
        raise ConfigParseError(str(e), context=source, logger=logger)
    if not isinstance(raw, dict):
        raise ConfigParseError("the document must be an object", context=source, logger=logger)
    try:
        return SpaceConfig.model_validate(raw)
    except ValidationError as e:
        field, message = _error_context(e)
        raise ConfigParseError(message, context=f"{source}: {field}", logger=logger)


def to_space(cfg: SpaceConfig, source: str = "<config>") -> Space:
    """Densify the brackets and build the norm."""
    try:
        data = LieAlgebraData.from_entries(cfg.dim_h, cfg.dim_m, cfg.brackets, cfg.name)
    except LieAlgebraError as e:
        raise ConfigParseError(e.message, context=f"{source}: brackets", logger=logger)
    norm = cfg.norm
    phi = build_profile(norm.phi.model_dump(exclude_none=True)) if norm.phi is not None else None
    u = np.zeros(cfg.dim_m) if norm.u is None else np.array(norm.u, dtype=float)
    spec = NormSpec(norm.family, np.array(norm.A, dtype=float), u, phi)
    return Space(cfg.name, data, spec)


def to_document(space: Space) -> Dict[str, Any]:
    """The inverse of `to_space`; floats are kept exact so documents round trip."""
    spec = space.spec
    norm: Dict[str, Any] = {"family": spec.family.value, "A": spec.A.tolist()}
    if spec.family is not Family.RIEMANNIAN:
        norm["u"] = spec.u.tolist()
    if spec.phi is not None:
        norm["phi"] = spec.phi.descriptor()
    return {
        "name": space.name,
        "dim_h": space.data.dim_h,
        "dim_m": space.data.dim_m,
        "brackets": [list(entry) for entry in space.data.entries()],
        "norm": norm,
    }


def load_document(path: str) -> Space:
    fmt = "yaml" if os.path.splitext(path)[1].lower() in (".yaml", ".yml") else "json"
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    return to_space(parse_document(text, fmt, source=path), source=path)
