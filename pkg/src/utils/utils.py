import re
from dataclasses import asdict, is_dataclass
from typing import Any

import numpy as np


def escape_code_brackets(text: str) -> str:
    """Escapes square brackets in messages while preserving Rich styling tags."""

    def replace_bracketed_content(match):
        content = match.group(1)
        cleaned = re.sub(
            r"bold|red|green|blue|yellow|magenta|cyan|white|black|italic|dim|\s|#[0-9a-fA-F]{6}", "", content
        )
        return f"\\[{content}\\]" if cleaned.strip() else f"[{content}]"

    return re.sub(r"\[([^\]]*)\]", replace_bracketed_content, text)


def round_significant(x: float, digits: int = 12) -> float:
    """Round to `digits` significant digits; non-finite values pass through."""
    x = float(x)
    if not np.isfinite(x) or x == 0.0:
        return x
    return float(f"{x:.{digits}g}")


def make_json_serializable(obj: Any, digits: int | None = None) -> Any:
    """Recursive conversion of report objects (numpy arrays, dataclasses) to JSON types.

    Floats are rounded to `digits` significant digits when given. Key order is
    preserved so reports have a stable field order.
    """
    if obj is None or isinstance(obj, (str, bool)):
        return obj
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return round_significant(obj, digits) if digits else float(obj)
    if isinstance(obj, np.ndarray):
        return make_json_serializable(obj.tolist(), digits)
    if isinstance(obj, (list, tuple)):
        return [make_json_serializable(item, digits) for item in obj]
    if isinstance(obj, dict):
        return {str(k): make_json_serializable(v, digits) for k, v in obj.items()}
    if hasattr(obj, "dict") and callable(obj.dict):
        return make_json_serializable(obj.dict(), digits)
    if is_dataclass(obj):
        return make_json_serializable(asdict(obj), digits)
    return str(obj)


def parse_vector(text: str) -> np.ndarray:
    """Parse a comma separated list such as ``0.6,0.8`` into a float vector."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError(f"empty vector: {text!r}")
    return np.array([float(p) for p in parts], dtype=float)
