"""Number formatting and serialisation shared by reports, scans and the CLI."""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any

SIG_DIGITS = 12


def fmt_real(x: float | Fraction, digits: int = SIG_DIGITS) -> str:
    """Decimal with exactly ``digits`` significant digits, trailing zeros kept."""
    x = float(x)
    if x == 0:
        return "0." + "0" * (digits - 1)
    if not math.isfinite(x):
        return json.dumps(x)
    exp = math.floor(math.log10(abs(x)))
    decimals = digits - 1 - exp
    if decimals < 0 or exp < -6:
        return f"{x:.{digits - 1}e}"
    out = f"{x:.{decimals}f}"
    # rounding can carry into a new leading digit (0.99999... -> 1.0000...)
    if len(out.replace("-", "").replace(".", "").lstrip("0")) > digits and decimals > 0:
        out = f"{x:.{decimals - 1}f}"
    return out


def dumps(obj: Any) -> str:
    """Compact JSON; floats and Fractions rendered with 12 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (float, Fraction)):
        return fmt_real(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps(v) for v in obj) + "]"
    if hasattr(obj, "item"):  # numpy scalar
        return dumps(obj.item())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def plain(obj: Any) -> str:
    """Human-readable scalar or compact record, used in text output and CSV cells."""
    if isinstance(obj, (float, Fraction)):
        return fmt_real(obj)
    if isinstance(obj, dict):
        return " ".join(f"{k}={plain(v)}" for k, v in obj.items())
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(plain(v) for v in obj) + "]"
    if obj is None:
        return "-"
    return str(obj)
