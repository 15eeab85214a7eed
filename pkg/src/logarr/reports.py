"""JSON emission shared by the command line and the demos."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .exact import HilbertSeries, LaurentPoly, TruncPoly


def plain(obj: Any) -> Any:
    """Recursively convert report objects to JSON-ready values.

    Fractions become exact strings unless integral; polynomials are
    coefficient arrays, lowest degree first; Laurent numerators become
    [min_exponent, coefficients].
    """
    if hasattr(obj, "to_json"):
        return plain(obj.to_json())
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else str(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, TruncPoly):
        return [plain(a) for a in obj.coeffs]
    if isinstance(obj, LaurentPoly):
        lo, coeffs = obj.to_pair()
        return [lo, [plain(a) for a in coeffs]]
    if isinstance(obj, HilbertSeries):
        return series_json(obj)
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(plain(x) for x in obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def series_json(h: HilbertSeries) -> dict:
    lo, coeffs = h.numerator.to_pair()
    return {
        "numerator": [lo, [plain(a) for a in coeffs]],
        "denominator_power": h.denom_power,
        "cutoff": h.cutoff,
        "window": h.window,
    }


def dumps(obj: Any) -> str:
    return json.dumps(plain(obj), sort_keys=True, indent=2)


def format_poly(coeffs, var: str = "t") -> str:
    terms = []
    for k, c in enumerate(coeffs):
        c = Fraction(c)
        if not c:
            continue
        mag = abs(c)
        coef = "" if (mag == 1 and k) else str(mag)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        body = coef + ("*" if coef and mono else "") + mono
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def format_laurent(p: LaurentPoly, var: str = "X") -> str:
    lo, coeffs = p.to_pair()
    if not coeffs:
        return "0"
    parts = []
    for k, c in enumerate(coeffs):
        if c:
            e = lo + k
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            parts.append((c, mono))
    out = ""
    for i, (c, mono) in enumerate(parts):
        mag = abs(Fraction(c))
        coef = "" if (mag == 1 and mono) else str(mag)
        body = coef + ("*" if coef and mono else "") + mono
        if i == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out
