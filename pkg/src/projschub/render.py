"""Text, LaTeX and JSON forms of polynomials and sigma-expansions."""

from __future__ import annotations

import json
from collections.abc import Mapping

from projschub.polyring import Family, Polynomial

_LATEX_VAR = {Family.T: "t", Family.BETA: "\\beta"}


def _sub(x: int) -> str:
    s = str(x)
    return s if len(s) == 1 else "{" + s + "}"


def _monomial_text(family, exps) -> str:
    return "*".join(
        f"{family.value}_{idx}" + (f"^{e}" if e > 1 else "") for idx, e in exps
    )


def _monomial_latex(family, exps) -> str:
    v = _LATEX_VAR[family]
    return "".join(f"{v}_{_sub(idx)}" + (f"^{_sub(e)}" if e > 1 else "") for idx, e in exps)


def _join(p: Polynomial, monomial, times: str) -> str:
    parts = []
    for exps, c in p.ordered_terms():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not exps:
            body = str(mag)
        elif mag == 1:
            body = monomial(p.family, exps)
        else:
            body = f"{mag}{times}{monomial(p.family, exps)}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def to_text(p: Polynomial) -> str:
    return _join(p, _monomial_text, "*")


def to_latex(p: Polynomial) -> str:
    return _join(p, _monomial_latex, "")


def poly_to_obj(p: Polynomial) -> dict:
    """JSON-ready dict; coefficients are strings so any size survives."""
    return {
        "family": p.family.value,
        "terms": [
            {"coeff": str(c), "exps": {str(idx): e for idx, e in exps}}
            for exps, c in p.ordered_terms()
        ],
    }


def poly_from_obj(obj: Mapping) -> Polynomial:
    family = Family(obj["family"])
    return Polynomial.from_terms(
        family,
        [({int(k): int(v) for k, v in t["exps"].items()}, int(t["coeff"])) for t in obj["terms"]],
    )


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def poly_to_json(p: Polynomial) -> str:
    return dumps(poly_to_obj(p))


def poly_from_json(s: str) -> Polynomial:
    return poly_from_obj(json.loads(s))


def _wrap(p: Polynomial, text: str) -> str:
    # parenthesize anything that is not a single term
    return f"({text})" if len(p) > 1 else text


def expansion_text(coeffs: Mapping[int, Polynomial]) -> str:
    """``sigma_3 + (t_1 - t_3)*sigma_2``, highest class first."""
    parts = []
    for k in sorted(coeffs, reverse=True):
        c = coeffs[k]
        if c == Polynomial.one(c.family):
            parts.append(f"sigma_{k}")
        else:
            parts.append(f"{_wrap(c, to_text(c))}*sigma_{k}")
    return " + ".join(parts) if parts else "0"


def expansion_latex(coeffs: Mapping[int, Polynomial]) -> str:
    parts = []
    for k in sorted(coeffs, reverse=True):
        c = coeffs[k]
        if c == Polynomial.one(c.family):
            parts.append(f"\\sigma_{_sub(k)}")
        else:
            parts.append(f"{_wrap(c, to_latex(c))}\\sigma_{_sub(k)}")
    return " + ".join(parts) if parts else "0"
