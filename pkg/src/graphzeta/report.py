"""Exact-value rendering shared by the CLI reports.

Machine reports are JSON with integers, rationals as "num/den" strings,
cyclotomic numbers as coefficient arrays tagged with (p, j), and
group-ring elements in the "c0*[0] + c1*[1] + ..." form.  Human reports
are aligned tables carrying the same numbers.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cyclo import CycloNum
from .groupring import GroupRingElem
from .poly import UniPoly

__all__ = [
    "fmt_cyclo",
    "fmt_cyclo_poly",
    "fmt_fraction",
    "fmt_groupring_poly",
    "fmt_int_poly",
    "machine_json",
    "table",
]


def fmt_fraction(x) -> str:
    fr = Fraction(x)
    return str(fr.numerator) if fr.denominator == 1 else f"{fr.numerator}/{fr.denominator}"


def fmt_cyclo(x: CycloNum) -> dict:
    return {"p": x.p, "j": x.j, "coeffs": [fmt_fraction(c) for c in x.coeffs]}


def fmt_cyclo_poly(poly: UniPoly, p: int, j: int) -> dict:
    rows = []
    for c in poly.coeffs:
        if isinstance(c, CycloNum):
            rows.append([fmt_fraction(v) for v in c.coeffs])
        else:
            rows.append([fmt_fraction(c)])
    return {"p": p, "j": j, "coeffs": rows}


def fmt_int_poly(poly: UniPoly) -> list[int]:
    out = []
    for c in poly.coeffs:
        fr = Fraction(c)
        if fr.denominator != 1:
            raise ValueError("expected integer coefficients")
        out.append(fr.numerator)
    return out


def fmt_groupring_poly(poly: UniPoly) -> list[str]:
    out = []
    for c in poly.coeffs:
        if isinstance(c, GroupRingElem):
            out.append(c.as_text())
        else:
            out.append(fmt_fraction(c))
    return out


def poly_text(poly: UniPoly, var: str = "u") -> str:
    if poly.is_zero():
        return "0"
    terms = []
    for i, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        if isinstance(c, GroupRingElem):
            body = f"({c.as_text()})"
        elif isinstance(c, CycloNum):
            body = f"({c!r})" if not c.is_rational() else fmt_fraction(c.to_rational())
        else:
            body = fmt_fraction(c)
        if i == 0:
            terms.append(body)
        elif i == 1:
            terms.append(f"{body}*{var}")
        else:
            terms.append(f"{body}*{var}^{i}")
    return " + ".join(terms)


def table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)),
        "  ".join("-" * w for w in widths),
    ]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    return "\n".join(lines)


def machine_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
