"""Built-in modular data and the JSON data-file format.

A data file is UTF-8 JSON::

    {
      "name": "...",
      "labels": ["0", "1", ...],
      "S": [["expr", ...], ...],
      "T": ["expr", ...],
      "metadata": {...}            # optional
    }

Every expression string follows the grammar in :mod:`modinv.scalars`.  The
vacuum is always label index 0.
"""
from __future__ import annotations

import json
import os
from math import gcd
from pathlib import Path

from .errors import DataFormatError, ParseError
from .modular_data import ModularData, require_valid
from .scalars import DEFAULT_PRECISION, ToleranceConfig, format_expr, parse_expr

__all__ = ["builtin_e6_double", "builtin_su2", "builtin", "load", "loads", "save", "dumps", "BUILTINS"]

# d = 1 + sqrt(3) and lambda = 2 + d^2 as written for the quantum double of even E6
_D = "(1+sqrt(3))"
_LAMBDA = f"(2+{_D}*{_D})"

# Numerators of lambda * S for the quantum double of the even E6 system, with
# d and i symbolic.  Row 6 reads "d d" in columns 7, 8 so that S is symmetric.
_E6_NUMERATORS = [
    ["1", "1", "1+d", "1+d", "2+d", "d", "d", "d", "d", "d"],
    ["1", "1", "1+d", "1+d", "-2-d", "d", "d", "-d", "-d", "-d"],
    ["1+d", "1+d", "1", "1", "2+d", "-d", "-d", "-d", "-d", "-d"],
    ["1+d", "1+d", "1", "1", "-2-d", "-d", "-d", "d", "d", "d"],
    ["2+d", "-2-d", "2+d", "-2-d", "0", "0", "0", "0", "0", "0"],
    ["d", "d", "-d", "-d", "0", "d", "d", "-d", "-d", "2*d"],
    ["d", "d", "-d", "-d", "0", "d", "d", "d", "d", "-2*d"],
    ["d", "-d", "-d", "d", "0", "-d", "d", "-2*i-d*i", "2*i+d*i", "0"],
    ["d", "-d", "-d", "d", "0", "-d", "d", "2*i+d*i", "-2*i-d*i", "0"],
    ["d", "-d", "-d", "d", "0", "2*d", "-2*d", "0", "0", "0"],
]
_E6_T = ["1", "-1", "1", "-1", "1", "e(1,6)", "e(2,3)", "e(5,12)", "e(5,12)", "e(3,4)"]


def _e6_entry(numerator: str) -> str:
    if numerator == "0":
        return "0"
    num = numerator.replace("d", _D)
    return f"({num})/{_LAMBDA}"


def builtin_e6_double(precision: int = DEFAULT_PRECISION) -> ModularData:
    """Modular data of the quantum double of the even part of E6 (10 labels)."""
    S = [[_e6_entry(x) for x in row] for row in _E6_NUMERATORS]
    return ModularData.from_expressions(
        "e6-double", [str(a) for a in range(10)], S, _E6_T, precision,
        metadata={"source": "quantum double of the even E6 system"},
    )


def _root(p: int, q: int) -> str:
    g = gcd(p % q, q) or q
    return f"e({(p % q) // g},{q // g})"


def builtin_su2(k: int, precision: int = DEFAULT_PRECISION) -> ModularData:
    """SU(2) at level ``k`` from the Kac-Peterson formulas, written symbolically.

    S_ab = sqrt(2/(k+2)) sin(pi (a+1)(b+1)/(k+2)) with
    sin(pi m / h) = (e(m, 2h) - e(-m, 2h)) / (2i), and
    T_a = e(2a(a+2) - k, 8(k+2)).
    """
    if k < 1:
        raise ValueError("level must be at least 1")
    h = k + 2
    S = []
    for a in range(k + 1):
        row = []
        for b in range(k + 1):
            m = (a + 1) * (b + 1)
            row.append(f"sqrt(2)/sqrt({h})*({_root(m, 2 * h)}-{_root(-m, 2 * h)})/(2*i)")
        S.append(row)
    T = [_root(2 * a * (a + 2) - k, 8 * h) for a in range(k + 1)]
    return ModularData.from_expressions(
        f"su2-{k}", [str(a) for a in range(k + 1)], S, T, precision,
        metadata={"source": f"SU(2) level {k}, Kac-Peterson"},
    )


BUILTINS = ("e6-double", "su2")


def builtin(name: str, level: int | None = None, precision: int = DEFAULT_PRECISION) -> ModularData:
    if name == "e6-double":
        return builtin_e6_double(precision)
    if name == "su2":
        if level is None:
            raise DataFormatError("builtin su2 needs a level")
        return builtin_su2(level, precision)
    raise DataFormatError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}")


# ---------------------------------------------------------------- files

def dumps(md: ModularData) -> str:
    S, T = md.source_strings()
    doc = {"name": md.name, "labels": list(md.labels), "S": S, "T": T}
    if md.metadata:
        doc["metadata"] = md.metadata
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def save(md: ModularData, path: str | os.PathLike) -> None:
    Path(path).write_text(dumps(md), encoding="utf-8")


def _parse_entry(text, where: str):
    if not isinstance(text, str):
        raise DataFormatError(f"{where}: expected an expression string, got {type(text).__name__}")
    try:
        return parse_expr(text)
    except ParseError as exc:
        raise ParseError(str(exc.args[0]).split(" (")[0], exc.offset, where) from None


def loads(
    text: str,
    precision: int = DEFAULT_PRECISION,
    check: bool = True,
    cfg: ToleranceConfig | None = None,
    strict: bool = True,
) -> ModularData:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(doc, dict):
        raise DataFormatError("data file must hold a JSON object")
    for key in ("name", "labels", "S", "T"):
        if key not in doc:
            raise DataFormatError(f"data file is missing {key!r}")
    labels = doc["labels"]
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise DataFormatError("'labels' must be a list of strings")
    n = len(labels)
    S_rows = doc["S"]
    if not isinstance(S_rows, list) or len(S_rows) != n or any(
        not isinstance(row, list) or len(row) != n for row in S_rows
    ):
        raise DataFormatError(f"S must be a {n}x{n} array of expression strings")
    if not isinstance(doc["T"], list) or len(doc["T"]) != n:
        raise DataFormatError(f"T must have {n} entries, got {len(doc['T']) if isinstance(doc['T'], list) else 'none'}")
    S = [[_parse_entry(x, f"S[{a}][{b}]") for b, x in enumerate(row)] for a, row in enumerate(S_rows)]
    T = [_parse_entry(x, f"T[{a}]") for a, x in enumerate(doc["T"])]
    md = ModularData.from_expressions(doc["name"], labels, S, T, precision, doc.get("metadata"))
    if check:
        require_valid(md, cfg, strict)
    return md


def load(
    path: str | os.PathLike,
    precision: int = DEFAULT_PRECISION,
    check: bool = True,
    cfg: ToleranceConfig | None = None,
    strict: bool = True,
) -> ModularData:
    return loads(Path(path).read_text(encoding="utf-8"), precision, check, cfg, strict)


def canonical_source(text: str) -> str:
    """Canonical printed form of one expression string."""
    return format_expr(parse_expr(text))
