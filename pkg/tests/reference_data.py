"""Reference values for the quantum E6 double and SU(2)_16, transcribed by hand.

Fusion matrices and invariants are quadratic forms in characters x0..x9:
a term ``A B*`` adds a_i b_j to entry (i, j), and ``|A|^2`` means ``A A*``.
"""
from __future__ import annotations

import re

import numpy as np

N_FORMS = {
    1: "x0x1* + x1x0* + x2x3* + x3x2* + |x4|^2 + x5x6* + x6x5* + x7x8* + x8x7* + |x9|^2",
    2: "x0x2* + x2x0* + x1x3* + x3x1* + |x2 + x3|^2 + (x2 + x3)(x5 + x6)* + (x5 + x6)(x2 + x3)* "
       "+ 2|x4|^2 + x4(x7 + x8 + x9)* + (x7 + x8 + x9)x4* + x5x6* + x6x5* + x7(x8 + x9)* "
       "+ (x8 + x9)x7* + x8x9* + x9x8*",
    3: "x0x3* + x3x0* + x1x2* + x2x1* + |x2 + x3|^2 + (x2 + x3)(x5 + x6)* + (x5 + x6)(x2 + x3)* "
       "+ 2|x4|^2 + x4(x7 + x8 + x9)* + (x7 + x8 + x9)x4* + |x5|^2 + |x6|^2 + |x7|^2 + |x8|^2 "
       "+ x9(x7 + x8)* + (x7 + x8)x9*",
    4: "(x0 + x1 + 2x2 + 2x3)x4* + x4(x0 + x1 + 2x2 + 2x3)* + x4(x5 + x6)* + (x5 + x6)x4* "
       "+ (x2 + x3 + x5 + x6)(x7 + x8 + x9)* + (x7 + x8 + x9)(x2 + x3 + x5 + x6)*",
    5: "(x0 + x3 + x5)x5* + x5(x0 + x3)* + |x2 + x3|^2 + (x4 + x7 + x8 + x9)x4* "
       "+ x4(x7 + x8 + x9)* + (x1 + x2 + x6)x6* + x6(x1 + x2 + x6)* + x7x8* + x8x7* + |x9|^2",
    6: "x0x6* + x6x0* + x1x5* + x5x1* + |x2 + x3|^2 + x2x5* + x5x2* + x3x6* + x6x3* "
       "+ (x4 + x7 + x8 + x9)x4* + x4(x7 + x8 + x9)* + x5x6* + x6x5* + |x7|^2 + |x8|^2 + |x9|^2",
    7: "x0x7* + x8x0* + x1x8* + x7x1* + x2(x4 + x8 + x9)* + (x4 + x7 + x9)x2* "
       "+ x3(x4 + x7 + x9)* + (x4 + x8 + x9)x3* + (x5 + x6)x4* + x4(x5 + x6)* "
       "+ x5x8* + x7x5* + x6x7* + x8x6*",
    8: "x0x8* + x7x0* + x1x7* + x8x1* + x2(x4 + x7 + x9)* + (x4 + x8 + x9)x2* "
       "+ (x4 + x7 + x9)x3* + x3(x4 + x8 + x9)* + (x5 + x6)x4* + x4(x5 + x6)* "
       "+ x5x7* + x7x6* + x6x8* + x8x5*",
    9: "x0x9* + x9x0* + (x2 + x3)(x4 + x7 + x8)* + (x4 + x7 + x8)(x2 + x3)* "
       "+ (x5 + x6)(x4 + x9)* + (x4 + x9)(x5 + x6)* + x1x9* + x9x1*",
}

Z_FORMS = {
    2: "|x0|^2 + |x1|^2 + |x2|^2 + |x3|^2 + |x4|^2 + |x5|^2 + |x6|^2 + |x9|^2 + x7x8* + x8x7*",
    3: "|x0 + x2|^2 + |x1 + x3|^2 + 2|x4|^2",
    4: "|x0 + x2 + x4|^2",
}

FS_INDICATORS = (1, 1, 1, 1, 1, 1, 1, 0, 0, 1)
E6_TRACES = (10, 8, 6, 3)

# row a, column b holds Z_a Z_b^t, as coefficient vectors over (Z1, Z2, Z3, Z4)
E6_TABLE = (
    ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    ((0, 0, 1, 0), (0, 0, 1, 0), (0, 0, 2, 0), (0, 0, 0, 2)),
    ((0, 0, 0, 1), (0, 0, 0, 1), (0, 0, 2, 0), (0, 0, 0, 3)),
)

# over (A17, D10, E7)
SU2_16_TABLE = (
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((0, 1, 0), (0, 2, 0), (0, 0, 2)),
    ((0, 0, 1), (0, 0, 2), (0, 1, 1)),
)
SU2_16_TRACES = {"A17": 17, "D10": 10, "E7": 7}

OMEGA = 89.5692
OMEGA_PM = {"Z3": 18.9282, "Z4": 9.4641}
OMEGA_0 = {"Z3": 4, "Z4": 1}
FULL_COUNT = {"Z3": 12, "Z4": 9}


_TERM = re.compile(r"^(\d*)(.*)$")


def _split_top(text: str) -> list[str]:
    parts, depth, bars, cur = [], 0, 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "|":
            bars ^= 1
        if ch == "+" and depth == 0 and not bars:
            parts.append(cur.strip())
            cur = ""
        else:
            cur += ch
    parts.append(cur.strip())
    return [p for p in parts if p]


def _vector(text: str, n: int) -> np.ndarray:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    v = np.zeros(n, dtype=np.int64)
    for item in text.split("+"):
        coef, name = re.fullmatch(r"\s*(\d*)x(\d+)\s*", item).groups()
        v[int(name)] += int(coef or 1)
    return v


def _factors(body: str) -> tuple[str, str]:
    """Split 'F G*' into its two factors."""
    assert body.endswith("*"), body
    body = body[:-1]
    if body.endswith(")"):
        depth = 0
        for i in range(len(body) - 1, -1, -1):
            depth += {")": 1, "(": -1}.get(body[i], 0)
            if depth == 0:
                return body[:i], body[i:]
    m = re.fullmatch(r"(.*?)(x\d+)", body)
    return m.group(1), m.group(2)


def quadratic_form(text: str, n: int = 10) -> np.ndarray:
    M = np.zeros((n, n), dtype=np.int64)
    for term in _split_top(text):
        coef, body = _TERM.match(term.replace(" ", "")).groups()
        c = int(coef or 1)
        if body.startswith("|"):
            inner = body[1:body.index("|", 1)]
            a = b = _vector(inner, n)
        else:
            left, right = _factors(body)
            a, b = _vector(left, n), _vector(right, n)
        M += c * np.outer(a, b)
    return M


def reference_fusion() -> dict[int, np.ndarray]:
    out = {0: np.eye(10, dtype=np.int64)}
    out.update({k: quadratic_form(v) for k, v in N_FORMS.items()})
    return out


def reference_invariants() -> list[np.ndarray]:
    return [np.eye(10, dtype=np.int64)] + [quadratic_form(Z_FORMS[k]) for k in (2, 3, 4)]


# A-D-E mass matrices of SU(2)_16, labels 0..16
SU2_16_FORMS = {
    "D10": "|x0 + x16|^2 + |x2 + x14|^2 + |x4 + x12|^2 + |x6 + x10|^2 + 2|x8|^2",
    "E7": "|x0 + x16|^2 + |x4 + x12|^2 + |x6 + x10|^2 + |x8|^2 + x8(x2 + x14)* + (x2 + x14)x8*",
}


def su2_16_invariants() -> list[np.ndarray]:
    return [np.eye(17, dtype=np.int64)] + [quadratic_form(SU2_16_FORMS[k], 17) for k in ("D10", "E7")]
