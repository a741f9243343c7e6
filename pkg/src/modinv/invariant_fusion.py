"""Products Z_a Z_b^t of modular invariants and their decomposition."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import FusionAlgebraError
from .invariants import ModularInvariant, commutation_residual
from .modular_data import ModularData
from .scalars import ToleranceConfig

__all__ = ["fuse", "decompose", "fusion_table", "FusionTable", "format_combination"]


def _mat(Z) -> np.ndarray:
    return Z.matrix if isinstance(Z, ModularInvariant) else np.asarray(Z, dtype=np.int64)


def fuse(Za, Zb) -> np.ndarray:
    """Za @ Zb.T as an exact integer matrix."""
    A, B = _mat(Za), _mat(Zb)
    if A.shape != B.shape:
        raise ValueError(f"size mismatch: {A.shape} vs {B.shape}")
    return A @ B.T


def _solve_exact(columns: list[np.ndarray], target: np.ndarray) -> tuple[list[Fraction] | None, int]:
    """Solve sum_i c_i columns[i] = target over Q.  Returns (solution or None, rank)."""
    r = len(columns)
    rows = [[Fraction(int(col[e])) for col in columns] + [Fraction(int(target[e]))]
            for e in range(target.size)]
    pivot_cols = []
    row = 0
    for c in range(r):
        piv = next((i for i in range(row, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[row], rows[piv] = rows[piv], rows[row]
        p = rows[row][c]
        rows[row] = [x / p for x in rows[row]]
        for i in range(len(rows)):
            if i != row and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[row])]
        pivot_cols.append(c)
        row += 1
    for i in range(row, len(rows)):
        if rows[i][r] != 0:
            return None, len(pivot_cols)
    sol = [Fraction(0)] * r
    for i, c in enumerate(pivot_cols):
        sol[c] = rows[i][r]
    return sol, len(pivot_cols)


def decompose(
    P,
    basis: Sequence[ModularInvariant],
    md: ModularData | None = None,
    cfg: ToleranceConfig | None = None,
) -> tuple[int, ...]:
    """Coefficients c with P = sum_i c_i basis[i], required to be non-negative integers.

    The linear system is solved exactly over the rationals.  With ``md`` the
    commutation of P with S and T is checked first.
    """
    P = _mat(P)
    if md is not None:
        cfg = cfg or ToleranceConfig()
        res = commutation_residual(P, md)
        if res > cfg.val_eps:
            raise FusionAlgebraError(f"matrix does not commute with S and T (residual {float(res):.3e})")
    cols = [_mat(Z).ravel() for Z in basis]
    sol, rank = _solve_exact(cols, P.ravel())
    if sol is None:
        raise FusionAlgebraError("basis does not span the product: no exact decomposition")
    if rank < len(cols):
        raise FusionAlgebraError("invariants are linearly dependent; decomposition is not unique")
    bad = [c for c in sol if c.denominator != 1 or c < 0]
    if bad:
        names = [Z.name or f"#{i}" for i, Z in enumerate(basis)]
        text = ", ".join(f"{n}: {c}" for n, c in zip(names, sol))
        raise FusionAlgebraError(f"fusion-algebra violation: coefficients are not non-negative integers ({text})")
    return tuple(int(c) for c in sol)


def format_combination(coeffs: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for c, name in zip(coeffs, names):
        if c == 0:
            continue
        parts.append(name if c == 1 else f"{c}{name}")
    return "+".join(parts) if parts else "0"


@dataclass(frozen=True)
class FusionTable:
    names: tuple[str, ...]
    cells: tuple[tuple[tuple[int, ...], ...], ...]

    def cell(self, a: int, b: int) -> tuple[int, ...]:
        return self.cells[a][b]

    def render(self, a: int, b: int) -> str:
        return format_combination(self.cells[a][b], self.names)

    def to_dict(self) -> dict:
        return {
            "basis": list(self.names),
            "convention": "row a, column b holds Z_a Z_b^t",
            "cells": [[list(c) for c in row] for row in self.cells],
            "rendered": [[self.render(a, b) for b in range(len(self.names))] for a in range(len(self.names))],
        }


def fusion_table(
    basis: Sequence[ModularInvariant],
    md: ModularData | None = None,
    cfg: ToleranceConfig | None = None,
) -> FusionTable:
    """Table of decompositions of Z_a Z_b^t over ``basis``."""
    names = tuple(Z.name or f"Z{i + 1}" for i, Z in enumerate(basis))
    cells = tuple(
        tuple(decompose(fuse(Za, Zb), basis, md, cfg) for Zb in basis) for Za in basis
    )
    return FusionTable(names, cells)
