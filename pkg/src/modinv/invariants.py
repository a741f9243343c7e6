"""Commutant of {S, T} and exhaustive enumeration of modular invariants."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import EnumerationError, PrecisionError, SnapError
from .modular_data import ModularData, quantum_dims
from .scalars import ToleranceConfig, snap_to_integer
from .scan import scan_box

__all__ = [
    "ModularInvariant", "InvariantFlags", "CommutantBasis",
    "commutant_basis", "enumerate_invariants", "classify", "commutation_residual",
    "is_modular_invariant", "MAX_BOX", "ScanProblem", "scan_problem",
]

MAX_BOX = 10**9
_PREFILTER_TOL = 1e-6


@dataclass(frozen=True)
class InvariantFlags:
    normalized: bool
    symmetric: bool
    vacuum_symmetric: bool
    permutation: bool


def _int_matrix(Z) -> np.ndarray:
    if isinstance(Z, ModularInvariant):
        return Z.matrix
    a = np.array(Z, dtype=np.int64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square integer matrix")
    return a


def classify(Z, md: ModularData | None = None) -> InvariantFlags:
    """Structural flags of a (candidate) modular invariant."""
    Z = _int_matrix(Z)
    if md is not None and Z.shape[0] != md.n:
        raise ValueError("invariant size does not match the modular data")
    is_perm = bool(
        ((Z == 0) | (Z == 1)).all() and (Z.sum(axis=0) == 1).all() and (Z.sum(axis=1) == 1).all()
    )
    return InvariantFlags(
        normalized=bool(Z[0, 0] == 1),
        symmetric=bool((Z == Z.T).all()),
        vacuum_symmetric=bool((Z[0, :] == Z[:, 0]).all()),
        permutation=is_perm,
    )


class ModularInvariant:
    """A non-negative integer matrix commuting with S and T."""

    __slots__ = ("matrix", "name")

    def __init__(self, matrix, name: str | None = None):
        a = np.array(matrix, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("modular invariant must be a square matrix")
        if (a < 0).any():
            raise ValueError("modular invariant entries must be non-negative")
        a.setflags(write=False)
        self.matrix = a
        self.name = name

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def trace(self) -> int:
        return int(np.trace(self.matrix))

    @property
    def flags(self) -> InvariantFlags:
        return classify(self.matrix)

    def key(self) -> tuple:
        return (-self.trace, tuple(int(x) for x in self.matrix.ravel()))

    def renamed(self, name: str) -> "ModularInvariant":
        return ModularInvariant(self.matrix, name)

    def __eq__(self, other):
        if isinstance(other, ModularInvariant):
            return np.array_equal(self.matrix, other.matrix)
        return NotImplemented

    def __hash__(self):
        return hash(self.matrix.tobytes())

    def __repr__(self):
        label = self.name or "Z"
        return f"ModularInvariant({label}, trace={self.trace})"


def commutation_residual(Z, md: ModularData):
    """max(|ZS - SZ|, |ZT - TZ|) evaluated at the data's precision."""
    Z = _int_matrix(Z)
    ctx = md.ctx
    Zo = Z.astype(object)
    D1 = np.dot(Zo, md.S) - np.dot(md.S, Zo)
    worst = ctx.mpf(0)
    for z in D1.ravel():
        worst = max(worst, abs(z))
    n = md.n
    for a in range(n):
        for b in range(n):
            if Z[a, b]:
                worst = max(worst, abs(Z[a, b] * (md.T[b] - md.T[a])))
    return worst


def is_modular_invariant(Z, md: ModularData, cfg: ToleranceConfig | None = None) -> bool:
    cfg = cfg or ToleranceConfig()
    Z = _int_matrix(Z)
    return bool((Z >= 0).all()) and commutation_residual(Z, md) <= cfg.val_eps


# ---------------------------------------------------------------- commutant

@dataclass(frozen=True, eq=False)
class CommutantBasis:
    """Orthonormal real basis of the commutant, in coordinates over ``positions``.

    Only entries (a, b) with T_a = T_b can be non-zero; ``positions`` lists them
    row-major.  ``vectors`` is an ``m x k`` mpmath matrix whose rows are the
    basis; ``pivots`` indexes ``positions``; ``reduced`` is the basis
    transformed to be the identity on the pivots.
    """

    md: ModularData
    positions: tuple[tuple[int, int], ...]
    vectors: object
    pivots: tuple[int, ...]
    reduced: object
    singular_values: tuple[float, ...]

    @property
    def dimension(self) -> int:
        return len(self.pivots)

    @property
    def pivot_positions(self) -> list[tuple[int, int]]:
        return [self.positions[p] for p in self.pivots]

    def matrices(self) -> list[np.ndarray]:
        n = self.md.n
        out = []
        for i in range(self.dimension):
            M = np.zeros((n, n), dtype=object)
            M[:] = self.md.ctx.mpf(0)
            for e, (a, b) in enumerate(self.positions):
                M[a, b] = self.vectors[i, e]
            out.append(M)
        return out


def _null_space(md: ModularData, cfg: ToleranceConfig):
    ctx = md.ctx
    n = md.n
    S, T = md.S, md.T
    positions = tuple((a, b) for a in range(n) for b in range(n) if abs(T[a] - T[b]) <= cfg.val_eps)
    k = len(positions)
    # column e of the real system: vec(E_ab S - S E_ab), split into real and imaginary parts
    tiny = ctx.mpf(2) ** (-(md.precision // 2))
    rows = []
    for x in range(n):
        for y in range(n):
            re_row = [ctx.mpf(0)] * k
            im_row = [ctx.mpf(0)] * k
            touched = False
            for e, (a, b) in enumerate(positions):
                v = 0
                if x == a:
                    v = v + S[b, y]
                if y == b:
                    v = v - S[x, a]
                if not isinstance(v, int):
                    re_row[e] = v.real
                    im_row[e] = v.imag
                    touched = True
            if not touched:
                continue
            for r in (re_row, im_row):
                if max(abs(t) for t in r) > tiny:
                    rows.append(r)
    if not rows:
        return positions, ctx.eye(k), [ctx.mpf(0)] * k
    A = ctx.matrix(rows)
    evals, Q = ctx.eigsy(A.T * A)
    sing = [ctx.sqrt(abs(ev)) for ev in evals]
    return positions, Q, sing


def _rank_split(sing, cfg: ToleranceConfig, precision: int):
    null = [i for i, s in enumerate(sing) if s <= cfg.val_eps]
    rest = [s for s in sing if s > cfg.val_eps]
    if rest and min(rest) <= 1e6 * cfg.val_eps:
        raise PrecisionError(
            f"no clear singular-value gap at {precision} bits "
            f"(smallest non-null value {float(min(rest)):.3e}); increase precision"
        )
    return null


def _choose_pivots(ctx, B, positions, bounds):
    """Greedy maximum-volume choice of m coordinates, starting at the vacuum entry."""
    m, k = B.rows, B.cols
    resid = [[B[i, e] for i in range(m)] for e in range(k)]
    chosen = []
    for step in range(m):
        norms = [ctx.sqrt(ctx.fsum(x * x for x in r)) for r in resid]
        if step == 0 and positions[0] == (0, 0) and norms[0] > 0:
            best = 0
        else:
            top = max(norms)
            cands = [e for e in range(k) if e not in chosen and norms[e] >= top * (1 - ctx.mpf(10) ** -12)]
            best = min(cands, key=lambda e: (bounds[e], e))
        chosen.append(best)
        u = resid[best]
        nu = norms[best]
        u = [x / nu for x in u]
        for e in range(k):
            dot = ctx.fsum(a * b for a, b in zip(resid[e], u))
            resid[e] = [a - dot * b for a, b in zip(resid[e], u)]
    return tuple(chosen)


def commutant_basis(md: ModularData, cfg: ToleranceConfig | None = None, confirm: bool = True) -> CommutantBasis:
    """Real basis of {S, T}' with rank confirmed at twice the precision."""
    cfg = cfg or ToleranceConfig()
    ctx = md.ctx
    positions, Q, sing = _null_space(md, cfg)
    null = _rank_split(sing, cfg, md.precision)
    if confirm:
        md2 = md.at_precision(2 * md.precision)
        _, _, sing2 = _null_space(md2, cfg)
        null2 = _rank_split(sing2, cfg, md2.precision)
        if len(null2) != len(null):
            raise PrecisionError(
                f"commutant rank differs between {md.precision} bits ({len(null)}) "
                f"and {md2.precision} bits ({len(null2)}); increase precision"
            )
    k = len(positions)
    m = len(null)
    B = ctx.matrix(m, k)
    for i, col in enumerate(null):
        for e in range(k):
            B[i, e] = Q[e, col]
    dims = quantum_dims(md)
    bounds = [float(dims[a] * dims[b]) for a, b in positions]
    pivots = _choose_pivots(ctx, B, positions, bounds) if m else ()
    if m:
        P = ctx.matrix(m, m)
        for i in range(m):
            for j, p in enumerate(pivots):
                P[i, j] = B[i, p]
        reduced = ctx.inverse(P) * B
    else:
        reduced = ctx.matrix(0, k) if k else None
    return CommutantBasis(md, positions, B, pivots, reduced, tuple(float(s) for s in sing))


# ---------------------------------------------------------------- enumeration

def _depth_order(Kf: np.ndarray, m: int):
    E = Kf.shape[1]
    depth = np.zeros(E, dtype=np.int64)
    for e in range(E):
        nz = np.nonzero(np.abs(Kf[:, e]) > 1e-12)[0]
        depth[e] = nz.max() if nz.size else 0
    order = np.argsort(depth, kind="stable")
    level_end = np.array([np.searchsorted(depth[order], t, side="right") for t in range(m)], dtype=np.int64)
    return order, level_end


@dataclass(frozen=True, eq=False)
class ScanProblem:
    """Inputs of the float64 pivot-box prefilter (see :mod:`modinv.scan`)."""

    K: np.ndarray
    lo: np.ndarray
    hi: np.ndarray
    bound: np.ndarray
    level_end: np.ndarray
    scale_first: bool
    bound_mp: list

    @property
    def box_size(self) -> int:
        size = 1
        for a, b in zip(self.lo, self.hi):
            size *= int(b - a + 1)
        return size

    def run(self, backend: str | None = None, tol: float = _PREFILTER_TOL) -> np.ndarray:
        return scan_box(self.K, self.lo, self.hi, self.bound, self.level_end, self.scale_first, tol, backend)


def scan_problem(
    md: ModularData,
    basis: CommutantBasis,
    normalized: bool = True,
    max_vacuum: int = 3,
    cfg: ToleranceConfig | None = None,
) -> ScanProblem:
    """Pivot bounds and depth-ordered reconstruction matrix for the prefilter."""
    cfg = cfg or ToleranceConfig()
    m = basis.dimension
    dims = quantum_dims(md)
    positions = basis.positions
    k = len(positions)
    bound_mp = [dims[a] * dims[b] for a, b in positions]
    bound = np.array([float(x) for x in bound_mp])
    scale_max = 1 if normalized else max_vacuum
    lo = np.zeros(m, dtype=np.int64)
    hi = np.zeros(m, dtype=np.int64)
    for j, p in enumerate(basis.pivots):
        if positions[p] == (0, 0):
            lo[j], hi[j] = (1, 1) if normalized else (0, max_vacuum)
        else:
            hi[j] = int(math.floor(float(bound_mp[p]) * scale_max + cfg.snap_eps))
    if positions[basis.pivots[0]] != (0, 0):
        raise EnumerationError("vacuum entry is not a commutant pivot")
    R = basis.reduced
    Kf = np.array([[float(R[j, e]) for e in range(k)] for j in range(m)])
    order, level_end = _depth_order(Kf, m)
    problem = ScanProblem(Kf[:, order], lo, hi, bound[order], level_end, not normalized, bound_mp)
    if problem.box_size > MAX_BOX:
        raise EnumerationError(
            f"pivot box has {problem.box_size} points (> {MAX_BOX}); "
            f"pivot bounds {list(zip(lo.tolist(), hi.tolist()))}"
        )
    return problem


def enumerate_invariants(
    md: ModularData,
    normalized: bool = True,
    max_vacuum: int = 3,
    cfg: ToleranceConfig | None = None,
    basis: CommutantBasis | None = None,
    backend: str | None = None,
) -> list[ModularInvariant]:
    """All non-negative integer matrices in the commutant within the entry bounds.

    Normalized mode requires Z_00 = 1 and Z_ab <= d_a d_b.  Otherwise
    0 <= Z_00 <= ``max_vacuum``, Z != 0 and Z_ab <= Z_00 d_a d_b.  The result is sorted by
    decreasing trace, then lexicographically, and named Z1, Z2, ...
    """
    cfg = cfg or ToleranceConfig()
    basis = basis or commutant_basis(md, cfg)
    m = basis.dimension
    if m == 0:
        return []
    ctx = md.ctx
    problem = scan_problem(md, basis, normalized, max_vacuum, cfg)
    positions = basis.positions
    bound_mp = problem.bound_mp
    R = basis.reduced
    cands = problem.run(backend)

    eps = ctx.mpf(cfg.snap_eps)
    n = md.n
    found = {}
    for z in cands:
        z00 = int(z[0])
        Z = np.zeros((n, n), dtype=np.int64)
        ok = True
        for e, (a, b) in enumerate(positions):
            v = ctx.fsum(int(z[j]) * R[j, e] for j in range(m))
            q = snap_to_integer(ctx.mpc(v), cfg.snap_eps)
            if q is None:
                if abs(v - ctx.nint(v)) < 1e-10:
                    raise SnapError(f"snap ambiguity at entry ({a},{b}): {v}; increase precision")
                ok = False
                break
            limit = bound_mp[e] * (1 if normalized else z00) + eps
            if q < 0 or q > limit:
                ok = False
                break
            Z[a, b] = q
        if not ok or not Z.any():
            continue
        if normalized and Z[0, 0] != 1:
            continue
        if commutation_residual(Z, md) > cfg.val_eps:
            continue
        inv = ModularInvariant(Z)
        found[inv] = inv
    result = sorted(found.values(), key=ModularInvariant.key)
    return [z.renamed(f"Z{i + 1}") for i, z in enumerate(result)]
