"""Modular data (S, T), axiom checks and the derived fusion ring."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DataFormatError, SnapError, ValidationError
from .scalars import (
    DEFAULT_PRECISION,
    ScalarExpr,
    ToleranceConfig,
    context,
    eval_expr,
    format_expr,
    parse_expr,
    snap_to_integer,
)

__all__ = [
    "ModularData", "FusionRing", "AxiomCheck", "ValidationReport",
    "validate", "require_valid", "quantum_dims", "global_index", "conjugation",
    "verlinde", "simple_currents", "fs_indicators", "fusion_ring_violations",
]


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _as_expr(x) -> ScalarExpr:
    return parse_expr(x) if isinstance(x, str) else x


@dataclass(frozen=True, eq=False)
class ModularData:
    """Labels plus S and T, evaluated at ``precision`` bits from exact sources.

    ``S`` is an ``n x n`` object array and ``T`` a length-``n`` object array of
    mpmath ``mpc`` values; index 0 is the vacuum.
    """

    name: str
    labels: tuple[str, ...]
    S_src: tuple[tuple[ScalarExpr, ...], ...]
    T_src: tuple[ScalarExpr, ...]
    precision: int = DEFAULT_PRECISION
    metadata: dict = field(default_factory=dict)
    S: np.ndarray = field(init=False, repr=False)
    T: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        n = len(self.labels)
        if n == 0:
            raise DataFormatError("modular data needs at least one label")
        if len(set(self.labels)) != n:
            raise DataFormatError("labels must be distinct")
        if len(self.S_src) != n or any(len(row) != n for row in self.S_src):
            raise DataFormatError(f"S must be {n}x{n} for {n} labels")
        if len(self.T_src) != n:
            raise DataFormatError(f"T must have {n} entries, got {len(self.T_src)}")
        ctx = context(self.precision)
        S = np.empty((n, n), dtype=object)
        for a in range(n):
            for b in range(n):
                S[a, b] = eval_expr(self.S_src[a][b], self.precision)
        T = np.empty(n, dtype=object)
        for a in range(n):
            T[a] = eval_expr(self.T_src[a], self.precision)
        for z in list(S.ravel()) + list(T):
            if not (ctx.isfinite(z.real) and ctx.isfinite(z.imag)):
                raise DataFormatError("non-finite entry in modular data")
        object.__setattr__(self, "S", _readonly(S))
        object.__setattr__(self, "T", _readonly(T))

    @classmethod
    def from_expressions(
        cls,
        name: str,
        labels: Sequence[str],
        S: Sequence[Sequence[str | ScalarExpr]],
        T: Sequence[str | ScalarExpr],
        precision: int = DEFAULT_PRECISION,
        metadata: dict | None = None,
    ) -> "ModularData":
        S_src = tuple(tuple(_as_expr(x) for x in row) for row in S)
        T_src = tuple(_as_expr(x) for x in T)
        return cls(name, tuple(labels), S_src, T_src, precision, dict(metadata or {}))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def ctx(self):
        return context(self.precision)

    def at_precision(self, bits: int) -> "ModularData":
        if bits == self.precision:
            return self
        return ModularData(self.name, self.labels, self.S_src, self.T_src, bits, dict(self.metadata))

    def source_strings(self) -> tuple[list[list[str]], list[str]]:
        return ([[format_expr(x) for x in row] for row in self.S_src],
                [format_expr(x) for x in self.T_src])


@dataclass(frozen=True)
class FusionRing:
    """``N[l, m, k]`` is the multiplicity of ``k`` in ``l x m``; ``N[l]`` is the matrix N_l."""

    N: np.ndarray

    @property
    def n(self) -> int:
        return self.N.shape[0]

    def matrix(self, label: int) -> np.ndarray:
        return self.N[label]

    def product_vector(self, labels: Sequence[int]) -> np.ndarray:
        """Multiplicity vector of the fusion product of ``labels`` (empty = vacuum)."""
        v = np.zeros(self.n, dtype=np.int64)
        v[0] = 1
        for lab in labels:
            v = v @ self.N[lab]
        return v


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    residual: float
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[AxiomCheck, ...]
    conjugation: tuple[int, ...] | None
    mu: complex | None

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"axiom": c.name, "passed": c.passed, "residual": c.residual, "detail": c.detail}
                for c in self.checks
            ],
            "conjugation": list(self.conjugation) if self.conjugation is not None else None,
            "mu": None if self.mu is None else [self.mu.real, self.mu.imag],
        }


def _matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return np.dot(A, B)


def _max_abs(ctx, values) -> object:
    best = ctx.mpf(0)
    for z in values:
        a = abs(z)
        if a > best:
            best = a
    return best


def _permutation_from(M: np.ndarray, eps) -> tuple[int, ...] | None:
    """The permutation p with M[a, p[a]] = 1 if M is a 0/1 permutation matrix."""
    n = M.shape[0]
    perm = []
    for a in range(n):
        ones = []
        for b in range(n):
            k = snap_to_integer(M[a, b], eps)
            if k is None or k not in (0, 1):
                return None
            if k == 1:
                ones.append(b)
        if len(ones) != 1:
            return None
        perm.append(ones[0])
    if sorted(perm) != list(range(n)):
        return None
    return tuple(perm)


def validate(md: ModularData, cfg: ToleranceConfig | None = None, strict: bool = True) -> ValidationReport:
    """Check the modular data axioms; never raises on axiom failure.

    With ``strict`` the phase in (ST)^3 = mu S^2 must be exactly 1.
    """
    cfg = cfg or ToleranceConfig()
    ctx = md.ctx
    eps = ctx.mpf(cfg.val_eps)
    n = md.n
    S, T = md.S, md.T
    checks = []

    def add(name, residual, passed=None, detail=""):
        passed = bool(residual <= eps) if passed is None else passed
        checks.append(AxiomCheck(name, passed, float(residual), detail))

    add("S-symmetry", _max_abs(ctx, (S[a, b] - S[b, a] for a in range(n) for b in range(a + 1, n))))
    SSd = _matmul(S, np.conj(S).T)
    add("S-unitarity", _max_abs(ctx, (SSd[a, b] - (1 if a == b else 0) for a in range(n) for b in range(n))))
    worst = ctx.mpf(0)
    positive = True
    for b in range(n):
        z = S[0, b]
        worst = max(worst, abs(z.imag))
        if z.real <= eps:
            positive = False
    add("S_{0λ} > 0", worst, passed=positive and worst <= eps,
        detail="" if positive else "vacuum row has non-positive entries")
    add("T-unitarity", _max_abs(ctx, (abs(t) - 1 for t in T)))

    S2 = _matmul(S, S)
    perm = _permutation_from(S2, cfg.val_eps)
    if perm is None:
        add("S^2-permutation", ctx.mpf(1), passed=False, detail="S^2 is not a 0/1 permutation matrix")
        conj = None
    else:
        involutive = all(perm[perm[a]] == a for a in range(n)) and perm[0] == 0
        add("S^2-permutation", _max_abs(ctx, (S2[a, b] - (1 if perm[a] == b else 0)
                                            for a in range(n) for b in range(n))),
            detail="" if involutive else "C is not an involution fixing the vacuum")
        if not involutive:
            checks[-1] = AxiomCheck("S^2-permutation", False, checks[-1].residual, checks[-1].detail)
        conj = perm

    ST = S * T[np.newaxis, :]
    ST3 = _matmul(_matmul(ST, ST), ST)
    num = sum((ST3[a, b] * S2[a, b].conjugate() for a in range(n) for b in range(n)), ctx.mpc(0))
    den = sum((abs(S2[a, b]) ** 2 for a in range(n) for b in range(n)), ctx.mpf(0))
    mu = num / den if den > eps else ctx.mpc(0)
    add("(ST)^3 = mu S^2", _max_abs(ctx, (ST3[a, b] - mu * S2[a, b] for a in range(n) for b in range(n))))
    add("|mu| = 1", abs(abs(mu) - 1))
    if strict:
        add("mu = 1", abs(mu - 1))
    return ValidationReport(tuple(checks), conj, complex(float(mu.real), float(mu.imag)))


def require_valid(md: ModularData, cfg: ToleranceConfig | None = None, strict: bool = True) -> ValidationReport:
    report = validate(md, cfg, strict)
    if not report.ok:
        raise ValidationError(f"{md.name}: failed axioms: {', '.join(report.failed())}", report)
    return report


def quantum_dims(md: ModularData) -> list:
    """d_l = S_{0l} / S_{00} (real parts)."""
    s00 = md.S[0, 0]
    return [(md.S[0, b] / s00).real for b in range(md.n)]


def global_index(md: ModularData) -> tuple:
    """Return ``(omega, residual)`` with omega = sum d_l^2 and residual |omega S_00^2 - 1|."""
    ctx = md.ctx
    omega = ctx.fsum(d * d for d in quantum_dims(md))
    residual = abs(omega * abs(md.S[0, 0]) ** 2 - 1)
    return omega, residual


def conjugation(md: ModularData, cfg: ToleranceConfig | None = None) -> tuple[int, ...]:
    """The charge conjugation permutation l -> conj(l) read off S^2."""
    cfg = cfg or ToleranceConfig()
    perm = _permutation_from(_matmul(md.S, md.S), cfg.val_eps)
    if perm is None or perm[0] != 0:
        raise ValidationError(f"{md.name}: S^2 is not a permutation fixing the vacuum")
    return perm


def verlinde(md: ModularData, cfg: ToleranceConfig | None = None) -> FusionRing:
    """Fusion coefficients from the Verlinde formula, snapped to integers."""
    cfg = cfg or ToleranceConfig()
    n = md.n
    S = md.S
    inv0 = np.array([1 / S[0, s] for s in range(n)], dtype=object)
    A = (S[:, np.newaxis, :] * S[np.newaxis, :, :] * inv0).reshape(n * n, n)
    raw = _matmul(A, np.conj(S).T).reshape(n, n, n)
    N = np.zeros((n, n, n), dtype=np.int64)
    worst, worst_at = None, None
    for idx in np.ndindex(n, n, n):
        z = raw[idx]
        k = snap_to_integer(z, cfg.snap_eps)
        if k is None or k < 0:
            dist = abs(z - round(float(z.real)))
            if worst is None or dist > worst:
                worst, worst_at = dist, idx
            continue
        N[idx] = k
    if worst_at is not None:
        l, m, k = worst_at
        raise SnapError(
            f"{md.name}: not modular data or insufficient precision; "
            f"N_{{{l},{m}}}^{k} = {raw[worst_at]} is not a non-negative integer"
        )
    return FusionRing(_readonly(N))


def simple_currents(md: ModularData, cfg: ToleranceConfig | None = None) -> list[int]:
    cfg = cfg or ToleranceConfig()
    return [a for a, d in enumerate(quantum_dims(md)) if abs(d - 1) <= cfg.val_eps]


def fs_indicators(md: ModularData, fr: FusionRing, cfg: ToleranceConfig | None = None) -> list[int]:
    """Frobenius-Schur indicators via the T-phase double sum.

    nu_l = (1/omega) sum_{m,k} N_{mk}^l d_m d_k (T_m / T_k)^2
    """
    cfg = cfg or ToleranceConfig()
    ctx = md.ctx
    n = md.n
    dims = quantum_dims(md)
    omega, _ = global_index(md)
    twist = [[(md.T[m] / md.T[k]) ** 2 * dims[m] * dims[k] for k in range(n)] for m in range(n)]
    out = []
    for lab in range(n):
        total = ctx.mpc(0)
        for m in range(n):
            for k in range(n):
                c = int(fr.N[m, k, lab])
                if c:
                    total += c * twist[m][k]
        nu = snap_to_integer(total / omega, cfg.snap_eps)
        if nu is None or nu not in (-1, 0, 1):
            raise SnapError(f"{md.name}: FS indicator of label {lab} = {total / omega} is not in {{-1,0,1}}")
        out.append(nu)
    return out


def fusion_ring_violations(fr: FusionRing, conj: Sequence[int]) -> list[str]:
    """List the fusion ring axioms that ``fr`` violates (empty when all hold)."""
    N = fr.N
    n = fr.n
    bad = []
    if not np.array_equal(N[0], np.eye(n, dtype=N.dtype)):
        bad.append("N_0 is not the identity")
    if (N < 0).any():
        bad.append("negative fusion coefficient")
    if not np.array_equal(N, N.transpose(1, 0, 2)):
        bad.append("fusion is not commutative")
    for a in range(n):
        if not np.array_equal(N[a].T, N[conj[a]]):
            bad.append(f"N_{a} transposed is not N_{conj[a]}")
    for a in range(n):
        for b in range(n):
            lhs = N[a] @ N[b]
            rhs = np.tensordot(N[a, b], N, axes=(0, 0))
            if not np.array_equal(lhs, rhs):
                bad.append(f"associativity fails for ({a},{b})")
    return bad
