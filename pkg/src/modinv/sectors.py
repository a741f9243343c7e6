"""Alpha-induction sector arithmetic.

Everything here is integer arithmetic on the fusion ring and a modular
invariant Z.  Two identities drive it:

* the inner product of induced sectors, <alpha_l^+, alpha_m^-> = Z_lm, which
  extends to words in alpha^+ and alpha^- as
  <w1, w2> = sum_{x,y} u_x v_y Z_xy with u the fusion content of
  w1.plus * conj(w2.plus) and v that of w2.minus * conj(w1.minus);
* for a dual canonical object theta = sum_t m_t t, the pairings
  <iota l, iota m> = sum_t m_t N_{t l}^m, which also give <alpha_l^±, alpha_m^±>
  for type I invariants.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import ComputationError, FactorizationError, FullSystemError
from .gram import canonical_rows, extend_column, gram_factorize
from .invariants import ModularInvariant, is_modular_invariant
from .modular_data import FusionRing, ModularData, global_index, quantum_dims
from .scalars import ToleranceConfig

__all__ = [
    "CanonicalObject", "SectorWord", "iota_gram", "match_invariant",
    "type_one_invariant", "factor_type_one", "type_two_invariant", "TwistError",
    "conjugation_of", "word_pair", "word_gram", "SystemCounts", "system_counts",
    "gamma_pairing", "ambichiral_index", "theta_from_vacuum_column",
    "Sector", "FullSystem", "full_system", "FusionGraph", "fusion_graph",
]


class TwistError(ComputationError):
    """A row permutation does not produce a modular invariant."""


def _mat(Z) -> np.ndarray:
    return Z.matrix if isinstance(Z, ModularInvariant) else np.asarray(Z, dtype=np.int64)


@dataclass(frozen=True)
class CanonicalObject:
    """Multiset of labels, stored as a multiplicity vector with vacuum multiplicity 1."""

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if not self.multiplicities or self.multiplicities[0] != 1:
            raise ValueError("theta must contain the vacuum exactly once")
        if any(m < 0 for m in self.multiplicities):
            raise ValueError("multiplicities must be non-negative")

    @classmethod
    def from_labels(cls, labels: Iterable[int], n: int) -> "CanonicalObject":
        mult = [0] * n
        for lab in labels:
            if not 0 <= lab < n:
                raise ValueError(f"label {lab} out of range 0..{n - 1}")
            mult[lab] += 1
        return cls(tuple(mult))

    @property
    def n(self) -> int:
        return len(self.multiplicities)

    def labels(self) -> list[int]:
        return [lab for lab, m in enumerate(self.multiplicities) for _ in range(m)]

    def dimension(self, dims: Sequence) -> object:
        return sum(m * d for m, d in zip(self.multiplicities, dims) if m)

    def __str__(self):
        return "+".join(str(lab) for lab in self.labels())


def conjugation_of(fr: FusionRing) -> tuple[int, ...]:
    """l -> conj(l), the unique m with N_{l m}^0 = 1."""
    return tuple(int(np.nonzero(fr.N[a, :, 0])[0][0]) for a in range(fr.n))


def iota_gram(theta: CanonicalObject, fr: FusionRing) -> np.ndarray:
    """G_lm = sum_t m_t N_{t l}^m."""
    if theta.n != fr.n:
        raise ValueError(f"theta has {theta.n} labels, fusion ring has {fr.n}")
    G = np.zeros((fr.n, fr.n), dtype=np.int64)
    for t, m in enumerate(theta.multiplicities):
        if m:
            G += m * fr.N[t]
    return G


def gamma_pairing(lam: int, mu: int, theta: CanonicalObject, fr: FusionRing) -> int:
    """<alpha_lam^+ alpha_mu^-, gamma> = <lam mu, theta> = sum_t m_t N_{lam mu}^t.

    This is the iota-Gram entry <alpha_lam^+, alpha_conj(mu)^+>; the two
    agree with G[lam, mu] whenever mu is self-conjugate.
    """
    if theta.n != fr.n:
        raise ValueError(f"theta has {theta.n} labels, fusion ring has {fr.n}")
    return int(sum(m * fr.N[lam, mu, t] for t, m in enumerate(theta.multiplicities) if m))


def theta_from_vacuum_column(Z) -> CanonicalObject:
    """Read theta off Z_{l0}.  Only meaningful for type I invariants."""
    Z = _mat(Z)
    return CanonicalObject(tuple(int(x) for x in Z[:, 0]))


def match_invariant(
    theta: CanonicalObject,
    fr: FusionRing,
    invariants: Sequence[ModularInvariant],
) -> ModularInvariant:
    """The invariant whose trace equals the number of irreducible iota-sectors."""
    facts = gram_factorize(iota_gram(theta, fr))
    counts = {b.shape[0] for b in facts}
    if len(counts) != 1:
        raise FactorizationError(f"iota-Gram matrix factorizes with differing row counts {sorted(counts)}")
    rows = counts.pop()
    hits = [Z for Z in invariants if Z.trace == rows]
    if len(hits) > 1:
        m = np.array(theta.multiplicities)
        hits = [Z for Z in hits if np.array_equal(Z.matrix[:, 0], m)]
    if not hits:
        raise ComputationError(f"no invariant of trace {rows} for theta = {theta}")
    if len(hits) > 1:
        raise ComputationError(f"ambiguous match for theta = {theta}: {[Z.name for Z in hits]}")
    return hits[0]


def type_one_invariant(b) -> np.ndarray:
    """Z_lm = sum_t b_tl b_tm."""
    b = np.asarray(b, dtype=np.int64)
    return b.T @ b


def factor_type_one(Z) -> list[np.ndarray]:
    """Branching matrices b with b^t b = Z; raises when Z is not of type I."""
    Z = _mat(Z)
    if not np.array_equal(Z, Z.T):
        raise FactorizationError("Z is not symmetric, hence not type I")
    facts = gram_factorize(Z)
    if not facts:
        raise FactorizationError("Z admits no factorization b^t b, hence is not type I")
    return facts


def type_two_invariant(b, perm: Sequence[int], md: ModularData | None = None,
                       cfg: ToleranceConfig | None = None) -> np.ndarray:
    """Z_lm = sum_t b_tl b_{perm(t) m}; ``perm`` must fix the vacuum row."""
    b = np.asarray(b, dtype=np.int64)
    perm = list(perm)
    if sorted(perm) != list(range(b.shape[0])):
        raise ValueError("perm must be a permutation of the rows of b")
    vac = [t for t in range(b.shape[0]) if b[t, 0]]
    if len(vac) != 1 or b[vac[0], 0] != 1:
        raise ValueError("branching matrix needs exactly one vacuum row")
    if perm[vac[0]] != vac[0]:
        raise ValueError("twist must fix the vacuum row")
    Z = b.T @ b[perm]
    if not np.array_equal(Z[0, :], Z[:, 0]):
        raise TwistError("twisted matrix lacks symmetric vacuum coupling")
    if md is not None and not is_modular_invariant(Z, md, cfg):
        raise TwistError("twist is incompatible: result does not commute with S and T")
    return Z


def ambichiral_index(b, dims: Sequence, theta: CanonicalObject):
    """sum_t (sum_l b_tl d_l / d_theta)^2 for a type I branching matrix."""
    b = np.asarray(b, dtype=np.int64)
    d_theta = theta.dimension(dims)
    total = 0
    for row in b:
        dt = sum(int(c) * d for c, d in zip(row, dims) if c)
        total += (dt / d_theta) ** 2
    return total


# ---------------------------------------------------------------- words

@dataclass(frozen=True, order=True)
class SectorWord:
    """Product of alpha^+ over ``plus`` and alpha^- over ``minus`` (label indices)."""

    plus: tuple[int, ...] = ()
    minus: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "plus", tuple(sorted(x for x in self.plus if x != 0)))
        object.__setattr__(self, "minus", tuple(sorted(x for x in self.minus if x != 0)))

    @classmethod
    def alpha(cls, lam: int, sign: str) -> "SectorWord":
        if sign == "+":
            return cls((lam,), ())
        if sign == "-":
            return cls((), (lam,))
        raise ValueError("sign must be '+' or '-'")

    @classmethod
    def parse(cls, text: str) -> "SectorWord":
        """Parse '+5', '-3', '+5-5' or 'id'."""
        text = text.replace(" ", "")
        if text in ("", "id", "0"):
            return cls()
        plus, minus = [], []
        i = 0
        while i < len(text):
            sign = text[i]
            if sign not in "+-":
                raise ValueError(f"bad generator {text!r}; use +l / -l")
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ValueError(f"bad generator {text!r}; use +l / -l")
            (plus if sign == "+" else minus).append(int(text[i + 1:j]))
            i = j
        return cls(tuple(plus), tuple(minus))

    def __mul__(self, other: "SectorWord") -> "SectorWord":
        return SectorWord(self.plus + other.plus, self.minus + other.minus)

    def name(self, labels: Sequence[str] | None = None) -> str:
        lab = (lambda x: labels[x]) if labels else str
        if not self.plus and not self.minus:
            return "α0"
        return "".join(f"α{lab(x)}+" for x in self.plus) + "".join(f"α{lab(x)}-" for x in self.minus)

    def __str__(self):
        return self.name()


def word_pair(w1: SectorWord, w2: SectorWord, fr: FusionRing, Z, conj: Sequence[int] | None = None) -> int:
    """<w1, w2> = sum_{x,y} u_x v_y Z_xy."""
    Z = _mat(Z)
    conj = conj if conj is not None else conjugation_of(fr)
    u = fr.product_vector(list(w1.plus) + [conj[x] for x in w2.plus])
    v = fr.product_vector(list(w2.minus) + [conj[x] for x in w1.minus])
    return int(u @ Z @ v)


def word_gram(words: Sequence[SectorWord], fr: FusionRing, Z, conj: Sequence[int] | None = None) -> np.ndarray:
    Z = _mat(Z)
    conj = conj if conj is not None else conjugation_of(fr)
    W = len(words)
    G = np.zeros((W, W), dtype=np.int64)
    for i in range(W):
        for j in range(i, W):
            G[i, j] = G[j, i] = word_pair(words[i], words[j], fr, Z, conj)
    return G


def _pair_gram(fr: FusionRing, Z: np.ndarray, conj: Sequence[int]) -> np.ndarray:
    """Pairings of all alpha_l^+ alpha_m^- words as a 4-index array [l1, m1, l2, m2]."""
    N = fr.N
    conj = list(conj)
    U = N[:, conj, :]  # U[l1, l2, x] = N_{l1, conj l2}^x
    return np.einsum("acx,xy,dby->abcd", U, Z, U, optimize=True)


# ---------------------------------------------------------------- counts

@dataclass(frozen=True)
class SystemCounts:
    full_count: int
    omega: object
    omega_pm: object
    omega_0: object
    omega_pm_theta: object = None

    def to_dict(self) -> dict:
        out = {
            "full_count": self.full_count,
            "omega": float(self.omega),
            "omega_pm": float(self.omega_pm),
            "omega_0": float(self.omega_0),
        }
        if self.omega_pm_theta is not None:
            out["omega_pm_theta"] = float(self.omega_pm_theta)
        return out


def system_counts(Z, md: ModularData, theta: CanonicalObject | None = None) -> SystemCounts:
    """Tr(Z Z^t), omega, omega_± = omega / sum_l Z_l0 d_l and omega_0 = omega_±^2 / omega."""
    Z = _mat(Z)
    dims = quantum_dims(md)
    omega, _ = global_index(md)
    weight = sum(int(Z[a, 0]) * dims[a] for a in range(md.n) if Z[a, 0])
    if not weight:
        raise ComputationError("invariant has a zero vacuum column")
    omega_pm = omega / weight
    by_theta = omega / theta.dimension(dims) if theta is not None else None
    return SystemCounts(int(np.trace(Z @ Z.T)), omega, omega_pm, omega_pm ** 2 / omega, by_theta)


# ---------------------------------------------------------------- full system

@dataclass(frozen=True)
class Sector:
    name: str
    row: int
    word: SectorWord | None  # set when the sector is itself an irreducible word
    plus: bool
    minus: bool

    @property
    def ambichiral(self) -> bool:
        return self.plus and self.minus


@dataclass(frozen=True, eq=False)
class FullSystem:
    """Irreducible sectors of the full system, as rows of an integer matrix.

    ``b[r, w]`` is the multiplicity of sector r in ``words[w]``; ``words`` are
    the distinct alpha_l^+ alpha_m^- words (one representative per sector
    class).  Sectors are listed in naming order.
    """

    labels: tuple[str, ...]
    words: tuple[SectorWord, ...]
    word_norms: tuple[int, ...]
    b: np.ndarray
    sectors: tuple[Sector, ...]
    sheets: tuple[tuple[int, ...], ...]
    expected_count: int
    expected_sheets: int | None
    gamma: tuple[int, ...] | None
    factorizations: int
    word_of: dict = field(repr=False)

    @property
    def count(self) -> int:
        return len(self.sectors)

    def chiral(self, sign: str) -> list[int]:
        return [i for i, s in enumerate(self.sectors) if (s.plus if sign == "+" else s.minus)]

    def ambichiral(self) -> list[int]:
        return [i for i, s in enumerate(self.sectors) if s.ambichiral]

    def is_product(self) -> bool:
        """C = C+ x C-: trivial ambichiral part and every alpha_a^+ alpha_b^- irreducible."""
        plus, minus = self.chiral("+"), self.chiral("-")
        if len(self.ambichiral()) != 1 or self.count != len(plus) * len(minus):
            return False
        pw = [self.sectors[i].word for i in plus]
        mw = [self.sectors[i].word for i in minus]
        if any(w is None for w in pw + mw):
            return False
        names = {s.word for s in self.sectors if s.word is not None}
        return all((p * m) in names for p in pw for m in mw)

    def names(self) -> list[str]:
        return [s.name for s in self.sectors]

    def sheet_names(self) -> list[list[str]]:
        return [[self.sectors[i].name for i in sheet] for sheet in self.sheets]

    def gamma_components(self) -> list[tuple[int, str]]:
        if self.gamma is None:
            return []
        return [(g, self.sectors[i].name) for i, g in enumerate(self.gamma) if g]

    def classes(self) -> list[list[int]]:
        """Sectors grouped by identical rows (indistinguishable by word pairings)."""
        groups: dict[bytes, list[int]] = {}
        for i, s in enumerate(self.sectors):
            groups.setdefault(self.b[s.row].tobytes(), []).append(i)
        return sorted(groups.values())

    def dims(self, md: ModularData) -> list:
        """Statistical dimensions of the sectors, solved from word dimensions."""
        d = quantum_dims(md)
        ctx = md.ctx
        classes = self.classes()
        word_dim = [ctx.fprod([d[x] for x in w.plus + w.minus]) if (w.plus or w.minus) else ctx.mpf(1)
                    for w in self.words]
        K = len(classes)
        B = ctx.matrix(K, len(self.words))
        for c, members in enumerate(classes):
            row = self.b[self.sectors[members[0]].row]
            for w in range(len(self.words)):
                B[c, w] = int(row[w]) * len(members)
        rhs = ctx.matrix(word_dim)
        sol = ctx.lu_solve(B * B.T, B * rhs)
        out = [None] * self.count
        for c, members in enumerate(classes):
            for i in members:
                out[i] = sol[c]
        return out

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "expected_count": self.expected_count,
            "sectors": [
                {"name": s.name, "chiral_plus": s.plus, "chiral_minus": s.minus,
                 "word": s.word.name(self.labels) if s.word is not None else None}
                for s in self.sectors
            ],
            "plus": [self.sectors[i].name for i in self.chiral("+")],
            "minus": [self.sectors[i].name for i in self.chiral("-")],
            "ambichiral": [self.sectors[i].name for i in self.ambichiral()],
            "sheets": self.sheet_names(),
            "expected_sheets": self.expected_sheets,
            "product": self.is_product(),
            "gamma": [{"multiplicity": g, "sector": n} for g, n in self.gamma_components()],
            "factorizations": self.factorizations,
        }

    # -------------------------------------------------- fusion graphs

    def fusion_graph(self, g: SectorWord, fr: FusionRing, Z, conj: Sequence[int] | None = None) -> "FusionGraph":
        """Graph of left multiplication by the word ``g`` on the sectors.

        Sectors with identical rows cannot be told apart through word
        pairings; they are merged into one node whose multiplicities are
        those of the sum of its members.
        """
        Z = _mat(Z)
        conj = conj if conj is not None else conjugation_of(fr)
        classes = self.classes()
        K, W = len(classes), len(self.words)
        bc = [[Fraction(int(self.b[self.sectors[m[0]].row, w])) for w in range(W)] for m in classes]
        # L = (bc bc^t)^{-1} bc, so that L b^t = identity on classes
        gram = [[sum(bc[i][w] * bc[j][w] for w in range(W)) for j in range(K)] for i in range(K)]
        inv = _rational_inverse(gram)
        L = [[sum(inv[i][j] * bc[j][w] for j in range(K)) for w in range(W)] for i in range(K)]
        M = [[Fraction(word_pair(g * self.words[u], self.words[v], fr, Z, conj)) for v in range(W)]
             for u in range(W)]
        LM = [[sum(L[i][u] * M[u][v] for u in range(W) if L[i][u]) for v in range(W)] for i in range(K)]
        A = [[sum(LM[i][v] * L[j][v] for v in range(W) if L[j][v]) for j in range(K)] for i in range(K)]
        for u in range(W):
            for v in range(W):
                recon = sum(bc[i][u] * A[i][j] * bc[j][v] for i in range(K) for j in range(K))
                if recon != M[u][v]:
                    raise FullSystemError("fusion graph is not determined by word pairings")
        if any(x.denominator != 1 or x < 0 for row in A for x in row):
            raise FullSystemError("fusion graph multiplicities are not non-negative integers")
        names = []
        for members in classes:
            if len(members) == 1:
                names.append(self.sectors[members[0]].name)
            else:
                names.append("{" + ", ".join(self.sectors[m].name for m in members) + "}")
        adj = np.array([[int(x) for x in row] for row in A], dtype=np.int64)
        return FusionGraph(g.name(self.labels), tuple(names), adj)


def _rational_inverse(M: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(M)
    A = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            raise FullSystemError("sector classes are linearly dependent over the words")
        A[c], A[piv] = A[piv], A[c]
        p = A[c][c]
        A[c] = [x / p for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return [row[n:] for row in A]


def full_system(
    Z,
    theta: CanonicalObject | None,
    fr: FusionRing,
    labels: Sequence[str] | None = None,
    invariants: Sequence[ModularInvariant] | None = None,
) -> FullSystem:
    """Decompose all alpha_l^+ alpha_m^- words into irreducible sectors.

    The word Gram matrix is factorized as b^t b; rows are the irreducible
    sectors.  Their number must equal Tr(Z Z^t).  Sheets group sectors by the
    set of minus-labels m whose words alpha_l^+ alpha_m^- contain them.
    """
    Zm = _mat(Z)
    n = fr.n
    labels = tuple(labels) if labels is not None else tuple(str(a) for a in range(n))
    conj = conjugation_of(fr)
    P = _pair_gram(fr, Zm, conj)

    all_pairs = [(lam, mu) for mu in range(n) for lam in range(n)]
    def norm(p):
        return int(P[p[0], p[1], p[0], p[1]])

    def key(p):
        # self-conjugate labels first, so names do not depend on a choice within a conjugate pair
        return (norm(p), conj[p[1]] != p[1], p[1], conj[p[0]] != p[0], p[0])

    reps: list[tuple[int, int]] = []
    rep_of: dict[tuple[int, int], int] = {}
    for p in sorted(all_pairs, key=key):
        for i, q in enumerate(reps):
            if norm(p) == norm(q) == int(P[p[0], p[1], q[0], q[1]]):
                rep_of[p] = i
                break
        else:
            rep_of[p] = len(reps)
            reps.append(p)
    W = len(reps)
    G = np.array([[P[p[0], p[1], q[0], q[1]] for q in reps] for p in reps], dtype=np.int64)
    facts = gram_factorize(G, column_order=list(range(W)), limit=2)
    if not facts:
        raise FullSystemError("word Gram matrix admits no integer factorization")
    b = facts[0]
    expected = int(np.trace(Zm @ Zm.T))
    if b.shape[0] != expected:
        raise FullSystemError(
            f"found {b.shape[0]} irreducible sectors but Tr(Z Z^t) = {expected}; Z and theta are inconsistent"
        )
    words = [SectorWord((p[0],), (p[1],)) for p in reps]
    norms = [int(G[i, i]) for i in range(W)]

    gamma = None
    if theta is not None:
        targets = [gamma_pairing(lam, mu, theta, fr) for lam, mu in reps]
        sols = list(_take(extend_column([list(r) for r in b], targets, None), 1))
        if not sols:
            raise FullSystemError(f"no decomposition of gamma for theta = {theta}")
        gamma_rows = sols[0]
    else:
        gamma_rows = None

    # name rows: the first word (in key order) containing the row names it
    naming = []
    for r in range(b.shape[0]):
        w = next(i for i in range(W) if b[r, i])
        naming.append(w)
    order = sorted(
        range(b.shape[0]),
        key=lambda r: (reps[naming[r]][1], reps[naming[r]][0], -(gamma_rows[r] if gamma_rows else 0), r),
    )
    seen: dict[int, int] = {}
    sectors = []
    for r in order:
        w = naming[r]
        wname = words[w].name(labels)
        if norms[w] == 1:
            name, word = wname, words[w]
        else:
            seen[w] = seen.get(w, 0) + 1
            name = f"({wname})^({seen[w]})" if " " not in wname else wname
            word = None
        plus_member = any(b[r, rep_of[(lam, 0)]] for lam in range(n))
        minus_member = any(b[r, rep_of[(0, mu)]] for mu in range(n))
        sectors.append(Sector(name, r, word, plus_member, minus_member))

    signature = []
    for s in sectors:
        sig = frozenset(mu for (lam, mu) in all_pairs if b[s.row, rep_of[(lam, mu)]])
        signature.append(sig)
    sheet_map: dict[frozenset, list[int]] = {}
    for i, sig in enumerate(signature):
        sheet_map.setdefault(sig, []).append(i)
    sheets = sorted((tuple(v) for v in sheet_map.values()), key=lambda s: s[0])

    expected_sheets = None
    if invariants:
        from .invariant_fusion import decompose

        try:
            expected_sheets = sum(decompose(Zm @ Zm.T, invariants))
        except ComputationError:
            expected_sheets = None

    gamma_out = None
    if gamma_rows is not None:
        gamma_out = tuple(int(gamma_rows[s.row]) for s in sectors)
    return FullSystem(
        labels, tuple(words), tuple(norms), b, tuple(sectors), tuple(sheets), expected,
        expected_sheets, gamma_out, len(facts), rep_of,
    )


def _take(it, k):
    for i, x in enumerate(it):
        if i >= k:
            return
        yield x


# ---------------------------------------------------------------- graphs

@dataclass(frozen=True)
class FusionGraph:
    generator: str
    nodes: tuple[str, ...]
    adjacency: np.ndarray

    def row(self, node: str) -> list[int]:
        return [int(x) for x in self.adjacency[self.nodes.index(node)]]

    def to_dot(self) -> str:
        lines = [f'digraph "{_dot_escape(self.generator)}" {{']
        for i, name in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{_dot_escape(name)}"];')
        for i in range(len(self.nodes)):
            for j in range(len(self.nodes)):
                for _ in range(int(self.adjacency[i, j])):
                    lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"generator": self.generator, "nodes": list(self.nodes),
                "adjacency": self.adjacency.tolist()}


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def fusion_graph(
    g: SectorWord,
    sectors: Sequence[SectorWord],
    fr: FusionRing,
    Z,
    labels: Sequence[str] | None = None,
    conj: Sequence[int] | None = None,
) -> FusionGraph:
    """A_uv = <g u, v> over sectors given as words."""
    conj = conj if conj is not None else conjugation_of(fr)
    adj = np.array([[word_pair(g * u, v, fr, Z, conj) for v in sectors] for u in sectors], dtype=np.int64)
    return FusionGraph(g.name(labels), tuple(s.name(labels) for s in sectors), adj)
