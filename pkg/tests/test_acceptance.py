"""Acceptance criteria, one test each.

Every test prints a single ``[criterion N] PASS|FAIL: ...`` line (visible in
``pytest -v`` output) before asserting.  Run this file directly to get only
the summary lines:  python3 tests/test_acceptance.py
"""
from __future__ import annotations

import sys
import time

import numpy as np
import pytest

from modinv import (
    CanonicalObject, SectorWord, builtin_e6_double, builtin_su2, commutant_basis, conjugation,
    decompose, enumerate_invariants, fs_indicators, full_system, fuse, fusion_table, gamma_pairing,
    global_index, gram_factorize, iota_gram, match_invariant, system_counts, validate, verlinde,
    word_pair,
)
from modinv.modular_data import fusion_ring_violations

import reference_data as ref

_REPORTER = None


@pytest.fixture(autouse=True)
def _reporter(capsys):
    global _REPORTER
    _REPORTER = capsys
    yield
    _REPORTER = None


def report(n: int, ok: bool, detail: str) -> None:
    line = f"[criterion {n}] {'PASS' if ok else 'FAIL'}: {detail}"
    if _REPORTER is not None:
        with _REPORTER.disabled():
            print("\n" + line)
    else:
        print(line)
    assert ok, line


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def criterion_1():
    md, dt = _timed(lambda: validate(builtin_e6_double(192), strict=True))
    ok = md.ok and abs(md.mu - 1) < 1e-18 and dt < 1.0
    report(1, ok, f"E6 double axioms {'all pass' if md.ok else md.failed()}, "
                  f"|mu-1| = {abs(md.mu - 1):.1e}, {dt:.2f} s")


def criterion_2():
    md = builtin_e6_double()
    fr = verlinde(md)
    printed = ref.reference_fusion()
    diffs = [
        (lam, int(a), int(b), int(printed[lam][a, b]), int(fr.N[lam][a, b]))
        for lam in range(10)
        for a, b in np.argwhere(printed[lam] != fr.N[lam])
    ]
    perms = all(
        ((fr.N[lam] == 0) | (fr.N[lam] == 1)).all() and (fr.N[lam].sum(0) == 1).all() for lam in (0, 1)
    )
    transpose = np.array_equal(fr.N[8], fr.N[7].T)
    text = "; ".join(f"N{lam}[{a},{b}] reference {p} vs Verlinde {v}" for lam, a, b, p, v in diffs)
    report(2, not diffs and perms and transpose,
           f"{len(diffs)} discrepancies over 1000 entries"
           + (f" ({text})" if diffs else "")
           + f"; N0,N1 permutations: {perms}; N8 = N7^t: {transpose}")


def criterion_3():
    md = builtin_e6_double()
    fs = fs_indicators(md, verlinde(md))
    report(3, tuple(fs) == ref.FS_INDICATORS, f"FS indicators {fs}")


def criterion_4():
    md = builtin_e6_double()
    (basis, inv), dt = _timed(lambda: (lambda b: (b, enumerate_invariants(md, basis=b)))(commutant_basis(md)))
    mats = [Z.matrix.tolist() for Z in inv]
    ok = (mats == [M.tolist() for M in ref.reference_invariants()] and basis.dimension == 4
          and tuple(Z.trace for Z in inv) == ref.E6_TRACES and dt < 10)
    report(4, ok, f"{len(inv)} invariants, commutant dimension {basis.dimension}, "
                  f"traces {tuple(Z.trace for Z in inv)}, {dt:.2f} s")


def criterion_5():
    md = builtin_e6_double()
    inv = enumerate_invariants(md)
    table = fusion_table(inv, md)
    bad = [(a, b) for a in range(4) for b in range(4) if table.cell(a, b) != ref.E6_TABLE[a][b]]
    names = table.names
    text = "; ".join(
        f"{names[a]}{names[b]}^t computed {table.render(a, b)}, reference "
        f"{'+'.join((str(c) if c > 1 else '') + names[i] for i, c in enumerate(ref.E6_TABLE[a][b]) if c)}"
        for a, b in bad
    )
    report(5, not bad, f"{16 - len(bad)}/16 cells match" + (f" ({text})" if bad else ""))


def criterion_6():
    def go():
        md = builtin_su2(16)
        inv = enumerate_invariants(md)
        return md, inv, fusion_table(inv, md)

    (md, inv, table), dt = _timed(go)
    traces = [Z.trace for Z in inv]
    ok = (len(inv) == 3 and traces == [17, 10, 7] and table.cells == ref.SU2_16_TABLE and dt < 60)
    report(6, ok, f"{len(inv)} invariants with traces {traces} (A17, D10, E7); "
                  f"table {'matches' if table.cells == ref.SU2_16_TABLE else 'differs'}; {dt:.2f} s")


def criterion_7():
    md = builtin_e6_double()
    fr = verlinde(md)
    inv = enumerate_invariants(md)
    rows, names = [], []
    for labels in ((0, 1), (0, 2), (0, 2, 4)):
        theta = CanonicalObject.from_labels(labels, 10)
        facts = gram_factorize(iota_gram(theta, fr))
        rows.append([b.shape[0] for b in facts])
        names.append(match_invariant(theta, fr, inv).name)
    Z3, Z4 = inv[2], inv[3]
    pairs = [
        word_pair(SectorWord((5,), (5,)), SectorWord((5,), (5,)), fr, Z3),
        word_pair(SectorWord((4,), (1,)), SectorWord((4,)), fr, Z3),
        word_pair(SectorWord((5,), (5,)), SectorWord((9,), (5,)), fr, Z3),
    ]
    gammas = [
        gamma_pairing(5, 5, CanonicalObject.from_labels((0, 2), 10), fr),
        gamma_pairing(1, 1, CanonicalObject.from_labels((0, 2, 4), 10), fr),
    ]
    ok = rows == [[8], [6], [3]] and names == ["Z2", "Z3", "Z4"] and pairs == [2, 3, 0] and gammas == [1, 1]
    report(7, ok, f"Gram rows {rows} -> {names}; word pairs {pairs}; gamma pairings {gammas}")


def criterion_8():
    md = builtin_e6_double()
    inv = enumerate_invariants(md)
    ctx = md.ctx
    d = 1 + ctx.sqrt(3)
    omega_exact = 8 * (1 + d + d * d)
    exact = {"Z3": omega_exact / (2 + d), "Z4": 2 + d * d}
    details, ok = [], True
    omega, _ = global_index(md)
    ok &= abs(omega - omega_exact) < 1e-10 and abs(omega - ref.OMEGA) < 5e-5
    details.append(f"omega = {float(omega):.6f}")
    for name, Z, theta in (("Z3", inv[2], (0, 2)), ("Z4", inv[3], (0, 2, 4))):
        c = system_counts(Z, md, CanonicalObject.from_labels(theta, 10))
        ok &= c.full_count == ref.FULL_COUNT[name]
        ok &= abs(c.omega_pm - exact[name]) < 1e-10 and abs(c.omega_pm - ref.OMEGA_PM[name]) < 5e-5
        ok &= abs(c.omega_0 - ref.OMEGA_0[name]) < 1e-10
        details.append(f"{name}: ({c.full_count}, {float(c.omega_pm):.6f}, {float(c.omega_0):.6f})")
    report(8, bool(ok), "; ".join(details))


def criterion_9():
    md = builtin_e6_double()
    fr = verlinde(md)
    inv = enumerate_invariants(md)
    Z1, Z3, Z4 = inv[0], inv[2], inv[3]
    fs3 = full_system(Z3, CanonicalObject.from_labels((0, 2), 10), fr, invariants=inv)
    fs4 = full_system(Z4, CanonicalObject.from_labels((0, 2, 4), 10), fr, invariants=inv)
    fs1 = full_system(Z1, CanonicalObject.from_labels((0,), 10), fr, invariants=inv)
    plus4 = [fs4.sectors[i].word for i in fs4.chiral("+")]
    g4 = fs4.fusion_graph(SectorWord((5,)), fr, Z4)
    a5 = [g4.row("α5+")[g4.nodes.index(w.name())] for w in plus4]
    g1 = fs1.fusion_graph(SectorWord((4,)), fr, Z1)
    ok = (fs3.count == 12 and len(fs3.sheets) == 2 and fs4.count == 9 and len(fs4.sheets) == 3
          and fs4.is_product() and a5 == [1, 1, 2] and len(g1.nodes) == 10)
    report(9, ok, f"Z3: {fs3.count} sectors / {len(fs3.sheets)} sheets; Z4: {fs4.count} sectors / "
                  f"{len(fs4.sheets)} sheets, product {fs4.is_product()}; alpha5+ row {a5}; "
                  f"Z1 alpha4+ graph has {len(g1.nodes)} nodes")


def criterion_10():
    problems = []
    for k in range(1, 13):
        md = builtin_su2(k)
        fr = verlinde(md)
        conj = conjugation(md)
        problems += [f"k={k}: {v}" for v in fusion_ring_violations(fr, conj)]
        inv = enumerate_invariants(md)
        mats = [Z.matrix for Z in inv]
        C = np.eye(md.n, dtype=np.int64)[list(conj)]
        if not any(np.array_equal(M, np.eye(md.n)) for M in mats):
            problems.append(f"k={k}: identity missing")
        if not any(np.array_equal(M, C) for M in mats):
            problems.append(f"k={k}: conjugation missing")
        for a in inv:
            for b in inv:
                try:
                    decompose(fuse(a, b), inv, md)
                except Exception as exc:  # reported, not raised
                    problems.append(f"k={k}: {a.name}{b.name}^t: {exc}")
        hi = enumerate_invariants(md.at_precision(384))
        if [Z.matrix.tolist() for Z in hi] != [M.tolist() for M in mats]:
            problems.append(f"k={k}: 192/384-bit enumerations differ")
    report(10, not problems, "SU(2)_k, k <= 12: " + ("all properties hold" if not problems else "; ".join(problems)))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def test_criterion_01_e6_validation():
    criterion_1()


def test_criterion_02_verlinde_reference():
    criterion_2()


def test_criterion_03_fs_indicators():
    criterion_3()


def test_criterion_04_e6_enumeration():
    criterion_4()


def test_criterion_05_e6_fusion_table():
    criterion_5()


def test_criterion_06_su2_16():
    criterion_6()


def test_criterion_07_sector_suite():
    criterion_7()


def test_criterion_08_system_counts():
    criterion_8()


def test_criterion_09_full_system():
    criterion_9()


def test_criterion_10_property_suite():
    criterion_10()


if __name__ == "__main__":
    failed = 0
    for fn in CRITERIA:
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
