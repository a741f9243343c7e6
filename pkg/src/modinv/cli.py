"""Command-line front end: ``modinv <command> [input.json | --builtin NAME] ...``.

Exit codes: 0 success, 1 validation failure, 2 parse or format error,
3 computation failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

import mpmath
import numpy as np

from . import catalog
from .errors import ModinvError, UsageError, ValidationError
from .invariant_fusion import fusion_table
from .invariants import commutant_basis, enumerate_invariants
from .modular_data import (
    conjugation, fs_indicators, global_index, quantum_dims, simple_currents, validate, verlinde,
)
from .scalars import DEFAULT_PRECISION, MIN_PRECISION, ToleranceConfig
from .sectors import (
    CanonicalObject, SectorWord, factor_type_one, full_system, gram_factorize, iota_gram,
    match_invariant, system_counts, theta_from_vacuum_column,
)

FORMATS = ("table", "json", "csv", "dot")
DIGITS = 20


def _num(x) -> str:
    return mpmath.nstr(x, DIGITS)


def _default_precision() -> int:
    raw = os.environ.get("MODINV_PRECISION")
    if not raw:
        return DEFAULT_PRECISION
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"modinv: MODINV_PRECISION must be an integer, got {raw!r}")


def _precision(text: str) -> int:
    bits = int(text)
    if bits < MIN_PRECISION:
        raise argparse.ArgumentTypeError(f"precision must be at least {MIN_PRECISION}")
    return bits


def _theta(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("theta is a comma-separated list of label indices")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("input", nargs="?", help="modular data JSON file")
    src.add_argument("--builtin", choices=catalog.BUILTINS, help="use a built-in data set")
    src.add_argument("--level", type=int, help="level k for --builtin su2")
    num = common.add_argument_group("numerics")
    num.add_argument("--precision", type=_precision, default=None, help="working precision in bits")
    num.add_argument("--snap-eps", type=float, default=1e-24)
    num.add_argument("--val-eps", type=float, default=1e-20)
    num.add_argument("--strict-phase", action="store_true",
                     help="require (ST)^3 = S^2 exactly (always on for built-in data)")
    common.add_argument("--format", choices=FORMATS, default="table")

    enum = argparse.ArgumentParser(add_help=False)
    g = enum.add_mutually_exclusive_group()
    g.add_argument("--normalized", dest="normalized", action="store_true", default=True)
    g.add_argument("--unnormalized", dest="normalized", action="store_false")
    enum.add_argument("--max-vacuum", type=int, default=3)

    parser = argparse.ArgumentParser(prog="modinv", description="Modular invariants from modular data.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="check the modular data axioms")
    sub.add_parser("dims", parents=[common], help="quantum dimensions and global index")
    sub.add_parser("fusion", parents=[common], help="Verlinde fusion rules, FS indicators, simple currents")
    sub.add_parser("enumerate", parents=[common, enum], help="enumerate modular invariants")
    sub.add_parser("fuse-table", parents=[common, enum], help="fusion table Z_a Z_b^t")
    p = sub.add_parser("sectors", parents=[common, enum], help="iota-sector Gram analysis for theta")
    p.add_argument("--theta", type=_theta, required=True, help="labels of theta, e.g. 0,2,4")
    p = sub.add_parser("full-system", parents=[common, enum], help="irreducible sectors of the full system")
    p.add_argument("--invariant", required=True, help="invariant name, e.g. Z3")
    p.add_argument("--theta", type=_theta, help="labels of theta (default: vacuum column for type I)")
    p = sub.add_parser("graph", parents=[common, enum], help="fusion graph of a generator")
    p.add_argument("--invariant", required=True)
    p.add_argument("--generator", required=True, help="+l or -l (several allowed, e.g. +5-5)")
    p.add_argument("--theta", type=_theta)
    return parser


class _Run:
    def __init__(self, args):
        self.args = args
        bits = args.precision or _default_precision()
        self.cfg = ToleranceConfig(args.snap_eps, args.val_eps, bits)
        self._md = self._fr = self._inv = None
        self.strict = bool(args.strict_phase or args.builtin)

    @property
    def md(self):
        if self._md is None:
            a = self.args
            if a.builtin and a.input:
                raise UsageError("give either an input file or --builtin, not both")
            if a.builtin:
                self._md = catalog.builtin(a.builtin, a.level, self.cfg.precision)
            elif a.input:
                self._md = catalog.load(a.input, self.cfg.precision, check=False)
            else:
                raise UsageError("no input: pass a data file or --builtin")
            if a.command != "validate":
                validate_or_raise(self._md, self.cfg, self.strict)
        return self._md

    @property
    def fr(self):
        if self._fr is None:
            self._fr = verlinde(self.md, self.cfg)
        return self._fr

    @property
    def invariants(self):
        if self._inv is None:
            self._inv = enumerate_invariants(
                self.md, self.args.normalized, self.args.max_vacuum, self.cfg
            )
        return self._inv

    def invariant(self, name: str):
        for Z in self.invariants:
            if Z.name == name:
                return Z
        names = ", ".join(Z.name for Z in self.invariants)
        raise UsageError(f"no invariant named {name!r}; available: {names}")

    def theta(self, labels):
        return CanonicalObject.from_labels(labels, self.md.n)


def validate_or_raise(md, cfg, strict):
    report = validate(md, cfg, strict)
    if not report.ok:
        raise ValidationError("modular data fails: " + ", ".join(report.failed()), report)
    return report


# ---------------------------------------------------------------- output helpers

def _matrix_text(M) -> list[str]:
    M = np.asarray(M)
    width = max(len(str(int(x))) for x in M.ravel()) if M.size else 1
    return [" ".join(str(int(x)).rjust(width) for x in row) for row in M]


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=False) + "\n"


def _no_dot(cmd):
    raise UsageError(f"--format dot is only available for 'graph', not {cmd!r}")


# ---------------------------------------------------------------- commands

def cmd_validate(run: _Run) -> tuple[str, int]:
    a = run.args
    md = run.md
    report = validate(md, run.cfg, run.strict)
    if a.format == "json":
        out = _json({"name": md.name, **report.to_dict()})
    elif a.format == "csv":
        out = _csv([["axiom", "passed", "residual"]] +
                   [[c.name, c.passed, f"{c.residual:.3e}"] for c in report.checks])
    elif a.format == "table":
        lines = [f"{md.name}: {md.n} labels at {md.precision} bits"]
        for c in report.checks:
            lines.append(f"  {'PASS' if c.passed else 'FAIL'}  {c.name:<20} {c.residual:.3e}"
                         + (f"  {c.detail}" if c.detail else ""))
        lines.append("valid" if report.ok else "INVALID: " + ", ".join(report.failed()))
        out = "\n".join(lines) + "\n"
    else:
        _no_dot("validate")
    return out, 0 if report.ok else 1


def cmd_dims(run: _Run) -> tuple[str, int]:
    md = run.md
    d = quantum_dims(md)
    omega, _ = global_index(md)
    a = run.args
    if a.format == "json":
        return _json({"labels": list(md.labels), "dims": [_num(x) for x in d], "omega": _num(omega)}), 0
    if a.format == "csv":
        return _csv([["label", "d"]] + [[lab, _num(x)] for lab, x in zip(md.labels, d)] + [["omega", _num(omega)]]), 0
    if a.format == "dot":
        _no_dot("dims")
    lines = [f"{lab:>6}  {_num(x)}" for lab, x in zip(md.labels, d)]
    lines.append(f"{'omega':>6}  {_num(omega)}")
    return "\n".join(lines) + "\n", 0


def cmd_fusion(run: _Run) -> tuple[str, int]:
    md, fr = run.md, run.fr
    fs = fs_indicators(md, fr, run.cfg)
    sc = simple_currents(md, run.cfg)
    conj = conjugation(md, run.cfg)
    a = run.args
    if a.format == "json":
        return _json({
            "labels": list(md.labels),
            "N": [fr.N[lam].tolist() for lam in range(md.n)],
            "fs_indicators": fs,
            "simple_currents": sc,
            "conjugation": list(conj),
        }), 0
    if a.format == "csv":
        rows = [["lambda", "mu", "nu", "N"]]
        for lam in range(md.n):
            for mu in range(md.n):
                for nu in range(md.n):
                    if fr.N[lam, mu, nu]:
                        rows.append([lam, mu, nu, int(fr.N[lam, mu, nu])])
        return _csv(rows), 0
    if a.format == "dot":
        _no_dot("fusion")
    lines = []
    for lam in range(md.n):
        lines.append(f"N{lam} (label {md.labels[lam]}):")
        lines += ["  " + r for r in _matrix_text(fr.N[lam])]
    lines.append("FS indicators: " + " ".join(str(x) for x in fs))
    lines.append("simple currents: " + " ".join(str(x) for x in sc))
    lines.append("conjugation: " + " ".join(str(x) for x in conj))
    return "\n".join(lines) + "\n", 0


def _invariant_dict(Z) -> dict:
    f = Z.flags
    return {"name": Z.name, "trace": Z.trace, "matrix": Z.matrix.tolist(),
            "symmetric": f.symmetric, "permutation": f.permutation}


def cmd_enumerate(run: _Run) -> tuple[str, int]:
    basis = commutant_basis(run.md, run.cfg)
    inv = enumerate_invariants(run.md, run.args.normalized, run.args.max_vacuum, run.cfg, basis)
    run._inv = inv
    a = run.args
    if a.format == "json":
        return _json({"commutant_dimension": basis.dimension,
                      "pivots": [list(p) for p in basis.pivot_positions],
                      "invariants": [_invariant_dict(Z) for Z in inv]}), 0
    if a.format == "csv":
        rows = [["name", "row", "col", "value"]]
        for Z in inv:
            for (i, j), v in np.ndenumerate(Z.matrix):
                if v:
                    rows.append([Z.name, i, j, int(v)])
        return _csv(rows), 0
    if a.format == "dot":
        _no_dot("enumerate")
    lines = [f"commutant dimension {basis.dimension}", f"{len(inv)} invariants"]
    for Z in inv:
        f = Z.flags
        tags = [t for t, on in (("symmetric", f.symmetric), ("permutation", f.permutation)) if on]
        lines.append(f"{Z.name}: trace {Z.trace}" + (f" ({', '.join(tags)})" if tags else ""))
        lines += ["  " + r for r in _matrix_text(Z.matrix)]
    return "\n".join(lines) + "\n", 0


def cmd_fuse_table(run: _Run) -> tuple[str, int]:
    table = fusion_table(run.invariants, run.md, run.cfg)
    a = run.args
    k = len(table.names)
    if a.format == "json":
        return _json(table.to_dict()), 0
    cells = [[table.render(i, j) for j in range(k)] for i in range(k)]
    if a.format == "csv":
        return _csv([[""] + list(table.names)] + [[table.names[i]] + cells[i] for i in range(k)]), 0
    if a.format == "dot":
        _no_dot("fuse-table")
    width = max(len(s) for s in list(table.names) + [c for row in cells for c in row])
    head = " " * width + " | " + " | ".join(n.ljust(width) for n in table.names)
    lines = ["row a, column b: Z_a Z_b^t", head, "-" * len(head)]
    for i in range(k):
        lines.append(table.names[i].ljust(width) + " | " + " | ".join(c.ljust(width) for c in cells[i]))
    return "\n".join(line.rstrip() for line in lines) + "\n", 0


def cmd_sectors(run: _Run) -> tuple[str, int]:
    theta = run.theta(run.args.theta)
    G = iota_gram(theta, run.fr)
    facts = gram_factorize(G)
    Z = match_invariant(theta, run.fr, run.invariants)
    d = quantum_dims(run.md)
    a = run.args
    data = {
        "theta": theta.labels(),
        "d_theta": _num(theta.dimension(d)),
        "gram": G.tolist(),
        "factorizations": [b.tolist() for b in facts],
        "rows": facts[0].shape[0] if facts else None,
        "invariant": Z.name,
    }
    if a.format == "json":
        return _json(data), 0
    if a.format == "csv":
        rows = [["factorization", "row"] + list(run.md.labels)]
        for i, b in enumerate(facts):
            for r, row in enumerate(b):
                rows.append([i, r] + [int(x) for x in row])
        return _csv(rows), 0
    if a.format == "dot":
        _no_dot("sectors")
    lines = [f"theta = {theta}  (d_theta = {data['d_theta']})", "iota Gram matrix:"]
    lines += ["  " + r for r in _matrix_text(G)]
    for i, b in enumerate(facts):
        lines.append(f"factorization {i + 1}: {b.shape[0]} irreducible sectors")
        lines += ["  " + r for r in _matrix_text(b)]
    lines.append(f"matches {Z.name} (trace {Z.trace})")
    return "\n".join(lines) + "\n", 0


def _full_system(run: _Run):
    Z = run.invariant(run.args.invariant)
    if run.args.theta is not None:
        theta = run.theta(run.args.theta)
    else:
        try:
            factor_type_one(Z)
            theta = theta_from_vacuum_column(Z)
        except ModinvError:
            theta = None
    fs = full_system(Z, theta, run.fr, run.md.labels, run.invariants)
    return Z, theta, fs


def cmd_full_system(run: _Run) -> tuple[str, int]:
    Z, theta, fs = _full_system(run)
    counts = system_counts(Z, run.md, theta)
    dims = fs.dims(run.md)
    a = run.args
    data = fs.to_dict()
    data = {"invariant": Z.name, "theta": theta.labels() if theta else None,
            "counts": {k: (v if isinstance(v, int) else _num(v)) for k, v in (
                ("full_count", counts.full_count), ("omega", counts.omega),
                ("omega_pm", counts.omega_pm), ("omega_0", counts.omega_0))},
            **data}
    for s, dv in zip(data["sectors"], dims):
        s["d"] = _num(dv)
    if a.format == "json":
        return _json(data), 0
    if a.format == "csv":
        rows = [["sector", "d", "plus", "minus", "sheet"]]
        sheet_of = {i: k for k, sheet in enumerate(fs.sheets) for i in sheet}
        for i, s in enumerate(fs.sectors):
            rows.append([s.name, _num(dims[i]), int(s.plus), int(s.minus), sheet_of[i]])
        return _csv(rows), 0
    if a.format == "dot":
        _no_dot("full-system")
    c = data["counts"]
    lines = [
        f"{Z.name}, theta = {theta if theta else '(not given)'}",
        f"Tr(Z Z^t) = {c['full_count']}, omega = {c['omega']}, omega_pm = {c['omega_pm']}, omega_0 = {c['omega_0']}",
        f"{fs.count} irreducible sectors:",
    ]
    for i, s in enumerate(fs.sectors):
        tag = "0" if s.ambichiral else "+" if s.plus else "-" if s.minus else " "
        lines.append(f"  [{tag}] {s.name:<24} d = {_num(dims[i])}")
    lines.append(f"{len(fs.sheets)} sheets" + (f" (Z Z^t coefficient sum {fs.expected_sheets})"
                                               if fs.expected_sheets is not None else ""))
    for k, names in enumerate(fs.sheet_names()):
        lines.append(f"  sheet {k + 1}: " + ", ".join(names))
    if fs.gamma is not None:
        lines.append("gamma = " + " + ".join((f"{g} " if g > 1 else "") + n for g, n in fs.gamma_components()))
    lines.append("C = C+ x C-: " + ("yes" if fs.is_product() else "no"))
    if fs.factorizations > 1:
        lines.append("warning: the word Gram matrix has more than one factorization; the first is shown")
    return "\n".join(lines) + "\n", 0


def cmd_graph(run: _Run) -> tuple[str, int]:
    Z, theta, fs = _full_system(run)
    try:
        g = SectorWord.parse(run.args.generator)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if any(x >= run.md.n for x in g.plus + g.minus):
        raise UsageError(f"generator {run.args.generator!r} names a label outside 0..{run.md.n - 1}")
    graph = fs.fusion_graph(g, run.fr, Z)
    a = run.args
    if a.format == "dot":
        return graph.to_dot(), 0
    if a.format == "json":
        return _json({"invariant": Z.name, **graph.to_dict()}), 0
    if a.format == "csv":
        rows = [["from", "to", "multiplicity"]]
        for (i, j), v in np.ndenumerate(graph.adjacency):
            if v:
                rows.append([graph.nodes[i], graph.nodes[j], int(v)])
        return _csv(rows), 0
    lines = [f"{Z.name}: fusion graph of {graph.generator} on {len(graph.nodes)} nodes"]
    width = max(len(n) for n in graph.nodes)
    for i, name in enumerate(graph.nodes):
        lines.append(f"  {name.ljust(width)}  " + " ".join(str(int(x)) for x in graph.adjacency[i]))
    return "\n".join(lines) + "\n", 0


COMMANDS = {
    "validate": cmd_validate,
    "dims": cmd_dims,
    "fusion": cmd_fusion,
    "enumerate": cmd_enumerate,
    "fuse-table": cmd_fuse_table,
    "sectors": cmd_sectors,
    "full-system": cmd_full_system,
    "graph": cmd_graph,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        out, code = COMMANDS[args.command](_Run(args))
    except ValidationError as exc:
        if exc.report is not None and args.format == "json":
            stdout.write(_json(exc.report.to_dict()))
        stderr.write(f"modinv: {exc}\n")
        return exc.exit_code
    except ModinvError as exc:
        stderr.write(f"modinv: {exc}\n")
        return exc.exit_code
    except (OSError, ValueError) as exc:
        stderr.write(f"modinv: {exc}\n")
        return 2
    stdout.write(out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
