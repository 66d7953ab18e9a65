"""Command-line front end.

Exit codes: 0 ok, 1 failing examples, 2 parse error, 3 domain error,
4 function not right-regular.  Diagnostics go to stderr as one-line JSON.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import fixtures
from .adjugate import (
    abc_criterion,
    adjugate,
    adjugate_is_left_regular,
    complex_det,
    complex_pair_coefficients,
    det_M_identity,
    is_rl_biregular,
)
from .errors import DomainError, NotRegularError, ParseError
from .forms import classify_complex_linearity, structure_matrices
from .fueter import DEFAULT_BOX, classify_function, structure_field
from .linmap import EPS_RANK, decompose_bar_theta, is_left_regular, is_right_regular, rank
from .parser import format_polynomial, parse_function, parse_map, parse_quaternion
from .quaternion import Quaternion

EXIT_OK = 0
EXIT_EXAMPLES_FAILED = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_NOT_REGULAR = 4


def _plain(x):
    """Convert numpy scalars and arrays, complex numbers and tuples to JSON types."""
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, np.ndarray):
        return _plain(x.tolist())
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, complex):
        return [float(x.real), float(x.imag)]
    if isinstance(x, (float, np.floating)):
        return float(x)
    return x


def dumps(report):
    return json.dumps(_plain(report), indent=2, allow_nan=False)


def diagnostic(code, message, position=None):
    out = {"code": code, "message": message}
    if position is not None:
        out["position"] = position
    return json.dumps(out, separators=(",", ":"))


def _error(exc):
    if isinstance(exc, ParseError):
        return diagnostic(exc.code, exc.message, exc.position)
    return diagnostic(getattr(exc, "code", "error"), str(exc))


def read_source(source):
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    return source


def parse_box(text):
    parts = [p for p in text.replace(",", " ").split()]
    try:
        vals = tuple(float(p) for p in parts)
    except ValueError:
        raise ParseError(f"--box needs 8 numbers, got {text!r}")
    if len(vals) != 8:
        raise ParseError(f"--box needs 8 numbers, got {len(vals)}")
    if any(vals[2 * k] > vals[2 * k + 1] for k in range(4)):
        raise DomainError("--box has a lower bound above its upper bound")
    return vals


def read_points(path):
    pts = []
    with open(path, encoding="utf-8") as fh:
        for n, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.replace(",", " ").split()
            try:
                pts.append(Quaternion(*map(float, parts)) if len(parts) == 4 else parse_quaternion(line))
            except ParseError as e:
                raise ParseError(f"bad point in {path}: {e.message}", n, 1)
            except ValueError:
                raise ParseError(f"bad point in {path}: {line!r}", n, 1)
    return pts


# ------------------------------------------------------------------ reports


def map_report(text, tol=EPS_RANK):
    L = parse_map(text)
    regular = is_right_regular(L)
    sm = structure_matrices(L, tol=tol)
    sol = classify_complex_linearity(L, tol=tol)
    pc = complex_pair_coefficients(L)
    detM = lam0 = None
    if regular:
        detM, lam0 = det_M_identity(L)
    adj = adjugate(L)
    return _plain({
        "kind": "map",
        "input": text,
        "matrix": L.to_json(),
        "norm_sq": L.norm_sq(),
        "right_regular": regular,
        "left_regular": is_left_regular(L),
        "decomposition": {
            "left": [c.to_list() for c in decompose_bar_theta(L, side="left").coeffs],
            "right": [c.to_list() for c in decompose_bar_theta(L, side="right").coeffs],
        },
        "A": sm.A,
        "M": sm.M,
        "trace_M": sm.trace,
        "size": sm.size,
        "classification": sol.to_json(),
        "rank": rank(L, tol),
        "adjugate": {
            "matrix": adj.to_json(),
            "left_regular": adjugate_is_left_regular(L),
            "complex_det": complex_det(L),
        },
        "det_identity": None if detM is None else {"det_M": detM, "quarter_lam0_sq": lam0},
        "criterion": list(abc_criterion(pc)),
        "rl_biregular": is_rl_biregular(L, tol),
    })


def function_report(text, box=DEFAULT_BOX, grid_n=5, tol=EPS_RANK, path=None):
    F = parse_function(text)
    report = {
        "kind": "function",
        "input": text,
        "f1": format_polynomial(F.f1),
        "f2": format_polynomial(F.f2),
        "box": list(box),
        "grid_n": grid_n,
        "right_regular": True,
        "witness": None,
        "crf_right": None,
        "classification": None,
        "structure_field": None,
    }
    try:
        fc = classify_function(F, box, grid_n, tol)
    except NotRegularError as e:
        report["right_regular"] = False
        report["witness"] = e.witness.to_list()
        report["crf_right"] = e.value.to_list()
        raise _WithReport(e, _plain(report))
    report["classification"] = fc.to_json()
    if path is not None:
        try:
            report["structure_field"] = [g.to_list() for g in structure_field(F, path, tol)]
        except DomainError as e:
            raise _WithReport(e, _plain(report))
    return _plain(report)


def examples_report(selector=None):
    rows = []
    for fx in fixtures.select(selector):
        try:
            checks = fx.run()
        except Exception as e:  # a crashing fixture counts as a failure
            checks = [("runs without error", False, f"{type(e).__name__}: {e}")]
        rows.append({
            "name": fx.name,
            "tags": list(fx.tags),
            "summary": fx.summary,
            "source": fx.source,
            "passed": all(ok for _, ok, _ in checks),
            "checks": [{"label": lab, "ok": ok, "detail": det} for lab, ok, det in checks],
        })
    return {
        "kind": "examples",
        "filter": selector,
        "fixtures": rows,
        "passed": sum(r["passed"] for r in rows),
        "failed": sum(not r["passed"] for r in rows),
    }


class _WithReport(Exception):
    def __init__(self, error, report):
        super().__init__(str(error))
        self.error = error
        self.report = report


# ------------------------------------------------------------ human output


def g6(x):
    return f"{float(x) + 0.0:.6g}"


def _matrix_lines(m, indent="  "):
    m = np.asarray(m, dtype=float)
    cells = [[g6(x) for x in row] for row in m]
    w = max(len(c) for row in cells for c in row)
    return [indent + "  ".join(c.rjust(w) for c in row) for row in cells]


def _quat(v):
    return "(" + ", ".join(g6(x) for x in v) + ")"


def _cplx(z):
    return f"{g6(z[0])}{'+' if z[1] >= 0 else '-'}{g6(abs(z[1]))}i"


def format_map_report(r):
    lines = [f"map: {r['input'].strip()}", "matrix:"]
    lines += _matrix_lines(r["matrix"])
    lines.append(f"norm^2: {g6(r['norm_sq'])}")
    lines.append(f"right-regular: {r['right_regular']}   left-regular: {r['left_regular']}")
    lines.append("left coefficients:  " + " ".join(_quat(c) for c in r["decomposition"]["left"]))
    lines.append("right coefficients: " + " ".join(_quat(c) for c in r["decomposition"]["right"]))
    lines.append("A:")
    lines += _matrix_lines(r["A"])
    lines.append("M:")
    lines += _matrix_lines(r["M"])
    lines.append(f"size: {r['size']}   rank: {r['rank']}")
    c = r["classification"]
    desc = c["kind"]
    if c["unit"] is not None:
        desc += f" unit={_quat(c['unit'])}"
    if c["partner"] is not None:
        desc += f" partner={_quat(c['partner'])}"
    lines.append(f"complex structures: {desc}")
    a = r["adjugate"]
    lines.append(f"adjugate left-regular: {a['left_regular']}   complex det: {g6(a['complex_det'])}")
    if r["det_identity"] is not None:
        d = r["det_identity"]
        lines.append(f"det M: {g6(d['det_M'])}   |lam0 adj|^2/4: {g6(d['quarter_lam0_sq'])}")
    lines.append("criterion: " + ", ".join(_cplx(z) for z in r["criterion"]))
    lines.append(f"RL-biregular: {r['rl_biregular']}")
    return "\n".join(lines)


def format_function_report(r):
    lines = [f"function: f1 = {r['f1']}; f2 = {r['f2']}"]
    if not r["right_regular"]:
        lines.append("not right Fueter-regular")
        lines.append(f"witness: {_quat(r['witness'])}   crf_right: {_quat(r['crf_right'])}")
        return "\n".join(lines)
    fc = r["classification"]
    lines.append(f"box: {', '.join(g6(x) for x in r['box'])}   grid: {r['grid_n']}")
    lines.append(f"case: {fc['case']}")
    if fc["constant"] is not None:
        lines.append(f"constant: {_quat(fc['constant'])}")
    if fc["conformal"] is not None:
        c = fc["conformal"]
        lines.append(f"g: {_quat(c['g'])}  lambda: {_quat(c['lambda'])}  mu: {_quat(c['mu'])}")
        lines.append(f"absolutely biregular: {c['absolutely_biregular']}")
    counts = {}
    for s in fc["samples"]:
        key = (s["size"], s["rank"])
        counts[key] = counts.get(key, 0) + 1
    lines.append("size rank count")
    for (s, k), n in sorted(counts.items()):
        lines.append(f"{s:4d} {k:4d} {n:5d}")
    ex = fc["exceptional_samples"]
    if ex:
        lines.append(f"exceptional samples: {len(ex)} (first {_quat(ex[0])})")
    if r["structure_field"] is not None:
        lines.append("structure field:")
        lines += ["  " + _quat(g) for g in r["structure_field"]]
    return "\n".join(lines)


def format_examples_report(r):
    rows = [(f["name"], f"{sum(c['ok'] for c in f['checks'])}/{len(f['checks'])}",
             "pass" if f["passed"] else "FAIL") for f in r["fixtures"]]
    w = max([len(n) for n, _, _ in rows] + [7])
    lines = [f"{'fixture'.ljust(w)}   checks  result"]
    for name, frac, res in rows:
        lines.append(f"{name.ljust(w)}  {frac.rjust(7)}  {res}")
    for f in r["fixtures"]:
        for c in f["checks"]:
            if not c["ok"]:
                lines.append(f"  {f['name']}: {c['label']} {c['detail']}".rstrip())
    lines.append(f"{r['passed']} passed, {r['failed']} failed")
    return "\n".join(lines)


# ---------------------------------------------------------------- commands


def _emit(report, as_json, formatter, out):
    out.write((dumps(report) if as_json else formatter(report)) + "\n")


def cmd_analyze_map(args, out=None, err=None):
    out, err = out or sys.stdout, err or sys.stderr
    try:
        text = read_source(args.source)
        report = map_report(text, args.tol)
    except ParseError as e:
        err.write(_error(e) + "\n")
        return EXIT_PARSE
    except DomainError as e:
        err.write(_error(e) + "\n")
        return EXIT_DOMAIN
    _emit(report, args.json, format_map_report, out)
    if report["size"] is None:
        err.write(diagnostic(DomainError.code, "size is defined only for right-regular maps") + "\n")
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_analyze_function(args, out=None, err=None):
    out, err = out or sys.stdout, err or sys.stderr
    try:
        text = read_source(args.source)
        box = parse_box(args.box) if args.box else DEFAULT_BOX
        if args.grid < 1:
            raise DomainError("--grid must be at least 1")
        path = read_points(args.path) if args.path else None
        report = function_report(text, box, args.grid, args.tol, path)
    except ParseError as e:
        err.write(_error(e) + "\n")
        return EXIT_PARSE
    except _WithReport as w:
        _emit(w.report, args.json, format_function_report, out)
        err.write(_error(w.error) + "\n")
        return EXIT_NOT_REGULAR if isinstance(w.error, NotRegularError) else EXIT_DOMAIN
    except (DomainError, OSError) as e:
        err.write(diagnostic(getattr(e, "code", "domain_error"), str(e)) + "\n")
        return EXIT_DOMAIN
    _emit(report, args.json, format_function_report, out)
    return EXIT_OK


def cmd_examples(args, out=None, err=None):
    out, err = out or sys.stdout, err or sys.stderr
    report = examples_report(args.filter)
    if not report["fixtures"]:
        err.write(diagnostic("warning", f"no fixture matches {args.filter!r}") + "\n")
    _emit(report, args.json, format_examples_report, out)
    return EXIT_OK if report["failed"] == 0 else EXIT_EXAMPLES_FAILED


def build_parser():
    p = argparse.ArgumentParser(prog="qfueter", description="Quaternionic size, complex structures and Fueter-regular functions.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        sp.add_argument("--tol", type=float, default=EPS_RANK, help="relative rank tolerance")

    m = sub.add_parser("analyze-map", help="analyze a real linear map")
    m.add_argument("source", help="map source text or a file containing it")
    common(m)
    m.set_defaults(func=cmd_analyze_map)

    f = sub.add_parser("analyze-function", help="classify a polynomial function on a box")
    f.add_argument("source", help="function source text or a file containing it")
    common(f)
    f.add_argument("--grid", type=int, default=5, help="samples per axis")
    f.add_argument("--box", help="x0min,x0max,x1min,x1max,x2min,x2max,x3min,x3max")
    f.add_argument("--path", help="file of points (one per line) for the structure field")
    f.set_defaults(func=cmd_analyze_function)

    e = sub.add_parser("examples", help="run the built-in example corpus")
    e.add_argument("filter", nargs="?", default=None, help="fixture name or tag")
    e.add_argument("--json", action="store_true", help="emit a JSON report")
    e.set_defaults(func=cmd_examples)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
