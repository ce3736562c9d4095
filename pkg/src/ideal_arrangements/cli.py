"""Command-line front end: ``ideal-arrangements <verb> --type F4 ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 a budget ran out.
"""
import argparse
import hashlib
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import freecert
from .arrangement import DEFAULT_FLAT_BUDGET, LatticeBudgetError
from .idealtype import (arrangement_of_ideal_type, classification_counts,
                        classification_record, height_table, table_counts_by_height)
from .ideals import (Ideal, all_ideal_masks, count_ideals, enumerate_ideals,
                     ideal_exponents, parse_ideal)
from .poincare import factorization_check, poincare_poly
from .rootsys import DEFAULT_WEYL_CAP, WeylBudgetError, build_root_system

CACHE_ENV = "IDEAL_ARRANGEMENTS_CACHE"

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

HEIGHT_TABLES = {"T4": 3, "T5": 4, "T6": 5, "T7": 6}


class UsageError(Exception):
    pass


def _root_system(name):
    try:
        return build_root_system(name)
    except ValueError as e:
        raise UsageError(f"--type {name}: {e}") from None


def _ideal(rs, spec):
    try:
        return parse_ideal(rs, spec)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _emit(out, fmt, record, text, tsv=None):
    if fmt == "json":
        out.write(json.dumps(record, sort_keys=True) + "\n")
    elif fmt == "tsv":
        out.write((tsv if tsv is not None else text) + "\n")
    else:
        out.write(text + "\n")


def _csv(xs):
    return ",".join(str(x) for x in xs)


# certificate cache

def _cache_path(verb, rs, ideal, budget):
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    key = json.dumps([verb, rs.name, ideal.members, budget])
    return Path(root) / (hashlib.sha256(key.encode()).hexdigest() + ".json")


def _cached_verdict(verb, rs, ideal, budget, compute):
    path = _cache_path(verb, rs, ideal, budget)
    if path is not None and path.exists():
        d = json.loads(path.read_text())
        return freecert.Verdict(d["status"], d["certificate"], d["exponents"])
    v = compute()
    if path is not None and v.status != "unknown":
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(v._asdict(), sort_keys=True))
    return v


# verbs

def cmd_roots(args, out):
    rs = _root_system(args.type)
    if args.format == "json":
        _emit(out, "json", [{"root": rs.format_root(k), "coeffs": list(r.simple_coeffs),
                             "coords": list(r.coords), "height": r.height}
                            for k, r in enumerate(rs.positive_roots)], "")
    else:
        out.write(rs.dump() + "\n")
    return EXIT_OK


def _ideal_filter(args):
    if args.within is not None:
        return "contained_in_It", args.within
    return ("strictly_positive" if args.strictly_positive else "all"), None


def cmd_ideals(args, out):
    rs = _root_system(args.type)
    filt, t = _ideal_filter(args)
    if args.count:
        n = count_ideals(rs, filt, t)
        _emit(out, args.format, {"type": rs.name, "filter": filt, "t": t, "count": n}, str(n))
        return EXIT_OK
    ideals = list(enumerate_ideals(rs, filt, t))
    if args.format == "json":
        _emit(out, "json", [I.generator_strings() for I in ideals], "")
    else:
        for I in ideals:
            out.write(I.serialize() + "\n")
    return EXIT_OK


def cmd_exponents(args, out):
    rs = _root_system(args.type)
    I = _ideal(rs, args.ideal)
    ex = ideal_exponents(I)
    _emit(out, args.format, {"type": rs.name, "ideal": I.generator_strings(),
                             "exponents": ex.values, "s": ex.s},
          _csv(ex.values))
    return EXIT_OK


def _classify_chunk(job):
    name, masks = job
    rs = build_root_system(name)
    return [classification_record(rs, Ideal(rs, m)) for m in masks]


def _classify_all(rs, jobs):
    masks = all_ideal_masks(rs)
    if jobs <= 1:
        return _classify_chunk((rs.name, masks))
    size = max(1, len(masks) // (4 * jobs))
    chunks = [(rs.name, masks[i:i + size]) for i in range(0, len(masks), size)]
    with ProcessPoolExecutor(jobs) as pool:
        return [rec for part in pool.map(_classify_chunk, chunks) for rec in part]


def _record_line(rec):
    bnd = "" if rec["boundary"] is None else " ".join(rec["boundary"])
    return "\t".join(["[" + ",".join(rec["ideal"]) + "]", rec["tag"],
                      rec["phi0"] or "-", bnd or "-", _csv(rec["exponents"])])


def cmd_classify(args, out):
    rs = _root_system(args.type)
    if args.ideal is not None:
        recs = [classification_record(rs, _ideal(rs, args.ideal))]
    else:
        recs = _classify_all(rs, args.jobs)
    if args.format == "json":
        payload = recs[0] if args.ideal is not None else recs
        _emit(out, "json", payload, "")
    else:
        for rec in recs:
            out.write(_record_line(rec) + "\n")
    return EXIT_OK


SEARCHES = {
    "free-cert": lambda arr, args: freecert.inductively_free(arr, args.node_budget),
    "supersolvable": lambda arr, args: freecert.supersolvable(arr, args.flat_budget),
    "factored": lambda arr, args: freecert.inductively_factored(arr, args.node_budget),
}
SEARCH_HELP = {
    "free-cert": "induction table, if inductively free",
    "supersolvable": "chain of modular flats, if supersolvable",
    "factored": "factorization table, if inductively factored",
}


def cmd_search(args, out):
    rs = _root_system(args.type)
    I = _ideal(rs, args.ideal)
    arr = arrangement_of_ideal_type(rs, I)
    v = _cached_verdict(args.verb, rs, I, args.node_budget,
                        lambda: SEARCHES[args.verb](arr, args))
    rec = {"type": rs.name, "ideal": I.generator_strings(), "status": v.status,
           "exponents": v.exponents, "certificate": v.certificate}
    if args.out:
        Path(args.out).write_text(json.dumps(rec, sort_keys=True) + "\n")
    exps = "-" if v.exponents is None else _csv(v.exponents)
    _emit(out, args.format, rec, f"{v.status} exponents={exps}", f"{v.status}\t{exps}")
    return EXIT_BUDGET if v.status == "unknown" else EXIT_OK


def cmd_verify(args, out):
    try:
        with open(args.path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read certificate {args.path}: {e}") from None
    cert = data.get("certificate", data) if isinstance(data, dict) else None
    if not isinstance(cert, dict):
        raise UsageError(f"{args.path} holds no certificate")
    try:
        freecert.verify_certificate(cert)
    except (freecert.CertificateError, KeyError, TypeError, ValueError) as e:
        _emit(out, args.format, {"valid": False, "reason": str(e)}, f"invalid: {e}")
        return EXIT_FAILED
    _emit(out, args.format, {"valid": True, "kind": cert["kind"],
                             "exponents": cert["exponents"]}, f"valid {cert['kind']}")
    return EXIT_OK


def cmd_poincare(args, out):
    rs = _root_system(args.type)
    I = _ideal(rs, args.ideal)
    if args.check_factorization:
        fc = factorization_check(rs, I, args.weyl_cap)
        rec = {"poly": fc.lhs, "exponents": fc.rhs_exponents.values, "holds": fc.holds}
        _emit(out, args.format, rec,
              f"{_csv(fc.lhs)}\nexponents: {_csv(rec['exponents'])}\nholds: {fc.holds}")
        return EXIT_OK if fc.holds else EXIT_FAILED
    poly = poincare_poly(rs, I, args.weyl_cap)
    _emit(out, args.format, {"poly": poly}, _csv(poly))
    return EXIT_OK


def cmd_tables(args, out):
    rs = _root_system(args.type)
    which = args.which.upper()
    if which == "T1":
        c = classification_counts(rs)
        _emit(out, args.format, c, f"all: {c['all']}, classified: {c['classified']}",
              f"{c['all']}\t{c['classified']}")
    elif which == "T3":
        counts = table_counts_by_height(rs)
        if args.format == "json":
            _emit(out, "json", {"type": rs.name, "counts": {str(t): n for t, n in counts.items()}}, "")
        else:
            for t, n in counts.items():
                out.write(f"I{t}\t{n}\n")
    elif which in HEIGHT_TABLES:
        rows = height_table(rs, HEIGHT_TABLES[which])
        if args.format == "json":
            _emit(out, "json", [{"beta": b, "witnesses": [{"phi0": p, "boundary": bd} for p, bd in ws]}
                                for b, ws in rows], "")
        else:
            for b, ws in rows:
                if not ws:
                    out.write(f"{b}\tx\n")
                for p, bd in ws:
                    out.write(f"{b}\t{p}\t{' '.join(bd)}\n")
    else:
        raise UsageError(f"unknown table {args.which!r}; choose T1, T3, T4, T5, T6 or T7")
    return EXIT_OK


# argument parsing

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"budget must be positive: {text!r}")
    return v


def build_parser():
    p = _Parser(prog="ideal-arrangements",
                description="Root posets, ideal-type arrangements and their certificates.")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "tsv"], default="text")
    common.add_argument("--json", dest="format", action="store_const", const="json")
    common.add_argument("--flat-budget", type=_positive, default=DEFAULT_FLAT_BUDGET)
    common.add_argument("--weyl-cap", type=_positive, default=DEFAULT_WEYL_CAP)
    common.add_argument("--node-budget", type=_positive, default=freecert.DEFAULT_NODE_BUDGET)
    common.add_argument("--jobs", type=_positive, default=1)
    typed = _Parser(add_help=False, parents=[common])
    typed.add_argument("--type", required=True, help="e.g. A4, D5, F4, E8")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    sub.add_parser("roots", parents=[typed], help="list positive roots")
    s = sub.add_parser("ideals", parents=[typed], help="count or list ideals")
    s.add_argument("--count", action="store_true")
    s.add_argument("--strictly-positive", action="store_true")
    s.add_argument("--within", type=_positive, metavar="T", help="only ideals inside I_T")
    s = sub.add_parser("exponents", parents=[typed], help="exponents of one ideal")
    s.add_argument("--ideal", required=True)
    s = sub.add_parser("classify", parents=[typed], help="tag one ideal, or all of them")
    s.add_argument("--ideal")
    for verb in SEARCHES:
        s = sub.add_parser(verb, parents=[typed], help=SEARCH_HELP[verb])
        s.add_argument("--ideal", required=True)
        s.add_argument("--out", help="also write the JSON record here")
    s = sub.add_parser("verify-cert", parents=[common], help="replay a certificate file")
    s.add_argument("path")
    s = sub.add_parser("poincare", parents=[typed], help="region polynomial of one ideal")
    s.add_argument("--ideal", required=True)
    s.add_argument("--check-factorization", action="store_true")
    s = sub.add_parser("tables", parents=[typed], help="T1, T3 or height tables T4-T7")
    s.add_argument("--which", required=True)
    return p


COMMANDS = {"roots": cmd_roots, "ideals": cmd_ideals, "exponents": cmd_exponents,
            "classify": cmd_classify, "free-cert": cmd_search, "supersolvable": cmd_search,
            "factored": cmd_search, "verify-cert": cmd_verify, "poincare": cmd_poincare,
            "tables": cmd_tables}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.verb](args, out)
    except UsageError as e:
        err.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except (WeylBudgetError, LatticeBudgetError, freecert.SearchBudgetExceeded) as e:
        err.write(f"budget exhausted: {e}\n")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
