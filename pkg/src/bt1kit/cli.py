"""Command line interface: ``bt1kit {eo, classify, verify, sweep, tables}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import fermat as fm
from . import verify
from .canonical import canonical_to_perm, gamma_data, words_to_canonical
from .eo import ElementarySequence, es_from_canonical
from .errors import BT1Error
from .invariants import invariants
from .permdata import is_admissible
from .tables import golden_rows
from .words import parse_multiset

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
SWEEP_FIELDS = ("p", "d", "ell", "genus", "p_rank", "a_number", "s11", "u11", "sel_dim", "eo_rle", "words")


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def _emit(obj: dict, lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print("\n".join(lines))


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


# eo ---------------------------------------------------------------------------

def fermat_report(p: int, d: int, full: bool = False, orientation: str = fm.FORWARD) -> dict:
    variant = fm.FERMAT if full else fm.QUOTIENT
    spec = fm.build_spec(p, d, variant, orientation)
    report = {"p": p, "d": d, "ell": spec.ell, "genus": spec.genus, "variant": variant, "orientation": orientation}
    if spec.rational:
        report.update(es=ElementarySequence(()).to_dict(), words="", canonical=None, invariants=None)
        return report
    m = fm.word_multiset(spec)
    ct, _ = words_to_canonical(m)
    es = es_from_canonical(ct)
    inv = invariants(m)
    report.update(es=es.to_dict(), eo_unicode=es.rle().unicode(), words=str(m),
                  canonical=ct.to_dict(), invariants=inv.to_dict(),
                  ordinary=inv.ordinary, superspecial=inv.superspecial)
    if not full:
        rle, _ = fm.eo_type(spec)
        report["pattern_eo"] = rle.ascii()
    return report


def cmd_eo(args: argparse.Namespace) -> int:
    report = fermat_report(args.p, args.d, args.full_fermat, args.orientation)
    if report["canonical"] is None:
        _warn(f"d={args.d} gives a rational curve (genus 0); nothing to report")
    lines = [f"p={report['p']} d={report['d']} ell={report['ell']} genus={report['genus']} ({report['variant']})"]
    if report["canonical"] is not None:
        inv = report["invariants"]
        es = report["es"]
        lines += [
            f"psi: {es['psi']}",
            f"eo: {es['rle']}  {report['eo_unicode']}",
            f"words: {report['words']}",
            "canonical: s={s} r={r} phi={phi} nu={nu} rho={rho}".format(**report["canonical"]),
            "invariants: p_rank={p_rank} a={a} s11={s11} u11={u11} sel_dim={sel_dim}".format(**inv),
        ]
        if report["ordinary"]:
            lines.append("ordinary")
        if report["superspecial"]:
            lines.append("superspecial")
    else:
        lines.append("psi: []")
    _emit(report, lines, args.format)
    return EXIT_OK


# classify -----------------------------------------------------------------------

def cmd_classify(args: argparse.Namespace) -> int:
    m = parse_multiset(args.words)
    ct, omega = words_to_canonical(m)
    gd = gamma_data(ct)
    perm = canonical_to_perm(ct)
    report: dict = {
        "words": str(m),
        "dimension": m.dimension,
        "canonical": ct.to_dict(),
        "blocks": list(omega),
        "Pi": [list(c) for c in gd.cycles()],
        "gamma_f": sorted(gd.gamma_f),
        "admissible": is_admissible(perm),
        "self_dual": m.is_self_dual(),
        "es": None,
        "invariants": None,
    }
    lines = [f"words: {m}", f"canonical: {ct}", f"blocks: {','.join(omega)}",
             f"Pi: {''.join('(' + ','.join(map(str, c)) + ')' for c in gd.cycles())}  Gamma_f={sorted(gd.gamma_f)}",
             f"admissible: {report['admissible']}", f"self-dual: {report['self_dual']}"]
    if report["self_dual"]:
        es = es_from_canonical(ct)
        report["es"] = es.to_dict()
        lines.append(f"es: {es}  {es.rle().unicode()}")
    else:
        _warn("multiset is not self-dual; elementary sequence omitted")
    if m.primitive:
        inv = invariants(m)
        report["invariants"] = inv.to_dict()
        lines.append("invariants: p_rank={p_rank} a={a} s11={s11} u11={u11} sel_dim={sel_dim}".format(**inv.to_dict()))
    else:
        _warn("multiset has non-primitive words; invariants omitted")
    _emit(report, lines, args.format)
    return EXIT_OK


# verify -------------------------------------------------------------------------

def cmd_verify(args: argparse.Namespace) -> int:
    name = args.suite
    if name not in verify.SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(verify.SUITES)}")
    kwargs: dict = {}
    if name == "tables" and args.gmax is not None:
        kwargs["gmax"] = args.gmax
    if name == "oracle" and args.max_len is not None:
        kwargs["max_len"] = args.max_len
    if name in ("fermat", "anumber", "ordinary", "encompassing", "hermitian"):
        if args.p is not None:
            kwargs["p_list"] = args.p
    if name in ("fermat", "anumber", "ordinary", "p2") and args.d_max is not None:
        kwargs["d_max"] = args.d_max
    if name in ("encompassing", "hermitian") and args.lmax is not None:
        kwargs["lmax"] = args.lmax
    if name == "duality":
        if args.samples is not None:
            kwargs["samples"] = args.samples
        kwargs["seed"] = args.seed
    if name == "es" and args.gmax is not None:
        kwargs["gmax"] = args.gmax
    if name == "p2":
        kwargs["orientation"] = args.orientation
    res = verify.SUITES[name](**kwargs)
    if args.format == "json":
        print(json.dumps({"suite": name, "ok": res.ok, "checks": res.checks,
                          "failures": len(res.failures), "first_counterexample": res.failures[0] if res.failures else None,
                          "notes": res.notes}, sort_keys=True))
    else:
        print(res.summary())
    return EXIT_OK if res.ok else EXIT_FAIL


# sweep --------------------------------------------------------------------------

def sweep_row(pd: tuple[int, int]) -> dict:
    p, d = pd
    spec = fm.build_spec(p, d)
    rle, _ = fm.eo_type(spec)
    m = fm.word_multiset(spec)
    inv = invariants(m)
    return {"p": p, "d": d, "ell": spec.ell, "genus": spec.genus, "p_rank": inv.p_rank, "a_number": inv.a,
            "s11": inv.s11, "u11": inv.u11, "sel_dim": inv.sel_dim, "eo_rle": rle.ascii(), "words": str(m)}


def sweep_pairs(p_list: list[int], d_max: int, d_min: int = 3) -> list[tuple[int, int]]:
    return sorted((p, d) for p in set(p_list) for d in range(max(d_min, 3), d_max + 1) if d % p)


def default_jobs() -> int:
    env = os.environ.get("BT1KIT_JOBS")
    if env:
        try:
            jobs = int(env)
        except ValueError:
            raise UsageError(f"BT1KIT_JOBS must be an integer, got {env!r}") from None
        if jobs < 1:
            raise UsageError("BT1KIT_JOBS must be positive")
        return jobs
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else os.cpu_count() or 1


def run_sweep(p_list: list[int], d_max: int, jobs: int = 1, d_min: int = 3) -> list[dict]:
    """Rows in (p, d) order whatever the number of workers."""
    for p in p_list:
        fm.build_spec(p, 1)
    pairs = sweep_pairs(p_list, d_max, d_min)
    if jobs <= 1 or len(pairs) < 2:
        return [sweep_row(pd) for pd in pairs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(sweep_row, pairs, chunksize=max(1, len(pairs) // (4 * jobs))))


def format_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SWEEP_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def cmd_sweep(args: argparse.Namespace) -> int:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be positive")
    rows = run_sweep(args.p_list, args.d_max, jobs, args.d_min)
    text = format_rows(rows, "json" if args.format == "json" else "csv")
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    return EXIT_OK


# tables -------------------------------------------------------------------------

def cmd_tables(args: argparse.Namespace) -> int:
    rows = golden_rows(args.gmax)
    if args.format == "json":
        print(json.dumps([{"g": r.g, "psi": list(r.psi), "words": r.words, "p_rank": r.p_rank, "a": r.a,
                           "s11": r.s11, "u11": r.u11, "derived": r.derived} for r in rows], sort_keys=True))
        return EXIT_OK
    print(f"{'psi':<12} {'words':<18} f  a  s11 u11")
    for r in rows:
        psi = "[" + ",".join(map(str, r.psi)) + "]"
        print(f"{psi:<12} {r.words:<18} {r.p_rank:<2} {r.a:<2} {r.s11:<3} {r.u11}{'  *' if r.derived else ''}")
    return EXIT_OK


# entry point ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bt1kit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_eo = sub.add_parser("eo", help="EO type and invariants of y^d = x(1 - x) or of the Fermat curve")
    p_eo.add_argument("--p", type=int, required=True)
    p_eo.add_argument("--d", type=int, required=True)
    p_eo.add_argument("--full-fermat", action="store_true", help="use the Fermat curve x^d + y^d = 1")
    p_eo.add_argument("--orientation", choices=(fm.FORWARD, fm.INVERSE), default=fm.FORWARD)
    fmt(p_eo)
    p_eo.set_defaults(func=cmd_eo)

    p_cl = sub.add_parser("classify", help="canonical type, ES and invariants of a word multiset")
    p_cl.add_argument("--words", required=True, help='e.g. "fv,ffvv" or "fv^3"')
    fmt(p_cl)
    p_cl.set_defaults(func=cmd_classify)

    p_ve = sub.add_parser("verify", help="run a self-check suite")
    p_ve.add_argument("--suite", required=True)
    p_ve.add_argument("--max-len", type=int)
    p_ve.add_argument("--p", type=_int_list, help="prime or comma separated primes")
    p_ve.add_argument("--d-max", type=int)
    p_ve.add_argument("--lmax", type=int)
    p_ve.add_argument("--gmax", type=int)
    p_ve.add_argument("--samples", type=int)
    p_ve.add_argument("--seed", type=int, default=0)
    p_ve.add_argument("--orientation", choices=(fm.FORWARD, fm.INVERSE), default=fm.FORWARD)
    fmt(p_ve)
    p_ve.set_defaults(func=cmd_verify)

    p_sw = sub.add_parser("sweep", help="one row per (p, d)")
    p_sw.add_argument("--p-list", type=_int_list, required=True)
    p_sw.add_argument("--d-max", type=int, required=True)
    p_sw.add_argument("--d-min", type=int, default=3)
    p_sw.add_argument("--out", required=True)
    p_sw.add_argument("--jobs", type=int)
    p_sw.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sw.set_defaults(func=cmd_sweep)

    p_ta = sub.add_parser("tables", help="reference rows for genus 1 to 4")
    p_ta.add_argument("--gmax", type=int, default=4, choices=(1, 2, 3, 4))
    fmt(p_ta)
    p_ta.set_defaults(func=cmd_tables)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BT1Error, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
