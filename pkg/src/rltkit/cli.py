"""Command-line interface: ``rltkit <command> ...``.

Exit status is 0 on success and nonzero on a failed check or bad input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import repfile
from .analysis import CLOSED_FORMS, block_stats, format_poly, minimal_polynomial, verify_closed_form
from .baumsweet import odd_terms, tm_predicate, tm_witness
from .bitnum import SumSpec
from .compiler import compile as compile_spec, fixtures, get_fixture, match_fixture, verify_fixture
from .linrep import MSD, equivalent, evaluate, minimize, reverse
from .repfile import RepFileError
from .rlt import LinearRecurrence, identify_rlt, normal_form, run_length_transform


class UsageError(Exception):
    pass


def parse_ints(text: str, count: int | None = None) -> list[int]:
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None
    if count is not None and len(vals) != count:
        raise UsageError(f"expected {count} integers, got {len(vals)} in {text!r}")
    return vals


def parse_range(text: str) -> range:
    """'LO..HI' (inclusive) or a single 'N'."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"malformed range {text!r}; use LO..HI or N") from None
    if lo < 0:
        raise UsageError(f"range must start at 0 or above, got {lo}")
    return range(lo, hi + 1)


def fmt(x) -> str:
    return repfile.encode_number(Fraction(x))


def emit_values(pairs, style: str, out=None) -> None:
    out = out or sys.stdout
    pairs = list(pairs)
    if style == "bfile":
        for n, val in pairs:
            out.write(f"{n} {fmt(val)}\n")
    elif style == "csv":
        wr = csv.writer(out, lineterminator="\n")
        wr.writerow(["n", "value"])
        for n, val in pairs:
            wr.writerow([n, fmt(val)])
    elif style == "json":
        json.dump([{"n": n, "value": fmt(val)} for n, val in pairs], out)
        out.write("\n")
    else:
        if pairs:
            out.write(",".join(fmt(val) for _, val in pairs) + "\n")


def _write_rep(R, path, provenance):
    if path in (None, "-"):
        sys.stdout.write(repfile.dumps(R, provenance))
    else:
        repfile.write(path, R, provenance)
        print(f"wrote rank-{R.rank} representation to {path}", file=sys.stderr)


def cmd_compile(args) -> int:
    try:
        spec = SumSpec(*parse_ints(args.a, 4)).check()
    except ValueError as e:
        raise UsageError(str(e)) from None
    R = compile_spec(spec, minimize=args.minimize)
    _write_rep(R, args.output, {"spec": [str(a) for a in spec], "minimized": args.minimize})
    return 0


def cmd_eval(args) -> int:
    R = repfile.read(args.rep)
    emit_values(((n, evaluate(R, n)) for n in parse_range(args.n)), args.format)
    return 0


def cmd_minimize(args) -> int:
    text = open(args.rep).read()
    R = repfile.loads(text)
    prov = dict(repfile.provenance_of(text))
    prov.pop("tool", None)
    prov["minimized"] = True
    _write_rep(minimize(R), args.output, prov)
    return 0


def cmd_equiv(args) -> int:
    same = equivalent(repfile.read(args.rep1), repfile.read(args.rep2))
    print("equivalent" if same else "not equivalent")
    return 0 if same else 1


def cmd_identify(args) -> int:
    R = repfile.read(args.rep)
    if R.order != MSD:
        R = reverse(R)
    rec = identify_rlt(R)
    if not rec:
        print(rec)
        return 1
    print(rec)
    print(f"order: {rec.order}")
    print("coefficients: " + ",".join(fmt(d) for d in rec.coefficients))
    print("initial: " + ",".join(fmt(c) for c in rec.initial))
    f = match_fixture(rec)
    print(f"fixture: {f.name} ({f.title})" if f else "fixture: none")
    return 0


def cmd_rlt_apply(args) -> int:
    rec = LinearRecurrence(parse_ints(args.d), parse_ints(args.init))
    if args.output:
        try:
            R = normal_form(rec)
        except ValueError as e:
            raise UsageError(str(e)) from None
        _write_rep(R, args.output, {"recurrence": str(rec)})
    if args.n:
        emit_values(((n, run_length_transform(rec, n)) for n in parse_range(args.n)), args.format)
    return 0


def cmd_average(args) -> int:
    R = repfile.read(args.rep)
    r_range = parse_range(args.r)
    stats = block_stats(R, r_range.stop - 1) if len(r_range) else []
    print("r\tg(r)\tmu(r)")
    for s in stats:
        if s.r in r_range:
            print(f"{s.r}\t{fmt(s.g_r)}\t{fmt(s.mu_r)}")
    print("minimal polynomial of M: " + format_poly(minimal_polynomial(R)))
    if not args.closed_form:
        return 0
    name = args.fixture
    if name is None:
        rec = identify_rlt(R)
        f = match_fixture(rec) if rec else None
        name = f.name if f else None
    formula = CLOSED_FORMS.get(name) if name else None
    report = verify_closed_form(R, r_max=args.r_max, tol=args.tol, formula=formula)
    label = f"closed form of {name}" if formula else "fitted exponential polynomial"
    if report.error:
        print(f"{label}: FAIL ({report.error})")
        return 1
    status = "pass" if report.passed else "FAIL"
    print(f"{label}, r <= {args.r_max}: {status} (max relative error {report.max_rel_error:.3g}, tol {args.tol:g})")
    return 0 if report.passed else 1


def cmd_baumsweet(args) -> int:
    m = args.m
    if m < 2:
        raise UsageError(f"m must be at least 2, got {m}")
    ns = parse_range(args.n)
    if not args.check:
        emit_values(((n, tm_predicate(m, n)) for n in ns), args.format)
        return 0
    bad = []
    for n in ns:
        ks = odd_terms(m, n)
        p = tm_predicate(m, n)
        ok = len(ks) == p and (not ks or ks[0] == tm_witness(m, n))
        if not ok:
            bad.append((n, len(ks), p))
    if bad:
        print(f"FAIL: {len(bad)} mismatches for m={m}; first (n, sum, predicate) = {bad[0]}")
        return 1
    print(f"pass: m={m}, n in {ns.start}..{ns.stop - 1}: sum = predicate, unique witness matches")
    return 0


def cmd_verify(args) -> int:
    if args.names:
        try:
            chosen = [get_fixture(n) for n in args.names]
        except KeyError as e:
            raise UsageError(e.args[0]) from None
    else:
        chosen = fixtures()
    reports = [verify_fixture(f, args.bound) for f in chosen]
    for rep in reports:
        print(rep)
    passed = sum(r.passed for r in reports)
    print(f"{passed}/{len(reports)} pass")
    return 0 if passed == len(reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rltkit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    formats = ["plain", "csv", "bfile", "json"]

    c = sub.add_parser("compile", help="compile a binomial sum to a linear representation")
    c.add_argument("--a", required=True, metavar="A1,A2,A3,A4")
    c.add_argument("--minimize", action="store_true")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_compile)

    c = sub.add_parser("eval", help="evaluate a representation")
    c.add_argument("rep")
    c.add_argument("--n", required=True, metavar="LO..HI")
    c.add_argument("--format", choices=formats, default="plain")
    c.set_defaults(func=cmd_eval)

    c = sub.add_parser("minimize", help="minimize a representation")
    c.add_argument("rep")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_minimize)

    c = sub.add_parser("equiv", help="decide whether two representations agree")
    c.add_argument("rep1")
    c.add_argument("rep2")
    c.set_defaults(func=cmd_equiv)

    c = sub.add_parser("identify", help="recover the recurrence behind a run length transform")
    c.add_argument("rep")
    c.set_defaults(func=cmd_identify)

    c = sub.add_parser("rlt-apply", help="run length transform of a linear recurrence")
    c.add_argument("--d", required=True, metavar="D0,...,DR", help="S(n+1) = d0 S(n) + ... + dr S(n-r)")
    c.add_argument("--init", required=True, metavar="S0,...,SR")
    c.add_argument("--n", metavar="LO..HI")
    c.add_argument("--format", choices=formats, default="plain")
    c.add_argument("-o", "--output", help="write the normal-form representation")
    c.set_defaults(func=cmd_rlt_apply)

    c = sub.add_parser("average", help="block sums and averages")
    c.add_argument("rep")
    c.add_argument("--r", default="0..10", metavar="LO..HI")
    c.add_argument("--closed-form", action="store_true")
    c.add_argument("--fixture", help="closed form to check against (default: identify)")
    c.add_argument("--r-max", type=int, default=20)
    c.add_argument("--tol", type=float, default=1e-9)
    c.set_defaults(func=cmd_average)

    c = sub.add_parser("baumsweet", help="generalized Baum-Sweet sequence T_m")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--n", default="0..31", metavar="LO..HI")
    c.add_argument("--check", action="store_true", help="cross-check sum, predicate and witness")
    c.add_argument("--format", choices=formats, default="plain")
    c.set_defaults(func=cmd_baumsweet)

    c = sub.add_parser("verify", help="verify the built-in fixtures")
    c.add_argument("names", nargs="*")
    c.add_argument("--bound", type=int, default=4096)
    c.set_defaults(func=cmd_verify)
    return p


_LIST_OPTIONS = ("--a", "--d", "--init")


def _glue_negative_lists(argv):
    # argparse would read "-1,7,1,1" as an option string
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _LIST_OPTIONS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and nxt[1:2].isdigit():
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative_lists(argv))
    try:
        return args.func(args)
    except (UsageError, RepFileError) as e:
        print(f"rltkit {args.command}: error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"rltkit {args.command}: error: {e}", file=sys.stderr)
        return 2
