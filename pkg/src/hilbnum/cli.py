"""Command-line front end: ``hilbnum <command> [options]``.

Exit status is 0 on success, 1 when a check fails or two methods disagree,
and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from hilbnum.engine import (
    METHODS,
    _nvars_of,
    build_lcm_lattice,
    convergence_run,
    cross_validate,
    koszul_complex,
    koszul_coefficient,
    numerator,
    verify_23gen_recursion,
)
from hilbnum.errors import HilbnumError
from hilbnum.ideal import (
    MonomialIdeal,
    char_series,
    ideal_stream,
    named_stream,
    parse_ideal_file,
    realize_stream,
    staircase_complement,
)
from hilbnum.macaulay import (
    UnivariateSeries,
    bjorner_kalai_check,
    classify_numerator,
    pcond_check,
)
from hilbnum.monomial import parse_monomial, parse_partition
from hilbnum.sampling import random_ideals, seed_from_env
from hilbnum.series import CollapsedSeries, GradedSeries, collapse

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load_ideal(source: str, cap: int) -> MonomialIdeal:
    """A file path wins over a stream name of the same spelling."""
    path = Path(source)
    if path.is_file():
        return parse_ideal_file(path)
    try:
        stream = named_stream(source)
    except KeyError:
        raise UsageError(f"{source!r} is neither a readable file nor a known stream") from None
    return realize_stream(stream, max(cap, 1))


def _load_stream(source: str, cap: int):
    path = Path(source)
    if path.is_file():
        return ideal_stream(parse_ideal_file(path), path.name)
    try:
        return named_stream(source)
    except KeyError:
        raise UsageError(f"{source!r} is neither a readable file nor a known stream") from None


def _emit(args, text: str, payload) -> None:
    if args.output == "json":
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def _maybe_collapse(args, f: GradedSeries):
    if args.collapse is None:
        return f
    return collapse(f, parse_partition(args.collapse))


def _need_ideal(args) -> MonomialIdeal:
    if args.ideal is None:
        raise UsageError("--ideal is required")
    return _load_ideal(args.ideal, args.cap)


def cmd_numerator(args) -> int:
    ideal = _need_ideal(args)
    if args.method == "all":
        n = args.nvars or _nvars_of(ideal)
        results, mismatch = cross_validate(ideal, args.cap, n)
        if mismatch is not None:
            print(json.dumps({"error": "mismatch", **mismatch.to_dict()}), file=sys.stderr)
            return FAILED
        p = results[METHODS[0]]
    else:
        p = numerator(ideal, args.cap, args.method, args.nvars)
    out = _maybe_collapse(args, p)
    _emit(args, str(out), out.to_dict())
    return OK


def cmd_series(args) -> int:
    ideal = _need_ideal(args)
    n = args.nvars or _nvars_of(ideal)
    chi = _maybe_collapse(args, char_series(ideal, n, args.cap))
    q = _maybe_collapse(args, staircase_complement(ideal, n, args.cap))
    _emit(args, f"chi: {chi}\nq: {q}", {"nvars": n, "chi": chi.to_dict(), "q": q.to_dict()})
    return OK


def cmd_lattice(args) -> int:
    ideal = _need_ideal(args)
    lattice = build_lcm_lattice(ideal, args.cap)
    rows = [(str(m), lattice.mobius[m]) for m in lattice.elements]
    text = "\n".join(f"{m}\t{v}" for m, v in rows)
    _emit(args, text, {"cap": args.cap,
                       "elements": [{"monomial": m, "mobius": v} for m, v in rows]})
    return OK


def cmd_koszul(args) -> int:
    ideal = _need_ideal(args)
    if args.monomial is None:
        raise UsageError("koszul needs --monomial")
    m = parse_monomial(args.monomial)
    cx = koszul_complex(ideal, m)
    chi = cx.reduced_euler()
    coeff = koszul_coefficient(ideal, m)
    faces = ["{" + ",".join(f"x{i}" for i in f) + "}" for f in cx.faces]
    text = (f"monomial: {m}\nfaces: {' '.join(faces) if faces else '(none)'}\n"
            f"reduced euler characteristic: {chi}\ncoefficient: {coeff}")
    _emit(args, text, {"monomial": str(m), "faces": [list(f) for f in cx.faces],
                       "reduced_euler": chi, "coefficient": coeff})
    return OK


def cmd_converge(args) -> int:
    source = args.stream or args.ideal
    if source is None:
        raise UsageError("converge needs --stream or --ideal")
    stream = _load_stream(source, args.cap)
    y = parse_partition(args.collapse or "total")
    run = convergence_run(stream, y, args.nmax, args.cap)
    stable = run.stabilized()
    status = OK
    recursion = None
    if stream.name == "example-23gen" and args.nmax >= 2:
        recursion = verify_23gen_recursion(args.nmax, args.cap)
        if not recursion:
            status = FAILED
    lines = [f"g_{n}: {g}" for n, g in run.series]
    lines.append(f"stabilized through degree {run.stabilized_prefix}: {stable}")
    if recursion is not None:
        lines.append(f"recursion check: {'pass' if recursion else 'FAIL'}")
    payload = {"stream": stream.name, "cap": args.cap,
               "series": [{"n": n, "g": g.to_dict()} for n, g in run.series],
               "stabilized_prefix": run.stabilized_prefix,
               "stabilized": stable.to_dict(),
               "recursion": recursion}
    _emit(args, "\n".join(lines), payload)
    return status


def _univariate_input(args) -> UnivariateSeries:
    if args.series is not None:
        return UnivariateSeries.parse(args.series)
    if args.series_file is not None:
        data = json.loads(Path(args.series_file).read_text(encoding="utf-8"))
        s = CollapsedSeries.from_dict(data)
        if s.r != 1:
            raise UsageError("classify needs a series in one variable (r = 1)")
        return UnivariateSeries.from_collapsed(s)
    if args.ideal is not None:
        p = numerator(_load_ideal(args.ideal, args.cap), args.cap)
        return UnivariateSeries.from_collapsed(collapse(p, parse_partition("total")))
    raise UsageError("classify needs --series, --series-file or --ideal")


def cmd_classify(args) -> int:
    f = _univariate_input(args)
    if f.coeffs[0] != 1:
        raise UsageError("a numerator must have constant term 1")
    result = classify_numerator(f, args.bmax)
    payload = {"cap": result.cap, "certified": result.certified,
               "certificates": [{"a": a, "b": b} for a, b in result.certificates],
               "degenerate": list(result.degenerate)}
    _emit(args, f"{result} (through degree {result.cap})", payload)
    return OK if result.certified or result.degenerate else FAILED


def _graded_input(args) -> GradedSeries:
    if args.series_file is not None:
        return GradedSeries.from_json(Path(args.series_file).read_text(encoding="utf-8"))
    if args.series is not None:
        return GradedSeries.parse(args.series, args.cap)
    if args.ideal is not None:
        return numerator(_load_ideal(args.ideal, args.cap), args.cap)
    raise UsageError("check needs --series-file, --series or --ideal")


def cmd_check(args) -> int:
    p = _graded_input(args)
    pc, bk = pcond_check(p), bjorner_kalai_check(p)
    verdict = {True: "pass", False: "FAIL"}
    _emit(args, f"pcond: {verdict[pc]}\nbjorner-kalai: {verdict[bk]}",
          {"pcond": pc, "bjorner_kalai": bk})
    return OK if pc and bk else FAILED


def cmd_selftest(args) -> int:
    seed = seed_from_env()
    ideals = random_ideals(args.count, seed=seed)
    for k, ideal in enumerate(ideals):
        _, mismatch = cross_validate(ideal, args.cap, 5)
        if mismatch is not None:
            print(json.dumps({"error": "mismatch", "seed": seed, "case": k,
                              "ideal": [str(g) for g in ideal.gens], **mismatch.to_dict()}),
                  file=sys.stderr)
            return FAILED
    _emit(args, f"seed {seed}: {len(ideals)} random ideals, all methods agree",
          {"seed": seed, "count": len(ideals), "ok": True})
    return OK


COMMANDS = {
    "numerator": cmd_numerator,
    "series": cmd_series,
    "lattice": cmd_lattice,
    "koszul": cmd_koszul,
    "converge": cmd_converge,
    "classify": cmd_classify,
    "check": cmd_check,
    "selftest": cmd_selftest,
}


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbnum", description="Hilbert numerators of monomial ideals.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ideal", help="ideal file, or a stream: example-23gen, empty, powers:d1,d2,...")
    common.add_argument("--cap", type=_non_negative, default=10, help="total-degree cap (default 10)")
    common.add_argument("--nvars", type=_positive, help="number of variables for truncating methods")
    common.add_argument("--collapse", metavar="PARTITION",
                        help="'total' or 'r=R;default=C;C:i,j;...'")
    common.add_argument("--output", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("numerator", parents=[common], help="Hilbert numerator p(I)")
    p.add_argument("--method", choices=METHODS + ("all",), default="incl-excl")
    sub.add_parser("series", parents=[common], help="characteristic series and Hilbert series")
    sub.add_parser("lattice", parents=[common], help="lcm lattice with Moebius values")
    p = sub.add_parser("koszul", parents=[common], help="Koszul complex of one monomial")
    p.add_argument("--monomial", required=True)
    p = sub.add_parser("converge", parents=[common], help="collapsed numerators as n grows")
    p.add_argument("--stream")
    p.add_argument("--nmax", type=_positive, default=6)
    for name, helptext in (("classify", "certify a univariate numerator"),
                           ("check", "numerator sanity checks on a series")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--series", help="classify: '1,-1,0,2'; check: '1 - x1*x2'")
        p.add_argument("--series-file", help="series JSON file")
        if name == "classify":
            p.add_argument("--bmax", type=_positive, default=6)
    p = sub.add_parser("selftest", parents=[common], help="cross-validate random ideals")
    p.add_argument("--count", type=_positive, default=20)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s",
                        stream=sys.stderr)
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, HilbnumError, ValueError, OSError, KeyError) as exc:
        print(f"hilbnum: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
