"""Batch command line: ``semigb gb | hilbert | verify | estimate``.

Reports are JSON on stdout (``--pretty`` prints tables instead).  Exit codes:
0 pass, 1 a check failed, 2 precondition or cap, 3 malformed input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .buchberger import EngineOptions, buchberger, dehomogenize_gb
from .errors import (
    CapExceeded, GenerationFailed, InvalidDegree, InvalidExponent, NotPrime,
    NotReached, ParseError, PreconditionUnverified, SemigbError, TimeoutDegree,
)
from .f5 import f5_gb
from .macaulay import complexity_estimate, macaulay_gb
from .polyring import PolyRing, PolySequence, format_polynomial
from .series import (
    INFINITE, degree_of_regularity, homogenized_prefix, macaulay_bound, semiregular_series,
)
from .verify import (
    CHECKS, InstanceSpec, random_affine_sequence, verify_all, verify_golden,
    verify_quadratic_dreg_table,
)

EXIT_OK, EXIT_FAIL, EXIT_PRECONDITION, EXIT_INPUT = 0, 1, 2, 3

ENGINES = ("buchberger", "f5", "macaulay")
# "paper-example" is kept as an alias of the stored worked example
GOLDEN_NAMES = ("worked-example", "paper-example")


def _num(x):
    return "Infinite" if x == INFINITE else x


# ---------------------------------------------------------------------------
# system files


def parse_system(text: str) -> PolySequence:
    """Header lines ``key = value`` (p, n, optional ``homogeneous``), then one
    polynomial per line.  ``#`` starts a comment."""
    header = {}
    polys = []
    ring = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "=" in line:
            if ring is not None:
                raise ParseError("header line after the first polynomial", lineno,
                                 line.index("=") + 1)
            key, _, value = line.partition("=")
            key = key.strip().lower()
            if key not in ("p", "n", "homogeneous"):
                raise ParseError(f"unknown header key {key!r}", lineno, 1)
            header[key] = value.strip()
            continue
        if ring is None:
            for key in ("p", "n"):
                if key not in header:
                    raise ParseError(f"header is missing '{key} = ...'", lineno, 1)
            try:
                p, n = int(header["p"]), int(header["n"])
            except ValueError as exc:
                raise ParseError(f"p and n must be integers: {exc}", lineno, 1) from None
            hom = header.get("homogeneous", "false").lower() in ("1", "true", "yes")
            ring = PolyRing(p, n, hom_var=hom)
        polys.append(ring.parse(line, line=lineno))
    if not polys:
        raise ParseError("no polynomials in file", None, None)
    return PolySequence(tuple(polys))


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def parse_spec(text: str, seed: int) -> InstanceSpec:
    """``p=73,n=3,m=4,d=2``; ``d`` is one degree or a ``/``-separated list."""
    fields = {}
    for part in text.split(","):
        key, sep, value = part.partition("=")
        if not sep:
            raise ParseError(f"spec item {part!r} is not key=value")
        fields[key.strip()] = value.strip()
    try:
        p, n, m = int(fields["p"]), int(fields["n"]), int(fields["m"])
        degs = [int(x) for x in fields.get("d", "2").split("/")]
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad spec {text!r}: {exc}") from None
    if len(degs) == 1:
        degs = degs * m
    return InstanceSpec(p, n, m, tuple(degs), seed)


# ---------------------------------------------------------------------------
# commands


def _run_engine(name, F, opts):
    t = time.perf_counter()
    if name == "buchberger":
        G, sd = buchberger(F, opts), None
    elif name == "f5":
        G, sd = f5_gb(F, opts), None
    else:
        G, sd = macaulay_gb(F, opts.max_degree)
    return G, sd, time.perf_counter() - t


def cmd_gb(args):
    F = parse_system(_read(args.input))
    opts = EngineOptions(max_degree=args.max_degree)
    out = {"command": "gb", "engine": args.engine,
           "ring": {"p": F.ring.p, "n": F.ring.n, "homogeneous_variable": F.ring.hom_var},
           "input": [format_polynomial(f) for f in F]}
    if args.homogenize:
        Fh = F.homogenize()
        Gh, sd, secs = _run_engine(args.engine, Fh, opts)
        G = dehomogenize_gb(Gh)
        out["gb_hom"] = [format_polynomial(g) for g in Gh]
    else:
        G, sd, secs = _run_engine(args.engine, F, opts)
        Gh = G
    out["gb"] = [format_polynomial(g) for g in G]
    out["leading_monomials"] = [list(g.LM) for g in G]
    out["max_degree"] = G.max_degree()
    out["solving_degree"] = sd if sd is not None else Gh.log.highest_step_degree
    out["step_log"] = Gh.log.to_dict()
    out["timings"] = {"seconds": round(secs, 6)}
    return out, EXIT_OK


def cmd_hilbert(args):
    degrees = tuple(args.degrees)
    s = semiregular_series(args.n, degrees, args.precision)
    D = degree_of_regularity(args.n, degrees)
    out = {"command": "hilbert", "n": args.n, "degrees": list(degrees),
           "hs_top": list(s.coeffs),
           "truncation": "ByBracket" if s.truncation == "bracket" else "ByPrecision",
           "D": _num(D),
           "hs_hom_prefix": list(homogenized_prefix(args.n, degrees).coeffs)
           if D != INFINITE else None}
    return out, EXIT_OK


def _verify_one(spec, checks):
    F = random_affine_sequence(spec)
    return verify_all(F, checks, spec=spec).to_dict()


def cmd_verify(args):
    checks = CHECKS if args.checks == "all" else tuple(c.strip() for c in args.checks.split(","))
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ParseError(f"unknown checks {unknown}; choose from {list(CHECKS)} or 'all'")
    out = {"command": "verify"}
    if args.golden:
        if args.golden not in GOLDEN_NAMES:
            raise ParseError(f"unknown golden instance {args.golden!r}")
        reports = [verify_golden().to_dict()]
    elif args.spec:
        specs = [parse_spec(args.spec, args.seed + k) for k in range(args.count)]
        if args.jobs > 1 and len(specs) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as ex:
                reports = list(ex.map(_verify_one, specs, [checks] * len(specs)))
        else:
            reports = [_verify_one(s, checks) for s in specs]
    elif args.input:
        F = parse_system(_read(args.input))
        reports = [verify_all(F, checks).to_dict()]
    else:
        raise ParseError("verify needs an input file, --golden or --spec")
    out["reports"] = reports
    if args.quadratic_table:
        out["quadratic_table"] = verify_quadratic_dreg_table()
    ok = all(r["passed"] for r in reports)
    ok = ok and all(row["passed"] for row in out.get("quadratic_table", []))
    out["passed"] = ok
    return out, EXIT_OK if ok else EXIT_FAIL


def cmd_estimate(args):
    degrees = tuple(args.degrees)
    if len(degrees) == 1 and args.m:
        degrees = degrees * args.m
    if args.m and len(degrees) != args.m:
        raise InvalidDegree(f"{len(degrees)} degrees given for m = {args.m}")
    n, omega = args.n, args.omega
    if not 2 <= omega < 3:
        raise InvalidExponent(f"omega must satisfy 2 <= omega < 3, got {omega}")
    D = degree_of_regularity(n, degrees)
    bound = macaulay_bound(n, degrees)
    targets = {"macaulay_bound": bound}
    if D != INFINITE:
        targets = {"D": D, "two_D_minus_2": 2 * D - 2, **targets}
    costs = {k: {"d": d, "N": math.comb(n + d, n), "cost": complexity_estimate(n, d, omega)}
             for k, d in targets.items()}
    out = {"command": "estimate", "n": n, "m": len(degrees), "degrees": list(degrees),
           "omega": omega, "D": _num(D),
           "two_D_minus_2": _num(2 * D - 2 if D != INFINITE else INFINITE),
           "macaulay_bound": bound, "costs": costs}
    return out, EXIT_OK


# ---------------------------------------------------------------------------
# output


def _pretty(out):
    lines = []
    cmd = out.get("command")
    if cmd == "gb":
        lines.append(f"engine {out['engine']}  p={out['ring']['p']}  n={out['ring']['n']}")
        if "gb_hom" in out:
            lines.append("G_hom:")
            lines += [f"  {g}" for g in out["gb_hom"]]
        lines.append("G:")
        lines += [f"  {g}" for g in out["gb"]]
        lines.append(f"solving degree {out['solving_degree']}  "
                     f"time {out['timings']['seconds']:.3f}s")
        lines.append(f"{'deg':>4} {'pairs':>6} {'zero':>5} {'new':>4}")
        for r in out["step_log"]["records"]:
            lines.append(f"{r['degree']:>4} {r['pairs']:>6} {r['zero_reductions']:>5} "
                         f"{r['new_elements']:>4}")
    elif cmd == "hilbert":
        lines.append(f"n={out['n']} degrees={out['degrees']}")
        lines.append(f"HS_top  {out['hs_top']}  ({out['truncation']})")
        lines.append(f"D       {out['D']}")
        lines.append(f"HS_hom  {out['hs_hom_prefix']}")
    elif cmd == "verify":
        for rep in out["reports"]:
            lines.append(f"spec {rep['spec']}")
            for name, frag in rep["checks"].items():
                lines.append(f"  {name:<16} {'PASS' if frag['passed'] else 'FAIL'}")
        for row in out.get("quadratic_table", []):
            lines.append(f"  n={row['n']:>2} D={row['D']} closed={row['closed_form']} "
                         f"2D-2={row['two_D_minus_2']} {'PASS' if row['passed'] else 'FAIL'}")
        lines.append("PASS" if out["passed"] else "FAIL")
    elif cmd == "estimate":
        lines.append(f"n={out['n']} m={out['m']} omega={out['omega']}")
        lines.append(f"D={out['D']} 2D-2={out['two_D_minus_2']} "
                     f"macaulay={out['macaulay_bound']}")
        for k, c in out["costs"].items():
            lines.append(f"  {k:<15} d={c['d']:>3} N={c['N']:>8} cost={c['cost']}")
    return "\n".join(lines)


def _degree_list(text):
    try:
        return [int(x) for x in text.replace("/", ",").split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad degree list {text!r}") from None


def build_parser():
    ap = argparse.ArgumentParser(prog="semigb", description=__doc__.splitlines()[0])
    ap.add_argument("--pretty", action="store_true", help="print tables instead of JSON")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gb", help="reduced Groebner basis of a system file")
    g.add_argument("input", help="system file, or - for stdin")
    g.add_argument("--engine", choices=ENGINES, default="buchberger")
    g.add_argument("--homogenize", action="store_true",
                   help="compute the basis of F^h and report its dehomogenization too")
    g.add_argument("--max-degree", type=int, default=None)

    h = sub.add_parser("hilbert", help="series of a semi-regular shape")
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--degrees", type=_degree_list, required=True)
    h.add_argument("--precision", type=int, default=None)

    v = sub.add_parser("verify", help="run the theorem checks")
    v.add_argument("input", nargs="?")
    v.add_argument("--golden", metavar="NAME")
    v.add_argument("--spec", metavar="p=..,n=..,m=..,d=..")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=1, help="number of seeds from --seed")
    v.add_argument("--checks", default="all")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--quadratic-table", action="store_true")

    e = sub.add_parser("estimate", help="degree bounds and Macaulay-matrix cost")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--m", type=int, default=None)
    e.add_argument("--degrees", type=_degree_list, required=True)
    e.add_argument("--omega", type=float, default=2.0)
    return ap


COMMANDS = {"gb": cmd_gb, "hilbert": cmd_hilbert, "verify": cmd_verify,
            "estimate": cmd_estimate}


def _error(exc, code):
    payload = {"error": type(exc).__name__, "message": str(exc)}
    for attr in ("line", "column", "parameter"):
        if getattr(exc, attr, None) is not None:
            payload[attr] = getattr(exc, attr)
    print(json.dumps(payload), file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = COMMANDS[args.command](args)
    except (ParseError, NotPrime, OSError) as exc:
        return _error(exc, EXIT_INPUT)
    except (PreconditionUnverified, CapExceeded, GenerationFailed, TimeoutDegree,
            NotReached, InvalidExponent, InvalidDegree) as exc:
        return _error(exc, EXIT_PRECONDITION)
    except SemigbError as exc:
        return _error(exc, EXIT_INPUT)
    print(_pretty(out) if args.pretty else json.dumps(out, indent=1))
    return code


if __name__ == "__main__":
    sys.exit(main())
