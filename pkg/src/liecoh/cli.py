"""Command-line front end (``liecoh``).

Exit codes: 0 all requested checks passed, 1 some check failed (the report
is still written), 2 input or usage error.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product
from pathlib import Path

from . import io
from .cohomology import (
    Grading,
    cocycle_space,
    coboundary_space,
    cochain_space,
    graded_dims,
    is_cocycle,
    nr_square,
    sq1,
)
from .errors import InputError, JacobiError
from .exact_linalg import format_rational, parse_rational
from .exterior import contact_witness, frobenius_witness
from .family import (
    CONVENTIONS,
    FamilyParams,
    build_F,
    deformation_stays_in_family,
    family_grading,
    h2_representatives,
    model_verification_suite,
    omega_report,
    random_generic_phi,
)
from .lie import (
    center,
    derivations,
    derived_series,
    heisenberg,
    jacobi_check,
    lower_central_series,
    solvable_steps,
    vector_to_matrix,
)

OK, FAILED, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def _parse_phi(text: str) -> tuple:
    if text is None or text.strip() == "":
        return ()
    return tuple(parse_rational(s) for s in text.split(","))


def _family(args) -> FamilyParams:
    if args.p is None:
        raise InputError("--p is required")
    return FamilyParams(args.p, _parse_phi(args.phi) if args.phi is not None else ())


def _algebra(args):
    if getattr(args, "algebra", None):
        return io.load_algebra(args.algebra), None
    if getattr(args, "p", None) is not None:
        par = _family(args)
        return build_F(par), par
    raise InputError("give --algebra PATH or --p/--phi")


def _default_seed() -> int:
    env = os.environ.get("LIECOH_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise InputError(f"LIECOH_SEED must be an integer, got {env!r}") from None


class _Out:
    """Collects the report; text goes to stdout, JSON to stdout or --out."""

    def __init__(self, args):
        self.args = args
        self.lines: list[str] = []

    def line(self, s=""):
        self.lines.append(s)

    def table(self, rows):
        width = max((len(k) for k, _ in rows), default=0)
        for k, v in rows:
            self.line(f"  {k.ljust(width)}  {v}")

    def conventions(self):
        self.line(f"conventions: d_sign={CONVENTIONS['d_sign']} sq1_factor={CONVENTIONS['sq1_factor']}")

    def emit(self, obj=None):
        if self.args.json and obj is not None:
            text = io.dumps(obj)
        else:
            text = "\n".join(self.lines) + "\n"
        if getattr(self.args, "out", None):
            Path(self.args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)


# ---------------------------------------------------------------------------


def cmd_verify_model(args) -> int:
    par = _family(args)
    rep = model_verification_suite(par)
    out = _Out(args)
    for line in rep.to_text().splitlines():
        out.line(line)
    out.emit(rep.as_dict())
    return OK if rep.passed else FAILED


def cmd_cohomology(args) -> int:
    g, par = _algebra(args)
    q = args.degree
    if q < 0:
        raise InputError("--degree must be >= 0")
    z = cocycle_space(g, q)
    b = coboundary_space(g, q)
    res = {"dim": g.dim, "degree": q, "c": cochain_space(g.dim, q).size, "z": z.dim, "b": b.dim, "h": z.dim - b.dim}
    out = _Out(args)
    out.line(f"degree {q} cohomology of a {g.dim}-dimensional algebra")
    out.table([("dim C", res["c"]), ("dim Z", res["z"]), ("dim B", res["b"]), ("dim H", res["h"])])
    if args.graded:
        if args.weights:
            grading = Grading(tuple(int(w) for w in args.weights.split(",")))
        elif par is not None:
            grading = family_grading(par.p)
        else:
            raise InputError("--graded needs --weights for an --algebra input")
        table = graded_dims(g, grading, q)
        res["graded"] = {str(w): {"z": zd, "b": bd} for w, (zd, bd) in table.items()}
        out.line("graded (weight: dim Z, dim B):")
        out.table([(str(w), f"{zd}, {bd}") for w, (zd, bd) in table.items()])
    out.conventions()
    out.emit(res)
    return OK


def cmd_derivations(args) -> int:
    g, _ = _algebra(args)
    der = derivations(g)
    cen = center(g).dim
    inner = g.dim - cen
    res = {"dim": g.dim, "der": der.dim, "inner": inner, "h1": der.dim - inner}
    if args.json:
        res["basis"] = [
            [[format_rational(x) for x in row] for row in vector_to_matrix(v, g.dim)] for v in der.vectors()
        ]
    out = _Out(args)
    out.table([("dim g", g.dim), ("dim Der", der.dim), ("dim ad(g)", inner), ("dim H1", der.dim - inner)])
    out.emit(res)
    return OK


def cmd_invariants(args) -> int:
    g, _ = _algebra(args)
    bad = jacobi_check(g)
    res = {
        "dim": g.dim,
        "jacobi_violations": len(bad),
        "center": center(g).dim,
        "derived_series": [s.dim for s in derived_series(g)],
        "lower_central_series": [s.dim for s in lower_central_series(g)],
        "solvable_steps": solvable_steps(g),
        "der": derivations(g).dim,
    }
    out = _Out(args)
    out.table([(k, v) for k, v in res.items()])
    out.emit(res)
    return OK if not bad else FAILED


def cmd_rim(args) -> int:
    par = _family(args)
    g = build_F(par)
    ks = [args.k] if args.k is not None else list(range(1, par.p))
    reps = h2_representatives(par)
    out = _Out(args)
    res = {"p": par.p, "phi": par.phi_strings(), "representatives": []}
    ok = True
    for k in ks:
        if not 1 <= k <= par.p - 1:
            raise InputError(f"--k={k} outside 1..{par.p - 1}")
        psi = reps[k - 1]
        cocycle = is_cocycle(g, psi)
        square_zero = nr_square(g, psi).is_zero()
        vanishes = sq1(g, psi) if cocycle else None
        ok &= bool(cocycle and square_zero and vanishes)
        res["representatives"].append({"k": k, "cocycle": cocycle, "square_zero": square_zero, "sq1_vanishes": vanishes})
        out.line(f"k={k}: cocycle={cocycle} psi∘psi=0: {square_zero} sq1 vanishes: {vanishes}")
    res["conventions"] = dict(CONVENTIONS)
    out.conventions()
    out.emit(res)
    return OK if ok else FAILED


def cmd_deform(args) -> int:
    par = _family(args)
    if args.k is None:
        raise InputError("--k is required")
    t = parse_rational(args.t) if args.t is not None else Fraction(1)
    rep = deformation_stays_in_family(par, args.k, t)
    out = _Out(args)
    tgt = FamilyParams(par.p, rep.target.phi)
    out.line(f"{par} + {format_rational(t)}·psi^{2 * args.k + 1}_(2,{2 * args.k + 1})")
    out.line(f"  equals {tgt}: {rep.equal}")
    out.line(f"  target: {'; '.join(rep.target_omega.lines())}")
    out.emit(rep.as_dict())
    return OK if rep.passed else FAILED


def cmd_omega(args) -> int:
    par = _family(args)
    rep = omega_report(par)
    out = _Out(args)
    for line in rep.lines():
        out.line(line)
    out.emit(rep.as_dict())
    return OK


def cmd_frobenius(args) -> int:
    g, _ = _algebra(args)
    w = frobenius_witness(g, seed=args.seed, trials=args.trials)
    out = _Out(args)
    res = {"dim": g.dim, "witness": w.to_json() if w else None, "seed": args.seed, "trials": args.trials}
    if w is None:
        out.line(f"no witness among {g.dim} canonical + {args.trials} random forms (seed {args.seed})")
    else:
        out.line(f"frobeniusian: witness {w.to_json()}")
    out.emit(res)
    return OK if w is not None else FAILED


def cmd_contact(args) -> int:
    if args.heisenberg is not None:
        g = heisenberg(args.heisenberg)
    else:
        g, _ = _algebra(args)
    w = contact_witness(g, seed=args.seed, trials=args.trials)
    out = _Out(args)
    res = {"dim": g.dim, "witness": w.to_json() if w else None, "seed": args.seed, "trials": args.trials}
    if w is None:
        out.line(f"no contact form among {g.dim} canonical + {args.trials} random forms (seed {args.seed})")
    else:
        out.line(f"contact form: {w.to_json()}")
    out.emit(res)
    return OK if w is not None else FAILED


def _grid_values(text: str) -> list:
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return list(_parse_phi(text))


def _sweep_point(par: FamilyParams) -> dict:
    rep = model_verification_suite(par)
    if rep.in_omega:
        status = "non-generic"
    else:
        status = "pass" if rep.passed else "fail"
    d = rep.dims
    return {
        "phi": par.phi_strings(),
        "in_omega": rep.in_omega,
        "dims": {k: d[k] for k in ("der", "h1", "h2", "z2_total", "b2_total")},
        "status": status,
    }


def cmd_sweep(args) -> int:
    if args.p is None:
        raise InputError("--p is required")
    if args.p > args.max_p:
        raise InputError(f"--p={args.p} exceeds the cap --max-p={args.max_p}")
    if args.p < 2:
        raise InputError("--p must be >= 2")
    if args.grid is not None:
        vals = _grid_values(args.grid)
        points = [FamilyParams(args.p, phi) for phi in product(vals, repeat=args.p - 1)] if vals else []
    elif args.count is not None:
        rng = random.Random(args.seed)
        points = [random_generic_phi(args.p, rng) for _ in range(args.count)]
    else:
        raise InputError("give --grid or --count")
    if args.jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_sweep_point, points))
    else:
        records = [_sweep_point(par) for par in points]
    summary = {
        "points": len(records),
        "pass": sum(r["status"] == "pass" for r in records),
        "fail": sum(r["status"] == "fail" for r in records),
        "non_generic": sum(r["status"] == "non-generic" for r in records),
    }
    out = _Out(args)
    for r in records:
        d = r["dims"]
        out.line(
            f"phi=({','.join(r['phi'])}) {r['status']} der={d['der']} h1={d['h1']} h2={d['h2']} "
            f"z2={d['z2_total']} b2={d['b2_total']}"
        )
    out.line(" ".join(f"{k}={v}" for k, v in summary.items()))
    out.emit({"p": args.p, "seed": args.seed, "records": records, "summary": summary})
    return FAILED if summary["fail"] else OK


def cmd_convert(args) -> int:
    try:
        text = Path(args.input).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{args.input}: {exc.strerror}") from None
    g = io.parse_maurer_cartan(text)
    payload = io.dumps(io.algebra_to_json(g))
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    return OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="liecoh", description="Exact cohomology of frobeniusian model Lie algebras.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp, family=True, algebra=False):
        if family:
            sp.add_argument("--p", type=int)
            sp.add_argument("--phi", help="comma separated rationals, e.g. 2,7/3")
        if algebra:
            sp.add_argument("--algebra", help="algebra JSON file")
        sp.add_argument("--json", action="store_true", help="emit JSON instead of text")
        sp.add_argument("--out", help="write the report to this path")
        sp.add_argument("--seed", type=int, default=None)
        return sp

    sp = common(sub.add_parser("verify-model", help="run the full check suite on F(p, phi)"))
    sp.set_defaults(func=cmd_verify_model)

    sp = common(sub.add_parser("cohomology", help="dimensions of Z^q, B^q, H^q"), algebra=True)
    sp.add_argument("--degree", type=int, default=2)
    sp.add_argument("--graded", action="store_true")
    sp.add_argument("--weights", help="comma separated integer weights (for --algebra)")
    sp.set_defaults(func=cmd_cohomology)

    sp = common(sub.add_parser("derivations", help="derivation algebra"), algebra=True)
    sp.set_defaults(func=cmd_derivations)

    sp = common(sub.add_parser("invariants", help="center, derived series, solvability"), algebra=True)
    sp.set_defaults(func=cmd_invariants)

    sp = common(sub.add_parser("rim", help="psi o psi and sq1 on the H^2 representatives"))
    sp.add_argument("--k", type=int)
    sp.set_defaults(func=cmd_rim)

    sp = common(sub.add_parser("deform", help="linear deformation along psi^{2k+1}_{2,2k+1}"))
    sp.add_argument("--k", type=int)
    sp.add_argument("--t", help="rational deformation parameter (default 1)")
    sp.set_defaults(func=cmd_deform)

    sp = common(sub.add_parser("omega", help="exceptional hyperplanes containing phi"))
    sp.set_defaults(func=cmd_omega)

    sp = common(sub.add_parser("frobenius-test", help="search a 1-form w with (dw)^p != 0"), algebra=True)
    sp.add_argument("--trials", type=int, default=20)
    sp.set_defaults(func=cmd_frobenius)

    sp = common(sub.add_parser("contact-test", help="search a contact form"), family=False, algebra=True)
    sp.add_argument("--heisenberg", type=int, metavar="N", help="use the Heisenberg algebra h_N")
    sp.add_argument("--trials", type=int, default=20)
    sp.set_defaults(func=cmd_contact)

    sp = common(sub.add_parser("sweep", help="run the suite over a parameter grid or random generic points"))
    sp.add_argument("--grid", help="per-coordinate values: 'a..b' or a comma list")
    sp.add_argument("--count", type=int, help="number of seeded random generic points")
    sp.add_argument("--max-p", type=int, default=6)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("convert", help="Maurer-Cartan text to algebra JSON")
    sp.add_argument("input")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_convert, json=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if hasattr(args, "seed") and args.seed is None:
            args.seed = _default_seed()
        return args.func(args)
    except (InputError, JacobiError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
