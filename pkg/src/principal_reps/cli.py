"""Command-line front end: ``principal-reps <subcommand> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage or configuration error.
Subset arguments accept a bitmask (``5``) or an index list (``0,2`` / ``{0,2}``).
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from .bound_quiver import emit_dot, hasse_quiver, tits_form
from .characters import CharacterValue, ThetaContext, i_theta, orbit_and_stabilizer
from .classify import a3_trichotomy_check, classify
from .errors import BudgetExceeded, CapExceeded, PrincipalRepsError
from .fields import PrimeField, parse_field
from .groth import dim_E, dim_M, dim_para_M, parabolic_identity, sum_identity
from .incidence import IncidenceAlgebra, heredity_check, increasing_order, reciprocity_check
from .reports import SCHEMAS, emit_report, schema_text
from .reps import decompose, is_indecomposable, load_rep
from .roots import build_weyl_group, load_cartan
from .subsets import members, parse_mask, popcount, submasks
from .tits import SearchResult, substitution_report, weak_positivity_search, witness_profile
from .verify import CRITERIA, ConfigError, RunConfig, run_criterion, run_verification_suite
from .weyl_sets import omega, x_theta_summands, y_set, z_set


class UsageError(Exception):
    pass


def _mask(text: str) -> int:
    try:
        return parse_mask(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _coords(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(",") if c.strip() != "")
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"coordinates must be comma-separated integers: {text!r}") from e


def _field(text: str):
    try:
        return parse_field(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--schema", action="store_true", help="print the output JSON schema and exit")
    p.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    p.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")


def _theta_args(p: argparse.ArgumentParser, cartan_default: str | None = None) -> None:
    p.add_argument("--cartan", default=cartan_default, help="preset (A2, B3, G2, ...) or JSON file")
    p.add_argument("--q", type=int, default=2, help="prime power q")
    p.add_argument("--level", type=int, default=1, help="level a; characters are taken modulo q^a - 1")
    p.add_argument("--coords", type=_coords, default=None, help="character coordinates c0,c1,... (default trivial)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="principal-reps", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weyl", help="Weyl group tables")
    _common(p)
    p.add_argument("--cartan", default=None)
    p.add_argument("action", nargs="?", choices=["enumerate", "descents", "cosets"], default="enumerate")
    p.add_argument("--j", type=_mask, default=0, help="parabolic subset for cosets")

    p = sub.add_parser("theta", help="character data")
    _common(p)
    _theta_args(p)
    p.add_argument("action", nargs="?", choices=["info"], default="info")

    p = sub.add_parser("sets", help="Y, Z, Omega sets and summand labels")
    _common(p)
    _theta_args(p)
    p.add_argument("action", nargs="?", choices=["zset", "yset", "omega", "summands"], default="zset")
    p.add_argument("--j", type=_mask, default=0)
    p.add_argument("--lam", type=_coords, default=None, help="coordinates of lambda for omega (default theta)")

    p = sub.add_parser("dims", help="dimension polynomials")
    _common(p)
    _theta_args(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--j", type=_mask, default=None, help="irreducible E(theta)_J")
    g.add_argument("--k", type=_mask, default=None, help="parabolic induction M(theta, K)")

    p = sub.add_parser("algebra", help="incidence algebra reports")
    _common(p)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--from-theta", action="store_true", help="use n = |I(theta)| from the character flags")
    _theta_args(p, cartan_default="A2")
    p.add_argument("--order", default=None, help="weight order for the heredity chain, e.g. 1,2,0,3 (masks)")
    p.add_argument("action", nargs="?", choices=["report"], default="report")

    p = sub.add_parser("quiver", help="bound quiver, Tits form, weak-positivity search")
    _common(p)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("action", nargs="?", choices=["dot", "tits", "search"], default="tits")
    p.add_argument("--bound", type=int, default=None, help="box bound B (default 5 for n <= 3, else 2)")
    p.add_argument("--resume", type=int, default=0, help="prefix cursor from an interrupted search")
    p.add_argument("--budget", type=int, default=10**9)
    p.add_argument("--keep", type=int, default=1000, help="violations to list (all are counted)")
    p.add_argument("--workers", type=int, default=None, help="process count (default: WORKERS env or 1)")

    p = sub.add_parser("reps", help="representations of the cube algebras")
    _common(p)
    p.add_argument("action", nargs="?", choices=["classify", "decompose", "indecomposable", "a3check"], default="classify")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--field", type=_field, default=None)
    p.add_argument("--input", default=None, help="rep.json file")
    p.add_argument("--samples", type=int, default=50)

    p = sub.add_parser("verify", help="cross-module verification suite")
    _common(p)
    _theta_args(p, cartan_default="A2")
    p.add_argument("--n", type=int, default=None, help="quiver size for the Tits check (default |I(theta)|)")
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--budget", type=int, default=10**9)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--acceptance", default=None, help="run acceptance criteria instead: 'all' or a list like 1,7,9")
    return parser


# handlers -----------------------------------------------------------------------------

def _context(args):
    if args.cartan is None:
        raise UsageError("--cartan is required")
    try:
        cartan, datum = load_cartan(args.cartan)
    except (ValueError, OSError, KeyError) as e:
        raise UsageError(f"--cartan: {e}") from e
    W = build_weyl_group(cartan, datum)
    coords = args.coords if args.coords is not None else (0,) * datum.rank
    if len(coords) != datum.rank:
        raise UsageError(f"--coords: expected {datum.rank} coordinates, got {len(coords)}")
    try:
        theta = CharacterValue(args.q, args.level, coords)
    except ValueError as e:
        raise UsageError(f"--q/--level: {e}") from e
    return W, ThetaContext(theta, W)


def _check_subset(J: int, W, flag: str) -> None:
    if J & ~W.full:
        raise UsageError(f"{flag}: subset {members(J)} is not inside the index set 0..{W.n - 1}")


def cmd_weyl(args):
    if args.cartan is None:
        raise UsageError("--cartan is required")
    try:
        cartan, datum = load_cartan(args.cartan)
    except (ValueError, OSError, KeyError) as e:
        raise UsageError(f"--cartan: {e}") from e
    W = build_weyl_group(cartan, datum)
    payload = {"order": W.order}
    if args.action == "cosets":
        _check_subset(args.j, W, "--j")
        elems = W.min_coset_reps(args.j)
        payload.update({"j": members(args.j), "parabolicOrder": len(W.parabolic(args.j)),
                        "longestJ": W.word(W.longest_element(args.j))})
    else:
        elems = list(W)
    payload["elements"] = [W.describe(w) for w in elems]
    if args.action == "descents":
        payload["rightDescentCounts"] = {str(k): v for k, v in sorted(Counter(W.rdesc).items())}
    return "weyl", payload, 0


def cmd_theta(args):
    W, ctx = _context(args)
    orbit, stab = orbit_and_stabilizer(ctx.theta, W)
    return "theta", {
        "theta": ctx.theta.to_json(), "itheta": members(ctx.itheta),
        "orbitSize": len(orbit), "stabOrder": stab,
    }, 0


def cmd_sets(args):
    W, ctx = _context(args)
    _check_subset(args.j, W, "--j")

    def listing(ws):
        return [{"word": W.word(w), "length": W.length(w)} for w in ws]

    payload = {"set": args.action, "j": members(args.j)}
    if args.action == "yset":
        payload["elements"] = listing(y_set(args.j, W))
    elif args.action == "zset":
        payload["elements"] = listing(z_set(args.j, ctx))
    elif args.action == "omega":
        lam = ctx.theta.with_coords(args.lam) if args.lam is not None else ctx.theta
        if len(lam.coords) != W.datum.rank:
            raise UsageError(f"--lam: expected {W.datum.rank} coordinates")
        payload["lambda"] = list(lam.coords)
        payload["ilambda"] = members(i_theta(lam, W.datum))
        payload["elements"] = listing(omega(ctx.theta, lam, args.j, W))
    else:
        labels = x_theta_summands(ctx.theta, W)
        payload["elements"] = [
            {"word": W.word(w), "length": W.length(w), "character": list(lab.character.coords),
             "parabolicSet": members(lab.parabolic_set)}
            for w, lab in zip(W, labels)
        ]
        payload["count"] = len(labels)
    return "sets", payload, 0


def cmd_dims(args):
    W, ctx = _context(args)
    for flag, v in (("--j", args.j), ("--k", args.k)):
        if v is not None and v & ~ctx.itheta:
            raise UsageError(f"{flag}: {members(v)} is not contained in I(theta) = {members(ctx.itheta)}")
    if args.j is not None:
        poly, what = dim_E(ctx, args.j), {"module": "E", "j": members(args.j)}
    elif args.k is not None:
        poly, what = dim_para_M(ctx, args.k), {"module": "ParaM", "k": members(args.k)}
    else:
        poly, what = dim_M(ctx), {"module": "M"}
    Ks = [args.k] if args.k is not None else list(submasks(ctx.itheta))
    checks = {"sumIdentity": sum_identity(ctx), "parabolicIdentity": all(parabolic_identity(ctx, K) for K in Ks)}
    code = 0 if all(checks.values()) else 1
    return "dims", {"poly": poly.to_list(), "identityChecks": checks, "itheta": members(ctx.itheta), **what}, code


def cmd_algebra(args):
    if args.from_theta:
        _, ctx = _context(args)
        n = popcount(ctx.itheta)
    elif args.n is None:
        raise UsageError("give --n or --from-theta")
    else:
        n = args.n
    if not 0 <= n <= 12:
        raise UsageError("--n: must lie in 0..12")
    A = IncidenceAlgebra(n)
    if args.order is not None:
        try:
            order = [int(x) for x in args.order.split(",")]
        except ValueError as e:
            raise UsageError(f"--order: {e}") from e
        if sorted(order) != list(range(1 << n)):
            raise UsageError(f"--order: must list each of 0..{(1 << n) - 1} once")
    else:
        order = increasing_order(n)
    layers = heredity_check(A, order)
    recip = reciprocity_check(A).passed
    payload = {
        "n": n, "dim": A.dim, "radDims": A.radical_powers(), "cartanMatrix": A.cartan_matrix(),
        "order": order, "heredity": [l.to_json() for l in layers], "reciprocity": recip,
    }
    code = 0 if all(l.passed for l in layers) and recip else 1
    return "algebra", payload, code


def cmd_quiver(args):
    if args.n is None:
        raise UsageError("--n is required")
    if not 0 <= args.n <= 12:
        raise UsageError("--n: must lie in 0..12")
    if args.action == "dot":
        return "dot", emit_dot(hasse_quiver(args.n)), 0
    if args.action == "tits":
        q = tits_form(args.n)
        payload = {
            "n": args.n, "vertices": list(q.vertices), "diag": list(q.diag),
            "cross": [[i, j, c] for (i, j), c in q.cross],
        }
        if args.n >= 2:
            x, val = witness_profile(args.n)
            payload["witness"] = {"x": x, "value": val}
        if args.n == 3:
            payload["substitution"] = substitution_report(10_000, seed=args.seed).to_json()
        return "quiver", payload, 0
    bound = args.bound if args.bound is not None else (5 if args.n <= 3 else 2)
    if bound < 0:
        raise UsageError("--bound: must be nonnegative")
    try:
        res = weak_positivity_search(args.n, bound, budget=args.budget, resume=args.resume,
                                     keep=args.keep, workers=args.workers)
        return "quiver", res.to_json(), 0
    except BudgetExceeded as e:
        partial = SearchResult(args.n, bound, e.evaluated, list(e.violations), len(e.violations), 0, (),
                               complete=False, next_cursor=e.cursor)
        doc = partial.to_json()
        doc["error"] = str(e)
        return "quiver", doc, 1


def cmd_reps(args):
    if args.action == "classify":
        F = args.field or PrimeField(2)
        bound = 1 if args.bound is None else args.bound
        try:
            res = classify(args.n, bound, F, seed=args.seed)
        except ValueError as e:
            raise UsageError(f"--n: {e}") from e
        return "reps", res.to_json(), 0
    if args.action in ("decompose", "indecomposable"):
        if not args.input:
            raise UsageError("--input rep.json is required")
        try:
            rep = load_rep(args.input)
        except (OSError, ValueError, KeyError, json.JSONDecodeError) as e:
            raise UsageError(f"--input: {e}") from e
        if not rep.check_relations():
            return "reps", {"relationsHold": False, "error": "the representation violates a relation"}, 1
        if args.action == "indecomposable":
            r = is_indecomposable(rep, seed=args.seed)
            return "reps", {"answer": r.answer.value, "endDim": r.end_dim, "radicalDim": r.radical_dim,
                            "method": r.method}, 0
        parts = decompose(rep, seed=args.seed)
        return "reps", {"summands": [p.to_json() for p in parts], "dimVectors": [list(p.dim_vector) for p in parts]}, 0
    bound = 2 if args.bound is None else args.bound
    F = args.field or PrimeField(2)
    if F.p is None:
        raise UsageError("--field: the trichotomy search needs a prime field")
    r = a3_trichotomy_check(bound, args.samples, args.seed, F)
    return "reps", r.to_json(), 0 if r.passed else 1


def cmd_verify(args):
    if args.acceptance:
        ks = sorted(CRITERIA) if args.acceptance == "all" else [int(k) for k in args.acceptance.split(",")]
        bad = [k for k in ks if k not in CRITERIA]
        if bad:
            raise UsageError(f"--acceptance: unknown criteria {bad}")
        checks = []
        for k in ks:
            c = run_criterion(k)
            checks.append({"name": f"criterion {k}: {c.name}", "passed": bool(c.passed), "details": c.details})
        passed = all(c["passed"] for c in checks)
        return "verify", {"passed": passed, "checks": checks}, 0 if passed else 1
    cfg = RunConfig(args.cartan, args.q, args.level, args.coords, args.n, args.bound, args.budget, args.seed, args.workers)
    try:
        code, payload = run_verification_suite(cfg)
    except ConfigError as e:
        raise UsageError(str(e)) from e
    return "verify", payload, code


HANDLERS = {
    "weyl": cmd_weyl, "theta": cmd_theta, "sets": cmd_sets, "dims": cmd_dims, "algebra": cmd_algebra,
    "quiver": cmd_quiver, "reps": cmd_reps, "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    if args.schema:
        sys.stdout.write(schema_text(args.command) if args.command in SCHEMAS else "{}\n")
        return 0
    try:
        kind, payload, code = HANDLERS[args.command](args)
    except UsageError as e:
        print(f"principal-reps {args.command}: error: {e}", file=sys.stderr)
        return 2
    except CapExceeded as e:
        print(f"principal-reps {args.command}: {e}", file=sys.stderr)
        return 1
    except PrincipalRepsError as e:
        print(f"principal-reps {args.command}: error: {e}", file=sys.stderr)
        return 2
    emit_report(kind, payload, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
