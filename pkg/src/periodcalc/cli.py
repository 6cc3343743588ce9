"""Command-line front end: every query of the library behind one binary.

Exit codes: 0 success (and trivial residual for `check`), 1 mathematical
rejection (failed precondition or nonzero residual), 2 schema/usage error.
All numerics in machine output are exact fraction strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import arch_l, period_algebra, weil_real, yoshida
from .formal import char_inv, char_mul, char_pow
from .infinity_types import (DominantWeight, InfinityType, infinity_to_weight,
                             regularity, to_arch_rep, weight_to_infinity)
from .weil_real import as_fraction


class SchemaError(Exception):
    pass


def _parse_json(text: str):
    if text == "-":
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid payload: {exc}") from exc


def _parse_type(text: str) -> InfinityType:
    data = _parse_json(text)
    try:
        return InfinityType.from_json(data)
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"bad infinity-type payload: {exc}") from exc


def _parse_motive(text: str) -> yoshida.MotiveShape:
    data = _parse_json(text)
    try:
        return yoshida.MotiveShape.from_json(data)
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"bad motive payload: {exc}") from exc


def _emit(args, payload: dict, human: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


# ---------------------------------------------------------------------------
# subcommands

def cmd_infinity_type(args) -> int:
    if args.weight is not None:
        try:
            entries = tuple(int(x) for x in args.weight.split(","))
        except ValueError as exc:
            raise SchemaError(f"bad weight vector: {exc}") from exc
        t = weight_to_infinity(DominantWeight(entries))
        payload = {"infinity_type": t.to_json()}
        human = (f"weight {entries} -> kappa={list(t.kappa)}, w={t.w}, "
                 f"n={t.n}")
        if args.round_trip:
            back = infinity_to_weight(t)
            payload["weight"] = list(back.entries)
            human += f"; back to weight {back.entries}"
    else:
        t = _parse_type(args.type)
        mu = infinity_to_weight(t)
        payload = {"weight": list(mu.entries)}
        human = f"infinity type {t.to_json()} -> weight {mu.entries}"
        if args.round_trip:
            back = weight_to_infinity(mu)
            payload["infinity_type"] = back.to_json()
            human += f"; back to {back.to_json()}"
    _emit(args, payload, human)
    return 0


def cmd_critical(args) -> int:
    pi = _parse_type(args.pi)
    sigma = _parse_type(args.sigma)
    points = arch_l.critical_points(pi, sigma)
    center = arch_l.central_point(pi, sigma)
    central_ok = arch_l.central_point_is_critical(pi, sigma)
    payload = {"critical": [str(m) for m in points],
               "central_point": str(center),
               "central_is_critical": central_ok}
    if pi.n % 2 == 0:
        closed = arch_l.critical_range_closed_form(pi, sigma)
        payload["closed_form"] = [str(m) for m in closed]
        if closed != points:
            print("closed-form critical range disagrees with the pole-ladder "
                  "computation", file=sys.stderr)
            return 1
    human = (f"critical points: {', '.join(str(m) for m in points) or '(none)'}"
             f"; central point {center} "
             f"({'critical' if central_ok else 'not critical'})")
    _emit(args, payload, human)
    return 0


def cmd_classify(args) -> int:
    pi = _parse_type(args.pi)
    u = as_fraction(args.u)
    chi = weil_real.char(args.delta % 2, u)
    param = to_arch_rep(pi)
    d_sym = weil_real.hom_dim(weil_real.sym2(param), chi)
    d_wedge = weil_real.hom_dim(weil_real.wedge2(param), chi)
    if d_sym > 0:
        verdict = "orthogonal"
    elif d_wedge > 0:
        verdict = "symplectic"
    else:
        verdict = "neither"
    if u.denominator != 1:
        raise ValueError("chi twist must be integral for the sign epsilon")
    eps_chi = -1 if (u.numerator + args.delta) % 2 else 1
    payload = {"verdict": verdict, "hom_sym2": d_sym, "hom_wedge2": d_wedge,
               "epsilon_chi_inf": eps_chi}
    human = (f"{verdict}: dim Hom(Sym^2, chi) = {d_sym}, "
             f"dim Hom(Wedge^2, chi) = {d_wedge}, eps(chi_inf) = {eps_chi:+d}")
    _emit(args, payload, human)
    return 0


def cmd_deligne(args) -> int:
    M = _parse_motive(args.motive)
    N = _parse_motive(args.aux)
    rel = yoshida.tensor_deligne(M, N, args.sign)
    payload = {"name": rel.name, "lhs": repr(rel.lhs), "rhs": repr(rel.rhs)}
    _emit(args, payload, f"{rel.name}: {rel.lhs!r} = {rel.rhs!r}")
    return 0


def _builtin_check(args) -> period_algebra.CheckResult:
    name = args.builtin
    if args.n is None:
        raise SchemaError("builtin checks require --n")
    if name == "main1":
        m0 = as_fraction(args.m)
        # --m is the critical point m0 = m + 1/2 on the half-integer lattice
        m = m0 - Fraction(1, 2)
        delta = args.delta if args.delta is not None else args.n % 2
        return period_algebra.check_main1_step(args.n, args.w, delta, m,
                                               corrupt=args.corrupt)
    if name == "corollary-main":
        chi = {args.chi: 1} if args.chi else None
        return period_algebra.check_corollary_main(
            args.n, orthogonal=not args.symplectic, chi_expr=chi,
            corrupt=args.corrupt)
    if name == "main2":
        return period_algebra.check_theorem_main2(
            args.n, args.nprime, include_i_power=not args.no_i_power,
            eps_num=args.eps_num, corrupt=args.corrupt)
    if name == "motivic-dual":
        return period_algebra.check_motivic_dual(args.n, i=args.i,
                                                 corrupt=args.corrupt)
    raise SchemaError(f"unknown builtin check: {name!r}")


def cmd_check(args) -> int:
    if args.script is not None:
        if args.db is None:
            raise SchemaError("--script requires --db")
        db = period_algebra.RelationDB.load(args.db)
        script = _parse_json(args.script if args.script.startswith(("[", "-"))
                             else open(args.script).read())
        if not isinstance(script, list):
            raise SchemaError("script must be a list of relation entries")
        residual = period_algebra.check_script(db, script)
        result = period_algebra.CheckResult(residual)
    else:
        if args.builtin is None:
            raise SchemaError("give a builtin check name or --script")
        result = _builtin_check(args)
        if args.db is not None:
            db = period_algebra.RelationDB()
            result.register(db)
            db.save(args.db)
    payload = {"ok": result.is_ok, "residual": repr(result.residual),
               "i_parity": result.i_parity}
    if not result.is_ok:
        payload["offending_atom"] = result.offending_atom()
    if args.verbose and result.relations:
        payload["steps"] = result.to_script()
    human = ("residual trivial" if result.is_ok
             else f"residual {result.residual!r}; "
                  f"offending atom {result.offending_atom()}")
    if args.verbose and result.relations:
        human += "\n" + "\n".join(f"  {rel.name} ^ {e}"
                                  for rel, e in result.relations)
    _emit(args, payload, human)
    return 0 if result.is_ok else 1


def cmd_asai(args) -> int:
    k1, k2, w1, w2 = args.kappa1, args.kappa2, args.w1, args.w2
    for k, w in ((k1, w1), (k2, w2)):
        if k < 2 or (k - w) % 2:
            raise ValueError("each input needs kappa >= 2 with kappa = w mod 2")
    kappa = (k1 + k2 - 1, abs(k1 - k2) + 1)
    w = w1 + w2 + 1
    regular = kappa[1] >= 2
    bound = 3 if (k1 + k2) % 2 == 0 else 4
    hyp_ok = regular and min(k1, k2) >= bound
    # central character of the transfer: omega_pi0^2 * omega_F/Q * |.|^2;
    # the orthogonality character chi = omega_pi0 * |.| gives
    # chi^2 * omega^-1 = omega_F/Q^-1, quadratic, so its Gauss class is
    # Gauss(omega_F/Q)
    omega = {"omega_pi0": 2, "omega_F/Q": 1}
    chi = {"omega_pi0": 1}
    quad = char_mul(char_pow(chi, 2), char_inv(omega))
    gauss = {k: -v % 2 for k, v in quad.items() if v % 2}
    payload = {"kappa": list(kappa), "w": w, "n": 4, "regular": regular,
               "hypotheses_met": hyp_ok, "verdict": "orthogonal",
               "gauss_atoms": sorted(gauss)}
    human = (f"transfer type (kappa={list(kappa)}; w={w}) on GL(4); "
             f"{'regular' if regular else 'NOT regular'}, hypotheses "
             f"{'met' if hyp_ok else 'unmet'}; orthogonal with Gauss atom(s) "
             f"{', '.join(sorted(gauss))}")
    _emit(args, payload, human)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="periodcalc",
                                description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true",
                   help="machine-readable output")
    p.add_argument("--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("infinity-type", help="weight <-> infinity-type")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--weight", help="comma-separated dominant weight")
    g.add_argument("--type", help="infinity-type JSON (or - for stdin)")
    s.add_argument("--round-trip", action="store_true")
    s.set_defaults(func=cmd_infinity_type)

    s = sub.add_parser("critical", help="critical points of a pair")
    s.add_argument("--pi", required=True, help="infinity-type JSON")
    s.add_argument("--sigma", required=True, help="infinity-type JSON")
    s.set_defaults(func=cmd_critical)

    s = sub.add_parser("classify", help="orthogonal/symplectic verdict")
    s.add_argument("--pi", required=True, help="infinity-type JSON")
    s.add_argument("--delta", type=int, required=True,
                   help="sign parity of chi_inf")
    s.add_argument("--u", default="0", help="twist exponent of chi_inf")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("deligne", help="print a tensor Deligne relation")
    s.add_argument("--motive", required=True, help="motive JSON")
    s.add_argument("--aux", required=True, help="auxiliary motive JSON")
    s.add_argument("--sign", type=int, choices=(1, -1), default=1)
    s.set_defaults(func=cmd_deligne)

    s = sub.add_parser("check", help="replay a derivation")
    s.add_argument("builtin", nargs="?",
                   choices=("main1", "corollary-main", "main2",
                            "motivic-dual"))
    s.add_argument("--script", help="script JSON, path, or - for stdin")
    s.add_argument("--db", help="relation database path")
    s.add_argument("--n", type=int)
    s.add_argument("--w", type=int, default=0)
    s.add_argument("--delta", type=int)
    s.add_argument("--m", default="1/2", help="critical point m0 (fraction)")
    s.add_argument("--nprime", type=int, default=1)
    s.add_argument("--i", type=int)
    s.add_argument("--chi", help="character label for corollary-main")
    s.add_argument("--symplectic", action="store_true")
    s.add_argument("--no-i-power", action="store_true")
    s.add_argument("--eps-num", type=int, choices=(1, -1), default=1)
    s.add_argument("--corrupt", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("asai", help="GL(4) tensor-transfer infinity type")
    s.add_argument("--kappa1", type=int, required=True)
    s.add_argument("--w1", type=int, required=True)
    s.add_argument("--kappa2", type=int, required=True)
    s.add_argument("--w2", type=int, required=True)
    s.set_defaults(func=cmd_asai)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
