"""Command-line entry point.

Exit codes: 0 success, 1 a check failed or a computation was refused
(with the witness or reason printed), 2 usage error.
"""
import argparse
import json
import sys

from . import analytic, ddl, structure
from .algebra import Polynomial, convolve, convolve_at, coproduct, duality_sides
from .checks import check_all
from .elements import format_fraction
from .errors import (DivergentError, LemmaViolation, NonEmptyTerminal,
                     NonFiniteDecomposition, SemigroupError)
from .quasi_shuffle import PRODUCTS, quasi_shuffle
from .semigroup import builtin, load_table


class CheckFailed(Exception):
    pass


def _emit(args, text, data):
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_qs(args):
    alg = PRODUCTS[args.product]
    result = quasi_shuffle(args.u, args.v, alg)
    _emit(args, str(result), result.to_dict())


def cmd_coprod(args):
    S = builtin(args.semigroup)
    P = Polynomial.parse(args.poly, S)
    result = coproduct(S, P)
    _emit(args, str(result), result.to_dict())


def cmd_dual(args):
    S = builtin(args.semigroup)
    P, Q, R = (Polynomial.parse(t, S) for t in (args.p, args.q, args.r))
    lhs, rhs = duality_sides(S, P, Q, R)
    ok = lhs == rhs
    text = (f"<P.Q|R> = {format_fraction(lhs)}\n<P(x)Q|Delta(R)> = {format_fraction(rhs)}\n"
            f"{'PASS' if ok else 'FAIL'}")
    _emit(args, text, {"lhs": format_fraction(lhs), "rhs": format_fraction(rhs), "passed": ok})
    if not ok:
        raise CheckFailed()


def cmd_conv(args):
    S = builtin(args.semigroup)
    f, g = Polynomial.parse(args.f, S), Polynomial.parse(args.g, S)
    if args.at is not None:
        m = S.parse(args.at)
        value = convolve_at(S, f, g, m)
        _emit(args, format_fraction(value), {"at": str(m), "value": format_fraction(value)})
    else:
        result = convolve(S, f, g)
        _emit(args, str(result), result.to_dict())


def _system(target):
    demos = {"fig1": ddl.fig1_system,
             "defect-interval": ddl.defect_interval_system,
             "defect-component": ddl.defect_component_system,
             "defect-fiber": ddl.defect_fiber_system}
    if target in demos:
        return demos[target]()
    return ddl.load_ddl(target)


def _ddl_check(args, system):
    rep = ddl.validate_system(system, args.bound, seed=args.seed)
    crit = ddl.fd_criterion_check(system, args.bound)
    _emit(args, f"{rep}\n{crit}", {"validate": rep.to_dict(), "criterion": crit.to_dict()})
    if not (rep.passed and crit.passed):
        raise CheckFailed()


def cmd_ddl(args):
    if args.ddl_cmd == "check":
        _ddl_check(args, _system(args.file))
    elif args.ddl_cmd == "demo":
        _ddl_check(args, _system(args.name))
    elif args.ddl_cmd == "mul":
        system = _system(args.file)
        x, y = system.parse(args.x), system.parse(args.y)
        z = ddl.ddl_mul(system, x, y)
        _emit(args, str(z), {"x": str(x), "y": str(y), "product": str(z)})


def _semigroup(target):
    try:
        return builtin(target)
    except SemigroupError:
        return load_table(target)


def cmd_peel(args):
    S = _semigroup(args.target)
    result = structure.peel(S)
    text, data, failed = [result.describe()], {"peel": result.to_dict()}, False
    if args.verify:
        rep = structure.verify_structure_theorem(S)
        text.append(str(rep))
        data["verify"] = rep.to_dict()
        failed |= not rep.passed
    if args.rebuild:
        try:
            system, rep = structure.rebuild_as_ddl(S, result)
            text.append(str(rep))
            text.append(structure.rebuilt_cayley_text(S, system).rstrip())
            data["rebuild"] = rep.to_dict()
            failed |= not rep.passed
        except NonEmptyTerminal as exc:
            text.append(f"NonEmptyTerminal: {exc}")
            data["rebuild"] = {"refused": "NonEmptyTerminal", "reason": str(exc)}
            failed = True
    _emit(args, "\n".join(text), data)
    if failed:
        raise CheckFailed()


def cmd_chen(args):
    rep = analytic.chen_check(args.u, args.v, args.z, args.N, args.tol)
    data = {"lhs": rep.lhs, "rhs": rep.rhs, "error_bound": rep.budget, "passed": rep.passed}
    text = (f"Li_u*Li_v = {rep.lhs:.15g}\nLi(u sh v) = {rep.rhs:.15g}\n"
            f"error bound = {rep.budget:.3e}\n{'PASS' if rep.passed else 'FAIL'}")
    _emit(args, text, data)
    if not rep.passed:
        raise CheckFailed()


def cmd_zeta(args):
    est = analytic.zeta(args.s, args.N)
    data = {"s": args.s, "N": args.N, "value": est.value, "error_bound": est.error}
    text = f"zeta({args.s}) = {est.value:.15g}\nerror bound = {est.error:.3e}"
    if args.times is not None:
        rep = analytic.stuffle_check(args.s, args.times, args.N, args.tol)
        data["stuffle"] = {"lhs": rep.lhs, "rhs": rep.rhs, "error_bound": rep.budget,
                           "passed": rep.passed}
        text += (f"\nzeta(s)zeta(t) = {rep.lhs:.15g}\nstuffle sum = {rep.rhs:.15g}\n"
                 f"{'PASS' if rep.passed else 'FAIL'}")
        _emit(args, text, data)
        if not rep.passed:
            raise CheckFailed()
        return
    _emit(args, text, data)


def cmd_check(args):
    print(f"seed {args.seed}, bound {args.bound}", file=sys.stderr)
    reports = check_all(args.bound, args.seed, args.fixtures)
    text = "\n".join(str(r) for r in reports)
    if args.bound <= 0:
        text = "WARNING: 0 cases\n" + text
    _emit(args, text, {"seed": args.seed, "bound": args.bound,
                       "reports": [r.to_dict() for r in reports]})
    if not all(r.passed for r in reports):
        raise CheckFailed()


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")

    parser = argparse.ArgumentParser(
        prog="fdsemi", description="Finite decomposition semigroups toolkit.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("qs", parents=[common], help="quasi-shuffle products of two words")
    p.add_argument("product", choices=sorted(PRODUCTS))
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_qs)

    p = sub.add_parser("coprod", parents=[common], help="coproduct of a polynomial")
    p.add_argument("--semigroup", required=True)
    p.add_argument("poly")
    p.set_defaults(func=cmd_coprod)

    p = sub.add_parser("dual", parents=[common], help="check <P.Q|R> = <P(x)Q|Delta R>")
    p.add_argument("--semigroup", required=True)
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("r")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("conv", parents=[common], help="convolution of two functions")
    p.add_argument("--semigroup", required=True)
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--at", help="evaluate the convolution at one element only")
    p.set_defaults(func=cmd_conv)

    p = sub.add_parser("ddl", help="disjoint direct limits")
    dsub = p.add_subparsers(dest="ddl_cmd", required=True)
    q = dsub.add_parser("check", parents=[common])
    q.add_argument("file")
    q.add_argument("--bound", type=int, default=10)
    q.add_argument("--seed", type=int, default=0)
    q = dsub.add_parser("demo", parents=[common])
    q.add_argument("name", choices=["fig1", "defect-interval", "defect-component",
                                    "defect-fiber"])
    q.add_argument("--bound", type=int, default=10)
    q.add_argument("--seed", type=int, default=0)
    q = dsub.add_parser("mul", parents=[common])
    q.add_argument("file", help="DDL description file or a demo name such as fig1")
    q.add_argument("x")
    q.add_argument("y")
    p.set_defaults(func=cmd_ddl)

    p = sub.add_parser("peel", parents=[common], help="peel a semigroup into group layers")
    p.add_argument("target", help="builtin name or Cayley table file")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--rebuild", action="store_true")
    p.set_defaults(func=cmd_peel)

    p = sub.add_parser("chen", parents=[common], help="check Chen's shuffle identity")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--z", type=float, default=0.5)
    p.add_argument("--N", type=int, default=2000)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_chen)

    p = sub.add_parser("zeta", parents=[common], help="multiple zeta values")
    p.add_argument("s")
    p.add_argument("--N", type=int, default=100_000)
    p.add_argument("--times", help="second composition: check the stuffle identity")
    p.add_argument("--tol", type=float, default=1e-3)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("check", parents=[common], help="run every invariant sweep")
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fixtures", help="directory of *.table and *.ddl files to check too")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except CheckFailed:
        return 1
    except (NonFiniteDecomposition, NonEmptyTerminal, LemmaViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SemigroupError, DivergentError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        print(f"see: {parser.prog} {args.verb} --help", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
