"""Command-line surface: certificates and tables over relation systems.

Every subcommand accepts a relation source (``--relations FILE`` or
``--preset NAME --param k=v``), prints a human-readable table, and can
mirror the same data to JSON with ``--json OUT``.
"""

from __future__ import annotations

import argparse
import sys
import time

from .algebra import RelationSystem, hermiticity_check, word_str
from .catalog import make_preset, preset_names
from .exprparse import parse_expression, print_polynomial
from .reports import (
    Report,
    load_relations,
    parse_rational_str,
    rational_str,
    save_relations,
    save_report,
    scalar_to_json,
)
from .scalars import Scalar

__all__ = ["main", "build_parser"]


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--relations", metavar="FILE", help="relation-system JSON file")
    p.add_argument("--preset", metavar="NAME",
                   help="catalog preset (%s)" % ", ".join(preset_names()))
    p.add_argument("--param", action="append", default=[], metavar="K=V",
                   help="preset parameter (repeatable), e.g. q=1/2 or d=3")
    p.add_argument("--nmax", type=int, default=3, metavar="N",
                   help="maximum tensor level / degree (default 3)")
    p.add_argument("--phi", metavar="C1,C2,…",
                   help="coherent parameter components (default Fock)")
    p.add_argument("--json", metavar="OUT", help="write the JSON report here")
    p.add_argument("--cap", type=int, default=4096, metavar="N",
                   help="dense dimension cap d^n (default 4096)")


def _relation_system(args) -> RelationSystem:
    if args.relations and args.preset:
        raise SystemExit("use either --relations or --preset, not both")
    if args.relations:
        return load_relations(
            args.relations, warn=lambda m: print(f"warning: {m}", file=sys.stderr)
        )
    if args.preset:
        params = {}
        d = None
        for kv in args.param:
            if "=" not in kv:
                raise SystemExit(f"bad --param {kv!r}, expected K=V")
            k, v = kv.split("=", 1)
            if k == "d":
                d = int(v)
            else:
                params[k] = parse_rational_str(v)
        return make_preset(args.preset, d=d, **params)
    raise SystemExit("a relation source is required: --relations FILE or --preset NAME")


def _phi(args, d: int):
    from .states import CoherentParam

    if not args.phi:
        return CoherentParam.zero(d)
    comps = []
    for chunk in args.phi.split(","):
        p = parse_expression(chunk.strip(), 1)
        if p.max_word_len() != 0:
            raise SystemExit(f"--phi component {chunk!r} is not a scalar")
        comps.append(p.constant_term)
    if len(comps) != d:
        raise SystemExit(f"--phi needs {d} components, got {len(comps)}")
    return CoherentParam(tuple(comps))


def _emit(report: Report, args) -> None:
    if args.json:
        save_report(report, args.json)


def _relation_meta(rs: RelationSystem) -> dict:
    return {
        "name": rs.name,
        "d": rs.d,
        "params": {k: rational_str(v) for k, v in rs.params.items()},
    }


# -- subcommand bodies ---------------------------------------------------------


def _cmd_order(args) -> int:
    from .rewrite import wick_order

    rs = _relation_system(args)
    p = parse_expression(args.expr, rs.d)
    q = wick_order(p, rs.tensor, cap=args.cap * args.cap)
    print(print_polynomial(q))
    report = Report(tool="order", relation=_relation_meta(rs))
    report.add_check("order", input=args.expr, output=print_polynomial(q))
    _emit(report, args)
    return 0


def _cmd_identity(args) -> int:
    from .rewrite import verify_identity

    rs = _relation_system(args)
    lhs = parse_expression(args.lhs, rs.d)
    rhs = parse_expression(args.rhs, rs.d)
    equal = verify_identity(lhs, rhs, rs.tensor)
    print("equal" if equal else "different")
    report = Report(tool="identity", relation=_relation_meta(rs))
    report.add_check("identity", lhs=args.lhs, rhs=args.rhs, equal=equal)
    _emit(report, args)
    return 0 if equal else 1


def _cmd_gram(args) -> int:
    from .states import gram_matrix
    from .tensorops import index_to_word

    rs = _relation_system(args)
    d = rs.d
    n = args.nmax
    words = [index_to_word(i, d, n) for i in range(d**n)]
    phi = _phi(args, d)
    g = gram_matrix(words, phi, rs.tensor)
    labels = [word_str(w) for w in words]
    print(f"Gram matrix over all {len(words)} length-{n} words:")
    for r, lab in enumerate(labels):
        row = "  ".join(
            rational_str(c.re) if c.is_real else f"({rational_str(c.re)},{rational_str(c.im)})"
            for c in g.data[r]
        )
        print(f"  {lab}: {row}")
    report = Report(tool="gram", relation=_relation_meta(rs))
    report.add_check(
        "gram",
        n=n,
        words=labels,
        matrix=[[scalar_to_json(c) for c in row] for row in g.data],
    )
    _emit(report, args)
    return 0


def _cmd_positivity(args) -> int:
    from .tensorops import positivity_report

    rs = _relation_system(args)
    report = positivity_report(rs.tensor, args.nmax, cap=args.cap)
    report.relation = _relation_meta(rs)
    for check in report.checks:
        fields = ", ".join(f"{k}={v}" for k, v in check.items() if k != "name")
        print(f"{check['name']}: {fields}")
    _emit(report, args)
    return 0


def _cmd_braid(args) -> int:
    from .braid import braid_check, p_n_by_permutations
    from .tensorops import p_n

    rs = _relation_system(args)
    braided = braid_check(rs.tensor)
    print(f"braid relation: {'holds' if braided else 'fails'}")
    report = Report(tool="braid", relation=_relation_meta(rs))
    report.add_check("braid", holds=braided)
    if braided and args.nmax >= 2:
        for n in range(2, args.nmax + 1):
            same = p_n_by_permutations(rs.tensor, n, cap=args.cap) == p_n(
                rs.tensor, n, cap=args.cap
            )
            print(f"permutation sum equals level-{n} Gram operator: {same}")
            report.add_check("permutation_sum", n=n, equals_p_n=same)
    _emit(report, args)
    return 0 if braided else 1


def _cmd_ideal_check(args) -> int:
    from .ideals import (
        minus_one_eigenprojection,
        quadratic_ideal_check,
        wick_ideal_condition_check,
    )

    rs = _relation_system(args)
    report = Report(tool="ideal-check", relation=_relation_meta(rs))
    if hermiticity_check(rs.tensor):
        P = minus_one_eigenprojection(rs.tensor)
        qc = quadratic_ideal_check(rs.tensor, P)
        print(f"-1 eigenprojection rank: {P.rank()}")
        print(f"quadratic ideal conditions: linear={qc['linear']} "
              f"quadratic={qc['quadratic']}")
        report.add_check("eigenprojection", rank=P.rank())
        report.add_check("quadratic_ideal", **qc)
    gens = rs.ideal_generators
    if gens:
        max_deg = max(args.nmax, max(g.max_word_len() for g in gens) + 1)
        ok = wick_ideal_condition_check(rs.tensor, gens, max_deg)
        print(f"declared generators ({len(gens)}) form a Wick ideal "
              f"(degree <= {max_deg}): {ok}")
        report.add_check("wick_ideal", generators=len(gens),
                         max_deg=max_deg, holds=ok)
    else:
        print("no declared ideal generators")
    _emit(report, args)
    return 0


def _cmd_forms(args) -> int:
    from .diffcalc import form_space_dim, wick_diff_star_algebra_exists

    rs = _relation_system(args)
    report = Report(tool="forms", relation=_relation_meta(rs))
    dims = []
    for p in range(0, args.nmax + 1):
        dim = form_space_dim(rs.tensor, p, cap=args.cap)
        dims.append(dim)
        print(f"dim of constant-coefficient {p}-forms: {dim}")
    report.add_check("form_dims", dims=dims)
    if hermiticity_check(rs.tensor):
        rec = wick_diff_star_algebra_exists(rs.tensor)
        print(f"differential *-algebra exists: {rec['exists']} "
              f"(invertible={rec['invertible']}, braid={rec['braid']})")
        report.add_check(
            "star_algebra",
            exists=rec["exists"],
            invertible=rec["invertible"],
            braid=rec["braid"],
        )
    _emit(report, args)
    return 0


def _cmd_kms(args) -> int:
    from .kms import KmsNonUniquenessError, kms_evaluate, kms_series

    rs = _relation_system(args)
    lam = parse_rational_str(args.lam)
    report = Report(tool="kms", relation=_relation_meta(rs))
    series = kms_series(rs.tensor, Scalar(lam), args.nmax, cap=args.cap)
    print(f"ranks of level Gram operators: {series['ranks']}")
    sums = [rational_str(s.re) for s in series["partial_sums"]]
    print(f"partial sums of the lambda-rank series: {sums}")
    report.add_check("series", lam=rational_str(lam),
                     ranks=series["ranks"], partial_sums=sums)
    if args.expr:
        try:
            value = kms_evaluate(
                parse_expression(args.expr, rs.d), Scalar(lam), rs.tensor
            )
            print(f"kms value of {args.expr!r}: "
                  f"{rational_str(value.re)}"
                  + (f" + {rational_str(value.im)}i" if value.im else ""))
            report.add_check("evaluate", expr=args.expr, value=scalar_to_json(value))
        except KmsNonUniquenessError as exc:
            print(f"kms value of {args.expr!r}: not unique ({exc})")
            report.add_check("evaluate", expr=args.expr, unique=False)
            _emit(report, args)
            return 1
    _emit(report, args)
    return 0


def _cmd_preset(args) -> int:
    rs = _relation_system(args)
    save_relations(rs, args.out)
    print(f"wrote preset {rs.name!r} (d={rs.d}) to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="wickalg",
        description="Normal ordering, Gram positivity, braid/ideal/KMS "
                    "certificates for Wick algebras.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="Wick-order an expression")
    _add_common(p)
    p.add_argument("expr", help="expression, e.g. 'a1* a2 - 1/2 a2 a1*'")
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("identity", help="verify an identity in the algebra")
    _add_common(p)
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(func=_cmd_identity)

    p = sub.add_parser("gram", help="Gram matrix over all length-n words")
    _add_common(p)
    p.set_defaults(func=_cmd_gram)

    p = sub.add_parser("positivity", help="positivity criteria and P_n spectra")
    _add_common(p)
    p.set_defaults(func=_cmd_positivity)

    p = sub.add_parser("braid", help="braid relation and permutation sums")
    _add_common(p)
    p.set_defaults(func=_cmd_braid)

    p = sub.add_parser("ideal-check", help="quadratic and general Wick-ideal checks")
    _add_common(p)
    p.set_defaults(func=_cmd_ideal_check)

    p = sub.add_parser("forms", help="differential-form dimensions")
    _add_common(p)
    p.set_defaults(func=_cmd_forms)

    p = sub.add_parser("kms", help="KMS rank series and functional values")
    _add_common(p)
    p.add_argument("--lam", default="1/2", metavar="RAT",
                   help="KMS parameter lambda (rational, default 1/2)")
    p.add_argument("expr", nargs="?", help="optional expression to evaluate")
    p.set_defaults(func=_cmd_kms)

    p = sub.add_parser("preset", help="emit a catalog preset to a relation file")
    _add_common(p)
    p.add_argument("out", help="output relation-file path")
    p.set_defaults(func=_cmd_preset)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
