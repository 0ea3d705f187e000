"""Command-line surface: construct, verify, and classify with table or JSON output."""

import argparse
import json
import sys

from .abelian import AbelianGroup
from .classify import build_p3_list, distinguish, theta_search
from .cyclotomic import Cyclotomic
from .hopfcore import (StructureHopf, coradical_filtration, dual,
                       invariant_record, skew_primitives, verify_axioms)
from .isosearch import find_isomorphism
from .lifting import (CompatibleDatum, automorphisms, build_family_B,
                      build_lifting, family_iso, predicted_filtration,
                      validate_compatible)
from .qls import QLSDatum, build_qls, group_element_name, validate_datum, verify_braided
from .rewrite import (check_overlaps, constraint_sets_equivalent,
                      reference_constraints, violated_constraints)

SCALAR_GRAMMAR = (
    "scalars: an integer ('2', '-1'), a rational 'a/b' ('1/2'), or a root of "
    "unity 'zN' or 'zN^k' for exp(2*pi*i*k/N) ('z3', 'z9^4', '-z3^2')")


class CliError(Exception):
    """Invalid input: malformed file, bad datum, or exceeded bound."""


def parse_scalar(text):
    """Cyclotomic from the flag grammar documented in --help."""
    s = str(text).strip()
    neg = s.startswith("-")
    if neg:
        s = s[1:]
    try:
        if s.startswith("z"):
            base, _, exp = s.partition("^")
            level = int(base[1:])
            k = int(exp) if exp else 1
            if level < 1:
                raise ValueError
            value = Cyclotomic.root_of_unity(level, k % level)
        elif "/" in s:
            a, b = s.split("/")
            value = Cyclotomic(int(a)) / Cyclotomic(int(b))
        else:
            value = Cyclotomic(int(s))
    except (ValueError, ZeroDivisionError):
        raise CliError("cannot parse scalar %r (%s)" % (text, SCALAR_GRAMMAR))
    return -value if neg else value


def _scalar_from_json(value):
    if isinstance(value, dict):
        try:
            return Cyclotomic.from_json(value)
        except (KeyError, TypeError, ValueError):
            raise CliError("malformed scalar object %r" % (value,))
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise CliError("scalar must be an integer, string, or level/num/den object")
    return parse_scalar(value)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise CliError("malformed JSON in %s: %s" % (path, exc))


def _group_from_spec(spec):
    try:
        return AbelianGroup.from_spec(str(spec))
    except (TypeError, ValueError) as exc:
        raise CliError("bad group spec %r: %s" % (spec, exc))


def _exponents(raw):
    try:
        return tuple(int(part) for part in str(raw).split(","))
    except ValueError:
        raise CliError("bad exponent list %r (expected comma-separated integers)" % raw)


def _datum_from_flags(args):
    group = _group_from_spec(args.group)
    if not args.g or not args.chi or len(args.g) != len(args.chi):
        raise CliError("--g and --chi must be given the same number of times")
    try:
        gs = [group.element(_exponents(e)) for e in args.g]
        chis = [group.character(_exponents(e)) for e in args.chi]
    except (TypeError, ValueError) as exc:
        raise CliError("bad element or character exponents: %s" % exc)
    datum = validate_datum(group, gs, chis)
    if not isinstance(datum, QLSDatum):
        raise CliError("invalid datum: %s" % (datum,))
    return datum


def _compatible_from_file(path, check=True):
    data = _load_json(path)
    try:
        group = _group_from_spec(data["group"])
        raw = data["qls"]
        gs = [group.element(tuple(e)) for e in raw["g"]]
        chis = [group.character(tuple(e)) for e in raw["chi"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError("malformed datum file %s: %s" % (path, exc))
    datum = validate_datum(group, gs, chis)
    if not isinstance(datum, QLSDatum):
        raise CliError("invalid datum in %s: %s" % (path, datum))
    mus = [_scalar_from_json(m) for m in data.get("mu", [0] * datum.theta)]
    if len(mus) != datum.theta:
        raise CliError("mu list length %d does not match rank %d" % (len(mus), datum.theta))
    lams = {}
    for key, value in (data.get("lambda") or {}).items():
        try:
            i, j = (int(part) for part in str(key).split(","))
        except ValueError:
            raise CliError("bad lambda key %r (expected 'i,j')" % key)
        lams[(i, j)] = _scalar_from_json(value)
    if not check:
        try:
            return CompatibleDatum(datum, mus, lams)
        except ValueError as exc:
            raise CliError("invalid datum in %s: %s" % (path, exc))
    cd = validate_compatible(datum, mus, lams)
    if not isinstance(cd, CompatibleDatum):
        raise CliError("incompatible lifting scalars in %s: %s" % (path, cd))
    return cd


def _load_algebra(path):
    data = _load_json(path)
    if "basis" not in data:
        data = data.get("algebra")
    if not isinstance(data, dict) or "basis" not in data:
        raise CliError("%s does not contain an algebra object" % path)
    try:
        return StructureHopf.from_json_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError("malformed algebra in %s: %s" % (path, exc))


def _axiom_rows(report):
    return {name: "pass" if witness is None else "fail: %r" % (witness,)
            for name, witness in sorted(report.checks.items())}


def _cmd_qls_build(args):
    datum = _datum_from_flags(args)
    R = build_qls(datum)
    report = {
        "command": "qls build",
        "group": datum.group.spec_string(),
        "rank": datum.theta,
        "orders": list(datum.orders),
        "dimension": R.dim,
        "algebra": R.to_json_dict(),
    }
    return report, True


def _cmd_qls_verify(args):
    datum = _datum_from_flags(args)
    R = build_qls(datum, check=False)
    rep = verify_braided(R)
    report = {
        "command": "qls verify",
        "dimension": R.dim,
        "checks": _axiom_rows(rep),
        "ok": rep.ok,
    }
    return report, rep.ok


def _cmd_lift_build(args):
    cd = _compatible_from_file(args.datum)
    H = build_lifting(cd)
    report = {
        "command": "lift build",
        "group": cd.group.spec_string(),
        "rank": cd.datum.theta,
        "mus": [str(m) for m in cd.mus],
        "lambdas": {"%d,%d" % key: str(v) for key, v in sorted(cd.lams.items())},
        "dimension": H.dim,
        "algebra": H.to_json_dict(),
    }
    return report, True


def _cmd_lift_verify(args):
    cd = _compatible_from_file(args.datum)
    H = build_lifting(cd)
    rep = verify_axioms(H)
    report = {
        "command": "lift verify",
        "dimension": H.dim,
        "checks": _axiom_rows(rep),
        "ok": rep.ok,
    }
    return report, rep.ok


def _cmd_lift_filtration(args):
    cd = _compatible_from_file(args.datum)
    H = build_lifting(cd)
    predicted = predicted_filtration(cd)
    computed = tuple(s.dim for s in coradical_filtration(H))
    dims_match = computed == predicted.dims
    skew_rows = []
    skew_ok = True
    for g in cd.group.elements():
        name = group_element_name(g)
        idx = H.names.index(name)
        space = skew_primitives(H, H.basis_vector(idx), H.unit).space
        want = predicted.skew_dims[g]
        skew_rows.append({
            "element": name,
            "predicted": want,
            "computed": space.dim,
            "match": space.dim == want,
        })
        skew_ok = skew_ok and space.dim == want
    ok = dims_match and skew_ok
    report = {
        "command": "lift filtration",
        "predicted_dims": list(predicted.dims),
        "computed_dims": list(computed),
        "dims_match": dims_match,
        "skew_dimensions": skew_rows,
        "ok": ok,
    }
    return report, ok


def _cmd_overlaps_check(args):
    cd = _compatible_from_file(args.datum, check=False)
    if args.symbolic:
        P = cd.presentation(symbolic=True)
        rep = check_overlaps(P)
        emitted = rep.residual_polys()
        reference = reference_constraints(P)
        equivalent = constraint_sets_equivalent(emitted, reference)
        report = {
            "command": "overlaps check",
            "mode": "symbolic",
            "cases": len(rep.cases),
            "emitted_conditions": len(emitted),
            "reference_conditions": len(reference),
            "equivalent": equivalent,
            "ok": equivalent,
        }
        return report, equivalent
    P = cd.presentation()
    rep = check_overlaps(P)
    violated = violated_constraints(P)
    ok = rep.confluent and not violated
    report = {
        "command": "overlaps check",
        "mode": "concrete",
        "cases": len(rep.cases),
        "unresolved": [{"family": c.family, "indices": list(c.indices)}
                       for c in rep.unresolved()],
        "confluent": rep.confluent,
        "violated_conditions": [{"condition": name, "indices": list(indices)}
                                for name, indices in violated],
        "ok": ok,
    }
    return report, ok


def _family_args(args):
    q = parse_scalar(args.q)
    lam = parse_scalar(args.lam)
    return args.M, args.N, q, lam


def _cmd_family_build(args):
    M, N, q, lam = _family_args(args)
    try:
        H = build_family_B(M, N, q, lam)
    except ValueError as exc:
        raise CliError(str(exc))
    report = {
        "command": "family build",
        "M": M, "N": N, "q": str(q), "lambda": str(lam),
        "dimension": H.dim,
        "algebra": H.to_json_dict(),
    }
    return report, True


def _cmd_family_iso(args):
    M, N, q, lam = _family_args(args)
    lam2 = parse_scalar(args.lam2)
    try:
        answer = family_iso(M, N, q, lam, lam2)
    except ValueError as exc:
        raise CliError(str(exc))
    report = {
        "command": "family iso",
        "M": M, "N": N, "q": str(q),
        "lambda": str(lam), "lambda2": str(lam2),
        "isomorphic": answer,
    }
    return report, True


def _cmd_family_aut(args):
    M, N, q, lam = _family_args(args)
    try:
        maps = automorphisms(M, N, q, lam)
        H = build_family_B(M, N, q, lam)
    except ValueError as exc:
        raise CliError(str(exc))
    i1 = H.names.index("a1")
    i2 = H.names.index("a2")
    scalars = sorted([str(t[i1][i1]), str(t[i2][i2])] for t in maps)
    report = {
        "command": "family aut",
        "M": M, "N": N, "q": str(q), "lambda": str(lam),
        "count": len(maps),
        "generator_scalars": scalars,
    }
    return report, True


def _cmd_census_p3(args):
    qexps = _exponents(args.q_exponents) if args.q_exponents else None
    ms = _exponents(args.ms) if args.ms else None
    try:
        entries = build_p3_list(args.p, q_exponents=qexps, ms=ms)
    except ValueError as exc:
        raise CliError(str(exc))
    matrix = distinguish(entries)
    rows = []
    for entry in entries:
        record = entry.record
        rows.append({
            "label": entry.label,
            "dimension": record.dimension,
            "grouplike_count": record.grouplike_count,
            "invariant_factors": list(record.invariant_factors),
            "one_dim_count": record.one_dim_count,
            "dual_pointed": record.dual_pointed,
        })
    pairs = []
    undecided = 0
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            verdict, witness = matrix[i][j]
            undecided += verdict == "undecided"
            pairs.append({
                "pair": [entries[i].label, entries[j].label],
                "verdict": verdict,
                "witness": witness,
            })
    report = {
        "command": "census p3",
        "p": args.p,
        "entries": rows,
        "distinctions": pairs,
        "undecided_pairs": undecided,
        "ok": undecided == 0,
    }
    return report, undecided == 0


def _cmd_theta(args):
    group = _group_from_spec(args.group)
    try:
        result = theta_search(group, max_rank=args.max_rank,
                              order_bound=args.order_bound)
    except ValueError as exc:
        raise CliError(str(exc))
    witness = None
    if result.witness is not None:
        witness = {
            "g": [list(g.exponents) for g in result.witness.gs],
            "chi": [list(c.exponents) for c in result.witness.chis],
        }
    report = {
        "command": "theta",
        "group": group.spec_string(),
        "theta": result.theta,
        "exact": result.exact,
        "vertex_count": result.vertex_count,
        "witness": witness,
    }
    return report, True


def _cmd_iso(args):
    A = _load_algebra(args.left)
    B = _load_algebra(args.right)
    try:
        result = find_isomorphism(A, B, bound=args.bound)
    except ValueError as exc:
        raise CliError(str(exc))
    if result.status == "bound_exceeded":
        raise CliError("bound exceeded: %s" % result.detail)
    report = {
        "command": "iso",
        "status": result.status,
        "detail": result.detail,
    }
    if result.table is not None:
        report["map"] = {
            str(i): {str(j): str(c) for j, c in sorted(row.items())}
            for i, row in sorted(result.table.items())
        }
    return report, True


def _cmd_dual(args):
    H = _load_algebra(args.algebra)
    try:
        D = dual(H)
    except ValueError as exc:
        raise CliError(str(exc))
    report = {
        "command": "dual",
        "dimension": D.dim,
        "algebra": D.to_json_dict(),
    }
    return report, True


def _cmd_invariants(args):
    H = _load_algebra(args.algebra)
    record = invariant_record(H)
    report = {"command": "invariants"}
    report.update(record.as_dict())
    return report, True


def _format_cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)) and all(
            not isinstance(v, (dict, list, tuple)) for v in value):
        return ", ".join(_format_cell(v) for v in value) if value else "(none)"
    return str(value)


def _render_table(value, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key, item in value.items():
            if key == "algebra":
                lines.append("%s%s: (structure tables: use --output json)" % (pad, key))
            elif isinstance(item, dict) or (
                    isinstance(item, (list, tuple)) and any(
                        isinstance(v, (dict, list, tuple)) for v in item)):
                lines.append("%s%s:" % (pad, key))
                lines.extend(_render_table(item, indent + 1))
            else:
                lines.append("%s%s: %s" % (pad, key, _format_cell(item)))
    elif isinstance(value, (list, tuple)):
        for item in value:
            if isinstance(item, dict):
                lines.extend(_render_table(item, indent))
                lines.append("")
            else:
                lines.append("%s%s" % (pad, _format_cell(item)))
        while lines and not lines[-1]:
            lines.pop()
    else:
        lines.append("%s%s" % (pad, _format_cell(value)))
    return lines


def _emit(report, output):
    if output == "json":
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(_render_table(report)) + "\n")


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("table", "json"), default="table",
                        help="report format (default: table)")
    parser = argparse.ArgumentParser(
        prog="qlhopf",
        description="Exact construction, verification, and classification of "
                    "pointed Hopf algebras over abelian groups.",
        epilog=SCALAR_GRAMMAR + "; groups: invariant factors 'M1,M2,...' ('9' or '3,3')")
    sub = parser.add_subparsers(dest="topic", required=True)

    qls = sub.add_parser("qls", help="braided vector-space algebras from a datum")
    qls_sub = qls.add_subparsers(dest="action", required=True)
    for action, handler in (("build", _cmd_qls_build), ("verify", _cmd_qls_verify)):
        p = qls_sub.add_parser(action, parents=[common])
        p.add_argument("--group", required=True, help="group spec, e.g. '9' or '3,3'")
        p.add_argument("--g", action="append", required=True,
                       help="element exponents, one flag per rank index")
        p.add_argument("--chi", action="append", required=True,
                       help="character exponents, one flag per rank index")
        p.set_defaults(handler=handler)

    lift = sub.add_parser("lift", help="liftings from a compatible datum file")
    lift_sub = lift.add_subparsers(dest="action", required=True)
    for action, handler in (("build", _cmd_lift_build),
                            ("verify", _cmd_lift_verify),
                            ("filtration", _cmd_lift_filtration)):
        p = lift_sub.add_parser(action, parents=[common])
        p.add_argument("datum", help="JSON file: {group, qls:{g,chi}, mu, lambda}")
        p.set_defaults(handler=handler)

    overlaps = sub.add_parser("overlaps", help="rewriting-system consistency checks")
    overlaps_sub = overlaps.add_subparsers(dest="action", required=True)
    p = overlaps_sub.add_parser("check", parents=[common])
    p.add_argument("datum", help="JSON datum file")
    p.add_argument("--symbolic", action="store_true",
                   help="compare emitted scalar conditions with the reference set")
    p.set_defaults(handler=_cmd_overlaps_check)

    family = sub.add_parser("family", help="the rank-two family over Z/MN")
    family_sub = family.add_subparsers(dest="action", required=True)
    for action, handler, lam2 in (("build", _cmd_family_build, False),
                                  ("iso", _cmd_family_iso, True),
                                  ("aut", _cmd_family_aut, False)):
        p = family_sub.add_parser(action, parents=[common])
        p.add_argument("--M", type=int, required=True)
        p.add_argument("--N", type=int, required=True)
        p.add_argument("--q", required=True, help="primitive N-th root, e.g. 'z3'")
        p.add_argument("--lambda", dest="lam", required=True, help="pair scalar")
        if lam2:
            p.add_argument("--lambda2", dest="lam2", required=True,
                           help="second pair scalar to compare")
        p.set_defaults(handler=handler)

    census = sub.add_parser("census", help="the dimension p^3 classification list")
    census_sub = census.add_subparsers(dest="action", required=True)
    p = census_sub.add_parser("p3", parents=[common])
    p.add_argument("--p", type=int, default=3, help="odd prime (default 3)")
    p.add_argument("--q-exponents", dest="q_exponents",
                   help="comma-separated exponent filter")
    p.add_argument("--ms", help="comma-separated m filter for the unlinked pairs")
    p.set_defaults(handler=_cmd_census_p3)

    theta = sub.add_parser("theta", parents=[common],
                           help="largest valid datum rank over a group")
    theta.add_argument("--group", required=True)
    theta.add_argument("--max-rank", dest="max_rank", type=int, default=8)
    theta.add_argument("--order-bound", dest="order_bound", type=int, default=64)
    theta.set_defaults(handler=_cmd_theta)

    iso = sub.add_parser("iso", parents=[common],
                         help="search for a Hopf isomorphism between two algebras")
    iso.add_argument("left", help="algebra JSON file")
    iso.add_argument("right", help="algebra JSON file")
    iso.add_argument("--bound", type=int, default=128,
                     help="group automorphism enumeration bound")
    iso.set_defaults(handler=_cmd_iso)

    dual_p = sub.add_parser("dual", parents=[common],
                            help="dual Hopf algebra of an algebra file")
    dual_p.add_argument("algebra", help="algebra JSON file")
    dual_p.set_defaults(handler=_cmd_dual)

    inv = sub.add_parser("invariants", parents=[common],
                         help="isomorphism-invariant fingerprint of an algebra file")
    inv.add_argument("algebra", help="algebra JSON file")
    inv.set_defaults(handler=_cmd_invariants)
    return parser


def run(argv=None):
    """Parse arguments, dispatch, emit the report; exit code 0, 1, or 2."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        report, ok = args.handler(args)
    except CliError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    _emit(report, args.output)
    return 0 if ok else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
