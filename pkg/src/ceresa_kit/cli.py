"""Command-line front end: every operation with text/JSON output, CSV scans."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import ceresa, repcrit, strata
from .ceresa import PicardCurve
from .elliptic import WeierstrassCurve, affine, torsion_order_q
from .errors import DomainError
from .exactmath import rat
from .quartic import DepressedQuartic, invariants


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# Flags taking rational (or range) values whose arguments may start with a
# minus sign; "-a -12/7" is rewritten to "-a=-12/7" so the parser never
# mistakes a negative value for a flag.
_VALUE_FLAGS = {
    "-a", "-b", "-c", "-A", "-B", "-x", "-y", "-I", "-J", "-t", "-m",
    "--a-range", "--b-range", "--c-range",
}


def _merge_negative_values(argv: list[str]) -> list[str]:
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            nxt = argv[i + 1]
            if len(nxt) > 1 and nxt[0] == "-" and nxt[1].isdigit():
                out.append(f"{tok}={nxt}")
                i += 2
                continue
        out.append(tok)
        i += 1
    return out


def _parse_values(text: str) -> list[Fraction]:
    """Grid values: "lo:hi[:step]" (inclusive) or a comma-separated list."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) not in (2, 3):
            raise DomainError(f"bad range {text!r}; expected lo:hi[:step]")
        lo, hi = rat(parts[0]), rat(parts[1])
        step = rat(parts[2]) if len(parts) == 3 else Fraction(1)
        if step == 0:
            raise DomainError("range step must be nonzero")
        values = []
        v = lo
        while (step > 0 and v <= hi) or (step < 0 and v >= hi):
            values.append(v)
            v += step
        return values
    return [rat(part) for part in text.split(",")]


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _cmd_invariants(args) -> int:
    inv = invariants(DepressedQuartic(args.a, args.b, args.c))
    if args.format == "json":
        _print_json(inv.to_json())
    else:
        print(f"I = {inv.I}")
        print(f"J = {inv.J}")
        print(f"disc = {inv.disc}")
    return 0


def _cmd_decide(args) -> int:
    curve = PicardCurve.from_coefficients(args.a, args.b, args.c)
    verdict = ceresa.decide(curve)
    if args.format == "json":
        _print_json(ceresa.verdict_to_json(curve, verdict))
        return 0
    inv = verdict.invariants
    print(f"curve: y^3 = {curve.quartic}")
    print(f"I = {inv.I}, J = {inv.J}, disc = {inv.disc}")
    print(f"invariant point (short model y^2 = x^3 + ({-432 * inv.disc})): {verdict.point}")
    if verdict.chow.torsion:
        print(f"chow: torsion (point order {verdict.chow.point_order})")
    else:
        print("chow: non-torsion")
    print(f"griffiths: {verdict.griffiths}")
    return 0


def _cmd_torsion(args) -> int:
    curve = WeierstrassCurve(args.A, args.B)
    point = affine(args.x, args.y)
    order = torsion_order_q(curve, point)
    if args.format == "json":
        _print_json(
            {
                "curve": curve.to_json(),
                "point": point.to_json(),
                "torsion": order is not None,
                "order": order,
            }
        )
    elif order is None:
        print("infinite order (non-torsion over Q)")
    else:
        print(f"torsion of order {order}")
    return 0


def _cmd_family(args) -> int:
    curve = ceresa.family_generate(args.I, args.J, args.t)
    inv = invariants(curve.quartic)
    if args.format == "json":
        _print_json({"curve": curve.quartic.to_json(), **inv.to_json()})
    else:
        print(f"member: y^3 = {curve.quartic}")
        print(f"I = {inv.I}, J = {inv.J}, disc = {inv.disc}")
    return 0


def _cmd_e0_torsion(args) -> int:
    points = ceresa.e0_rational_torsion()
    if args.format == "json":
        _print_json(
            {"model": "y^2 = 4x^3 - 27", "points": [p.to_json() for p in points]}
        )
    else:
        print("rational torsion of y^2 = 4x^3 - 27:")
        for p in points:
            print(f"  {p}")
    return 0


def _cmd_bielliptic(args) -> int:
    consistent = ceresa.bielliptic_consistency(args.a, args.c)
    if args.format == "json":
        _print_json({"a": str(rat(args.a)), "c": str(rat(args.c)), "consistent": consistent})
    else:
        print(f"consistent: {'true' if consistent else 'false'}")
    return 0


def _load_profile(source: str) -> repcrit.ActionProfile:
    if source in repcrit.PRESET_NAMES or source.startswith("dihedral:"):
        return repcrit.preset_profile(source)
    try:
        with open(source, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise DomainError(f"no such preset or profile file: {source!r}") from exc
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid profile JSON in {source!r}: {exc}") from exc
    return repcrit.profile_from_json(data)


def _cmd_repcrit(args) -> int:
    profile = _load_profile(args.profile)
    d_v = repcrit.dim_inv_wedge3(profile, "V")
    d3 = repcrit.dim_inv_wedge3(profile, "H1")
    d1 = repcrit.invariant_dim(profile, "H1")
    crit_a = repcrit.chow_criterion_applies(profile)
    crit_b = repcrit.griffiths_criterion_applies(profile)
    if args.format == "json":
        out = {
            "group_order": profile.group_order,
            "level": profile.level,
            "dim_v": profile.dim,
            "wedge3_v_invariants": d_v,
            "wedge3_h1_invariants": d3,
            "h1_invariants": d1,
            "prim3_invariants": d3 - d1,
        }
        if args.criterion in (None, "a"):
            out["criterion_a"] = crit_a
        if args.criterion in (None, "b"):
            out["criterion_b"] = crit_b
        _print_json(out)
        return 0
    print(f"group order {profile.group_order}, level {profile.level}, dim V = {profile.dim}")
    print(f"dim (wedge^3 V)^G = {d_v}")
    print(f"dim (wedge^3 H1)^G = {d3}, dim (H1)^G = {d1}, primitive part = {d3 - d1}")
    if args.criterion in (None, "a"):
        print(f"criterion a (chow-level, primitive H^3 invariants vanish): "
              f"{'holds' if crit_a else 'fails'}")
    if args.criterion in (None, "b"):
        print(f"criterion b (griffiths-level, wedge^3 V invariants vanish): "
              f"{'holds' if crit_b else 'fails'}")
    return 0


def _cmd_dihedral(args) -> int:
    genus = repcrit.dihedral_genus(args.m, args.a, args.b)
    vanishing = repcrit.dihedral_vanishing(args.m, args.a, args.b)
    witness = repcrit.dihedral_witness_triple(args.m, args.a, args.b)
    if args.format == "json":
        _print_json(
            {
                "m": args.m,
                "a": args.a,
                "b": args.b,
                "genus": genus,
                "vanishing": vanishing,
                "witness_triple": list(witness) if witness else None,
            }
        )
        return 0
    if vanishing:
        print(f"genus {genus}; (⋀³V)^{{D_{args.m}}} = 0: criterion holds")
    else:
        n1, n2, n3 = witness
        print(
            f"genus {genus}; (⋀³V)^{{D_{args.m}}} ≠ 0: "
            f"criterion fails (triple {n1}+{n2}+{n3})"
        )
    return 0


def _strata_text_row(record: strata.StratumRecord) -> str:
    return (
        f"{record.label:<7} {record.dim:>3}   "
        f"{'yes' if record.chow_torsion else 'no':<5} "
        f"{'yes' if record.griffiths_torsion else 'no':<10} "
        f"{record.gap_label or '-':<9} {record.model_equation or '-'}"
    )


def _cmd_strata(args) -> int:
    if args.check:
        consistent = strata.verdict_consistency()
        if args.format == "json":
            _print_json({"consistent": consistent})
        else:
            print(f"consistency: {'ok' if consistent else 'FAILED'}")
        return 0
    if args.group is not None:
        record = strata.stratum_info(args.group)
        if args.format == "json":
            _print_json(record.to_json())
        else:
            print("label    dim   chow  griffiths  gap       model")
            print(_strata_text_row(record))
        return 0
    records = [strata.stratum_info(label) for label in strata.labels()]
    if args.format == "json":
        _print_json({"strata": [r.to_json() for r in records]})
    else:
        print("label    dim   chow  griffiths  gap       model")
        for record in records:
            print(_strata_text_row(record))
    return 0


def _cmd_scan(args) -> int:
    records = ceresa.scan(
        _parse_values(args.a_range),
        _parse_values(args.b_range),
        _parse_values(args.c_range),
        threads=args.threads,
    )
    payload = "\n".join(ceresa.scan_csv_lines(records)) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> _Parser:
    parser = _Parser(prog="ceresa-kit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", help="invariants (I, J, disc) of a quartic")
    for flag in ("-a", "-b", "-c"):
        p.add_argument(flag, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_invariants)

    p = sub.add_parser("decide", help="Ceresa torsion verdict for y^3 = quartic")
    for flag in ("-a", "-b", "-c"):
        p.add_argument(flag, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_decide)

    p = sub.add_parser("torsion", help="order of a point on y^2 = x^3 + Ax + B over Q")
    for flag in ("-A", "-B", "-x", "-y"):
        p.add_argument(flag, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_torsion)

    p = sub.add_parser("family", help="torsion-family member for (I, J) at parameter t")
    for flag in ("-I", "-J", "-t"):
        p.add_argument(flag, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("e0-torsion", help="rational torsion of y^2 = 4x^3 - 27")
    _add_format(p)
    p.set_defaults(handler=_cmd_e0_torsion)

    p = sub.add_parser("bielliptic", help="cross-check the b = 0 isogeny route")
    for flag in ("-a", "-c"):
        p.add_argument(flag, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_bielliptic)

    p = sub.add_parser("repcrit", help="group-action vanishing criteria from a profile")
    p.add_argument("--profile", required=True,
                   help="profile JSON file or preset: "
                        f"{', '.join(repcrit.PRESET_NAMES)}, dihedral:m,a,b")
    p.add_argument("--criterion", choices=("a", "b"), default=None)
    _add_format(p)
    p.set_defaults(handler=_cmd_repcrit)

    p = sub.add_parser("dihedral", help="genus and triple criterion of a dihedral cover")
    for flag in ("-m", "-a", "-b"):
        p.add_argument(flag, required=True, type=int)
    _add_format(p)
    p.set_defaults(handler=_cmd_dihedral)

    p = sub.add_parser("strata", help="genus-3 automorphism strata table")
    p.add_argument("--group", default=None)
    p.add_argument("--check", action="store_true")
    _add_format(p)
    p.set_defaults(handler=_cmd_strata)

    p = sub.add_parser("scan", help="decide a coefficient grid, emit CSV")
    p.add_argument("--a-range", required=True, dest="a_range")
    p.add_argument("--b-range", required=True, dest="b_range")
    p.add_argument("--c-range", required=True, dest="c_range")
    p.add_argument("--out", default=None)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(handler=_cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_negative_values(list(argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return 0 if exc.code in (None, 0) else int(exc.code)
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
