"""Command-line front end.

Subcommands wrap one engine operation each and serialize the result as JSON
(default) or text.  Weights are entered in epsilon-coordinates as
comma-separated exact rationals ("1,7/6,...") unless --root-coords is given,
in which case the entries are coefficients on the simple roots.  Exit codes:
0 success/pass, 1 fail verdict, 2 usage error, 3 undecided (certify only).
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import lsinduce as ls
from . import orbits as orb
from . import rootsys as rs
from .certify import (FAIL, PASS, CertificateInput, certify, delta_prime,
                      h_regular)
from .integral import cor68_dim, integral_system

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_UNDECIDED = 0, 1, 2, 3


def _parse_weight(model: rs.RootSystemModel, text: str, root_coords: bool) -> rs.Weight:
    entries = [Fraction(part.strip()) for part in text.split(",")]
    if root_coords:
        if len(entries) != model.rank:
            raise ValueError(f"expected {model.rank} simple-root coefficients")
        acc = [Fraction(0)] * model.ambient_dim
        for c, alpha in zip(entries, model.simple_roots):
            for i, x in enumerate(alpha.coords):
                acc[i] += c * x
        return rs.Weight(tuple(acc))
    return rs.canonicalize(model, entries)


def _parse_levi_indices(text: str, model: rs.RootSystemModel) -> tuple[int, ...]:
    """Parse "a1,a2,a7" or "1,2,7" (1-based simple root names) to 0-based indices."""
    out = []
    for token in text.split(","):
        token = token.strip().lower()
        if not token:
            continue
        m = re.fullmatch(r"(?:alpha|a)?(\d+)", token)
        if m is None:
            raise ValueError(f"malformed simple root name {token!r}")
        idx = int(m.group(1))
        if not 1 <= idx <= model.rank:
            raise ValueError(f"simple root index {idx} out of 1..{model.rank}")
        out.append(idx - 1)
    return tuple(sorted(set(out)))


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        _emit_text(payload)


def _emit_text(payload, indent: str = "") -> None:
    if isinstance(payload, dict):
        for key, value in payload.items():
            if isinstance(value, (dict, list)):
                print(f"{indent}{key}:")
                _emit_text(value, indent + "  ")
            else:
                print(f"{indent}{key}: {value}")
    elif isinstance(payload, list):
        for value in payload:
            if isinstance(value, (dict, list)):
                _emit_text(value, indent + "  ")
            else:
                print(f"{indent}{value}")
    else:
        print(f"{indent}{payload}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitcert",
        description="Exact certificates and orbit computations for classical "
                    "and exceptional Lie types.")
    parser.add_argument("--output", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="root-system counts for a Cartan type")
    p.add_argument("--type", required=True)

    p = sub.add_parser("pairing", help="<lambda, alpha^vee> for a root alpha")
    p.add_argument("--type", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--root", required=True)
    p.add_argument("--root-coords", action="store_true",
                   help="inputs are simple-root coefficients, not epsilon coords")

    p = sub.add_parser("delta-prime", help="half-sum of positive roots with <a,h> in {0,1}")
    p.add_argument("--type", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--root-coords", action="store_true")

    p = sub.add_parser("certify", help="run the four-condition certificate")
    p.add_argument("--type", required=True)
    p.add_argument("--levi", required=True, help="simple roots, e.g. a1,a2,a3,a4,a5,a7")
    p.add_argument("--h", help="characteristic in epsilon coords; defaults to "
                               "the regular characteristic of the Levi")
    p.add_argument("--lambda-prime", dest="lambda_prime", required=True)
    p.add_argument("--principal", action="store_true",
                   help="e is regular (principal) in the Levi")
    p.add_argument("--root-coords", action="store_true")

    p = sub.add_parser("integral", help="integral root subsystem of lambda'")
    p.add_argument("--type", required=True)
    p.add_argument("--lambda-prime", dest="lambda_prime", required=True)
    p.add_argument("--root-coords", action="store_true")

    p = sub.add_parser("induce", help="Lusztig-Spaltenstein induction of a Levi orbit")
    p.add_argument("--type", required=True, choices=("gl", "so", "sp"))
    p.add_argument("--ambient", type=int)
    p.add_argument("--levi", required=True, help="descriptor JSON")

    p = sub.add_parser("rigid", help="brute-force rigidity test for a partition")
    p.add_argument("--type", required=True, choices=("gl", "so", "sp"))
    p.add_argument("--partition", required=True)
    p.add_argument("--ambient", type=int, help="defaults to the partition total")

    p = sub.add_parser("dimz", help="centralizer dimension of a classical orbit")
    p.add_argument("--type", required=True, choices=("gl", "so", "sp"))
    p.add_argument("--partition", required=True)

    p = sub.add_parser("tables", help="embedded rigid/duality reference tables")
    p.add_argument("--table", required=True, choices=("rigid", "duality"))
    p.add_argument("--algebra")
    p.add_argument("--label")

    p = sub.add_parser("oracle", help="randomized exact Jordan-type oracle")
    p.add_argument("--type", required=True, choices=("gl", "so", "sp"))
    p.add_argument("--ambient", type=int)
    p.add_argument("--levi", required=True, help="descriptor JSON")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=8)
    return parser


def _parse_partition(text: str, kind: str) -> orb.Partition:
    parts = tuple(int(x) for x in text.split(",") if x.strip())
    return orb.Partition(parts, kind)


def _cmd_info(args) -> int:
    model = rs.build(args.type)
    _emit({"dim": model.dim, "positive_roots": len(model.positive_roots),
           "rank": model.rank}, args.output)
    return EXIT_PASS


def _cmd_pairing(args) -> int:
    model = rs.build(args.type)
    lam = _parse_weight(model, args.lam, args.root_coords)
    root = _parse_weight(model, args.root, args.root_coords)
    value = rs.pairing(model, lam, root)
    _emit({"pairing": str(value)}, args.output)
    return EXIT_PASS


def _cmd_delta_prime(args) -> int:
    model = rs.build(args.type)
    h = _parse_weight(model, args.h, args.root_coords)
    _emit({"delta_prime": delta_prime(model, h).to_strings()}, args.output)
    return EXIT_PASS


def _cmd_certify(args) -> int:
    model = rs.build(args.type)
    levi = _parse_levi_indices(args.levi, model)
    h = (h_regular(model, levi) if args.h is None
         else _parse_weight(model, args.h, args.root_coords))
    lambda_prime = _parse_weight(model, args.lambda_prime, args.root_coords)
    inp = CertificateInput(model, levi, h, lambda_prime,
                                principal_in_levi=args.principal)
    report = certify(inp)
    _emit(report.to_json_dict(), args.output)
    if report.overall == PASS:
        return EXIT_PASS
    if report.overall == FAIL:
        return EXIT_FAIL
    return EXIT_UNDECIDED


def _cmd_integral(args) -> int:
    model = rs.build(args.type)
    lambda_prime = _parse_weight(model, args.lambda_prime, args.root_coords)
    isys = integral_system(model, lambda_prime)
    value = cor68_dim(model, lambda_prime)
    _emit({
        "integral_type": rs.format_type(isys.cartan_type),
        "simple_roots": [b.to_strings() for b in isys.simple_system],
        "count": isys.size,
        "cor68": None if value is None else str(value),
    }, args.output)
    return EXIT_PASS


def _cmd_induce(args) -> int:
    levi = ls.descriptor_from_json(args.levi, kind=args.type, ambient=args.ambient)
    result = ls.induce(levi)
    if ls.is_very_even(result):
        print("note: very even partition; labels orbits I/II ambiguously",
              file=sys.stderr)
    _emit(list(result.parts), args.output)
    return EXIT_PASS


def _cmd_rigid(args) -> int:
    p = _parse_partition(args.partition, args.type)
    if args.ambient is not None and args.ambient != p.total:
        raise ValueError(f"partition sums to {p.total}, not {args.ambient}")
    bound = int(os.environ.get("ORBITCERT_MAX_AMBIENT", ls.DEFAULT_RIGID_AMBIENT))
    rigid, witness = ls.is_rigid(p, max_ambient=bound)
    _emit({"rigid": rigid,
           "witness": None if witness is None else witness.to_json_dict()},
          args.output)
    return EXIT_PASS


def _cmd_dimz(args) -> int:
    p = _parse_partition(args.partition, args.type)
    _emit({"dim_z": orb.dim_z_partition(p)}, args.output)
    return EXIT_PASS


def _cmd_tables(args) -> int:
    if args.table == "rigid":
        rows = [rec for rec in orb.RIGID_TABLE
                if (args.algebra is None or rec.algebra == args.algebra)
                and (args.label is None or rec.bala_carter == args.label)]
        if args.algebra is not None and args.label is not None:
            row = orb.rigid_table(args.algebra, args.label)
            _emit(None if row is None else {"dim_z": row.dim_z, "q": row.q_type},
                  args.output)
            return EXIT_PASS
        if args.output == "text":
            print(orb.rigid_table_csv(), end="")
            return EXIT_PASS
        _emit([{"algebra": r.algebra, "label": r.bala_carter,
                "q_type": r.q_type, "dim_z": r.dim_z} for r in rows], args.output)
        return EXIT_PASS
    rows = [rec for rec in orb.DUALITY_TABLE
            if (args.algebra is None or rec.algebra == args.algebra)
            and (args.label is None or rec.e_label == args.label)]
    if args.algebra is not None and args.label is not None:
        row = orb.duality_table(args.algebra, args.label)
        _emit(None if row is None else {"dual": row.e_dual_label}, args.output)
        return EXIT_PASS
    if args.output == "text":
        print(orb.duality_table_csv(), end="")
        return EXIT_PASS
    _emit([{"algebra": r.algebra, "label": r.e_label, "dual": r.e_dual_label}
           for r in rows], args.output)
    return EXIT_PASS


def _cmd_oracle(args) -> int:
    levi = ls.descriptor_from_json(args.levi, kind=args.type, ambient=args.ambient)
    result = ls.jordan_oracle(levi, seed=args.seed, trials=args.trials)
    _emit(list(result.parts), args.output)
    return EXIT_PASS


_COMMANDS = {
    "info": _cmd_info,
    "pairing": _cmd_pairing,
    "delta-prime": _cmd_delta_prime,
    "certify": _cmd_certify,
    "integral": _cmd_integral,
    "induce": _cmd_induce,
    "rigid": _cmd_rigid,
    "dimz": _cmd_dimz,
    "tables": _cmd_tables,
    "oracle": _cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
