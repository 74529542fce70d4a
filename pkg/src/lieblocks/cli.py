"""Command-line entry point: ``lieblocks <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error (bad weight, non-skew
matrix, refused computation) and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from .algebra import DEFAULT_ORBIT_CAP, alcove, build_algebra, parse_weight
from .characters import DEFAULT_WEIGHT_CAP
from .dynkin import Method, dynkin_index, e8_fundamental_table, minimal_index
from .errors import LieBlocksError
from .parabolic import (ParabolicType, character_group_basis, line_bundle_coords, parabolic_from_weight,
                        picard_of_parabolic_moduli)
from .pfaffian import load_matrix, pfaffian
from .rational import fmt
from .verlinde import DEFAULT_PRECISION, DEFAULT_WEYL_CAP, VerlindeQuery, verlinde_evaluate

PRECISION_ENV = "LIEBLOCKS_PRECISION"

SUBCOMMANDS = ("roots", "index", "min-index", "e8-table", "alcove", "pfaffian", "picard",
               "char-group", "verlinde", "line-bundle")


@dataclass(frozen=True)
class CliConfig:
    output_format: str = "table"
    precision_bits: int = DEFAULT_PRECISION
    orbit_cap: int = DEFAULT_ORBIT_CAP
    weight_cap: int = DEFAULT_WEIGHT_CAP
    weyl_cap: int = DEFAULT_WEYL_CAP

    def __post_init__(self):
        if self.output_format not in ("json", "table"):
            raise LieBlocksError(f"unknown output format {self.output_format!r}")
        if self.precision_bits < 64:
            raise LieBlocksError("precision must be at least 64 bits")


def _default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if not raw:
        return DEFAULT_PRECISION
    try:
        return int(raw)
    except ValueError:
        raise LieBlocksError(f"{PRECISION_ENV}={raw!r} is not an integer") from None


def _weights(alg, texts: Sequence[str] | None):
    return [alg.check_weight(parse_weight(t)) for t in (texts or [])]


def _nodes(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise LieBlocksError(f"bad node list {text!r}") from None


def cmd_roots(args, cfg):
    alg = build_algebra(args.algebra)
    data = {
        "algebra": alg.designator,
        "rank": alg.rank,
        "cartan": [list(r) for r in alg.cartan],
        "form": [[fmt(x) for x in r] for r in alg.form_matrix],
        "theta": list(alg.highest_root_theta),
        "comarks": list(alg.comarks),
        "dual_coxeter": alg.dual_coxeter,
        "dim": alg.dim_g,
        "positive_roots": [list(r) for r in alg.positive_roots],
    }
    lines = [f"{alg.designator}: rank {alg.rank}, dim {alg.dim_g}, dual Coxeter {alg.dual_coxeter}",
             f"cartan   {data['cartan']}",
             f"theta    {data['theta']}",
             f"comarks  {data['comarks']}",
             f"positive roots ({len(alg.positive_roots)}):"]
    lines += [f"  {list(r)}" for r in alg.positive_roots]
    return data, lines


def cmd_index(args, cfg):
    alg = build_algebra(args.algebra)
    lam = alg.check_weight(parse_weight(args.coords))
    methods = [Method.CHARACTER_SUM, Method.CASIMIR] if args.method == "both" else \
        [Method.CHARACTER_SUM if args.method == "sum" else Method.CASIMIR]
    reports = [dynkin_index(alg, lam, m, cfg.weight_cap, cfg.orbit_cap) for m in methods]
    if len({r.index for r in reports}) > 1:
        raise LieBlocksError("character-sum and Casimir routes disagree: "
                             + ", ".join(f"{r.method.value}={r.index}" for r in reports))
    data = reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports]
    lines = [str(reports[0].index)] if len(reports) == 1 else \
        [f"{r.method.value}: {r.index}" for r in reports]
    return data, lines


def cmd_min_index(args, cfg):
    alg = build_algebra(args.algebra)
    d_g, witnesses = minimal_index(alg)
    data = {"d_g": d_g, "witnesses": [list(w) for w in witnesses]}
    nodes = [w.index(1) + 1 for w in witnesses]
    return data, [f"{alg.designator}: d_g = {d_g}, attained at " + ", ".join(f"w{i}" for i in nodes)]


def cmd_e8_table(args, cfg):
    table = e8_fundamental_table()
    data = {"algebra": "E8", "numbering": "bourbaki",
            "indices": [{"node": k, "index": str(v)} for k, v in table.items()]}
    return data, [f"w{k}: {v}" for k, v in table.items()]


def cmd_alcove(args, cfg):
    alg = build_algebra(args.algebra)
    pts = alcove(alg, args.level)
    data = {"algebra": alg.designator, "level": args.level, "size": len(pts),
            "weights": [list(p) for p in pts]}
    return data, [f"{len(pts)} weights"] + [str(list(p)) for p in pts]


def cmd_pfaffian(args, cfg):
    mat = load_matrix(args.file)
    value = pfaffian(mat)
    return {"n": mat.n, "pfaffian": fmt(value)}, [fmt(value)]


def cmd_picard(args, cfg):
    alg = build_algebra(args.algebra)
    labels = [parabolic_from_weight(alg, lam)[0] for lam in _weights(alg, args.label)]
    labels += [ParabolicType.of(alg, _nodes(s)) for s in (args.sigma or [])]
    desc = picard_of_parabolic_moduli(alg, labels)
    kind = desc.generator_kind.value
    if desc.conjectural:
        kind += f" (conjectural: L^{desc.conjectural_d} = D_w{desc.conjectural_rep_node})"
    return desc.to_json(), [f"rank {desc.rank}", f"generator {kind}"]


def cmd_char_group(args, cfg):
    alg = build_algebra(args.algebra)
    pt = ParabolicType.of(alg, _nodes(args.sigma))
    basis = character_group_basis(pt)
    data = {"algebra": alg.designator, **pt.to_json(), "basis": [list(w) for w in basis]}
    return data, [f"rank {len(basis)}"] + [str(list(w)) for w in basis]


def cmd_verlinde(args, cfg):
    alg = build_algebra(args.algebra)
    prec = args.prec if args.prec is not None else cfg.precision_bits
    q = VerlindeQuery(alg, args.level, args.genus, tuple(_weights(alg, args.label)), prec, cfg.weyl_cap)
    res = verlinde_evaluate(q)
    return res.to_json(), [str(res.dimension)]


def cmd_line_bundle(args, cfg):
    alg = build_algebra(args.algebra)
    labels = _weights(alg, args.label)
    coords = line_bundle_coords(alg, args.level, labels)
    data = {"algebra": alg.designator, "level": args.level, "coords": list(coords),
            "parabolics": [parabolic_from_weight(alg, lam)[0].to_json() for lam in labels]}
    return data, [" ".join(str(c) for c in coords)]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a flag given before the subcommand from being reset by the subparser
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON on stdout")
    common.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="lieblocks", description=__doc__.splitlines()[0], parents=[common])
    p.add_argument("--orbit-cap", type=int, default=DEFAULT_ORBIT_CAP)
    p.add_argument("--weight-cap", type=int, default=DEFAULT_WEIGHT_CAP)
    p.add_argument("--weyl-cap", type=int, default=DEFAULT_WEYL_CAP)
    sub = p.add_subparsers(dest="command", metavar="{" + ",".join(SUBCOMMANDS) + "}")
    sub.required = True

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(func=func)
        return sp

    sp = add("roots", cmd_roots, "root-system data")
    sp.add_argument("algebra")
    sp = add("index", cmd_index, "Dynkin index of an irreducible representation")
    sp.add_argument("algebra")
    sp.add_argument("coords", help="highest weight, comma-separated")
    sp.add_argument("--method", choices=("sum", "casimir", "both"), default="casimir")
    sp = add("min-index", cmd_min_index, "minimal Dynkin index")
    sp.add_argument("algebra")
    add("e8-table", cmd_e8_table, "Dynkin indices of the E8 fundamental representations")
    sp = add("alcove", cmd_alcove, "dominant weights of level at most L")
    sp.add_argument("algebra")
    sp.add_argument("--level", type=int, required=True)
    sp = add("pfaffian", cmd_pfaffian, "pfaffian of a skew matrix given as JSON")
    sp.add_argument("file")
    sp = add("picard", cmd_picard, "Picard group of the moduli of quasi-parabolic bundles")
    sp.add_argument("algebra")
    sp.add_argument("--label", action="append", help="dominant weight labelling a point")
    sp.add_argument("--sigma", action="append", help="parabolic given by its Levi nodes, e.g. 1,3")
    sp = add("char-group", cmd_char_group, "character lattice of a standard parabolic")
    sp.add_argument("algebra")
    sp.add_argument("--sigma", required=True, help="Levi nodes, e.g. 1,3 (empty string for the Borel)")
    sp = add("verlinde", cmd_verlinde, "Verlinde dimension")
    sp.add_argument("algebra")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--label", action="append")
    sp.add_argument("--prec", type=int, default=None, help="working precision in bits")
    sp = add("line-bundle", cmd_line_bundle, "coordinates of L(level, m) in Pic(M_par)")
    sp.add_argument("algebra")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--label", action="append")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt_choice = "json" if getattr(args, "json", False) else getattr(args, "format", "table")
    try:
        cfg = CliConfig(fmt_choice, _default_precision(), args.orbit_cap, args.weight_cap, args.weyl_cap)
        data, lines = args.func(args, cfg)
    except (LieBlocksError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"lieblocks: error: {exc}", file=sys.stderr)
        return 1
    if cfg.output_format == "json":
        print(json.dumps(data))
    else:
        print("\n".join(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
