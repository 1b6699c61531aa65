"""Command line front end emitting deterministic TSV or JSON tables.

Commands: weights, fuse, monodromy, locality, induce, min-weight, frobenius,
center, dirlim-selftest.  Output ordering is fixed by the canonical label
order and the given seed, so identical invocations are byte-identical.
Exit codes: 0 success, 1 computation error, 2 configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from limfuse.catdata.category import CategorySpec, category_by_name
from limfuse.catdata.labels import ForeignLabel, SimpleLabel
from limfuse.exact import format_ratfunc, parse_rat
from limfuse.exact.ratfunc import RatFunc
from limfuse.fusion.monodromy import monodromy, mueger_scan
from limfuse.fusion.ring import CategoryMismatch
from limfuse.induction.algebra import AlgebraObject, algebra_by_name
from limfuse.induction.fused import NotLocal, induced_fusion
from limfuse.induction.induced import TruncationTooSmall, induce, min_weight_summand
from limfuse.induction.frobenius import frobenius_dim
from limfuse.induction.locality import locality
from limfuse.dirlim.selftest import run_selftest


class ConfigError(ValueError):
    """Bad command-line configuration; maps to exit code 2."""


def _category(name: str) -> CategorySpec:
    try:
        return category_by_name(name)
    except ValueError as e:
        raise ConfigError(str(e)) from None


def _algebra(name: str) -> AlgebraObject:
    try:
        return algebra_by_name(name)
    except ValueError as e:
        raise ConfigError(str(e)) from None


def _pick_label(cat: CategorySpec, first: int | None, second: int | None, what: str) -> SimpleLabel:
    label_type = getattr(cat, "label_type", None)
    if label_type is None:
        raise ConfigError(f"category {cat.name} has no index selectors; use algebra commands")
    single = label_type.__dataclass_fields__ and len(label_type.__dataclass_fields__) == 1
    if first is None:
        raise ConfigError(f"missing index selector for the {what} label")
    try:
        if single:
            return label_type(first)
        if second is None:
            raise ConfigError(f"missing second index selector for the {what} label")
        return label_type(first, second)
    except ValueError as e:
        raise ConfigError(str(e)) from None


def _canonical_base(alg: AlgebraObject, values: list[int | None]) -> SimpleLabel:
    """Fill the constant index slots of the summand family with the given
    selector values; growing slots take their first-stage value."""
    from limfuse.catdata.labels import Pair

    vals = [v for v in values if v is not None]
    factors = []
    pos = 0
    for f in alg.factors:
        idx = []
        for e in f.indices:
            if e.a == 0:
                if pos >= len(vals):
                    raise ConfigError(f"algebra {alg.name} needs {_selector_count(alg)} index selector(s)")
                idx.append(vals[pos])
                pos += 1
            else:
                idx.append(e.at(1))
        try:
            factors.append(type(f.label_at(1))(*idx))
        except ValueError as e:
            raise ConfigError(str(e)) from None
    if pos != len(vals):
        raise ConfigError(f"algebra {alg.name} needs {_selector_count(alg)} index selector(s)")
    return Pair(factors[0], factors[1])


def _selector_count(alg: AlgebraObject) -> int:
    return sum(1 for f in alg.factors for e in f.indices if e.a == 0)


def _emit(fmt: str, command: str, header: list[str], rows: list[list[str]], extra: dict | None = None) -> None:
    if fmt == "tsv":
        for row in rows:
            print("\t".join(row))
        return
    doc = {"command": command, "rows": [dict(zip(header, row)) for row in rows]}
    if extra:
        doc.update(extra)
    print(json.dumps(doc, indent=2, sort_keys=True))


def cmd_weights(args) -> int:
    cat = _category(args.category)
    rows = [
        [str(x), format_ratfunc(cat.weight_of(x), cat.base_parameter)]
        for x in cat.labels_up_to(args.bound)
    ]
    _emit(args.format, "weights", ["label", "weight"], rows, {"category": cat.name})
    return 0


def cmd_fuse(args) -> int:
    cat = _category(args.category)
    x = _pick_label(cat, args.n, args.m, "first")
    y = _pick_label(cat, args.r, args.s_index, "second")
    rows = [[str(z), str(mult)] for z, mult in cat.fusion_of(x, y)]
    _emit(args.format, "fuse", ["label", "multiplicity"], rows,
          {"category": cat.name, "x": str(x), "y": str(y)})
    return 0


def cmd_monodromy(args) -> int:
    cat = _category(args.category)
    x = _pick_label(cat, args.n, args.m, "first")
    y = _pick_label(cat, args.r, args.s_index, "second")
    report = monodromy(cat, x, y)
    if args.format == "json":
        print(json.dumps({"command": "monodromy", "category": cat.name, "x": str(x),
                          "y": str(y), "rows": report.to_json()}, indent=2, sort_keys=True))
    else:
        for e in report.to_json():
            print("\t".join([e["summand"], e["exponent"], e["status"], e["phase"] or "-"]))
    return 0


def cmd_locality(args) -> int:
    alg = _algebra(args.algebra)
    base = _canonical_base(alg, [args.n, args.m])
    cert = locality(alg, base, truncate=args.truncate)
    family = (
        format_ratfunc(RatFunc(cert.exponent_family), "r")
        if cert.exponent_family is not None
        else "-"
    )
    rows = [[str(base), cert.verdict, str(cert.witness) if cert.witness else "-", family]]
    _emit(args.format, "locality", ["base", "verdict", "witness", "family"], rows,
          {"algebra": alg.name})
    return 0


def cmd_induce(args) -> int:
    alg = _algebra(args.algebra)
    base = _canonical_base(alg, [args.n, args.m])
    mod = induce(alg, base)
    rows = [[str(r), str(mod.restriction(r))] for r in range(1, args.truncate + 1)]
    _emit(args.format, "induce", ["r", "restriction"], rows,
          {"algebra": alg.name, "base": str(base)})
    return 0


def cmd_min_weight(args) -> int:
    alg = _algebra(args.algebra)
    base = _canonical_base(alg, [args.n, args.m])
    sample = parse_rat(args.sample)
    r_star, weight = min_weight_summand(induce(alg, base), sample=sample, truncate=args.truncate)
    rows = [[str(r_star), format_ratfunc(weight, alg.base_category.base_parameter)]]
    _emit(args.format, "min-weight", ["r", "weight"], rows,
          {"algebra": alg.name, "base": str(base)})
    return 0


def cmd_frobenius(args) -> int:
    alg = _algebra(args.algebra)
    base1 = _canonical_base(alg, [args.n, args.m])
    base2 = _canonical_base(alg, [args.r, args.s_index])
    dim = frobenius_dim(alg, base1, base2)
    rows = [[str(base1), str(base2), str(dim)]]
    _emit(args.format, "frobenius", ["base1", "base2", "dim"], rows, {"algebra": alg.name})
    return 0


def cmd_fuse_induced(args) -> int:
    alg = _algebra(args.algebra)
    base1 = _canonical_base(alg, [args.n, args.m])
    base2 = _canonical_base(alg, [args.r, args.s_index])
    result = induced_fusion(alg, base1, base2)
    rows = [[str(z), str(mult)] for z, mult in result]
    _emit(args.format, "fuse", ["label", "multiplicity"], rows,
          {"algebra": alg.name, "x": str(alg.to_induced(base1)), "y": str(alg.to_induced(base2))})
    return 0


def cmd_center(args) -> int:
    cat = _category(args.category)
    if args.bound < 1 or args.witness_bound < 1:
        raise ConfigError("scan bounds must be >= 1")
    threads = int(os.environ.get("VTC_THREADS", "1") or "1")
    found = mueger_scan(cat, args.bound, args.witness_bound, threads=max(threads, 1))
    rows = [[str(x)] for x in found]
    _emit(args.format, "center", ["label"], rows,
          {"category": cat.name, "bound": args.bound, "witness_bound": args.witness_bound})
    return 0


def cmd_dirlim_selftest(args) -> int:
    res = run_selftest(seed=args.seed, cases=args.cases)
    print(f"{res.passed}/{res.cases} passed")
    if not res.ok:
        for _, k, problems in res.failures:
            for p in problems:
                print(f"case {k}: {p}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="limfuse",
        description="Exact tables for direct limits and generic fusion-category data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, category=False, algebra=False, selectors=False, bounds=False):
        p.add_argument("--format", choices=["tsv", "json"], default="tsv")
        if category:
            p.add_argument("--category", required=True)
        if algebra:
            p.add_argument("--algebra", required=True)
        if selectors:
            p.add_argument("--n", type=int, default=None, help="first index of the first label")
            p.add_argument("--m", type=int, default=None, help="second index of the first label")
            p.add_argument("--r", type=int, default=None, help="first index of the second label")
            p.add_argument("--s-index", type=int, default=None, help="second index of the second label")
        if bounds:
            p.add_argument("--bound", type=int, default=12)
        p.add_argument("--truncate", type=int, default=20)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--sample", default="355/113")

    p = sub.add_parser("weights", help="conformal-weight table")
    common(p, category=True, bounds=True)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("fuse", help="fusion product of two simples")
    common(p, category=True, selectors=True)
    p.set_defaults(func=cmd_fuse)

    p = sub.add_parser("monodromy", help="per-summand double-braiding exponents")
    common(p, category=True, selectors=True)
    p.set_defaults(func=cmd_monodromy)

    p = sub.add_parser("locality", help="locality certificate for an induced module")
    common(p, algebra=True, selectors=True)
    p.set_defaults(func=cmd_locality)

    p = sub.add_parser("induce", help="restriction table of an induced module")
    common(p, algebra=True, selectors=True)
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("min-weight", help="minimum-weight slice of an induced module")
    common(p, algebra=True, selectors=True)
    p.set_defaults(func=cmd_min_weight)

    p = sub.add_parser("frobenius", help="Hom dimension between two induced modules")
    common(p, algebra=True, selectors=True)
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("fuse-induced", help="fusion of two induced modules")
    common(p, algebra=True, selectors=True)
    p.set_defaults(func=cmd_fuse_induced)

    p = sub.add_parser("center", help="transparent-object scan")
    common(p, category=True, bounds=True)
    p.add_argument("--witness-bound", type=int, default=8)
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("dirlim-selftest", help="seeded property suite for the limit machinery")
    common(p)
    p.add_argument("--cases", type=int, default=100)
    p.set_defaults(func=cmd_dirlim_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (NotLocal, TruncationTooSmall, ForeignLabel, CategoryMismatch, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
