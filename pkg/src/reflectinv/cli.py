"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 a
mathematical diagnostic (non-terminating numerator, freeness violation).

Groups and representations come from the built-in catalog (``--catalog
st8``) or from a JSON file (``--file``) whose scalars all use the exact
entry-text form, e.g. ``"1/2+1/2i"``; floating point never appears.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import CatalogEntry, catalog_get, relation_table
from .equivar import equivariant_basis, module_generators, primary_invariants
from .errors import (
    DiagnosticError,
    InputError,
    ReflectinvError,
    UnknownRepresentation,
)
from .exactmath import QiMatrix, gauss_print
from .group import DEFAULT_CAP, close
from .molien import molien_equivariant, numerator_wrt
from .rep import Representation, character, is_irreducible, rep_extend, tensor
from .verify import PaperVerification

DEFAULT_MAX_DEGREE = 40
MAX_DEGREE_ENV = "REFLECTINV_MAX_DEGREE"


def default_max_degree() -> int:
    value = os.environ.get(MAX_DEGREE_ENV)
    return int(value) if value else DEFAULT_MAX_DEGREE


# -- sources ------------------------------------------------------------------------


class Source:
    """A named set of generators plus representation seeds."""

    def __init__(self, name: str, generators: list[QiMatrix], generator_names, reps):
        self.name = name
        self.generators = generators
        self.generator_names = tuple(generator_names)
        self.reps = reps  # name -> list of generator-image matrices

    def resolve(self, expr: str) -> Representation:
        factors = [f.strip() for f in expr.split("*")]
        if not all(factors):
            raise UnknownRepresentation(expr)
        reps = [self._single(f) for f in factors]
        out = reps[0]
        for other in reps[1:]:
            out = tensor(out, other)
        if len(reps) > 1:
            out.label = expr.replace(" ", "")
        return out

    def _single(self, name: str) -> Representation:
        if name not in self.reps:
            raise UnknownRepresentation(name)
        return Representation(self.reps[name], label=name)

    @classmethod
    def from_catalog(cls, entry: CatalogEntry) -> "Source":
        src = cls(entry.name, entry.generators, entry.generator_names, dict(entry.reps))
        src._entry = entry
        return src

    def resolve_with_relations(self, expr: str, entry: CatalogEntry) -> Representation:
        try:
            return entry.resolve_representation(expr)
        except UnknownRepresentation:
            return self.resolve(expr)


def _parse_matrix(rows) -> QiMatrix:
    return QiMatrix.from_rows(rows)


def load_group_file(path: str) -> Source:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    try:
        n = int(data["n"])
        generators = [_parse_matrix(mat) for mat in data["generators"]]
    except (KeyError, TypeError) as exc:
        raise InputError(f"{path}: missing or malformed 'n'/'generators'") from exc
    for g in generators:
        if g.rows != n or g.cols != n:
            raise InputError(f"{path}: generator is not {n}x{n}")
    reps = {}
    for name, mats in (data.get("representations") or {}).items():
        images = [_parse_matrix(mat) for mat in mats]
        if len(images) != len(generators):
            raise InputError(
                f"{path}: representation {name!r} has {len(images)} images "
                f"for {len(generators)} generators"
            )
        reps[name] = images
    names = data.get("generator_names") or [f"g{i}" for i in range(len(generators))]
    return Source(data.get("name", path), generators, names, reps)


def export_entry(entry: CatalogEntry) -> dict:
    def matrix_rows(m: QiMatrix):
        return [[gauss_print(v) for v in m.row(i)] for i in range(m.rows)]

    return {
        "name": entry.name,
        "n": entry.generators[0].rows,
        "generator_names": list(entry.generator_names),
        "generators": [matrix_rows(g) for g in entry.generators],
        "representations": {
            name: [matrix_rows(img) for img in images]
            for name, images in entry.reps.items()
        },
    }


def _source_from_args(args) -> tuple[Source, CatalogEntry | None]:
    if args.file:
        return load_group_file(args.file), None
    entry = catalog_get(args.catalog)
    return Source.from_catalog(entry), entry


def _resolve_rep(source: Source, entry: CatalogEntry | None, expr: str) -> Representation:
    if entry is not None:
        return source.resolve_with_relations(expr, entry)
    return source.resolve(expr)


# -- commands -----------------------------------------------------------------------


def cmd_order(args) -> int:
    source, entry = _source_from_args(args)
    if args.rep:
        rep = _resolve_rep(source, entry, args.rep)
        group = close(rep.gen_images, cap=args.cap)
    else:
        group = close(source.generators, cap=args.cap)
    if args.json:
        print(json.dumps({"order": len(group)}))
    else:
        print(len(group))
    return 0


def cmd_molien(args) -> int:
    source, entry = _source_from_args(args)
    group = close(source.generators, cap=args.cap)
    rep = rep_extend(_resolve_rep(source, entry, args.rep), group)
    series = molien_equivariant(group, rep, args.max_degree)
    payload = {
        "rep": rep.label,
        "order": args.max_degree,
        "series": series.integer_coefficients(),
        "series_text": str(series),
    }
    if args.denom:
        hd = numerator_wrt(series, args.denom)
        payload["numerator"] = list(hd.numerator)
        payload["denominator_degrees"] = list(hd.denominator_degrees)
        payload["closed_form"] = str(hd)
        payload["verified_to"] = hd.verified_to
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(payload["series_text"])
        if args.denom:
            print(payload["closed_form"])
    return 0


def cmd_equivariants(args) -> int:
    source, entry = _source_from_args(args)
    group = close(source.generators, cap=args.cap)
    rep = rep_extend(_resolve_rep(source, entry, args.rep), group)
    space = equivariant_basis(group, rep, args.degree, args.method)
    if args.json:
        print(
            json.dumps(
                {
                    "rep": rep.label,
                    "degree": args.degree,
                    "dim": space.dim,
                    "basis": [[str(p) for p in F.components] for F in space.basis],
                },
                indent=2,
            )
        )
    else:
        print(f"degree {args.degree}: dimension {space.dim}")
        for F in space.basis:
            print(f"  {F}")
    return 0


def _primaries(group, args):
    degrees = tuple(args.prim_degrees) if args.prim_degrees else None
    return primary_invariants(group, degrees)


def cmd_generators(args) -> int:
    source, entry = _source_from_args(args)
    group = close(source.generators, cap=args.cap)
    rep = rep_extend(_resolve_rep(source, entry, args.rep), group)
    prim = _primaries(group, args)
    gens = module_generators(group, rep, prim, args.max_degree, method=args.method)
    if args.json:
        print(
            json.dumps(
                {
                    "rep": rep.label,
                    "verified_to": gens.verified_to,
                    "generators": [
                        {"degree": d, "components": [str(p) for p in F.components]}
                        for d, F in gens
                    ],
                },
                indent=2,
            )
        )
    else:
        for d, F in gens:
            print(f"degree {d}: {F}")
    return 0


def cmd_character(args) -> int:
    source, entry = _source_from_args(args)
    group = close(source.generators, cap=args.cap)
    rep = rep_extend(_resolve_rep(source, entry, args.rep), group)
    chi = character(rep)
    names = source.generator_names
    if args.json:
        print(
            json.dumps(
                {
                    "rep": rep.label,
                    "values": [
                        {"element": i, "word": group.word_text(i, names), "chi": gauss_print(v)}
                        for i, v in enumerate(chi.values)
                    ],
                },
                indent=2,
            )
        )
    else:
        for i, v in enumerate(chi.values):
            print(f"{i:3d}  {group.word_text(i, names):24s} {gauss_print(v)}")
    return 0


def cmd_relations(args) -> int:
    source, entry = _source_from_args(args)
    if entry is None:
        raise InputError("relations requires a catalog source")
    group = close(source.generators, cap=args.cap)
    extended = {
        name: rep_extend(entry.representation_seed(name), group)
        for name in entry.rep_names
    }
    rows = []
    ok = True
    for label, (left, right) in relation_table():
        rep = rep_extend(tensor(extended[left], extended[right], label=label), group)
        extended[label] = rep
        irreducible = is_irreducible(rep, group)
        ok = ok and irreducible
        rows.append(
            {
                "rep": label,
                "tensor": f"{left}*{right}",
                "degree": rep.degree,
                "irreducible": irreducible,
            }
        )
    chars = {name: character(rep).values for name, rep in extended.items()}
    distinct = len(set(chars.values())) == len(chars)
    squares = sum(rep.degree**2 for rep in extended.values())
    ok = ok and distinct and squares == len(group)
    if args.json:
        print(
            json.dumps(
                {
                    "relations": rows,
                    "distinct_characters": distinct,
                    "sum_of_squared_degrees": squares,
                    "group_order": len(group),
                    "ok": ok,
                },
                indent=2,
            )
        )
    else:
        for row in rows:
            status = "irreducible" if row["irreducible"] else "REDUCIBLE"
            print(f"{row['rep']:6s} = {row['tensor']:12s} degree {row['degree']}  {status}")
        print(f"distinct characters: {distinct}")
        print(f"sum of squared degrees: {squares} (group order {len(group)})")
    return 0 if ok else 1


def cmd_verify_paper(args) -> int:
    verification = PaperVerification()
    results = verification.run()
    if args.json:
        print(json.dumps([r.to_dict() for r in results], indent=2))
    else:
        for r in results:
            print(r.line())
            if not r.passed:
                for detail in r.details:
                    print(f"        {detail}")
        failed = [r for r in results if not r.passed]
        if failed:
            print(f"{len(failed)} of {len(results)} checks failed")
        else:
            print(f"all {len(results)} checks passed")
    return 0 if all(r.passed for r in results) else 1


def cmd_export(args) -> int:
    entry = catalog_get(args.catalog)
    print(json.dumps(export_entry(entry), indent=2))
    return 0


# -- argument parsing -----------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from exc


def _add_source_args(p: argparse.ArgumentParser):
    group = p.add_mutually_exclusive_group()
    group.add_argument("--catalog", default="st8", help="built-in entry name (default st8)")
    group.add_argument("--file", help="JSON group file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="closure element cap")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reflectinv",
        description="Exact invariants and equivariants of finite matrix groups over Q(i).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="group order (or image-group order with --rep)")
    _add_source_args(p)
    p.add_argument("--rep", help="representation name or tensor expression")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("molien", help="dimension series of the equivariants")
    _add_source_args(p)
    p.add_argument("--rep", required=True)
    p.add_argument("--max-degree", type=int, default=default_max_degree())
    p.add_argument("--denom", type=_int_list, help="denominator degrees, e.g. 8,12")
    p.set_defaults(func=cmd_molien)

    p = sub.add_parser("equivariants", help="basis of one degree slice")
    _add_source_args(p)
    p.add_argument("--rep", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument(
        "--method",
        choices=["reynolds", "nullspace", "crosscheck"],
        default="crosscheck",
    )
    p.set_defaults(func=cmd_equivariants)

    p = sub.add_parser("generators", help="free-module generators over the invariant ring")
    _add_source_args(p)
    p.add_argument("--rep", required=True)
    p.add_argument("--max-degree", type=int, default=default_max_degree())
    p.add_argument("--prim-degrees", type=_int_list, help="primary invariant degrees, e.g. 8,12")
    p.add_argument(
        "--method",
        choices=["reynolds", "nullspace", "crosscheck"],
        default="crosscheck",
    )
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("character", help="character values per element")
    _add_source_args(p)
    p.add_argument("--rep", required=True)
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("relations", help="verify the tensor-product relation table")
    _add_source_args(p)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("verify-paper", help="run the full reference verification suite")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("export", help="export a catalog entry as a JSON group file")
    p.add_argument("--catalog", default="st8")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DiagnosticError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (InputError, ReflectinvError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
