"""Command-line surface: build or ingest groups, run censuses, verify the
classification results over the enumerated universe, and report deficiency
spectra.

Exit codes are a stable scripting contract: 0 = success/verified,
1 = counterexample found, 2 = input or configuration error.
"""
from __future__ import annotations

import csv
import io
import json
import sys
from typing import Optional

import click

from .census import census, cyclic_subgroups
from .classify import deficiency_spectrum, theorem2_verdict
from .enumeration import (
    DEFAULT_CAP,
    EXTENDED_CAP,
    IsoClassRecord,
    enumerate_groups,
    universe,
)
from .errors import GroupError, StarWithoutIdentity
from .families import build, from_permutations, parse_family_spec, parse_permutations, recognize
from .tables import GroupTable, fingerprint, is_isomorphic, parse_cayley_table, validate_table

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT_ERROR = 2


# -- group source ingestion ----------------------------------------------


def _load_group(family: Optional[str], table: Optional[str], perms: Optional[str]):
    """Resolve the mutually exclusive source flags to (GroupTable, label)."""
    chosen = [opt for opt in (family, table, perms) if opt is not None]
    if len(chosen) != 1:
        raise click.UsageError("exactly one of --family, --table, --perms is required")
    if family is not None:
        spec = parse_family_spec(family)
        if spec.family == "product":
            label = str(spec)
        else:
            label = f"{spec.family}({spec.parameters[0]})"
        return build(spec), label
    if table is not None:
        with open(table) as fh:
            rows = parse_cayley_table(fh.read())
        g = validate_table(rows)
        return g, recognize(g) or table
    with open(perms) as fh:
        degree, generators = parse_permutations(fh.read())
    g = from_permutations(degree, generators)
    return g, recognize(g) or perms


def _source_options(fn):
    fn = click.option("--family", default=None, metavar="SPEC",
                      help="Family spec, e.g. cyclic:4 or product:cyclic:2,cyclic:4.")(fn)
    fn = click.option("--table", default=None, metavar="FILE",
                      help="Cayley table text file ('#' comments allowed).")(fn)
    fn = click.option("--perms", default=None, metavar="FILE",
                      help="Permutation generator file (first line: degree).")(fn)
    return fn


def _universe_options(fn):
    fn = click.option("--max-order", default=DEFAULT_CAP, show_default=True,
                      help="Largest group order to enumerate.")(fn)
    fn = click.option("--extended", is_flag=True,
                      help=f"Unlock orders {DEFAULT_CAP + 1}..{EXTENDED_CAP} "
                           "(potentially long-running).")(fn)
    fn = click.option("--jobs", default=1, show_default=True,
                      help="Worker processes for enumeration.")(fn)
    return fn


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        click.echo(text)
    else:
        with open(output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _fail_input(err: Exception) -> None:
    click.echo(f"error: {err}", err=True)
    sys.exit(EXIT_INPUT_ERROR)


# -- report rendering ----------------------------------------------------


def _census_text(g: GroupTable, label: str) -> str:
    c = census(g)
    v = theorem2_verdict(g)
    lines = [
        f"group: {label} (order {g.order})",
        "divisors: " + " ".join(str(d) for d in c.divisors),
        "counts:   " + " ".join(str(k) for k in c.counts),
        f"total cyclic subgroups: {c.total}",
        f"deficiency: {c.deficiency}",
        f"elementary abelian 2-group: {'yes' if v.is_elem_abelian_2 else 'no'}",
        f"star (|C| = |G|-1): {'yes' if v.satisfies_star else 'no'}",
    ]
    if v.star_identity is not None:
        lines.append(f"star identity: {v.star_identity}")
    if v.p_group == "trivial":
        lines.append("p-group: trivial")
    elif v.p_group is not None:
        lines.append(f"p-group: p = {v.p_group}")
    else:
        lines.append("p-group: no")
    return "\n".join(lines)


def _census_json(g: GroupTable) -> str:
    payload = {"census": census(g).to_dict(), "verdict": theorem2_verdict(g).to_dict()}
    return json.dumps(payload, indent=2)


def _spectrum_rows(records: list[IsoClassRecord]) -> list[tuple]:
    """(order, class_index, recognized, total_cyclic, deficiency) rows."""
    index_of = {}
    rows = []
    for rec in records:
        idx = _class_index(rec, index_of)
        rows.append((rec.order, idx, rec.recognized or "", rec.census.total,
                     rec.census.deficiency))
    return rows


def _class_index(rec: IsoClassRecord, cache: dict) -> int:
    if rec.order not in cache:
        cache[rec.order] = enumerate_groups(rec.order, extended=rec.order > DEFAULT_CAP)
    for i, other in enumerate(cache[rec.order]):
        if other.representative.table == rec.representative.table:
            return i
    raise AssertionError("record missing from its own enumeration")


def _rows_to_csv(rows: list[tuple]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["order", "class_index", "recognized", "total_cyclic", "deficiency"])
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _record_dump(rec: IsoClassRecord, index: int) -> str:
    orders, abelian, center_size, exp = rec.fingerprint
    lines = [
        f"# order {rec.order}",
        f"# class {index}",
        f"# fingerprint orders={list(orders)} abelian={abelian} "
        f"center={center_size} exponent={exp}",
        f"# recognized {rec.recognized or 'none'}",
        "# census " + json.dumps(rec.census.to_dict()),
    ]
    for row in rec.representative.table:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines)


# -- commands ------------------------------------------------------------


@click.group()
def main() -> None:
    """Cyclic-subgroup censuses and exhaustive verification for small
    finite groups."""


@main.command("census")
@_source_options
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
@click.option("--output", default=None, metavar="FILE", help="Write the report here.")
def cmd_census(family, table, perms, fmt, output):
    """Census plus classification verdict for one group."""
    try:
        g, label = _load_group(family, table, perms)
    except (GroupError, OSError) as err:
        _fail_input(err)
    if fmt == "json":
        _emit(_census_json(g), output)
    else:
        _emit(_census_text(g, label), output)


@main.command("show")
@_source_options
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
@click.option("--output", default=None, metavar="FILE", help="Write the report here.")
def cmd_show(family, table, perms, fmt, output):
    """List every cyclic subgroup of one group."""
    try:
        g, label = _load_group(family, table, perms)
    except (GroupError, OSError) as err:
        _fail_input(err)
    subs = cyclic_subgroups(g)
    c = census(g)
    if fmt == "json":
        payload = {
            "group": label,
            "subgroups": [
                {"order": s.subgroup_order, "generator": s.generator,
                 "members": list(s.members.indices())}
                for s in subs
            ],
            "census": c.to_dict(),
        }
        _emit(json.dumps(payload, indent=2), output)
        return
    lines = [f"cyclic subgroups of {label} (order {g.order}):"]
    for s in subs:
        members = "{" + ", ".join(str(i) for i in s.members.indices()) + "}"
        lines.append(f"  order {s.subgroup_order}  generator {s.generator}  members {members}")
    lines.append(f"total {c.total}, deficiency {c.deficiency}")
    _emit("\n".join(lines), output)


def _verify_t1(records: list[IsoClassRecord]):
    zero = [r for r in records if r.census.deficiency == 0]
    bad = [r for r in records
           if all(r.representative.table[x][x] == 0 for x in range(r.order))
           != (r.census.deficiency == 0)]
    summary = (f"deficiency-0 classes: {len(zero)} "
               f"(orders {', '.join(str(r.order) for r in zero)})")
    return bad, summary


def _verify_t2(records: list[IsoClassRecord]):
    star = [r for r in records if r.census.deficiency == 1]
    bad = []
    for r in star:
        try:
            v = theorem2_verdict(r.representative)
        except StarWithoutIdentity:
            bad.append(r)
            continue
        if v.star_identity is None:
            bad.append(r)
    names = ", ".join(
        theorem2_verdict(r.representative).star_identity for r in star if r not in bad
    )
    summary = (f"star groups found: {len(star)} "
               f"(orders {', '.join(str(r.order) for r in star)}) -> {names or 'none'}")
    return bad, summary


def _verify_corollary(records: list[IsoClassRecord]):
    from .classify import is_p_group

    star = [r for r in records if r.census.deficiency == 1]
    non_p = [r for r in star if is_p_group(r.representative) is None]
    s3 = build(parse_family_spec("symmetric:3"))
    bad = [r for r in non_p if not is_isomorphic(r.representative, s3)]
    if len(non_p) != 1:
        summary = f"non-p-group star classes: {len(non_p)} (expected exactly 1)"
        if not bad and non_p:
            bad = non_p
    else:
        summary = "unique non-p-group star group is isomorphic to symmetric(3)"
        if bad:
            summary = "non-p-group star group is NOT symmetric(3)"
    return bad, summary


_VERIFIERS = {"t1": _verify_t1, "t2": _verify_t2, "corollary": _verify_corollary}


@main.command("verify")
@click.argument("theorem", type=click.Choice(["t1", "t2", "corollary"]))
@_universe_options
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
def cmd_verify(theorem, max_order, extended, jobs, fmt):
    """Check t1, t2, or the corollary over the enumerated universe."""
    try:
        records = universe(max_order, extended=extended, jobs=jobs)
    except GroupError as err:
        _fail_input(err)
    bad, summary = _VERIFIERS[theorem](records)
    verdict = "VERIFIED" if not bad else "FAILED"
    if fmt == "json":
        payload = {
            "theorem": theorem,
            "max_order": max_order,
            "classes_checked": len(records),
            "summary": summary,
            "verdict": verdict,
            "counterexamples": [
                {"order": r.order, "table": [list(row) for row in r.representative.table]}
                for r in bad
            ],
        }
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(f"{theorem} over universe({max_order}): {summary}")
        for r in bad:
            click.echo(f"counterexample of order {r.order}:")
            for row in r.representative.table:
                click.echo("  " + " ".join(str(v) for v in row))
        click.echo(verdict)
    sys.exit(EXIT_OK if not bad else EXIT_COUNTEREXAMPLE)


@main.command("spectrum")
@click.option("--r", "r_value", default=None, type=int, help="Deficiency to select.")
@click.option("--all", "show_all", is_flag=True,
              help="Report every class, partitioned by (order, deficiency).")
@_universe_options
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]),
              default="text", show_default=True)
@click.option("--output", default=None, metavar="FILE", help="Write the report here.")
def cmd_spectrum(r_value, show_all, max_order, extended, jobs, fmt, output):
    """Classes with a given deficiency r, or the full spectrum with --all."""
    if (r_value is None) == (not show_all):
        raise click.UsageError("pass exactly one of --r or --all")
    if r_value is not None and r_value < 0:
        raise click.UsageError(f"deficiency must be >= 0, got {r_value}")
    try:
        records = universe(max_order, extended=extended, jobs=jobs)
    except GroupError as err:
        _fail_input(err)
    if show_all:
        selected = sorted(records, key=lambda r: (r.census.deficiency, r.order, r.fingerprint))
    else:
        selected = deficiency_spectrum(records, r_value)
    rows = _spectrum_rows(selected)
    if fmt == "csv":
        _emit(_rows_to_csv(rows), output)
    elif fmt == "json":
        payload = [
            {"order": o, "class_index": i, "recognized": name or None,
             "total_cyclic": total, "deficiency": d}
            for (o, i, name, total, d) in rows
        ]
        _emit(json.dumps(payload, indent=2), output)
    else:
        header = ("full deficiency spectrum" if show_all
                  else f"deficiency {r_value} classes") + f" over universe({max_order}):"
        lines = [header]
        for (o, i, name, total, d) in rows:
            label = name or f"order-{o} class {i}"
            lines.append(f"  order {o:>2}  class {i}  r={d}  |C|={total}  {label}")
        if not rows:
            lines.append("  (none)")
        _emit("\n".join(lines), output)


@main.command("enumerate")
@click.argument("n", type=int)
@click.option("--extended", is_flag=True,
              help=f"Unlock orders {DEFAULT_CAP + 1}..{EXTENDED_CAP}.")
@click.option("--output", default=None, metavar="FILE",
              help="Write the class dump here (default: stdout).")
def cmd_enumerate(n, extended, output):
    """Dump every isomorphism class of order N."""
    try:
        records = enumerate_groups(n, extended=extended)
    except GroupError as err:
        _fail_input(err)
    dump = "\n\n".join(_record_dump(rec, i) for i, rec in enumerate(records))
    plural = "class" if len(records) == 1 else "classes"
    click.echo(f"{len(records)} {plural}")
    if output is None:
        click.echo(dump)
    else:
        _emit(dump, output)


if __name__ == "__main__":
    main()
