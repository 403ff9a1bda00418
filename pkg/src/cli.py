"""
Command-line entry point.

    python -m src.cli ct validate data/s3.ct
    python -m src.cli pg order data/psl28.gens
    python -m src.cli verify --data ./data --format json
"""

from __future__ import annotations

import functools
import json
import logging
import random
import sys
from pathlib import Path
from typing import Any, Callable, List, Literal, Optional

import click
from prettytable import PrettyTable
from pydantic import BaseModel, ConfigDict, PositiveInt, ValidationError

from configs.settings import DATA_DIR, DEFAULT_BUDGET, DEFAULT_SEED
from src.classops.characters import decompose, restrict, sum_rows, value_on
from src.classops.structure_constants import cmc
from src.errors import ResourceLimitError, ToolkitError, UsageError
from src.permgrp.backtrack import centralizer, is_conjugate
from src.permgrp.census import (
    c9_conjugacy_census,
    d18_extension_census,
    generation_check,
    subgroup_census,
)
from src.permgrp.classes import conjugacy_classes
from src.permgrp.gens_format import load_gens, parse_permutation
from src.permgrp.permutation import Permutation
from src.permgrp.stabilizer_chain import StabilizerChain, build_chain
from src.permgrp.subgroups import all_subgroups, find_element_of_order, subgroup_chain, sylow3_by_ascent
from src.pipeline.claims import render_report
from src.pipeline.run_verification import run_verification
from src.tables.ct_format import load_fusion, load_table, serialize_table
from src.tables.model import ClassFunction
from src.tables.products import direct_product
from src.tables.validate_table import generate_validation_report, validate_table

logger = logging.getLogger(__name__)

FORMATS = click.Choice(["text", "json"])


class CliConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    data_dir: Path = DATA_DIR
    seed: int = DEFAULT_SEED
    budget: PositiveInt = DEFAULT_BUDGET
    format: Literal["text", "json"] = "text"


def _config(**kwargs: Any) -> CliConfig:
    try:
        return CliConfig(**{k: v for k, v in kwargs.items() if v is not None})
    except ValidationError as e:
        first = e.errors()[0]
        raise UsageError(f"invalid {'.'.join(map(str, first['loc']))}: {first['msg']}") from e


def handle_errors(fn: Callable) -> Callable:
    """Map the error hierarchy onto exit codes: usage 2, math 1, budget 3."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ResourceLimitError as e:
            click.echo(f"[FAIL] {e}", err=True)
            click.echo(e.budget_report(), err=True)
            sys.exit(e.exit_code)
        except ToolkitError as e:
            click.echo(f"[FAIL] {e}", err=True)
            sys.exit(e.exit_code)
        except OSError as e:
            click.echo(f"[FAIL] {e}", err=True)
            sys.exit(UsageError.exit_code)

    return wrapper


def _emit(cfg: CliConfig, payload: Any, text: str) -> None:
    if cfg.format == "json":
        click.echo(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        click.echo(text)


def _names(text: str) -> List[str]:
    return [n.strip() for n in text.split(",") if n.strip()]


@click.group()
@click.option("-v", "--verbose", count=True, help="-v for progress, -vv for search details (stderr).")
def cli(verbose: int) -> None:
    """Exact character tables and permutation-group certificates."""
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True)


# =========================
# ct: character tables
# =========================
@cli.group()
def ct() -> None:
    """Character table files."""


@ct.command("validate")
@click.argument("file")
@click.option("--format", "fmt", type=FORMATS, default="text")
@handle_errors
def ct_validate(file: str, fmt: str) -> None:
    cfg = _config(format=fmt)
    report = validate_table(load_table(file))
    _emit(cfg, report.as_dict(), generate_validation_report(report))
    if not report.ok:
        sys.exit(1)


def _character(table, char: Optional[str], sum_: Optional[str]) -> ClassFunction:
    if (char is None) == (sum_ is None):
        raise UsageError("give exactly one of --char and --sum")
    return sum_rows(table, _names(char or sum_))


@ct.command("decompose")
@click.argument("file")
@click.option("--char", default=None, help="Row name.")
@click.option("--sum", "sum_", default=None, help="Comma-separated row names to add.")
@click.option("--format", "fmt", type=FORMATS, default="text")
@handle_errors
def ct_decompose(file: str, char: Optional[str], sum_: Optional[str], fmt: str) -> None:
    cfg = _config(format=fmt)
    table = load_table(file)
    d = decompose(table, _character(table, char, sum_))
    payload = {"parts": d.as_dict(), "ok": d.ok, "failures": d.failures()}
    _emit(cfg, payload, str(d))
    if not d.ok:
        sys.exit(1)


@ct.command("product")
@click.argument("a")
@click.argument("b")
@click.option("-o", "--out", "out", required=True, help="Output .ct file.")
@click.option("--format", "fmt", type=FORMATS, default="text")
@handle_errors
def ct_product(a: str, b: str, out: str, fmt: str) -> None:
    cfg = _config(format=fmt)
    t = direct_product(load_table(a), load_table(b))
    Path(out).write_text(serialize_table(t), encoding="utf-8")
    _emit(
        cfg,
        {"name": t.name, "order": t.group_order, "classes": t.class_count, "partial": t.partial, "out": out},
        f"[OK] wrote {t.name} ({t.class_count} classes, order {t.group_order}) to {out}",
    )


@ct.command("restrict")
@click.argument("g")
@click.argument("h")
@click.argument("fusion")
@click.option("--char", required=True, help="Row name (or comma-separated sum) of G.")
@click.option("--format", "fmt", type=FORMATS, default="text")
@handle_errors
def ct_restrict(g: str, h: str, fusion: str, char: str, fmt: str) -> None:
    cfg = _config(format=fmt)
    big, small = load_table(g), load_table(h)
    fu = load_fusion(fusion, small, big)
    f = restrict(fu, sum_rows(big, _names(char)))
    payload = {"values": {label: str(v) for label, v in zip(small.labels, f.values)}}
    lines = [f"{label}: {v}" for label, v in zip(small.labels, f.values)]
    if not small.partial:
        d = decompose(small, f)
        payload["decomposition"] = d.as_dict()
        lines.append(f"= {d}")
    _emit(cfg, payload, "\n".join(lines))


@ct.command("cmc")
@click.argument("file")
@click.argument("c1")
@click.argument("c2")
@click.argument("c3")
@click.option("--format", "fmt", type=FORMATS, default="text")
@handle_errors
def ct_cmc(file: str, c1: str, c2: str, c3: str, fmt: str) -> None:
    cfg = _config(format=fmt)
    value = cmc(load_table(file), c1, c2, c3)
    _emit(cfg, {"cmc": str(value), "classes": [c1, c2, c3]}, str(value))


@ct.command("value")
@click.argument("file")
@click.option("--char", required=True, help="Row name or comma-separated row names.")
@click.option("--class", "label", required=True, help="Class label.")
@click.option("--format", "fmt", type=FORMATS, default="text")
@handle_errors
def ct_value(file: str, char: str, label: str, fmt: str) -> None:
    cfg = _config(format=fmt)
    table = load_table(file)
    v = value_on(sum_rows(table, _names(char)), label)
    _emit(cfg, {"value": str(v), "char": char, "class": label}, str(v))


@ct.command("serialize")
@click.argument("file")
@handle_errors
def ct_serialize(file: str) -> None:
    click.echo(serialize_table(load_table(file)), nl=False)


# =========================
# pg: permutation groups
# =========================
@cli.group()
def pg() -> None:
    """Permutation groups given by generator files."""


def _pg_options(fn: Callable) -> Callable:
    fn = click.option("--format", "fmt", type=FORMATS, default="text")(fn)
    fn = click.option("--budget", type=int, default=DEFAULT_BUDGET, help="Backtrack node budget.")(fn)
    fn = click.option("--seed", type=int, default=DEFAULT_SEED, help="Seed for randomized searches.")(fn)
    return fn


def _load_chain(path: str) -> StabilizerChain:
    degree, gens = load_gens(path)
    return build_chain(gens, degree) if gens else subgroup_chain([], degree)


def _perm(text: str, degree: int) -> Permutation:
    return parse_permutation(text, degree)


@pg.command("order")
@click.argument("gens")
@_pg_options
@handle_errors
def pg_order(gens: str, seed: int, budget: int, fmt: str) -> None:
    cfg = _config(seed=seed, budget=budget, format=fmt)
    chain = _load_chain(gens)
    _emit(cfg, {"order": chain.order(), "degree": chain.degree}, str(chain.order()))


@pg.command("classes")
@click.argument("gens")
@_pg_options
@handle_errors
def pg_classes(gens: str, seed: int, budget: int, fmt: str) -> None:
    cfg = _config(seed=seed, budget=budget, format=fmt)
    chain = _load_chain(gens)
    classes = conjugacy_classes(chain, seed=cfg.seed, budget=cfg.budget)
    table = PrettyTable()
    table.field_names = ["#", "order", "size", "centralizer", "representative"]
    table.align = "l"
    for i, c in enumerate(classes, 1):
        table.add_row([i, c.element_order, c.size, c.centralizer_order, str(c.representative)])
    total = sum(c.size for c in classes)
    payload = {
        "group_order": chain.order(),
        "complete": total == chain.order(),
        "classes": [
            {"order": c.element_order, "size": c.size, "centralizer": c.centralizer_order, "representative": str(c.representative)}
            for c in classes
        ],
    }
    _emit(cfg, payload, f"{table.get_string()}\n{len(classes)} classes covering {total} of {chain.order()} elements")


@pg.command("centralizer")
@click.argument("gens")
@click.option("--elt", required=True, help="Element in cycle notation.")
@_pg_options
@handle_errors
def pg_centralizer(gens: str, elt: str, seed: int, budget: int, fmt: str) -> None:
    cfg = _config(seed=seed, budget=budget, format=fmt)
    chain = _load_chain(gens)
    g = _perm(elt, chain.degree)
    if not chain.contains(g):
        raise UsageError(f"{g} is not in the group")
    c = centralizer(chain, g, cfg.budget)
    _emit(cfg, {"order": c.order(), "generators": [str(h) for h in c.generators]}, str(c.order()))


@pg.command("conjugate")
@click.argument("gens")
@click.option("--x", "x_text", required=True, help="First element.")
@click.option("--y", "y_text", required=True, help="Second element.")
@_pg_options
@handle_errors
def pg_conjugate(gens: str, x_text: str, y_text: str, seed: int, budget: int, fmt: str) -> None:
    cfg = _config(seed=seed, budget=budget, format=fmt)
    chain = _load_chain(gens)
    x, y = _perm(x_text, chain.degree), _perm(y_text, chain.degree)
    w = is_conjugate(chain, x, y, cfg.budget)
    payload = {"conjugate": w is not None, "witness": None if w is None else str(w)}
    _emit(cfg, payload, "not conjugate" if w is None else f"conjugate: x^g = y for g = {w}")


@pg.command("subgroups")
@click.argument("gens")
@click.option("--min-order", type=int, default=1, help="Only list subgroups of at least this order.")
@_pg_options
@handle_errors
def pg_subgroups(gens: str, min_order: int, seed: int, budget: int, fmt: str) -> None:
    cfg = _config(seed=seed, budget=budget, format=fmt)
    subgroups = [s for s in all_subgroups(_load_chain(gens)) if s.order() >= min_order]
    payload = {"subgroups": [{"order": s.order(), "generators": [str(g) for g in s.generators]} for s in subgroups]}
    lines = [f"order {s.order()}: " + ", ".join(str(g) for g in s.generators) for s in subgroups]
    lines.append(f"{len(subgroups)} subgroups of order >= {min_order}")
    _emit(cfg, payload, "\n".join(lines))


def _three_element(chain: StabilizerChain, seed: int) -> Permutation:
    rng = random.Random(seed)
    three_part = 1
    while chain.order() % (three_part * 3) == 0:
        three_part *= 3
    n = three_part
    while n > 1:
        x = find_element_of_order(chain, n, rng)
        if x is not None:
            return x
        n //= 3
    raise UsageError("the group has order prime to 3")


@pg.command("sylow3")
@click.argument("gens")
@_pg_options
@handle_errors
def pg_sylow3(gens: str, seed: int, budget: int, fmt: str) -> None:
    cfg = _config(seed=seed, budget=budget, format=fmt)
    chain = _load_chain(gens)
    x = _three_element(chain, cfg.seed)
    p = sylow3_by_ascent(chain, x, cfg.budget)
    _emit(
        cfg,
        {"order": p.order(), "seed_element": str(x), "generators": [str(g) for g in p.generators]},
        f"Sylow 3-subgroup of order {p.order()} grown from {x}",
    )


@pg.command("c9census")
@click.argument("gens")
@_pg_options
@handle_errors
def pg_c9census(gens: str, seed: int, budget: int, fmt: str) -> None:
    cfg = _config(seed=seed, budget=budget, format=fmt)
    report = c9_conjugacy_census(_load_chain(gens), seed=cfg.seed, budget=cfg.budget)
    text = "\n".join(
        [f"{report.c9_count} cyclic subgroups of order 9 in a Sylow 3-subgroup of order {report.sylow_order}"]
        + report.witnesses
        + [f"verdict: {report.verdict}"]
    )
    _emit(cfg, report.as_dict(), text)


@pg.command("d18census")
@click.argument("gens")
@click.option("--c9", "c9_file", required=True, help="Generator file of a cyclic subgroup of order 9.")
@_pg_options
@handle_errors
def pg_d18census(gens: str, c9_file: str, seed: int, budget: int, fmt: str) -> None:
    cfg = _config(seed=seed, budget=budget, format=fmt)
    chain = _load_chain(gens)
    _, c9_gens = load_gens(c9_file)
    c9 = subgroup_chain(c9_gens, chain.degree)
    report = d18_extension_census(chain, c9, cfg.budget)
    text = "\n".join(
        [
            f"{report.involution_count} inverting involutions, {report.d18_count} D18 subgroups",
            *report.witnesses,
            f"count up to conjugacy: {report.count}",
        ]
    )
    _emit(cfg, report.as_dict(), text)


def _extender(ext: str, degree: int) -> Permutation:
    path = Path(ext)
    if path.is_file():
        _, gens = load_gens(path)
        if len(gens) != 1:
            raise UsageError(f"{ext}: expected exactly one extending element")
        return gens[0]
    return _perm(ext, degree)


@pg.command("generate")
@click.argument("gens")
@click.option("--sub", "sub_file", required=True, help="Generator file of the 3 x PSL2(8).")
@click.option("--ext", required=True, help="Extending element, as cycles or a generator file.")
@_pg_options
@handle_errors
def pg_generate(gens: str, sub_file: str, ext: str, seed: int, budget: int, fmt: str) -> None:
    cfg = _config(seed=seed, budget=budget, format=fmt)
    chain = _load_chain(gens)
    _, sub = load_gens(sub_file)
    report = generation_check(chain, sub, _extender(ext, chain.degree))
    text = "\n".join(
        [
            f"subgroup order {report.subgroup_order}",
            f"extender is an involution: {report.extender_is_involution}",
            f"closure order {report.closure_order} of {report.group_order}",
            "[OK] full group" if report.full_group else "[WARN] proper subgroup",
        ]
    )
    _emit(cfg, report.as_dict(), text)


@pg.command("census")
@click.argument("gens")
@_pg_options
@handle_errors
def pg_census(gens: str, seed: int, budget: int, fmt: str) -> None:
    cfg = _config(seed=seed, budget=budget, format=fmt)
    report = subgroup_census(_load_chain(gens))
    text = "\n".join(
        [
            f"group order {report.group_order}",
            f"cyclic subgroups of order 9: {report.c9_count}",
            f"subgroups of order 3: {report.c3_count}",
            f"complements of order 3: {report.complement_count}",
        ]
    )
    _emit(cfg, report.as_dict(), text)


# =========================
# verify
# =========================
@cli.command("verify")
@click.option("--data", "data_dir", default=str(DATA_DIR), help="Directory with the bundled data.")
@click.option("--only", default=None, help="Comma-separated step ids, e.g. R1,C2.")
@_pg_options
@handle_errors
def verify(data_dir: str, only: Optional[str], seed: int, budget: int, fmt: str) -> None:
    cfg = _config(data_dir=data_dir, seed=seed, budget=budget, format=fmt)
    report = run_verification(
        cfg.data_dir, seed=cfg.seed, budget=cfg.budget, only=_names(only) if only is not None else None
    )
    click.echo(render_report(report, cfg.format))
    if not report.ok:
        sys.exit(1)


if __name__ == "__main__":
    cli()
