"""Command-line interface.

Exit codes: 0 all checks pass, 1 a check failed, 2 input error (parse or
validation), 3 a size cap or search budget was exceeded.
"""
from __future__ import annotations

import datetime
import functools
import json
import sys

import click

from . import __version__, kernels
from .config import caps as caps_context
from .automorphisms import enumerate_automorphisms
from .checks import run_checks
from .instance import CAP_NAMES, build, build_ring, parse, parse_ring_recipe
from .semilin import semilinearize
from .twist import twistify
from .errors import CapExceeded, ParseError, TwistSemiError, ValidationError

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _parse_caps(values):
    out = {}
    for item in values:
        name, sep, val = item.partition("=")
        if not sep or not val.strip().lstrip("-").isdigit():
            raise click.BadParameter(f"expected NAME=INT, got {item!r}", param_hint="--caps")
        name = name.strip()
        if name not in CAP_NAMES:
            raise click.BadParameter(f"unknown cap {name!r}; known: {', '.join(CAP_NAMES)}", param_hint="--caps")
        out[name] = int(val)
    return out


def guarded(fn):
    """Map domain errors to the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except CapExceeded as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_CAP)
        except ParseError as exc:
            click.echo(f"parse error: {exc}", err=True)
            sys.exit(EXIT_INPUT)
        except ValidationError as exc:
            wit = f" (witness {list(exc.witness)})" if exc.witness is not None else ""
            click.echo(f"validation error: {type(exc).__name__}: {exc}{wit}", err=True)
            sys.exit(EXIT_INPUT)
        except (TwistSemiError, OSError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INPUT)

    return wrapper


caps_option = click.option(
    "--caps", "cap_values", multiple=True, metavar="NAME=INT",
    help="Override a size cap (ring, group, module, twisted, materialize, search_nodes, quadruples).",
)


def _load(path, cap_values):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    spec = parse(text)
    return spec, {**spec.caps, **_parse_caps(cap_values)}


@click.group()
@click.version_option(__version__, prog_name="twistsemi")
def main():
    """Twisted group rings, semilinearization, and their adjunction over finite rings."""


@main.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--deterministic", is_flag=True, help="Omit timestamps and wall times from the report.")
@caps_option
@guarded
def check(path, fmt, deterministic, cap_values):
    """Run the checks requested by an instance file."""
    spec, overrides = _load(path, cap_values)
    with caps_context(**overrides):
        report = run_checks(build(spec))
    doc = {
        "tool": "twistsemi",
        "version": __version__,
        "instance": spec.digest,
        **report.to_dict(deterministic),
    }
    if not deterministic:
        doc["generated_at"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
        doc["kernel_backend"] = kernels.BACKEND
    if fmt == "json":
        click.echo(json.dumps(doc, indent=2, sort_keys=True))
    else:
        click.echo(_render_text(doc))
    sys.exit(EXIT_PASS if report.passed else EXIT_FAIL)


def _render_text(doc):
    lines = [f"twistsemi {doc['version']}  instance {doc['instance'][:16]}"]
    width = max((len(r["check"]) for r in doc["records"]), default=10)
    for r in doc["records"]:
        card = " ".join(f"{k}={v}" for k, v in sorted(r["cardinalities"].items()))
        tag = " (derived)" if r["derived"] else ""
        wit = f" witnesses={r['witnesses']}" if r["witnesses"] else ""
        lines.append(f"{r['status'].upper():4}  {r['check']:<{width}}  {card}{tag}{wit}")
    for note in doc["notes"]:
        lines.append(f"note: {note}")
    n_pass = sum(r["status"] == "pass" for r in doc["records"])
    lines.append(f"{n_pass}/{len(doc['records'])} checks passed")
    return "\n".join(lines)


@main.group()
def aut():
    """Ring automorphisms."""


@aut.command("list")
@click.argument("recipe", nargs=-1, required=True)
@caps_option
@guarded
def aut_list(recipe, cap_values):
    """List Aut(R) in canonical order for a ring recipe, e.g. ``gf 2 [1,1,1]``."""
    with caps_context(**_parse_caps(cap_values)):
        ring = build_ring(parse_ring_recipe(" ".join(recipe)))
        autos = enumerate_automorphisms(ring)
    click.echo(f"Aut({ring.label}): {len(autos)} automorphism(s)")
    for i, a in enumerate(autos):
        moved = [f"{ring.name(r)}->{ring.name(a(r))}" for r in range(ring.order) if a(r) != r]
        click.echo(f"  [{i}] {a.table.tolist()}  {' '.join(moved) or 'identity'}")


@main.group()
def twist():
    """Twisted group rings."""


@twist.command("show")
@click.argument("path", type=click.Path(dir_okay=False))
@caps_option
@guarded
def twist_show(path, cap_values):
    """Print the twisted product of all monomial pairs."""
    spec, overrides = _load(path, cap_values)
    with caps_context(**overrides):
        inst = build(spec)
        tw = twistify(inst.action)
    R, G = tw.base, tw.group
    click.echo(f"{tw.label}: order {tw.order}")
    for g in range(G.order):
        click.echo(f"  theta_{G.name(g)} = {inst.action.perm(g).tolist()}")
    mono = tw.monomials
    for r1, g1, r2, g2 in ((a, b, c, d) for a in range(R.order) for b in range(G.order)
                           for c in range(R.order) for d in range(G.order)):
        if R.zero in (r1, r2):
            continue
        prod = tw.ring.mul(mono[r1, g1], mono[r2, g2]) if tw.ring.materialized else int(tw.mulv(mono[r1, g1], mono[r2, g2]))
        click.echo(f"  ({tw.name(mono[r1, g1])}) * ({tw.name(mono[r2, g2])}) = {tw.name(prod)}")


@main.group()
def semi():
    """Semilinearization groups."""


@semi.command("show")
@click.argument("path", type=click.Path(dir_okay=False))
@caps_option
@guarded
def semi_show(path, cap_values):
    """Print the pairs (s, phi) of semi_R(S) for the instance's target."""
    spec, overrides = _load(path, cap_values)
    with caps_context(**overrides):
        inst = build(spec)
        sg = semilinearize(inst.target, inst.action.autgroup)
    S = inst.target.target
    click.echo(f"semi_R({S.label}) under {inst.ring.label}: order {len(sg)}, "
               f"{'abelian' if sg.group.is_abelian else 'non-abelian'}")
    for i, (s, phi) in enumerate(sg.pairs):
        click.echo(f"  [{i}] s={S.name(s)} phi={phi}")


if __name__ == "__main__":  # pragma: no cover
    main()
