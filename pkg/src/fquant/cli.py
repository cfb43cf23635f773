"""``fq`` command-line front end.

Exit codes: 0 success, 1 identity mismatch (verify verbs), 2 bad input or
any library error.  Errors go to stderr as ``{"error": code, "detail": msg}``.
"""
from __future__ import annotations

import functools
import json
import sys

import click

from . import io
from .branching import branch
from .characters import dim, tensor, weight_multiplicities
from .errors import FQError, InputError
from .legendre import legendre_inverse, psi_T
from .models import (
    HermitianModel,
    degree_bound,
    hermitian_quantization,
    invariant_monomials,
    properness_check,
    reduced_space_multiplicity,
)
from .polytope import biggest_ball_radius, check_adapted
from .verify import verify_convergence, verify_product_identity, verify_restriction_identity


def _emit(obj, compact: bool = False) -> None:
    click.echo(io.dumps(obj, compact=compact))


def _fail(code: str, detail: str) -> None:
    click.echo(json.dumps({"error": code, "detail": detail}), err=True)
    sys.exit(2)


def guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except FQError as exc:
            _fail(exc.code, str(exc))
        except (ValueError, KeyError, TypeError) as exc:
            _fail(InputError.code, str(exc))
    return wrapper


def _group(text: str):
    try:
        obj = io.parse_inline(text)
    except InputError:
        obj = text  # e.g. "U(2)xT1"
    return io.root_system_from_json(obj)


def _weight(rs, text: str):
    raw = io.parse_inline(text)
    if isinstance(raw, int):
        raw = [raw]
    if not isinstance(raw, list):
        raise InputError(f"weight must be a JSON list, got {text!r}")
    return rs.canonicalize(raw)


def _vector(text: str) -> list[float]:
    raw = io.parse_inline(text)
    if isinstance(raw, (int, float)):
        raw = [raw]
    if not isinstance(raw, list) or not all(isinstance(x, (int, float)) for x in raw):
        raise InputError(f"expected a list of numbers, got {text!r}")
    return [float(x) for x in raw]


def _positive(radius: float) -> float:
    if not radius > 0:
        raise InputError("radius must be positive")
    return radius


def _model(path: str) -> HermitianModel:
    return io.model_from_json(io.parse_inline(path))


def _show_character(c, as_json: bool) -> None:
    if as_json:
        _emit(io.character_to_json(c))
    else:
        _emit(io.character_compact(c), compact=True)


def _show_series(s, as_json: bool) -> None:
    if as_json:
        _emit(io.series_to_json(s))
    else:
        _emit(io.character_compact(s), compact=True)


def _show_report(rep, as_json: bool) -> None:
    if as_json:
        _emit(rep.to_json())
    else:
        click.echo("PASS" if rep.passed else "FAIL")
        for w, a, b in rep.mismatches:
            click.echo(f"  {io._weight_key(w)}: lhs={a} rhs={b}")
    sys.exit(0 if rep.passed else 1)


json_flag = click.option("--json", "as_json", is_flag=True, help="Full JSON schema output.")
group_opt = click.option("--group", "group_", required=True, help="Group JSON (file or inline) or e.g. 'U(2)'.")
model_opt = click.option("--model", required=True, help="Hermitian model JSON.")
radius_opt = click.option("--radius", type=float, required=True)
polytope_opt = click.option("--polytope", required=True, help="Polytope JSON.")


@click.group()
def cli():
    """Formal geometric quantization calculator."""


@cli.command()
@group_opt
@click.option("--weight", required=True)
@json_flag
@guarded
def weights(group_, weight, as_json):
    """Weight multiplicities of V_lambda."""
    rs = _group(group_)
    mults = weight_multiplicities(_weight(rs, weight), rs)
    if as_json:
        _emit({"group": io.group_to_json(rs.group),
               "weights": [{"weight": list(w), "mult": m} for w, m in sorted(mults.items())]})
    else:
        _emit({io._weight_key(w): m for w, m in sorted(mults.items(), reverse=True)}, compact=True)


@cli.command(name="dim")
@group_opt
@click.option("--weight", required=True)
@guarded
def dim_cmd(group_, weight):
    """Dimension of V_lambda."""
    rs = _group(group_)
    click.echo(dim(_weight(rs, weight), rs))


@cli.command(name="tensor")
@group_opt
@click.option("--lhs", required=True)
@click.option("--rhs", required=True)
@json_flag
@guarded
def tensor_cmd(group_, lhs, rhs, as_json):
    """Decompose V_lhs (x) V_rhs."""
    rs = _group(group_)
    _show_character(tensor(_weight(rs, lhs), _weight(rs, rhs), rs), as_json)


@cli.command(name="branch")
@click.option("--embedding", required=True)
@click.option("--weight", required=True)
@json_flag
@guarded
def branch_cmd(embedding, weight, as_json):
    """Restrict V_mu to the subgroup."""
    emb = io.embedding_from_json(io.parse_inline(embedding))
    _show_character(branch(_weight(emb.supergroup, weight), emb), as_json)


@click.command(name="quantize")
@model_opt
@radius_opt
@json_flag
@guarded
def quantize(model, radius, as_json):
    """Formal quantization of a Hermitian model on the ball of given radius."""
    _positive(radius)
    _show_series(hermitian_quantization(_model(model), radius), as_json)


cli.add_command(quantize)


@cli.command()
@model_opt
@click.option("--weight", required=True)
@guarded
def reduce(model, weight):
    """Quantization of the reduced space at mu."""
    m = _model(model)
    click.echo(reduced_space_multiplicity(m, _weight(m.rs, weight)))


@cli.command()
@model_opt
@click.option("--max-degree", type=int, default=6, show_default=True)
@guarded
def properness(model, max_degree):
    """Torus-hull properness test and invariant-monomial search."""
    m = _model(model)
    p = properness_check(m)
    try:
        bound = degree_bound(m, 1.0).method
    except FQError:
        bound = None
    _emit({
        "proper": p.proper,
        "margin": str(p.margin),
        "degree_bound": bound,
        "invariant_monomials": [list(e) for e in invariant_monomials(m, max_degree)],
    })


@click.group()
def verify():
    """Check an identity; exit 1 on mismatch."""


@click.command(name="restriction")
@model_opt
@click.option("--embedding", required=True)
@radius_opt
@json_flag
@guarded
def verify_restriction(model, embedding, radius, as_json):
    _positive(radius)
    m = _model(model)
    emb = io.embedding_from_json(io.parse_inline(embedding))
    _show_report(verify_restriction_identity(m, emb, radius), as_json)


@click.command(name="product")
@model_opt
@click.option("--theta", required=True)
@radius_opt
@json_flag
@guarded
def verify_product(model, theta, radius, as_json):
    _positive(radius)
    m = _model(model)
    _show_report(verify_product_identity(m, _weight(m.rs, theta), radius), as_json)


@click.command(name="convergence")
@model_opt
@polytope_opt
@click.option("--n", "n_max", type=int, default=5, show_default=True)
@json_flag
@guarded
def verify_conv(model, polytope, n_max, as_json):
    if n_max < 1:
        raise InputError("--n must be a positive integer")
    m = _model(model)
    P = io.polytope_from_json(io.parse_inline(polytope))
    _show_report(verify_convergence(m, P, n_max), as_json)


@click.group(name="polytope")
def polytope_grp():
    """K-adapted polytopes and the Legendre map."""


@click.command(name="check")
@polytope_opt
@guarded
def polytope_check(polytope):
    P = io.polytope_from_json(io.parse_inline(polytope))
    _emit(check_adapted(P).to_json())


@click.command(name="psi")
@polytope_opt
@click.option("--y", "y", required=True, help="Point of the Lie algebra, lattice-dual coordinates.")
@guarded
def polytope_psi(polytope, y):
    P = io.polytope_from_json(io.parse_inline(polytope))
    _emit([float(v) for v in psi_T(P, _vector(y))], compact=True)


@click.command(name="inverse")
@polytope_opt
@click.option("--xi", required=True)
@guarded
def polytope_inverse(polytope, xi):
    P = io.polytope_from_json(io.parse_inline(polytope))
    _emit([float(v) for v in legendre_inverse(P, _vector(xi))], compact=True)


@click.command(name="ball")
@polytope_opt
@guarded
def polytope_ball(polytope):
    P = io.polytope_from_json(io.parse_inline(polytope))
    _emit({"eps_sq": str(P.eps_sq), "eps": biggest_ball_radius(P)})


@click.group()
def hermitian():
    """Hermitian vector space models."""


for _grp, _cmds, _prefix in (
    (verify, (verify_restriction, verify_product, verify_conv), "verify"),
    (polytope_grp, (polytope_check, polytope_psi, polytope_inverse, polytope_ball), "polytope"),
):
    cli.add_command(_grp)
    for _cmd in _cmds:
        _grp.add_command(_cmd)
        cli.add_command(_cmd, name=f"{_prefix}-{_cmd.name}")
hermitian.add_command(quantize)
cli.add_command(hermitian)


def main(argv=None) -> None:
    cli.main(args=argv, prog_name="fq")


if __name__ == "__main__":  # pragma: no cover
    main()
