"""
Module that contains the command line app.

Why does this file exist, and why not put this in __main__?

  You might be tempted to import things from __main__ later, but that will cause
  problems: the code will get executed twice:

  - When you run `python -mpypfaff` python will execute
    ``__main__.py`` as a script. That means there won't be any
    ``pypfaff.__main__`` in ``sys.modules``.
  - When you import __main__ it will get executed again (as a module) because
    there's no ``pypfaff.__main__`` in ``sys.modules``.

  Also see (1) from http://click.pocoo.org/5/setuptools/#setuptools-integration

Exit codes: 0 when the answer is positive, 1 for a negative answer or a failed
check, 2 for usage errors and unreadable input.
"""
import functools
import logging

import click

from . import __version__
from . import serialize
from . import tables
from ._linalg import format_fraction
from ._linalg import to_fraction
from .algebra import complete_band
from .algebra import matroid_rank_report
from .algebra import pfaffian
from .algebra import ugb_counterexample
from .combinatorics import Edge
from .combinatorics import accordion
from .combinatorics import enumerate_k_triangulations
from .combinatorics import is_k_free
from .combinatorics import max_crossing_size
from .config import RunConfig
from .coords import cone_face_of
from .coords import grobner_cone
from .coords import in_grobner_cone
from .coords import is_fp_positive
from .coords import violated_facets
from .exceptions import ConeMembershipError
from .exceptions import PfaffException
from .exceptions import PreconditionError
from .fan import associahedron_polytope
from .fan import build_fan
from .fan import g_vector
from .fan import to_off
from .fan import validate_fan
from .tropical import choose_K
from .tropical import in_prevariety
from .tropical import in_pv_plus
from .tropical import is_balanced
from .tropical import max_matchings
from .tropical import sym_construction
from .tropical import sym_matrix
from .tropical import tropical_rank

logger = logging.getLogger(__name__)

COMMANDS = [
    ("mt enumerate", "enumerate_k_triangulations"),
    ("mt free", "is_k_free, max_crossing_size"),
    ("mt accordion", "accordion"),
    ("cone facets", "grobner_cone"),
    ("cone rays", "grobner_cone"),
    ("cone member", "in_grobner_cone"),
    ("cone face", "cone_face_of"),
    ("cone fp", "is_fp_positive"),
    ("trop member", "in_prevariety"),
    ("trop plus", "in_pv_plus"),
    ("trop balanced", "is_balanced"),
    ("trop matchings", "max_matchings"),
    ("trop rank", "tropical_rank"),
    ("trop sym", "sym_construction, sym_matrix, choose_K"),
    ("alg pfaffian", "pfaffian"),
    ("alg matroid-rank", "matroid_rank"),
    ("alg complete-band", "complete_band"),
    ("alg ugb-demo", "ugb_counterexample"),
    ("fan build", "build_fan"),
    ("fan gvector", "g_vector"),
    ("fan validate", "validate_fan"),
    ("fan polytope", "associahedron_polytope, to_off"),
]


def _print_version(ctx, param, value):
    if not value or ctx.resilient_parsing:
        return
    click.echo(f"pypfaff {__version__}")
    width = max(len(command) for command, _ in COMMANDS)
    for command, operation in COMMANDS:
        click.echo(f"  {command.ljust(width)}  {operation}")
    ctx.exit()


def _handles_errors(function):
    """Turn library errors into click errors with the documented exit codes."""

    @functools.wraps(function)
    def wrapper(*args, **kwargs):
        try:
            return function(*args, **kwargs)
        except serialize.MalformedInput as error:
            raise click.BadParameter(str(error), param_hint="--input")
        except PreconditionError as error:
            raise click.UsageError(str(error))
        except PfaffException as error:
            raise click.ClickException(str(error))

    return wrapper


def _emit(config, data, df=None):
    if config.output == "table" and df is not None:
        click.echo(df.to_string())
    else:
        click.echo(serialize.dumps(data))


def _decide(ctx, config, answer, data, df=None):
    _emit(config, data, df)
    if not answer:
        ctx.exit(1)


def _read(handle):
    return serialize.loads(handle.read())


def _vector(config, handle):
    return serialize.weight_vector_from_json(_read(handle), config.index_base)


def _edge(config, text):
    try:
        return serialize.edge_from_json(text, config.index_base)
    except serialize.MalformedInput as error:
        raise click.BadParameter(str(error))


def _subset(config, text):
    try:
        return [config.to_internal(int(x)) for x in text.split(",")]
    except ValueError:
        raise click.BadParameter(f"a subset is written '1,2,3,4', got {text!r}")


def _parse_K(ctx, param, value):
    if value.lower() == "auto":
        return "auto"
    if value.lower() in ("inf", "infinity", "oo"):
        return None
    try:
        return to_fraction(value)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"expected a rational, 'inf' or 'auto', got {value!r}")


input_option = click.option("--input", "handle", type=click.File("r"), default="-", show_default=True,
                            help="JSON input file, '-' for stdin.")
n_option = click.option("--n", type=click.IntRange(min=2), required=True, help="Number of vertices.")
k_option = click.option("--k", type=click.IntRange(min=1), required=True, help="Crossing parameter.")
count_option = click.option("--count", is_flag=True, help="Only print how many.")
seed_triangulation_option = click.option("--seed-triangulation", "seed", type=click.File("r"), required=True,
                                         help="EdgeSet JSON of the seed triangulation.")


@click.group(context_settings={"auto_envvar_prefix": "PYPFAFF"})
@click.option("--output", type=click.Choice(["json", "table"]), default="json", show_default=True)
@click.option("--index-base", type=click.IntRange(0, 1), default=1, show_default=True,
              help="Label of the first vertex in inputs and outputs.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for randomized checks.")
@click.option("--trials", type=click.IntRange(min=1), default=8, show_default=True,
              help="Random trials for probabilistic certificates.")
@click.option("-v", "--verbose", count=True, help="Repeat for more logging.")
@click.option("--version", is_flag=True, callback=_print_version, expose_value=False, is_eager=True,
              help="Show the version and the command table.")
@click.pass_context
def main(ctx, output, index_base, seed, trials, verbose):
    """Multitriangulations, tropical Pfaffians and g-vector fans."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    ctx.obj = RunConfig(seed=seed, trials=trials, index_base=index_base, output=output)


@main.group()
def mt():
    """Crossings, k-triangulations and accordions."""


@mt.command("enumerate")
@n_option
@k_option
@count_option
@click.pass_obj
@_handles_errors
def mt_enumerate(config, n, k, count):
    stream = enumerate_k_triangulations(n, k)
    if count:
        click.echo(sum(1 for _ in stream))
        return
    for T in stream:
        click.echo(serialize.dumps_line(serialize.edge_set_to_json(T, config.index_base)))


@mt.command("free")
@k_option
@input_option
@click.pass_context
@_handles_errors
def mt_free(ctx, k, handle):
    config = ctx.obj
    G = serialize.edge_set_from_json(_read(handle), config.index_base)
    free = is_k_free(G, k)
    report = {"k": k, "free": free, "max_crossing": max_crossing_size(G)}
    _decide(ctx, config, free, report, tables.report_to_df(report))


@mt.command("accordion")
@click.option("--k", type=click.IntRange(min=1), default=None, help="Defaults to the largest crossing of T.")
@click.option("--from", "start", required=True, help="First edge, 'i,j'.")
@click.option("--to", "end", required=True, help="Last edge, 'i,j'.")
@input_option
@click.pass_obj
@_handles_errors
def mt_accordion(config, k, start, end, handle):
    T = serialize.edge_set_from_json(_read(handle), config.index_base)
    path = accordion(T, _edge(config, start), _edge(config, end), k)
    _emit(config, [serialize.edge_key(e, config.index_base) for e in path])


@main.group()
def cone():
    """The Gröbner cone of the sub-Pfaffians."""


@cone.command("facets")
@n_option
@k_option
@count_option
@click.pass_obj
@_handles_errors
def cone_facets(config, n, k, count):
    description = grobner_cone(n, k)
    if count:
        click.echo(len(description.facets))
        return
    _emit(config, serialize.cone_to_json(description, config.index_base)["facets"],
          tables.cone_to_df(description, config.index_base))


@cone.command("rays")
@n_option
@k_option
@click.pass_obj
@_handles_errors
def cone_rays(config, n, k):
    description = grobner_cone(n, k)
    data = serialize.cone_to_json(description, config.index_base)
    _emit(config, {"rays": data["rays"], "lineality": data["lineality"]})


@cone.command("member")
@k_option
@input_option
@click.pass_context
@_handles_errors
def cone_member(ctx, k, handle):
    config = ctx.obj
    v = _vector(config, handle)
    member = in_grobner_cone(v, k)
    violated = [] if member else violated_facets(v, k)
    report = {"k": k, "member": member, "violated": [_label(config, x) for x in violated]}
    _decide(ctx, config, member, report, tables.report_to_df(report))


def _label(config, label):
    if isinstance(label, Edge):
        return serialize.edge_key(label, config.index_base)
    return [config.to_external(x) for x in label]


@cone.command("face")
@k_option
@input_option
@click.pass_context
@_handles_errors
def cone_face(ctx, k, handle):
    config = ctx.obj
    v = _vector(config, handle)
    try:
        face = cone_face_of(v, k)
    except ConeMembershipError as error:
        report = {"k": k, "member": False, "violated": [_label(config, x) for x in error.violated]}
        _decide(ctx, config, False, report, tables.report_to_df(report))
        return
    _emit(config, serialize.edge_set_to_json(face, config.index_base))


@cone.command("fp")
@input_option
@click.pass_context
@_handles_errors
def cone_fp(ctx, handle):
    config = ctx.obj
    positive = is_fp_positive(_vector(config, handle))
    _decide(ctx, config, positive, {"fp_positive": positive})


@main.group()
def trop():
    """Tropical sub-Pfaffians and tropical rank."""


@trop.command("member")
@k_option
@input_option
@click.pass_context
@_handles_errors
def trop_member(ctx, k, handle):
    config = ctx.obj
    member = in_prevariety(_vector(config, handle), k)
    _decide(ctx, config, member, {"k": k, "in_prevariety": member})


@trop.command("plus")
@k_option
@input_option
@click.pass_context
@_handles_errors
def trop_plus(ctx, k, handle):
    config = ctx.obj
    member = in_pv_plus(_vector(config, handle), k)
    _decide(ctx, config, member, {"k": k, "in_pv_plus": member})


@trop.command("balanced")
@k_option
@input_option
@click.pass_context
@_handles_errors
def trop_balanced(ctx, k, handle):
    config = ctx.obj
    balanced = is_balanced(_vector(config, handle), k)
    report = {
        "k": k,
        "balanced": balanced,
        "certificate": "equal even and odd maximum matchings on every subset; not a membership test",
    }
    _decide(ctx, config, balanced, report, tables.report_to_df(report))


@trop.command("matchings")
@click.option("--subset", required=True, help="Vertices, '1,2,3,4'.")
@input_option
@click.pass_obj
@_handles_errors
def trop_matchings(config, subset, handle):
    found = max_matchings(_vector(config, handle), _subset(config, subset))
    data = [
        {"pairs": [serialize.edge_key(e, config.index_base) for e in M], "parity": str(parity)}
        for M, parity in found
    ]
    _emit(config, data, tables.matchings_to_df(found, config.index_base))


@trop.command("rank")
@input_option
@click.pass_obj
@_handles_errors
def trop_rank(config, handle):
    M = serialize.tropical_matrix_from_json(_read(handle))
    _emit(config, {"rows": M.rows, "cols": M.cols, "tropical_rank": tropical_rank(M)})


@trop.command("sym")
@click.option("--K", "K", default="auto", show_default=True, callback=_parse_K, help="A rational, 'inf', or 'auto'.")
@click.option("--k", type=click.IntRange(min=1), default=1, show_default=True, help="Used by --K auto.")
@input_option
@click.pass_obj
@_handles_errors
def trop_sym(config, K, k, handle):
    M = serialize.tropical_matrix_from_json(_read(handle))
    if K is None:
        _emit(config, serialize.tropical_matrix_to_json(sym_matrix(M, None)))
        return
    K = choose_K(M, k) if K == "auto" else K
    v = sym_construction(M, K)
    _emit(config, {"K": str(K), "vector": serialize.weight_vector_to_json(v, config.index_base)},
          tables.weight_vector_to_df(v, config.index_base))


@main.group()
def alg():
    """Pfaffians, the algebraic matroid and low-rank completion."""


@alg.command("pfaffian")
@input_option
@click.pass_obj
@_handles_errors
def alg_pfaffian(config, handle):
    A = serialize.antisymmetric_from_json(_read(handle), config.index_base)
    _emit(config, {"n": A.n, "pfaffian": format_fraction(pfaffian(A))})


@alg.command("matroid-rank")
@k_option
@click.option("--trials", type=click.IntRange(min=1), default=None, help="Overrides the global --trials.")
@input_option
@click.pass_obj
@_handles_errors
def alg_matroid_rank(config, k, trials, handle):
    S = serialize.edge_set_from_json(_read(handle), config.index_base)
    report = matroid_rank_report(S, k, trials or config.trials, config.rng())
    _emit(config, report, tables.report_to_df(report))


@alg.command("complete-band")
@input_option
@click.pass_obj
@_handles_errors
def alg_complete_band(config, handle):
    known, n, k = serialize.band_from_json(_read(handle), config.index_base)
    _emit(config, serialize.antisymmetric_to_json(complete_band(known, n, k), config.index_base))


@alg.command("ugb-demo")
@click.pass_obj
@_handles_errors
def alg_ugb_demo(config):
    report = ugb_counterexample()
    _emit(config, report, tables.report_to_df(report))


@main.group()
def fan():
    """The g-vector fan of a triangulation and its polytope."""


def _seed(config, handle):
    return serialize.edge_set_from_json(_read(handle), config.index_base)


@fan.command("build")
@seed_triangulation_option
@click.pass_obj
@_handles_errors
def fan_build(config, seed):
    T = _seed(config, seed)
    F = build_fan(T)
    _emit(config, serialize.fan_to_json(F, T, config.index_base), tables.fan_to_df(F, config.index_base))


@fan.command("gvector")
@seed_triangulation_option
@click.option("--edge", required=True, help="Label 'i,j'.")
@click.pass_obj
@_handles_errors
def fan_gvector(config, seed, edge):
    T = _seed(config, seed)
    _emit(config, {"edge": edge, "g": list(g_vector(T, _edge(config, edge)))})


@fan.command("validate")
@input_option
@click.pass_context
@_handles_errors
def fan_validate(ctx, handle):
    config = ctx.obj
    F, T = serialize.fan_from_json(_read(handle), config.index_base)
    report = validate_fan(F, T)
    df = tables.circuits_to_df(report) if config.output == "table" else None
    _decide(ctx, config, report.valid and report.polytopal, report, df)


@fan.command("polytope")
@seed_triangulation_option
@click.option("--off", is_flag=True, help="Print OFF text (n = 6 only).")
@click.pass_obj
@_handles_errors
def fan_polytope(config, seed, off):
    P = associahedron_polytope(_seed(config, seed))
    if off:
        click.echo(to_off(P), nl=False)
        return
    _emit(config, serialize.polytope_to_json(P, config.index_base), tables.polytope_to_df(P, config.index_base))
