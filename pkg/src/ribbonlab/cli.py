"""Command-line front end.  Heavy lifting stays in the library modules;
the commands mostly parse arguments, print and pick exit codes."""
from __future__ import annotations

import json
import os
import sys

import click

from . import core, enumeration, oracle, solver, verify

KIND_ALIASES = {"gamma": "gamma", "gamma0": "gamma0", "ext": "gamma_ext",
                "sad": "gamma_sad"}


class Exit(Exception):
    def __init__(self, code, message):
        self.code = code
        self.message = message


def _ribbon(text):
    try:
        return core.parse_ribbon(text)
    except core.RibbonError as e:
        raise Exit(1, "bad ribbon: %s" % e)


def _cache_path(explicit):
    return explicit or os.environ.get("RIBBONLAB_CACHE")


def _load_cache(path):
    if not path or not os.path.exists(path):
        return
    with open(path) as fh:
        for line in fh:
            parts = line.split()
            if len(parts) != 5:
                continue
            a = core.parse_ribbon(parts[0])
            vec = tuple(int(p.split("=", 1)[1]) for p in parts[1:])
            solver.seed_memo(a, vec)


def _save_cache(path):
    if not path:
        return
    with open(path, "w") as fh:
        for notation, vec in solver.memo_items():
            fh.write("%s g=%d g0=%d ge=%d gs=%d\n" % ((notation,) + vec))


@click.group()
@click.option("--cache", default=None, help="memo cache file (or RIBBONLAB_CACHE)")
@click.option("--recheck", is_flag=True, help="ignore cached values")
@click.pass_context
def main(ctx, cache, recheck):
    ctx.ensure_object(dict)
    path = _cache_path(cache)
    ctx.obj["cache"] = path
    if not recheck:
        try:
            _load_cache(path)
        except (OSError, core.RibbonError):
            raise Exit(1, "unreadable cache file: %s" % path)


@main.result_callback()
@click.pass_context
def _flush_cache(ctx, result, **kwargs):
    _save_cache(ctx.obj.get("cache"))


@main.command()
@click.argument("ribbon")
@click.option("--kind", default="all",
              type=click.Choice(["all", "gamma", "gamma0", "ext", "sad"]))
@click.option("--trace", is_flag=True)
def compute(ribbon, kind, trace):
    """Invariants of one ribbon, as key=value pairs on a single line."""
    a = _ribbon(ribbon)
    if kind == "all":
        g, g0, ge, gs = solver.invariant_vector(a)
        click.echo("gamma=%d gamma0=%d ext=%d sad=%d" % (g, g0, ge, gs))
    else:
        k = KIND_ALIASES[kind]
        click.echo("%s=%d" % (kind, solver.invariant(a, k)))
    if trace:
        k = KIND_ALIASES[kind] if kind != "all" else "gamma"
        _print_trace(solver.solve_trace(a, k), 0)


def _print_trace(t, depth):
    label = t.action + (" %s" % (t.detail,) if t.detail else "")
    click.echo("%s%s w=%d %s" % ("  " * depth, label, t.weight, t.ribbon))
    for child in t.children:
        _print_trace(child, depth + 1)


@main.command("oracle")
@click.argument("ribbon")
@click.option("--count", "show_count", is_flag=True)
@click.option("--by-size", "by_size", is_flag=True)
@click.option("--emit-packings", "emit", is_flag=True)
def oracle_cmd(ribbon, show_count, by_size, emit):
    """Packing-oracle view of one ribbon."""
    a = _ribbon(ribbon)
    if emit:
        for packing in oracle.enumerate_packings(a):
            click.echo(json.dumps(oracle.packing_to_json(packing)))
        return
    s = oracle.survey(a)
    line = "gamma=%d gamma0=%d ext=%d sad=%d" % s.minima
    if show_count:
        line += " packings=%d minimal=%d" % (s.count, s.count_minimal[0])
    click.echo(line)
    if by_size:
        for size in sorted(s.by_size):
            click.echo("size=%d count=%d" % (size, s.by_size[size]))


@main.command()
@click.argument("ribbon")
def iszero(ribbon):
    """Decide gamma=0 and print the cancellation witness."""
    a = _ribbon(ribbon)
    zero, witness = solver.is_gamma_zero(a)
    if not zero:
        click.echo("zero=false reason=%s" % witness)
        return
    click.echo("zero=true steps=%d" % len(witness))
    cur = a
    for p, q, r in witness:
        nxt = core.cancel(cur, p, q)
        click.echo("cancel p=%d q=%d  %s -> %s" % (p, q, cur, nxt))
        cur = nxt


@main.command()
@click.option("-n", "n", type=int, required=True)
@click.option("--positive", "flt", flag_value="positive")
@click.option("--negative", "flt", flag_value="negative")
@click.option("--sigma", type=int, default=None)
@click.option("--with-gamma", "with_gamma", is_flag=True)
def enumerate(n, flt, sigma, with_gamma):
    """Stream all ribbons with n nodes, one notation per line."""
    if n % 2 or n < 2:
        raise Exit(1, "n must be even and positive")
    which = ("sigma", sigma) if sigma is not None else flt
    try:
        for a in enumeration.ribbons(n, which):
            if with_gamma:
                click.echo("%s\tg=%d" % (a, solver.gamma(a)))
            else:
                click.echo(str(a))
    except enumeration.LimitExceeded as e:
        raise Exit(1, str(e))


@main.command()
@click.option("-n", "n", type=int, required=True)
@click.option("--check", is_flag=True)
def count(n, check):
    """Closed-form ribbon counts, optionally re-checked by streaming."""
    if n % 2 or n < 2:
        raise Exit(1, "n must be even and positive")
    counts = enumeration.count_ribbons(n)
    click.echo("ribbons=%d zigzag=%d positive=%d" %
               (counts["ribbon_count"], counts["zigzag_count"], counts["positive_count"]))
    if check:
        streamed = enumeration.stream_count(n)
        ok = streamed == counts["ribbon_count"]
        click.echo("check %s (streamed %d)" % ("OK" if ok else "FAILED", streamed))
        if not ok:
            raise Exit(2, "count check failed")


@main.command("verify")
@click.option("--suite", required=True)
@click.option("-n", "n", type=int, default=None)
@click.option("--seed", type=int, default=0)
@click.option("--out", type=click.Path(), default=None)
@click.option("--jobs", type=int, default=1,
              help="worker processes (suites are serial for now; kept for scripts)")
def verify_cmd(suite, n, seed, out, jobs):
    """Run one verification suite; exit 2 on failure."""
    del jobs  # single-process: the solver memo is shared in-process
    try:
        rep = verify.run_suite(suite, n, seed)
    except verify.UnknownSuite:
        raise Exit(1, "unknown suite %r (have: %s)" % (suite, ", ".join(verify.SUITE_NAMES)))
    click.echo("suite=%s n_max=%d cases=%d failures=%d time=%.1fs" %
               (rep.suite, rep.n_max, rep.cases, len(rep.failures), rep.seconds))
    for f in rep.failures[:10]:
        click.echo("FAIL %s | %s" % (f.case, f.clause))
    if out:
        with open(out, "w") as fh:
            json.dump(rep.to_json(), fh, indent=2)
    if not rep.passed:
        raise Exit(2, "suite %s failed" % suite)


@main.command()
@click.option("-n", "n", type=int, required=True)
def stats(n):
    """Gamma histogram over all ribbons with n nodes."""
    if n % 2 or n < 2 or n > 8:
        raise Exit(1, "stats needs even n with 2 <= n <= 8")
    hist = enumeration.gamma_distribution(n, solver.gamma)
    for g in sorted(hist):
        click.echo("gamma=%d count=%d" % (g, hist[g]))


@main.command()
@click.option("--port", type=int, default=8787)
@click.option("--cache", default=None)
def serve(port, cache):
    """Run the HTTP service."""
    import uvicorn

    _load_cache(_cache_path(cache))
    from .service import app
    uvicorn.run(app, host="127.0.0.1", port=port)


@main.command("game-solve")
@click.option("-n", "n", type=int, required=True)
@click.option("--seed", type=int, required=True)
def game_solve(n, seed):
    """Optimal-play winner for a seeded game permutation."""
    from . import service

    if n % 2 or not 4 <= n <= 8:
        raise Exit(1, "exact solving needs even n with 4 <= n <= 8")
    game = service.new_game(n, seed)
    winner = service.solve_permutation(game.values)
    click.echo("seed=%d permutation=%s winner=%s" %
               (seed, ",".join(map(str, game.values)), winner))


def run():
    try:
        main.main(args=sys.argv[1:], standalone_mode=False, obj={})
    except Exit as e:
        print(e.message, file=sys.stderr)
        return e.code
    except click.ClickException as e:
        e.show()
        return 1
    except click.exceptions.Abort:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(run())
