"""Command line front end.

Three commands:

  eval    evaluate one operator at one parameter point, print the value
  verify  run an identity check or sweep, stream one report per point
  table   print a whole grid-function window as CSV or JSON

Exit codes are uniform: 0 success, 1 any mismatch or float_only report,
2 usage, config, or domain errors.  Identical invocations produce
byte-identical output.
"""
from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from .errors import DeltafracError
from .exact import GammaPolynomial, parse_rational, render_rational
from .fracops import (
    FracOrder,
    ae_frac_diff,
    frac_sum_diff,
    mr_frac_diff,
    nabla_poch_diff,
)
from .gridfn import GridFunction, sample_falling_power
from .identities import hyp3f2_terminating
from .report import (
    DOMAIN_EXCLUDED,
    EXACT,
    FLOAT_ONLY,
    MISMATCH,
    POLE,
    VerificationReport,
)
from .special import SpecialValue, falling, gen_binomial, pochhammer
from .sweeps import (
    SweepConfig,
    default_suite,
    identity_names,
    load_config,
    run_sweep,
)

_STATUS_ORDER = (EXACT, FLOAT_ONLY, MISMATCH, DOMAIN_EXCLUDED, POLE)


class RationalParam(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        try:
            return parse_rational(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


RATIONAL = RationalParam()


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _parse_window_spec(spec: str, a: Fraction, length: int) -> GridFunction:
    """Grid-function literals: const:Q, kpow:J, table:Q1,Q2,..., fallpow:MU."""
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise ValueError(f"grid spec needs kind:payload, got {spec!r}")
    if kind == "const":
        q = parse_rational(rest)
        return GridFunction(a, [q] * length)
    if kind == "kpow":
        try:
            j = int(rest)
        except ValueError:
            raise ValueError(f"kpow exponent must be an integer, got {rest!r}") from None
        if j < 0:
            raise ValueError("kpow exponent must be nonnegative")
        return GridFunction(a, [Fraction(k**j) for k in range(length)])
    if kind == "table":
        values = [parse_rational(part) for part in rest.split(",")]
        return GridFunction(a, values)
    if kind == "fallpow":
        mu = parse_rational(rest)
        return sample_falling_power(a, mu, length)
    raise ValueError(f"unknown grid spec kind: {kind!r}")


def _render_value(value) -> tuple[str, float | None]:
    if isinstance(value, SpecialValue):
        if value.is_pole:
            return "pole", None
        return value.render(), value.as_polynomial().to_float()
    if isinstance(value, GammaPolynomial):
        return value.render(), value.to_float()
    return render_rational(value), float(value)


@click.group()
def main() -> None:
    """Exact discrete fractional calculus: evaluate operators, verify identities."""


@main.command("eval")
@click.argument(
    "subject",
    type=click.Choice(
        ["falling", "poch", "binom", "fracsum", "mrdiff", "aediff", "nabla", "hyp3f2"]
    ),
)
@click.option("--x", type=RATIONAL, default=None, help="base argument")
@click.option("--y", type=RATIONAL, default=None, help="order argument")
@click.option("--alpha", type=RATIONAL, default=None, help="binomial upper / nabla order")
@click.option("--n", type=int, default=None, help="binomial lower index")
@click.option("--a", type=RATIONAL, default=Fraction(0), help="grid origin")
@click.option("--nu", type=RATIONAL, default=None, help="fracsum order")
@click.option("--mu", type=RATIONAL, default=None, help="mrdiff/aediff order")
@click.option("--p", type=RATIONAL, default=None, help="nabla power exponent")
@click.option("--t-index", "t_index", type=int, default=None, help="grid steps past the origin")
@click.option("--f", "f_spec", default="const:1", help="grid function: const:Q | kpow:J | table:Q,... | fallpow:MU")
@click.option("--len", "length", type=int, default=8, help="window length")
@click.option("--at", type=int, default=0, help="output window index")
@click.option("--a1", type=RATIONAL, default=None, help="series upper parameter")
@click.option("--a2", type=RATIONAL, default=None, help="series upper parameter")
@click.option("--m", type=int, default=None, help="series truncation order")
@click.option("--b1", type=RATIONAL, default=None, help="series lower parameter")
@click.option("--b2", type=RATIONAL, default=None, help="series lower parameter")
@click.option("--z", type=RATIONAL, default=None, help="series argument")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def cmd_eval(subject, x, y, alpha, n, a, nu, mu, p, t_index, f_spec, length, at, a1, a2, m, b1, b2, z, fmt):
    """Evaluate one operator at one parameter point."""

    def need(**flags):
        for name, value in flags.items():
            if value is None:
                _fail(f"eval {subject} needs --{name.replace('_', '-')}")

    try:
        if subject == "falling":
            need(x=x, y=y)
            value = falling(x, y)
        elif subject == "poch":
            need(x=x, y=y)
            value = pochhammer(x, y)
        elif subject == "binom":
            need(alpha=alpha, n=n)
            value = gen_binomial(alpha, n)
        elif subject == "fracsum":
            need(nu=nu)
            gf = frac_sum_diff(_parse_window_spec(f_spec, a, length), FracOrder(nu))
            value = gf.values[_window_index(gf, at)]
        elif subject == "mrdiff":
            need(mu=mu)
            gf = mr_frac_diff(_parse_window_spec(f_spec, a, length), mu)
            value = gf.values[_window_index(gf, at)]
        elif subject == "aediff":
            need(mu=mu)
            gf = ae_frac_diff(_parse_window_spec(f_spec, a, length), mu)
            value = gf.values[_window_index(gf, at)]
        elif subject == "nabla":
            need(p=p, alpha=alpha, t_index=t_index)
            value = nabla_poch_diff(a, p, alpha, t_index)
        else:
            need(a1=a1, a2=a2, m=m, b1=b1, b2=b2, z=z)
            value = hyp3f2_terminating(a1, a2, m, b1, b2, z)
    except (DeltafracError, ValueError) as exc:
        _fail(str(exc))
    rendered, float_value = _render_value(value)
    if fmt == "json":
        click.echo(json.dumps({"subject": subject, "value": rendered, "float": float_value}))
    else:
        click.echo(rendered)


def _window_index(gf: GridFunction, at: int) -> int:
    if not 0 <= at < len(gf):
        raise ValueError(f"--at {at} is outside the output window (length {len(gf)})")
    return at


def _text_line(rep: VerificationReport) -> str:
    parts = [f"[{rep.status}]", rep.identity]
    parts += [f"{k}={v}" for k, v in rep.params_rendered()]
    if rep.status == DOMAIN_EXCLUDED:
        if rep.lhs:
            parts.append(f"boundary={rep.lhs}")
        parts.append(f"excluded_by={rep.excluded_by}")
    else:
        if rep.lhs:
            parts.append(f"lhs={rep.lhs}")
        if rep.rhs:
            parts.append(f"rhs={rep.rhs}")
        if rep.status in (FLOAT_ONLY, MISMATCH) and rep.abs_float_gap is not None:
            parts.append(f"gap={rep.abs_float_gap!r}")
    return " ".join(parts)


def _csv_line(rep: VerificationReport) -> str:
    params = ";".join(f"{k}={v}" for k, v in rep.params_rendered())
    gap = "" if rep.abs_float_gap is None else repr(rep.abs_float_gap)
    return ",".join(
        [rep.identity, rep.status, params, rep.lhs, rep.rhs, gap, rep.excluded_by or ""]
    )


_CSV_HEADER = "identity,status,params,lhs,rhs,abs_float_gap,excluded_by"


@main.command("verify")
@click.argument("identity")
@click.option("--t", type=RATIONAL, default=None)
@click.option("--alpha", type=RATIONAL, default=None)
@click.option("--beta", type=RATIONAL, default=None)
@click.option("--gamma", type=RATIONAL, default=None)
@click.option("--a", type=RATIONAL, default=None)
@click.option("--mu", type=RATIONAL, default=None)
@click.option("--nu", type=RATIONAL, default=None)
@click.option("--p", type=RATIONAL, default=None)
@click.option("--x", type=RATIONAL, default=None)
@click.option("--y", type=RATIONAL, default=None)
@click.option("--pa", type=RATIONAL, default=None, help="hypergeometric a")
@click.option("--pb", type=RATIONAL, default=None, help="hypergeometric b")
@click.option("--pc", type=RATIONAL, default=None, help="hypergeometric c")
@click.option("--n", type=int, default=None)
@click.option("--m", type=int, default=None)
@click.option("--k", type=int, default=None)
@click.option("--t-index", "t_index", type=int, default=None)
@click.option("--n-max", "n_max", type=int, default=None)
@click.option("--m-max", "m_max", type=int, default=None)
@click.option("--t-extra", "t_extra", type=int, default=None)
@click.option("--n-extra", "n_extra", type=int, default=None)
@click.option("--count", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--window", type=int, default=None)
@click.option("--max-window", "max_window", type=int, default=None)
@click.option("--force", is_flag=True, default=False, help="evaluate outside the stated hypotheses")
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text")
def cmd_verify(identity, t, alpha, beta, gamma, a, mu, nu, p, x, y, pa, pb, pc,
               n, m, k, t_index, n_max, m_max, t_extra, n_extra, count, seed,
               window, max_window, force, config_path, fmt):
    """Check IDENTITY (or 'all') over a sweep, streaming one report per point."""
    if a is not None and pa is not None:
        _fail("give either --a or --pa, not both")
    overrides: dict = {}
    named = {
        "t": t, "alpha": alpha, "beta": beta, "gamma": gamma,
        "a": a if a is not None else pa, "b": pb, "c": pc,
        "mu": mu, "nu": nu, "p": p, "x": x, "y": y,
        "n": n, "m": m, "k": k, "t_index": t_index,
        "n_max": n_max, "m_max": m_max, "t_extra": t_extra, "n_extra": n_extra,
        "count": count, "seed": seed, "window": window, "max_window": max_window,
    }
    for key, value in named.items():
        if value is not None:
            overrides[key] = value
    if force:
        overrides["force"] = True

    if config_path is not None:
        if identity != "all":
            _fail("--config supplies its own identities; use 'verify all --config FILE'")
        if overrides:
            _fail("parameter flags cannot be combined with --config")
        try:
            configs = load_config(config_path)
        except (OSError, json.JSONDecodeError, ValueError) as exc:
            _fail(f"bad config: {exc}")
    elif identity == "all":
        if overrides:
            _fail("parameter flags apply to a single identity, not 'all'")
        configs = default_suite()
    else:
        if identity not in identity_names():
            _fail(f"unknown identity: {identity} (choose from {', '.join(identity_names())} or all)")
        configs = [SweepConfig(identity, overrides)]

    counts = {status: 0 for status in _STATUS_ORDER}
    csv_header_done = False
    try:
        for config in configs:
            entry_fmt = config.output or fmt
            if entry_fmt == "csv" and not csv_header_done:
                click.echo(_CSV_HEADER)
                csv_header_done = True
            for rep in run_sweep(config):
                counts[rep.status] += 1
                if entry_fmt == "json":
                    click.echo(json.dumps(rep.to_json_dict()))
                elif entry_fmt == "csv":
                    click.echo(_csv_line(rep))
                else:
                    click.echo(_text_line(rep))
    except (DeltafracError, ValueError) as exc:
        _fail(str(exc))
    total = sum(counts.values())
    summary = ", ".join(f"{counts[status]} {status}" for status in _STATUS_ORDER)
    click.echo(f"checked {total} parameter points: {summary}", err=True)
    sys.exit(1 if counts[MISMATCH] or counts[FLOAT_ONLY] else 0)


@main.command("table")
@click.argument("subject", type=click.Choice(["fracsum", "mrdiff", "aediff", "fallpow"]))
@click.option("--a", type=RATIONAL, default=Fraction(0), help="grid origin")
@click.option("--nu", type=RATIONAL, default=None, help="fracsum order")
@click.option("--mu", type=RATIONAL, default=None, help="mrdiff/aediff order or falling-power exponent")
@click.option("--f", "f_spec", default="const:1", help="grid function: const:Q | kpow:J | table:Q,... | fallpow:MU")
@click.option("--len", "length", type=int, default=8, help="window length")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
def cmd_table(subject, a, nu, mu, f_spec, length, fmt):
    """Print a whole output window, one row per grid point."""
    try:
        if subject == "fracsum":
            if nu is None:
                _fail("table fracsum needs --nu")
            gf = frac_sum_diff(_parse_window_spec(f_spec, a, length), FracOrder(nu))
        elif subject == "mrdiff":
            if mu is None:
                _fail("table mrdiff needs --mu")
            gf = mr_frac_diff(_parse_window_spec(f_spec, a, length), mu)
        elif subject == "aediff":
            if mu is None:
                _fail("table aediff needs --mu")
            gf = ae_frac_diff(_parse_window_spec(f_spec, a, length), mu)
        else:
            if mu is None:
                _fail("table fallpow needs --mu")
            gf = sample_falling_power(a, mu, length)
    except (DeltafracError, ValueError) as exc:
        _fail(str(exc))
    if fmt == "json":
        click.echo(json.dumps(gf.to_json_dict()))
    else:
        click.echo("point,value")
        for i in range(len(gf)):
            click.echo(f"{render_rational(gf.point(i))},{gf.values[i].render()}")


if __name__ == "__main__":
    main()
