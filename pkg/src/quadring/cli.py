"""Command-line surface.

Exit statuses: 0 success, 2 usage error, 3 cap exceeded (retry with a larger
--cap), 4 domain error (bad ring, window, or congruence parameters).
Success output is byte-deterministic for fixed inputs and independent of
--threads; diagnostics go to stderr only.

Angle and radius inputs are parsed as exact decimals (optionally with a `pi`
suffix, e.g. `0.5pi`), never through binary floats, so verification sees
exactly what was typed.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from .angles import Angle
from .asymptotics import LAWS, convergence_report
from .enumeration import count_ratio, count_sector, count_sector_congruence, prime_stream, stream_csv_lines
from .errors import CapExceededError, DomainError, QuadringError
from .invariants import load_class_number_overrides, ring_invariants
from .regions import AnnularSector, RealInterval
from .rings import CongruenceClass, format_element, make_ring, parse_element
from .search import (
    DEFAULT_CAP,
    approximate,
    find_quotient_interval,
    find_quotient_sector,
    find_quotient_sector_congruent,
    witness_json,
)

_FORMATS = click.Choice(["text", "csv", "json"])


def _parse_angle(text: str) -> Angle:
    s = text.strip()
    if s.endswith("pi"):
        body = s[:-2].strip() or "1"
        return Angle(Fraction(0), Fraction(body))
    return Angle(Fraction(s), Fraction(0))


def _parse_pair(text: str, parser, what: str):
    parts = text.split(":")
    if len(parts) != 2:
        raise click.UsageError(f"{what} must look like LO:HI, got {text!r}")
    try:
        return parser(parts[0]), parser(parts[1])
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"cannot parse {what} {text!r}: {exc}")


def _parse_xs(text: str) -> list[int]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            if "e" in tok.lower():
                mant, _, exp = tok.lower().partition("e")
                val = Fraction(mant) * Fraction(10) ** int(exp)
            else:
                val = Fraction(tok)
        except (ValueError, ZeroDivisionError):
            raise click.UsageError(f"cannot parse grid value {tok!r}")
        if val.denominator != 1 or val < 2:
            raise click.UsageError(f"grid values must be integers >= 2, got {tok!r}")
        out.append(int(val))
    return out


def _domain_guard(fn):
    """Map library errors to the documented exit statuses."""
    import functools

    @functools.wraps(fn)
    def wrapped(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except CapExceededError as exc:
            click.echo(f"cap exceeded: {exc}", err=True)
            sys.exit(3)
        except (DomainError, QuadringError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(4)

    return wrapped


@click.group()
@click.version_option(version="0.1.0", prog_name="quadring")
def cli():
    """Quadratic number rings: primes, counting laws, density witnesses."""


@cli.command()
@click.option("--d", "d", type=int, required=True, help="squarefree d of Q(sqrt(d))")
@click.option("--format", "fmt", type=_FORMATS, default="text")
@_domain_guard
def info(d: int, fmt: str):
    """Describe the ring of integers of Q(sqrt(d))."""
    ring = make_ring(d)
    data = {
        "d": ring.d,
        "basis_mode": ring.basis_mode,
        "signature": ring.signature,
        "discriminant": ring.discriminant,
    }
    if fmt == "json":
        _out(json.dumps(data, indent=2) + "\n")
    elif fmt == "csv":
        _out("field,value\n" + "".join(f"{k},{v}\n" for k, v in data.items()))
    else:
        _out("".join(f"{k} = {v}\n" for k, v in data.items()))


@cli.command()
@click.option("--d", "d", type=int, required=True)
@click.option("--max-norm", "max_norm", type=int, required=True)
@click.option("--sector", default=None, help="angle window PSI1:PSI2 (imaginary rings)")
@click.option("--window", default=None, help="ratio window A:B (real rings)")
@click.option("--residue", default=None, help="congruence residue element (Z[i])")
@click.option("--modulus", default=None, help="congruence modulus element (Z[i])")
@_domain_guard
def primes(d: int, max_norm: int, sector, window, residue, modulus):
    """Stream prime elements ordered by norm as CSV."""
    ring = make_ring(d)
    region = _region_from_flags(ring, sector, window)
    congruence = _congruence_from_flags(ring, residue, modulus)
    lines = stream_csv_lines(prime_stream(ring, max_norm, region, congruence))
    _out("".join(line + "\n" for line in lines))


@cli.command()
@click.option("--d", "d", type=int, required=True)
@click.option("--x", "x", type=int, required=True, help="norm bound")
@click.option("--sector", default=None, help="angle window PSI1:PSI2 (imaginary rings)")
@click.option("--window", default=None, help="ratio window A:B (real rings)")
@click.option("--residue", default=None)
@click.option("--modulus", default=None)
@click.option("--threads", type=int, default=1)
@click.option("--format", "fmt", type=_FORMATS, default="text")
@_domain_guard
def count(d: int, x: int, sector, window, residue, modulus, threads, fmt):
    """Count prime elements in a sector or ratio window."""
    ring = make_ring(d)
    if ring.is_imaginary:
        if sector is None:
            raise click.UsageError("imaginary rings need --sector PSI1:PSI2")
        psi1, psi2 = _parse_pair(sector, _parse_angle, "--sector")
        congruence = _congruence_from_flags(ring, residue, modulus)
        if congruence is not None:
            value = count_sector_congruence(x, psi1, psi2, congruence, threads=threads)
        else:
            value = count_sector(ring, x, psi1, psi2, threads=threads)
    else:
        if window is None:
            raise click.UsageError("real rings need --window A:B (a ratio window)")
        a, b = _parse_pair(window, Fraction, "--window")
        value = count_ratio(ring, x, a, b, threads=threads)
    if fmt == "json":
        _out(json.dumps({"d": d, "x": x, "count": value}) + "\n")
    elif fmt == "csv":
        _out(f"x,count\n{x},{value}\n")
    else:
        _out(f"{value}\n")


@cli.command()
@click.option("--d", "d", type=int, required=True)
@click.option("--config", "config", type=click.Path(exists=True), default=None)
@click.option("--format", "fmt", type=_FORMATS, default="json")
@_domain_guard
def invariants(d: int, config, fmt):
    """Report g, eta, h and the totally-positive ratio scale."""
    ring = make_ring(d)
    overrides = load_class_number_overrides(config) if config else None
    inv = ring_invariants(ring, overrides)
    data = {
        "d": ring.d,
        "g": inv.g if inv.g is not None else "infinite",
        "eta": None if inv.eta is None else format_element(inv.eta),
        "eta_norm": inv.eta_norm,
        "h": inv.h,
        "tp_ratio_scale": None if inv.tp_scale is None else format_element(inv.tp_scale),
    }
    if fmt == "csv":
        _out("field,value\n" + "".join(f"{k},{v}\n" for k, v in data.items()))
    elif fmt == "text":
        _out("".join(f"{k} = {v}\n" for k, v in data.items()))
    else:
        _out(json.dumps(data, indent=2) + "\n")


@cli.command()
@click.option("--law", type=click.Choice(LAWS), required=True)
@click.option("--d", "d", type=int, default=None)
@click.option("--xs", required=True, help="comma-separated grid, e.g. 1e3,1e4,1e5")
@click.option("--sector", default=None)
@click.option("--window", default=None)
@click.option("--residue", default=None)
@click.option("--modulus", default=None)
@click.option("--config", "config", type=click.Path(exists=True), default=None)
@click.option("--threads", type=int, default=1)
@click.option("--format", "fmt", type=_FORMATS, default="csv")
@_domain_guard
def verify(law, d, xs, sector, window, residue, modulus, config, threads, fmt):
    """Empirical counts vs predicted main terms over a grid of x values."""
    ring = make_ring(d) if d is not None else None
    grid = _parse_xs(xs)
    overrides = load_class_number_overrides(config) if config else None
    kwargs: dict = {"h_overrides": overrides, "threads": threads}
    if law in ("gaussian_sector", "gaussian_congruence", "imaginary_sector"):
        if sector is None:
            sector = "0:2pi"
        psi1, psi2 = _parse_pair(sector, _parse_angle, "--sector")
        kwargs["psi1"], kwargs["psi2"] = psi1, psi2
        if law == "gaussian_congruence":
            ring = make_ring(-1)
            congruence = _congruence_from_flags(ring, residue, modulus, required=True)
            kwargs["congruence"] = congruence
        if law == "gaussian_sector":
            ring = make_ring(-1)
    if law == "real_ratio":
        if window is None:
            raise click.UsageError("real_ratio needs --window A:B")
        kwargs["a"], kwargs["b"] = _parse_pair(window, Fraction, "--window")
    report = convergence_report(law, ring, grid, **kwargs)
    if fmt == "json":
        _out(report.to_json())
    elif fmt == "text":
        lines = [f"law = {report.law}  d = {report.ring_d}"]
        for r in report.rows:
            lines.append(f"x = {r.x}: empirical {r.empirical}, predicted {r.predicted:.3f}, ratio {r.ratio:.6f}")
        _out("\n".join(lines) + "\n")
    else:
        _out(report.to_csv())


@cli.command()
@click.option("--d", "d", type=int, required=True)
@click.option("--sector", default=None, help="target angles PSI1:PSI2 (imaginary)")
@click.option("--r", "r_inner", default=None, help="inner radius (imaginary)")
@click.option("--R", "r_outer", default=None, help="outer radius (imaginary)")
@click.option("--interval", default=None, help="target interval A:B (real)")
@click.option("--residue1", default=None)
@click.option("--modulus1", default=None)
@click.option("--residue2", default=None)
@click.option("--modulus2", default=None)
@click.option("--cap", type=int, default=DEFAULT_CAP)
@click.option("--format", "fmt", type=_FORMATS, default="json")
@_domain_guard
def find(d, sector, r_inner, r_outer, interval, residue1, modulus1, residue2, modulus2, cap, fmt):
    """Find a verified quotient of primes inside the target region."""
    ring = make_ring(d)
    if ring.is_imaginary:
        if sector is None or r_inner is None or r_outer is None:
            raise click.UsageError("imaginary rings need --sector PSI1:PSI2 --r LO --R HI")
        psi1, psi2 = _parse_pair(sector, _parse_angle, "--sector")
        try:
            region = AnnularSector(psi1, psi2, Fraction(r_inner), Fraction(r_outer))
        except (ValueError, ZeroDivisionError) as exc:
            raise click.UsageError(f"bad radii: {exc}")
        if residue1 or modulus1 or residue2 or modulus2:
            c1 = _congruence_from_flags(ring, residue1, modulus1, required=True)
            c2 = _congruence_from_flags(ring, residue2, modulus2, required=True)
            witness = find_quotient_sector_congruent(region, c1, c2, cap)
        else:
            witness = find_quotient_sector(ring, region, cap)
    else:
        if interval is None:
            raise click.UsageError("real rings need --interval A:B")
        a, b = _parse_pair(interval, Fraction, "--interval")
        witness = find_quotient_interval(ring, RealInterval(a, b), cap)
    _emit_witness(witness, fmt)


@cli.command()
@click.option("--d", "d", type=int, required=True)
@click.option("--target", required=True, help="decimal, X+Yi, or element text like 1*sqrt(2)")
@click.option("--eps", required=True, help="approximation radius (exact decimal)")
@click.option("--cap", type=int, default=DEFAULT_CAP)
@click.option("--format", "fmt", type=_FORMATS, default="json")
@_domain_guard
def approx(d, target, eps, cap, fmt):
    """Find a quotient of primes within eps of the target point."""
    ring = make_ring(d)
    try:
        epsilon = Fraction(eps)
    except (ValueError, ZeroDivisionError):
        raise click.UsageError(f"cannot parse --eps {eps!r}")
    witness = approximate(ring, _parse_target(ring, target), epsilon, cap)
    _emit_witness(witness, fmt)


def _parse_target(ring, text: str):
    s = text.strip()
    if ring.is_imaginary:
        body = s[:-1].strip() if s.endswith("i") else None
        if body is not None:
            # X+Yi / X-Yi; fall back to pure imaginary Yi
            for k in range(len(body) - 1, 0, -1):
                if body[k] in "+-" and body[k - 1] not in "eE":
                    try:
                        return (Fraction(body[:k]), Fraction(body[k:] or "1"))
                    except (ValueError, ZeroDivisionError):
                        continue
            try:
                return (Fraction(0), Fraction(body or "1"))
            except (ValueError, ZeroDivisionError):
                raise click.UsageError(f"cannot parse complex target {text!r}")
        try:
            return (Fraction(s), Fraction(0))
        except (ValueError, ZeroDivisionError):
            raise click.UsageError(f"cannot parse target {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return parse_element(s, ring)
    except (ValueError, DomainError):
        raise click.UsageError(f"cannot parse target {text!r}")


def _region_from_flags(ring, sector, window):
    if ring.is_imaginary:
        if window is not None:
            raise click.UsageError("--window applies to real rings; use --sector")
        if sector is None:
            return None
        psi1, psi2 = _parse_pair(sector, _parse_angle, "--sector")
        return AnnularSector(psi1, psi2)
    if sector is not None:
        raise click.UsageError("--sector applies to imaginary rings; use --window")
    if window is None:
        return None
    a, b = _parse_pair(window, Fraction, "--window")
    return RealInterval(a, b)


def _congruence_from_flags(ring, residue, modulus, required: bool = False):
    if residue is None and modulus is None:
        if required:
            raise click.UsageError("both --residue and --modulus are required here")
        return None
    if residue is None or modulus is None:
        raise click.UsageError("--residue and --modulus must be given together")
    try:
        res = parse_element(residue, ring)
        mod = parse_element(modulus, ring)
    except (ValueError, DomainError) as exc:
        raise click.UsageError(f"cannot parse congruence class: {exc}")
    return CongruenceClass(res, mod)


def _emit_witness(witness, fmt: str):
    if fmt == "csv":
        raise click.UsageError("witnesses serialize as JSON or text, not CSV")
    if fmt == "text":
        num = format_element(witness.numerator.element)
        den = format_element(witness.denominator.element)
        _out(f"({num}) / ({den})  ~ {witness.quotient_float()}  cost={witness.search_cost}\n")
    else:
        _out(witness_json(witness))


def _out(text: str) -> None:
    sys.stdout.write(text)
    sys.stdout.flush()


def main():
    cli(prog_name="quadring")


if __name__ == "__main__":
    main()
