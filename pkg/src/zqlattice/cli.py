"""Command line: relation suites, shift operators and the classical simulator.

Exit status: 0 when every check passes, 1 when a relation fails,
2 on invalid usage.
"""

from __future__ import annotations

import csv
import io
import json
import re
import sys

import click

from .currents import LatticeConfig, build_currents
from .dynamics import (
    check_chiral_transport,
    check_sublattice_independence,
    classical_evolve,
    constant_field,
    pulse_field,
    random_field,
)
from .report import all_passed, reports_to_json
from .shift import OddLengthError, check_shift_suite, rho_gauss_coefficients, solve_z
from .suites import SUITES, run_suites, worker_count
from .vertex import VertexFamily

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
P_CAP, N_CAP = 7, 5


class UsageError(click.UsageError):
    exit_code = EXIT_USAGE


def _validate(p: int, N: int, allow_large: bool) -> None:
    if p < 3 or p % 2 == 0:
        raise UsageError(f"p must be an odd integer >= 3 (even p has no inverse of 2), got {p}")
    if any(p % d == 0 for d in range(3, int(p**0.5) + 1, 2)):
        raise UsageError(f"p must be prime: equality at a primitive root assumes a prime order, got {p}")
    if N < 2:
        raise UsageError(f"N must be at least 2, got {N}")
    if not allow_large and (p > P_CAP or N > N_CAP):
        raise UsageError(f"default caps are p <= {P_CAP} and N <= {N_CAP}; pass --allow-large to override")


def _emit_reports(reports, fmt: str, header: dict) -> None:
    if fmt == "json":
        click.echo(reports_to_json({**header, "suites": [r.to_dict() for r in reports]}))
    else:
        for r in reports:
            click.echo(r.line())
        bad = sum(not r.passed for r in reports)
        click.echo(f"{len(reports) - bad}/{len(reports)} relations pass")


@click.group(help=__doc__)
@click.version_option(package_name="artifact")
def main() -> None:
    pass


@main.command(help="Run relation suites. Worker processes: ZQLATTICE_WORKERS.")
@click.option("--p", "p", type=int, required=True, help="odd prime root-of-unity order")
@click.option("--N", "N", type=int, required=True, help="number of lattice sites")
@click.option("--suite", type=click.Choice(SUITES + ("all",)), default="all", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--allow-large", is_flag=True, help="lift the default caps on p and N")
def check(p: int, N: int, suite: str, fmt: str, allow_large: bool) -> None:
    _validate(p, N, allow_large)
    try:
        workers = worker_count()
    except ValueError as e:
        raise UsageError(str(e)) from None
    names = SUITES if suite == "all" else (suite,)
    reports = run_suites(names, p, N, workers)
    _emit_reports(reports, fmt, {"p": p, "N": N})
    sys.exit(EXIT_OK if all_passed(reports) else EXIT_FAIL)


def _coeff_lists(xs) -> list:
    return [x.to_list() for x in xs]


@main.command(help="Build the chiral shift operators and verify the shift relations.")
@click.option("--p", "p", type=int, required=True)
@click.option("--N", "N", type=int, required=True)
@click.option("--chirality", type=click.Choice(["r", "l", "both"]), default="both", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="json", show_default=True)
@click.option("--allow-large", is_flag=True)
def shiftop(p: int, N: int, chirality: str, fmt: str, allow_large: bool) -> None:
    _validate(p, N, allow_large)
    if N % 2 == 0:
        raise UsageError(f"the shift operator construction assumes an odd lattice length; got N={N}")
    vf = VertexFamily(build_currents(LatticeConfig(p, N)))
    alphas = ("r", "l") if chirality == "both" else (chirality,)
    out = {"p": p, "N": N, "operators": []}
    for a in alphas:
        try:
            sols = solve_z(vf, a)
        except OddLengthError as e:
            raise UsageError(str(e)) from None
        out["operators"].append(
            {
                "chirality": a,
                "rho_coefficients": _coeff_lists(rho_gauss_coefficients(p, a)),
                "z_coeffs": _coeff_lists(sols[0]) if sols else None,
                "all_solutions": [_coeff_lists(z) for z in sols],
            }
        )
    # the suite covers both chiralities since each is checked against the other's sector
    reports = check_shift_suite(vf)
    out["suites"] = [r.to_dict() for r in reports]
    if fmt == "json":
        click.echo(json.dumps(out, indent=2))
    else:
        for op in out["operators"]:
            click.echo(f"chirality {op['chirality']}")
            click.echo(f"  rho coefficients: {op['rho_coefficients']}")
            click.echo(f"  z_coeffs: {op['z_coeffs']}")
        for r in reports:
            click.echo(r.line())
    ok = all_passed(reports) and all(op["z_coeffs"] is not None for op in out["operators"])
    sys.exit(EXIT_OK if ok else EXIT_FAIL)


_RANDOM = re.compile(r"random(?:[(:](\d+)\)?)?$")


def _initial(init: str, sites: int, seed: int, exact: bool):
    if init == "constant":
        return constant_field(sites, 1, exact)
    if init == "pulse":
        return pulse_field(sites, 0, exact)
    m = _RANDOM.match(init)
    if m:
        return random_field(sites, int(m.group(1)) if m.group(1) else seed, exact)
    raise UsageError(f"--init must be constant, pulse or random(SEED), got {init!r}")


def _render(x) -> str:
    if hasattr(x, "denominator"):
        return f"{x.numerator}/{x.denominator}"
    return repr(float(x))


@main.command(help="Evolve the discrete free field and check chiral transport.")
@click.option("--sites", type=int, required=True)
@click.option("--steps", type=int, required=True)
@click.option("--init", default="pulse", show_default=True, help="constant, pulse or random(SEED)")
@click.option("--seed", type=int, default=0, show_default=True, help="seed when --init random has none")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--float", "use_float", is_flag=True, help="floating point instead of exact rationals")
def simulate(sites: int, steps: int, init: str, seed: int, out: str, fmt: str, use_float: bool) -> None:
    if sites < 3:
        raise UsageError("--sites must be at least 3")
    if steps < 1:
        raise UsageError("--steps must be positive")
    field = _initial(init, sites, seed, not use_float)
    tr = classical_evolve(field, steps)
    reports = check_chiral_transport(tr)
    if sites % 2 == 0:
        reports.append(check_sublattice_independence(field, steps))
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t_index", "site", "value"])
        for k, sl in enumerate(tr.slices):
            for n, x in enumerate(sl):
                w.writerow([k, n, _render(x)])
        buf.write("# verdict\n")
        for r in reports:
            buf.write(f"# {r.relation},{r.status},{r.instances_checked}\n")
        text = buf.getvalue()
    else:
        payload = {
            "sites": sites,
            "steps": steps,
            "init": init,
            "trajectory": [[_render(x) for x in sl] for sl in tr.slices],
            "verdict": [r.to_dict() for r in reports],
        }
        text = json.dumps(payload, indent=2) + "\n"
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as e:
        raise UsageError(f"cannot write {out}: {e.strerror}") from None
    for r in reports:
        click.echo(r.line())
    sys.exit(EXIT_OK if all_passed(reports) else EXIT_FAIL)


if __name__ == "__main__":
    main()
