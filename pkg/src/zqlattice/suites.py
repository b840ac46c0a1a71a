"""Named relation suites, as run by the command line and the acceptance tests.

Negative controls appear as reports of their own: such a report passes
exactly when the deliberately broken relation is detected as broken.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from .automorphisms import (
    AUTOMORPHISMS,
    check_aut_in_rep,
    check_aut_symbolic,
    check_clr,
    check_time_step,
)
from .currents import (
    LatticeConfig,
    build_currents,
    check_centrality,
    check_current_suite,
    k2_sign_control,
)
from .report import RelationReport
from .shift import check_shift_suite
from .toy import run_toy
from .vertex import (
    VertexFamily,
    check_def3_suite,
    check_g_suite,
    check_site_and_braid_suite,
    locality_fails_without_constraint,
    periodicity_fails_without_constraint,
)
from .weyl import induced_rep
from .zq_hopf import check_hopf_suite, check_modularity, det_primitive_component_nonzero

__all__ = ["SUITES", "control_report", "run_suite", "run_suites", "worker_count", "MAX_REP_DIM"]

SUITES = ("hopf", "toy", "currents", "vertex", "g", "automorphisms")
WORKERS_ENV = "ZQLATTICE_WORKERS"
# matrix checks of the automorphisms are skipped above this dimension
MAX_REP_DIM = 243


def control_report(suite: str, relation: str, description: str, broken_detected: bool) -> RelationReport:
    rep = RelationReport(suite, relation, description, 1)
    if not broken_detected:
        rep.add_failure({}, "negative control was not detected as a violation")
    return rep


def _vertex_family(p: int, N: int) -> VertexFamily:
    return VertexFamily(build_currents(LatticeConfig(p, N)))


def _hopf(p: int, N: int) -> list:
    reports = check_hopf_suite(p)
    rep = RelationReport("hopf", "detS", "det S is nonzero at a primitive root", 1)
    if not (check_modularity(p) and det_primitive_component_nonzero(p)):
        rep.add_failure({"p": p}, "S matrix is singular")
    reports.append(rep)
    return reports


def _toy(p: int, N: int) -> list:
    return run_toy(p)


def _currents(p: int, N: int) -> list:
    fam = build_currents(LatticeConfig(p, N))
    reports = check_current_suite(fam)
    check_centrality(fam, reports)
    reports.append(control_report("currents", "control-K2", "K2 with R_- replaced by R_+ must fail", not k2_sign_control(fam).passed))
    return reports


def _vertex(p: int, N: int) -> list:
    vf = _vertex_family(p, N)
    reports = check_def3_suite(vf)
    check_site_and_braid_suite(vf, reports=reports)
    return reports


def _g(p: int, N: int) -> list:
    vf = _vertex_family(p, N)
    reports = check_g_suite(vf)
    reports.append(control_report("g", "control-loc", "locality must fail without the charge constraint", locality_fails_without_constraint(vf)))
    reports.append(control_report("g", "control-gper", "periodicity must fail without the charge constraint", periodicity_fails_without_constraint(vf)))
    return reports


def _automorphisms(p: int, N: int) -> list:
    vf = _vertex_family(p, N)
    reports: list = []
    rep = None
    if p ** (N + 1) <= MAX_REP_DIM:
        rep = induced_rep(vf.table)
    for which in AUTOMORPHISMS:
        reports += check_aut_symbolic(vf, which)
        if rep is not None:
            reports += check_aut_in_rep(vf, which, rep)
    for kind in ("TV", "TU"):
        reports += check_time_step(vf, kind)
    reports += check_clr(vf)
    if N % 2:
        check_shift_suite(vf, reports)
    return reports


_RUNNERS = {
    "hopf": _hopf,
    "toy": _toy,
    "currents": _currents,
    "vertex": _vertex,
    "g": _g,
    "automorphisms": _automorphisms,
}


def run_suite(name: str, p: int, N: int) -> list:
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}")
    return _RUNNERS[name](p, N)


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}") from None


def run_suites(names, p: int, N: int, workers: int | None = None) -> list:
    """Run suites in order; with several workers they run in separate processes."""
    names = list(names)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(names) <= 1:
        return [r for n in names for r in run_suite(n, p, N)]
    with ProcessPoolExecutor(max_workers=min(workers, len(names))) as ex:
        results = list(ex.map(run_suite, names, [p] * len(names), [N] * len(names)))
    return [r for rs in results for r in rs]
