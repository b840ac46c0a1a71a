"""Acceptance criteria 1-9; each test prints a one-line verdict in the summary."""

import time

from conftest import record_criterion

from zqlattice.automorphisms import AUTOMORPHISMS, check_aut_in_rep, check_time_step
from zqlattice.crosscheck import cross_backend_check
from zqlattice.currents import LatticeConfig, build_currents
from zqlattice.dynamics import (
    check_chiral_transport,
    check_sublattice_independence,
    classical_evolve,
    constant_field,
    pulse_field,
    random_field,
)
from zqlattice.shift import check_shift_suite
from zqlattice.suites import run_suite
from zqlattice.toy import run_toy
from zqlattice.vertex import VertexFamily, check_g_suite, locality_fails_without_constraint
from zqlattice.weyl import induced_rep, lattice_table
from zqlattice.zq_hopf import det_smatrix

LATTICES = [(3, 2), (3, 3), (3, 4), (5, 2), (5, 3)]


def _failures(reports, label=""):
    return [f"{label}{r.suite}/{r.relation}" for r in reports if not r.passed]


def _verdict(number, bad, elapsed, limit):
    ok = not bad and elapsed < limit
    detail = f"{elapsed:.2f}s (limit {limit}s)"
    if bad:
        shown = sorted(set(bad))
        detail += "; failing: " + ", ".join(shown[:8]) + (" ..." if len(shown) > 8 else "")
    record_criterion(number, ok, detail)
    assert not bad, detail
    assert elapsed < limit, detail


def test_criterion_1_hopf():
    t0 = time.perf_counter()
    bad = []
    for p in (3, 5, 7):
        bad += _failures(run_suite("hopf", p, 2), f"p={p}:")
    if not det_smatrix(2).is_zero():
        bad.append("p=2: det S nonzero")
    _verdict(1, bad, time.perf_counter() - t0, 1)


def test_criterion_2_toy():
    t0 = time.perf_counter()
    bad = []
    for p in (3, 5):
        bad += _failures(run_toy(p), f"p={p}:")
    _verdict(2, bad, time.perf_counter() - t0, 10)


def test_criterion_3_currents():
    t0 = time.perf_counter()
    bad = []
    for p, N in LATTICES:
        bad += _failures(run_suite("currents", p, N), f"({p},{N}):")
    _verdict(3, bad, time.perf_counter() - t0, 60)


def test_criterion_4_vertex():
    t0 = time.perf_counter()
    bad = []
    for p, N in LATTICES:
        bad += _failures(run_suite("vertex", p, N), f"({p},{N}):")
    _verdict(4, bad, time.perf_counter() - t0, 120)


def test_criterion_5_g_field():
    t0 = time.perf_counter()
    bad = []
    for p, N in ((3, 2), (3, 3), (5, 2)):
        vf = VertexFamily(build_currents(LatticeConfig(p, N)))
        bad += _failures(check_g_suite(vf), f"({p},{N}):")
        if not locality_fails_without_constraint(vf):
            bad.append(f"({p},{N}):locality holds without the constraint")
    _verdict(5, bad, time.perf_counter() - t0, 60)


def test_criterion_6_automorphisms():
    t0 = time.perf_counter()
    bad = []
    vf = VertexFamily(build_currents(LatticeConfig(3, 2)))
    rep = induced_rep(vf.table)
    for which in AUTOMORPHISMS:
        reports = check_aut_in_rep(vf, which, rep)
        bad += [f"{which}:{f['instance']['key']}" for r in reports for f in r.failures]
    vf33 = VertexFamily(build_currents(LatticeConfig(3, 3)))
    for kind in ("TV", "TU"):
        bad += _failures(check_time_step(vf33, kind), f"{kind}:")
    _verdict(6, bad, time.perf_counter() - t0, 120)


def test_criterion_7_shift_operators():
    t0 = time.perf_counter()
    bad = []
    for p, N in ((3, 3), (5, 3)):
        vf = VertexFamily(build_currents(LatticeConfig(p, N)))
        reports = check_shift_suite(vf)
        bad += _failures(reports, f"({p},{N}):")
        names = {r.relation for r in reports}
        bad += [f"({p},{N}):missing {k}" for k in ("shifts", "bulk", "chiral") if k not in names]
    _verdict(7, bad, time.perf_counter() - t0, 120)


def test_criterion_8_dynamics():
    t0 = time.perf_counter()
    bad = []
    for name, f in (("constant", constant_field(16, 2)), ("pulse", pulse_field(16)), ("random", random_field(16, 1))):
        tr = classical_evolve(f, 32)
        reports = check_chiral_transport(tr) + [check_sublattice_independence(f, 32)]
        bad += _failures(reports, f"{name}:")
        if name == "constant" and "ff-constant" not in {r.relation for r in reports}:
            bad.append("constant: not recognised as constant data")
    _verdict(8, bad, time.perf_counter() - t0, 1)


def test_criterion_9_cross_backend():
    t0 = time.perf_counter()
    report = cross_backend_check(lattice_table(3, 2), count=50, seed=2024)
    bad = [] if report.passed and report.instances_checked == 50 else [report.line()]
    _verdict(9, bad, time.perf_counter() - t0, 30)
