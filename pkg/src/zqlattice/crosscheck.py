"""Random Weyl-algebra identities judged by two independent backends.

Each candidate compares a product of random monomials with a reordering
of the same factors carrying a commutation phase. Half of the candidates
get the correct phase; the rest get a deliberately wrong one. The
symbolic normal form and the induced matrix representation must return
the same verdict on every candidate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .cyclotomic import CycloNum
from .report import RelationReport
from .weyl import CommutationTable, WeylElement, induced_rep

__all__ = ["Candidate", "random_candidates", "cross_backend_check"]


@dataclass
class Candidate:
    lhs: WeylElement
    rhs: WeylElement
    expected: bool


def _random_monomial(table: CommutationTable, rng: random.Random) -> WeylElement:
    p = table.p
    exps = [rng.randrange(p) for _ in range(table.n)]
    return WeylElement.monomial(table, exps, CycloNum.monomial(p, rng.randrange(p)))


def _product(factors):
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


def random_candidates(table: CommutationTable, count: int, seed: int = 0) -> list:
    rng = random.Random(seed)
    p = table.p
    out = []
    for i in range(count):
        k = rng.randint(2, 4)
        fs = [_random_monomial(table, rng) for _ in range(k)]
        j = rng.randrange(k - 1)
        a, b = next(iter(fs[j].terms)), next(iter(fs[j + 1].terms))
        # G^a G^b = q^{B(a,b)} G^b G^a
        phase = table.commutator_form(a, b)
        honest = i % 2 == 0
        if not honest:
            phase += rng.randrange(1, p)
        swapped = fs[:j] + [fs[j + 1], fs[j]] + fs[j + 2:]
        lhs = _product(fs)
        rhs = _product(swapped) * CycloNum.monomial(p, phase)
        extra = _random_monomial(table, rng)
        if rng.random() < 0.5:
            lhs, rhs = lhs + extra, rhs + extra
        out.append(Candidate(lhs, rhs, honest))
    return out


def cross_backend_check(table: CommutationTable, count: int = 50, seed: int = 0) -> RelationReport:
    rep_ = induced_rep(table)
    report = RelationReport("cross-backend", "normal-form-vs-matrix", "symbolic and matrix verdicts agree", 0)
    for i, c in enumerate(random_candidates(table, count, seed)):
        sym = c.lhs.equals(c.rhs)
        mat = rep_.eval_in_rep(c.lhs).equals(rep_.eval_in_rep(c.rhs))
        report.instances_checked += 1
        if sym != mat or sym != c.expected:
            report.add_failure({"candidate": i}, f"symbolic={sym} matrix={mat} expected={c.expected}")
    return report
