"""Universal elements of G_a^{(x)k} (x) A for the abelian algebra Z_q.

Every irreducible representation of Z_q is one-dimensional, so an element
of G_a^{(x)k} (x) A is determined by its evaluations
(tau^{t_1} (x) ... (x) tau^{t_k} (x) id)(X), indexed by (Z_p)^k. A
:class:`Universal` stores that table. Coproduct, antipode and counit on an
auxiliary leg become index addition, negation and evaluation at 0.

The operator algebra A is described by a small adapter object (see
:class:`ScalarAlgebra`); the Weyl and dense backends provide their own.
"""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

from .cyclotomic import CycloNum, check_root_order
from .report import RelationReport

__all__ = [
    "ScalarAlgebra",
    "Universal",
    "leg_embed",
    "embed",
    "delta_a",
    "s_a",
    "epsilon_a",
    "star_u",
    "mul_u",
    "inverse_u",
    "permute",
    "sigma_insert",
    "assert_equal",
    "scalar_universal",
    "R_plus",
    "R_minus",
    "check_relation",
]


class ScalarAlgebra:
    """A = C realised on CycloNum; used for the Hopf layer."""

    def __init__(self, p: int, *, ring_equality: bool = False):
        check_root_order(p)
        self.p = p
        self.ring_equality = ring_equality

    def one(self):
        return CycloNum.one(self.p)

    def scalar(self, c: CycloNum):
        return c

    def star(self, x: CycloNum):
        return x.star()

    def inv(self, x: CycloNum):
        return x.inv() if x.monomial_exponent() else x.field_inv()

    def eq(self, x: CycloNum, y: CycloNum) -> bool:
        return x == y if self.ring_equality else x.field_eq(y)

    def describe(self, x) -> str:
        return repr(x)

    def same(self, other) -> bool:
        return isinstance(other, ScalarAlgebra) and other.p == self.p


def _grid(p: int, k: int):
    return itertools.product(range(p), repeat=k)


class Universal:
    """Extensional table (Z_p)^legs -> A."""

    __slots__ = ("alg", "legs", "body")

    def __init__(self, alg, legs: int, body: dict):
        self.alg = alg
        self.legs = legs
        self.body = body

    @property
    def p(self) -> int:
        return self.alg.p

    @classmethod
    def from_function(cls, alg, legs: int, fn: Callable) -> "Universal":
        return cls(alg, legs, {idx: fn(*idx) for idx in _grid(alg.p, legs)})

    @classmethod
    def identity(cls, alg, legs: int = 1) -> "Universal":
        one = alg.one()
        return cls(alg, legs, {idx: one for idx in _grid(alg.p, legs)})

    def __call__(self, *idx):
        p = self.alg.p
        return self.body[tuple(i % p for i in idx)]

    def __mul__(self, other: "Universal") -> "Universal":
        return mul_u(self, other)

    def map(self, fn: Callable) -> "Universal":
        return Universal(self.alg, self.legs, {k: fn(v) for k, v in self.body.items()})

    def inverse(self) -> "Universal":
        return inverse_u(self)

    def star(self) -> "Universal":
        return star_u(self)

    def __repr__(self):
        return f"Universal(legs={self.legs}, p={self.alg.p}, entries={len(self.body)})"


def scalar_universal(alg, legs: int, fn: Callable[..., CycloNum]) -> Universal:
    """Universal whose body is a scalar function of the indices times 1_A."""
    return Universal.from_function(alg, legs, lambda *i: alg.scalar(fn(*i)))


def R_plus(alg, slots=(1, 2), total: int = 2) -> Universal:
    """R_+ = q^{p (x) p} on the chosen auxiliary legs."""
    p = alg.p
    base = scalar_universal(alg, 2, lambda t, s: CycloNum.monomial(p, t * s))
    return embed(base, slots, total)


def R_minus(alg, slots=(1, 2), total: int = 2) -> Universal:
    """R_- = (R')^{-1} = q^{-p (x) p}."""
    p = alg.p
    base = scalar_universal(alg, 2, lambda t, s: CycloNum.monomial(p, -t * s))
    return embed(base, slots, total)


def embed(x: Universal, slots: Sequence[int], total: int) -> Universal:
    """Place the legs of x at the given 1-based positions among `total` legs."""
    if len(slots) != x.legs:
        raise ValueError("one slot per leg required")
    if any(not 1 <= s <= total for s in slots) or len(set(slots)) != len(slots):
        raise ValueError(f"invalid slots {slots} for {total} legs")
    pos = [s - 1 for s in slots]
    body = {}
    for idx in _grid(x.alg.p, total):
        body[idx] = x.body[tuple(idx[i] for i in pos)]
    return Universal(x.alg, total, body)


def leg_embed(x: Universal, slot: int, total: int) -> Universal:
    if x.legs != 1:
        raise ValueError("leg_embed expects a one-leg element")
    return embed(x, (slot,), total)


def mul_u(x: Universal, y: Universal) -> Universal:
    if x.legs != y.legs:
        raise ValueError(f"leg mismatch: {x.legs} vs {y.legs}")
    return Universal(x.alg, x.legs, {k: x.body[k] * y.body[k] for k in x.body})


def prod_u(*xs: Universal) -> Universal:
    out = xs[0]
    for x in xs[1:]:
        out = mul_u(out, x)
    return out


def inverse_u(x: Universal) -> Universal:
    body = {}
    for k, v in x.body.items():
        try:
            body[k] = x.alg.inv(v)
        except ArithmeticError as exc:
            raise ArithmeticError(f"entry {k} is not invertible: {exc}") from exc
    return Universal(x.alg, x.legs, body)


def star_u(x: Universal) -> Universal:
    return Universal(x.alg, x.legs, {k: x.alg.star(v) for k, v in x.body.items()})


def delta_a(x: Universal, leg: int = 1) -> Universal:
    """Coproduct on an auxiliary leg: the leg splits into positions leg, leg+1."""
    if not 1 <= leg <= x.legs:
        raise ValueError("leg out of range")
    p = x.alg.p
    i = leg - 1
    body = {}
    for idx in _grid(p, x.legs + 1):
        src = idx[:i] + ((idx[i] + idx[i + 1]) % p,) + idx[i + 2:]
        body[idx] = x.body[src]
    return Universal(x.alg, x.legs + 1, body)


def s_a(x: Universal, leg: int = 1) -> Universal:
    """Antipode on an auxiliary leg: negate that index."""
    if not 1 <= leg <= x.legs:
        raise ValueError("leg out of range")
    p = x.alg.p
    i = leg - 1
    return Universal(
        x.alg,
        x.legs,
        {idx: x.body[idx[:i] + ((-idx[i]) % p,) + idx[i + 1:]] for idx in x.body},
    )


def epsilon_a(x: Universal, leg: int = 1) -> Universal:
    """Counit on an auxiliary leg: evaluate at the trivial representation."""
    if not 1 <= leg <= x.legs:
        raise ValueError("leg out of range")
    i = leg - 1
    body = {}
    for idx, v in x.body.items():
        if idx[i] == 0:
            body[idx[:i] + idx[i + 1:]] = v
    return Universal(x.alg, x.legs - 1, body)


def permute(x: Universal, perm: Sequence[int]) -> Universal:
    """Leg permutation: new leg j carries old leg perm[j] (1-based)."""
    if sorted(perm) != list(range(1, x.legs + 1)):
        raise ValueError("not a permutation")
    body = {}
    for idx in x.body:
        old = [0] * x.legs
        for j, src in enumerate(perm):
            old[src - 1] = idx[j]
        body[idx] = x.body[tuple(old)]
    return Universal(x.alg, x.legs, body)


def sigma_insert(phi: Universal, x: Universal, slot: int, phi_inv: Universal | None = None) -> Universal:
    """Insert sigma on a new leg: body(idx) = phi(t_slot) x(rest) phi(t_slot)^{-1}.

    With x of k legs the result has k+1 legs. This realises the up-arrow
    notation for the center homomorphism sigma(f) = Phi f Phi^{-1}.
    """
    if phi.legs != 1:
        raise ValueError("phi must have one leg")
    if phi_inv is None:
        phi_inv = inverse_u(phi)
    total = x.legs + 1
    if not 1 <= slot <= total:
        raise ValueError("slot out of range")
    i = slot - 1
    body = {}
    for idx in _grid(x.alg.p, total):
        t = idx[i]
        rest = idx[:i] + idx[i + 1:]
        body[idx] = phi.body[(t,)] * x.body[rest] * phi_inv.body[(t,)]
    return Universal(x.alg, total, body)


def assert_equal(
    x: Universal,
    y: Universal,
    suite: str = "adhoc",
    relation: str = "eq",
    paper_ref: str = "",
) -> RelationReport:
    """Exact comparison at every grid point."""
    if x.legs != y.legs:
        raise ValueError(f"leg mismatch: {x.legs} vs {y.legs}")
    rep = RelationReport(suite, relation, paper_ref, instances_checked=0)
    eq = x.alg.eq
    for idx in sorted(x.body):
        rep.instances_checked += 1
        a, b = x.body[idx], y.body[idx]
        if not eq(a, b):
            rep.add_failure(idx, f"lhs={x.alg.describe(a)} rhs={x.alg.describe(b)}")
    return rep


def check_relation(reports: list, suite: str, relation: str, paper_ref: str, lhs: Universal, rhs: Universal, *, tag: str | None = None) -> RelationReport:
    """Compare and append (merging with an existing report of the same id)."""
    rep = assert_equal(lhs, rhs, suite, relation, paper_ref)
    if tag is not None and rep.failures:
        for f in rep.failures:
            f["instance"] = {"label": tag, "grid": f["instance"]}
    for r in reports:
        if r.suite == suite and r.relation == relation:
            r.merge(rep)
            return r
    reports.append(rep)
    return rep
