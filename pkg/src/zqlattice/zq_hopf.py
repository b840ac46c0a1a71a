"""The modular Hopf algebra Z_q in evaluation form.

An element x of Z_q is stored through its values tau^t(x) in the p
one-dimensional representations tau^t(h) = q^t. Products are entrywise,
Delta(x)(t, s) = x(t + s), S(x)(t) = x(-t), eps(x) = x(0) and
(x*)(t) = conj(x(t)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycloNum, berkowitz_det, check_root_order, half_qpow, qpow
from .report import RelationReport
from .universal import (
    ScalarAlgebra,
    Universal,
    check_relation,
    delta_a,
    embed,
    inverse_u,
    permute,
    star_u,
)

__all__ = [
    "ZqElement",
    "ZqBasics",
    "build_basics",
    "smatrix",
    "tmatrix",
    "det_smatrix",
    "check_modularity",
    "universal_N",
    "two_leg",
    "check_hopf_suite",
]


@dataclass(frozen=True)
class ZqElement:
    p: int
    evals: tuple

    def __post_init__(self):
        if len(self.evals) != self.p:
            raise ValueError("need one value per representation")

    @classmethod
    def from_function(cls, p, fn) -> "ZqElement":
        return cls(p, tuple(fn(t) for t in range(p)))

    @classmethod
    def from_coefficients(cls, p, coeffs) -> "ZqElement":
        """x = sum_m a_m h^m."""
        return cls.from_function(
            p, lambda t: sum((CycloNum.monomial(p, t * m, a) for m, a in enumerate(coeffs)), CycloNum.zero(p))
        )

    def coefficients(self) -> list:
        """Group-algebra coefficients a_m of x = sum a_m h^m (at primitive q)."""
        p = self.p
        out = []
        for m in range(p):
            acc = CycloNum.zero(p)
            for t in range(p):
                acc = acc + self.evals[t].shift(-t * m)
            out.append((acc / p).reduced())
        return out

    def __call__(self, t: int) -> CycloNum:
        return self.evals[t % self.p]

    def __mul__(self, other: "ZqElement") -> "ZqElement":
        return ZqElement(self.p, tuple(a * b for a, b in zip(self.evals, other.evals)))

    def __add__(self, other: "ZqElement") -> "ZqElement":
        return ZqElement(self.p, tuple(a + b for a, b in zip(self.evals, other.evals)))

    def inv(self) -> "ZqElement":
        return ZqElement(self.p, tuple(a.inv() for a in self.evals))

    def star(self) -> "ZqElement":
        return ZqElement(self.p, tuple(a.star() for a in self.evals))

    def antipode(self) -> "ZqElement":
        return ZqElement.from_function(self.p, lambda t: self((-t) % self.p))

    def counit(self) -> CycloNum:
        return self.evals[0]

    def coproduct(self) -> Universal:
        p = self.p
        return two_leg(p, lambda t, s: self((t + s) % p))

    def __eq__(self, other):
        return isinstance(other, ZqElement) and self.p == other.p and self.evals == other.evals

    def __hash__(self):
        return hash((self.p, self.evals))


def two_leg(p: int, fn) -> Universal:
    """A TwoLegScalar: table (t, s) -> CycloNum, compared with ring equality."""
    return Universal.from_function(ScalarAlgebra(p, ring_equality=True), 2, fn)


@dataclass(frozen=True)
class ZqBasics:
    p: int
    h: ZqElement
    P: tuple
    v: ZqElement
    kappa: ZqElement
    w: ZqElement
    R: Universal
    S_element: Universal


def _compute_w(p: int, v: ZqElement, R: Universal, P: tuple) -> ZqElement:
    # w^{-1} = v^{-1} sum S(r2) r1 with R = sum_{s,u} R(s,u) P^s (x) P^u
    def w_inv(t):
        acc = CycloNum.zero(p)
        for s in range(p):
            for u in range(p):
                acc = acc + R(s, u) * P[u].antipode()(t) * P[s](t)
        return v(t).inv() * acc

    return ZqElement.from_function(p, w_inv).inv()


def build_basics(p: int) -> ZqBasics:
    check_root_order(p)
    h = ZqElement.from_function(p, lambda t: qpow(p, t))
    P = tuple(
        ZqElement.from_function(p, lambda t, s=s: CycloNum.one(p) if t == s else CycloNum.zero(p))
        for s in range(p)
    )
    v = ZqElement.from_function(p, lambda t: qpow(p, -t * t))
    kappa = ZqElement.from_function(p, lambda t: half_qpow(p, -t * t))
    R = two_leg(p, lambda t, s: qpow(p, t * s))
    w = _compute_w(p, v, R, P)
    # S = N_+ Delta(kappa) (kappa (x) kappa)^{-1}
    S_el = two_leg(p, lambda t, s: R(t, s) * kappa((t + s) % p) * (kappa(t) * kappa(s)).inv())
    return ZqBasics(p, h, P, v, kappa, w, R, S_el)


def _root_order_any(p: int) -> None:
    if not isinstance(p, int) or p < 2:
        raise ValueError("root order must be an integer >= 2")


def smatrix(p: int, theta=1) -> list:
    """S_{ts} = theta * q^{2ts}; even p allowed for diagnostics."""
    _root_order_any(p)
    return [[CycloNum.monomial(p, 2 * t * s, theta, strict=False) for s in range(p)] for t in range(p)]


def tmatrix(p: int, varpi=1) -> list:
    _root_order_any(p)
    zero = CycloNum.scalar(p, 0, strict=False)
    return [
        [CycloNum.monomial(p, -t * t, varpi, strict=False) if t == s else zero for s in range(p)]
        for t in range(p)
    ]


def det_smatrix(p: int, theta=1) -> CycloNum:
    return berkowitz_det(smatrix(p, theta))


def check_modularity(p: int, theta=1) -> bool:
    """True iff det S is nonzero in Q[q]/(q^p - 1)."""
    return not det_smatrix(p, theta).is_zero()


def det_primitive_component_nonzero(p: int, theta=1) -> bool:
    """det S evaluated at a primitive p-th root of unity is nonzero."""
    return not det_smatrix(p, theta).field_is_zero()


_N_SIGNS = {"N+": 1, "N-": -1, "N": 2, "Ntilde": -2, "Ñ": -2}


def universal_N(p: int, which: str) -> Universal:
    """N_+- (t,s) = q^{+-ts}, N = q^{2ts}, Ntilde = q^{-2ts}."""
    check_root_order(p)
    if which not in _N_SIGNS:
        raise ValueError(f"unknown universal element {which!r}")
    k = _N_SIGNS[which]
    return two_leg(p, lambda t, s: qpow(p, k * t * s))


def check_hopf_suite(p: int) -> list:
    """Hopf-layer relations evaluated on full (Z_p)^k grids."""
    suite = "hopf"
    b = build_basics(p)
    reps: list = []
    alg = ScalarAlgebra(p, ring_equality=True)

    def tab(k, fn):
        return Universal.from_function(alg, k, fn)

    def add(rel, ref, lhs, rhs):
        check_relation(reps, suite, rel, ref, lhs, rhs)

    Np, Nm, N, Nt = (universal_N(p, w) for w in ("N+", "N-", "N", "Ntilde"))
    # legs: 1, 2 auxiliary; 3 the algebra G
    R12p = embed(b.R, (1, 2), 3)
    R12m = inverse_u(permute(R12p, (2, 1, 3)))
    up = lambda X, leg: embed(X, (leg, 3), 3)  # noqa: E731

    for name, X in (("N+", Np), ("N-", Nm)):
        add("Npmeq", "Delta_a(N+-) = N1 N2", delta_a(X, 1), up(X, 1) * up(X, 2))
        add("Npmeq", "R+ N1 N2 = N2 N1 R+", R12p * up(X, 1) * up(X, 2), up(X, 2) * up(X, 1) * R12p)
    add("Npmeq", "R+ N+1 N-2 = N-2 N+1 R+", R12p * up(Np, 1) * up(Nm, 2), up(Nm, 2) * up(Np, 1) * R12p)
    add("Nsplit", "N = N+ N-^{-1}", N, Np * inverse_u(Nm))
    add("Nsplit", "Ntilde = N+^{-1} N-", Nt, inverse_u(Np) * Nm)
    add("DN", "R+ Delta_a(N) = N2 R+ N1", R12p * delta_a(N, 1), up(N, 2) * R12p * up(N, 1))
    add("Nprop", "N1 R+ N2 = R+ Delta_a(N)", up(N, 1) * R12p * up(N, 2), R12p * delta_a(N, 1))
    add(
        "NN",
        "R-^{-1} N2 R+ N1 = N1 R-^{-1} N2 R+",
        inverse_u(R12m) * up(N, 2) * R12p * up(N, 1),
        up(N, 1) * inverse_u(R12m) * up(N, 2) * R12p,
    )
    add("N'", "R- Delta_a(Nt) = Nt1 R- Nt2", R12m * delta_a(Nt, 1), up(Nt, 1) * R12m * up(Nt, 2))
    add(
        "N'",
        "R+^{-1} Nt1 R- Nt2 = Nt2 R+^{-1} Nt1 R-",
        inverse_u(R12p) * up(Nt, 1) * R12m * up(Nt, 2),
        up(Nt, 2) * inverse_u(R12p) * up(Nt, 1) * R12m,
    )
    add("*N", "N* = N^{-1} (S = e(x)e)", star_u(N), inverse_u(N))
    add("*N", "Nt* = Nt^{-1}", star_u(Nt), inverse_u(Nt))
    add("*N", "N* = S^{-1} N^{-1} S", star_u(N), inverse_u(b.S_element) * inverse_u(N) * b.S_element)
    add("*N", "N+-* = N-+", star_u(Np), Nm)
    add("*N", "N* = Ntilde", star_u(N), Nt)

    one2 = tab(2, lambda t, s: CycloNum.one(p))
    S = b.S_element
    add("SS", "S = e (x) e", S, one2)
    S_alt = two_leg(p, lambda t, s: qpow(p, -t * s) * b.kappa((t + s) % p).inv() * b.kappa(t) * b.kappa(s))
    add("SS", "two expressions for S agree", S, S_alt)
    add("propS", "S* = S", star_u(S), S)
    add("propS", "P S P = S^{-1}", permute(S, (2, 1)), inverse_u(S))

    # ribbon factorisation R'R = (v (x) v) Delta(v^{-1})
    Rp = permute(b.R, (2, 1))
    vv = two_leg(p, lambda t, s: b.v(t) * b.v(s) * b.v((t + s) % p).inv())
    add("rib", "R'R = (v(x)v) Delta(v^{-1})", Rp * b.R, vv)
    one1 = tab(1, lambda t: CycloNum.one(p))
    vt = tab(1, lambda t: b.v(t))
    add("rib", "S(v) = v", tab(1, lambda t: b.v.antipode()(t)), vt)
    add("rib", "eps(v) = 1", tab(0, lambda: b.v.counit()), tab(0, lambda: CycloNum.one(p)))
    add("stop", "v* = v^{-1}", tab(1, lambda t: b.v.star()(t)), tab(1, lambda t: b.v.inv()(t)))
    add("stop", "R* = P R^{-1} P", star_u(b.R), permute(inverse_u(b.R), (2, 1)))
    add("stop", "R = R'", b.R, Rp)
    add("kappa", "kappa^2 = v", tab(1, lambda t: b.kappa(t) * b.kappa(t)), vt)
    add("w", "w = 1 (quantum trace = trace)", tab(1, lambda t: b.w(t)), one1)
    add("P", "tau^t(P^s) = delta", tab(2, lambda t, s: b.P[s](t)), tab(2, lambda t, s: CycloNum.scalar(p, 1 if t == s else 0)))
    # the group-algebra formula for P^s only collapses to a delta at primitive q
    falg = ScalarAlgebra(p)
    add(
        "P",
        "P^s from group-algebra formula",
        Universal.from_function(falg, 2, lambda t, s: _projector_formula(p, s, t)),
        Universal.from_function(falg, 2, lambda t, s: b.P[s](t)),
    )
    # quasi-triangularity
    R3 = lambda i, j: embed(b.R, (i, j), 3)  # noqa: E731
    id_delta = Universal.from_function(alg, 3, lambda t, u, s: b.R(t, (u + s) % p))
    delta_id = delta_a(b.R, 1)
    add("qt", "(id(x)Delta)(R) = R13 R12", id_delta, R3(1, 3) * R3(1, 2))
    add("qt", "(Delta(x)id)(R) = R13 R23", delta_id, R3(1, 3) * R3(2, 3))
    hD = b.h.coproduct()
    add("qt", "R Delta(h) = Delta'(h) R", b.R * hD, permute(hD, (2, 1)) * b.R)
    # (rib) read with R_+, R_- as elements of G_a (x) G_a
    Rm = inverse_u(Rp)
    add("rib", "R+ R-^{-1} = R'R", b.R * inverse_u(Rm), Rp * b.R)
    return reps


def _projector_formula(p: int, s: int, t: int) -> CycloNum:
    """tau^t of P^s = (1/p) sum_m q^{-sm} h^m."""
    acc = CycloNum.zero(p)
    for m in range(p):
        acc = acc + qpow(p, m * (t - s))
    return acc * Fraction(1, p)
