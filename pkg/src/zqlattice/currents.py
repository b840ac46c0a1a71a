"""Lattice current algebra over the Z_q Weyl lattice.

Right currents sit on edges 1..N, site algebras on sites 0..N-1; both are
extended periodically to all integers. Every object is a one-leg
:class:`~zqlattice.universal.Universal` whose body is a WeylElement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycloNum, half_qpow, qpow
from .report import RelationReport
from .universal import (
    R_minus,
    R_plus,
    Universal,
    check_relation,
    delta_a,
    inverse_u,
    leg_embed,
    prod_u,
    scalar_universal,
    star_u,
)
from .weyl import WeylAlgebra, WeylElement, lattice_table, weyl_symmetric

__all__ = [
    "LatticeConfig",
    "CurrentFamily",
    "build_currents",
    "v_a",
    "check_current_suite",
    "check_centrality",
    "k2_sign_control",
]

CHIRALITIES = ("r", "l")


@dataclass(frozen=True)
class LatticeConfig:
    p: int
    N: int
    overlap: str = "sum"

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 3 or self.p % 2 == 0:
            raise ValueError("p must be an odd integer >= 3")
        if not isinstance(self.N, int) or self.N < 2:
            raise ValueError("N must be an integer >= 2")


def v_a(alg, power: int = 1) -> Universal:
    """Ribbon element on the auxiliary leg, v_a(t) = q^{-t^2}, raised to `power`."""
    p = alg.p
    return scalar_universal(alg, 1, lambda t: qpow(p, -power * t * t))


def u1(x: Universal) -> Universal:
    return leg_embed(x, 1, 2)


def u2(x: Universal) -> Universal:
    return leg_embed(x, 2, 2)


class CurrentFamily:
    """Currents J^r_n, J^l_n and site elements N_{n,+-} for one lattice."""

    has_N = True

    def __init__(self, config: LatticeConfig):
        self.config = config
        self.p = config.p
        self.N = config.N
        self.table = lattice_table(config.p, config.N, config.overlap)
        self.alg = WeylAlgebra(self.table)
        self._cache: dict = {}

    # indices
    def edge(self, n: int) -> int:
        return (n - 1) % self.N + 1

    def site(self, n: int) -> int:
        return n % self.N

    # generators
    def gen(self, name: str, power: int = 1) -> WeylElement:
        return WeylElement.gen(self.table, name, power)

    def h(self, n: int, power: int = 1) -> WeylElement:
        return self.gen(f"H{self.site(n)}", power)

    def Wr(self, n: int) -> WeylElement:
        return self.gen(f"Wr{self.edge(n)}")

    def Wl(self, n: int) -> WeylElement:
        """exp(varpi^l_n) with varpi^l_n = varpi^r_n - ln q (p_n + p_{n-1}).

        The symmetric exponential equals q^{-1} h_{n-1}^{-1} Wr_n h_n^{-1};
        only this phase makes J^l agree with v_a^2 N_{n-1,+}^{-1} J^r_n N_{n,-}.
        """
        t = self.table
        a = [0] * t.n
        a[t.index[f"Wr{self.edge(n)}"]] += 1
        a[t.index[f"H{self.site(n - 1)}"]] -= 1
        a[t.index[f"H{self.site(n)}"]] -= 1
        return weyl_symmetric(t, a)

    def W(self, alpha: str, n: int) -> WeylElement:
        return self.Wr(n) if alpha == "r" else self.Wl(n)

    def _memo(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    # universal elements
    def J(self, alpha: str, n: int) -> Universal:
        _check_alpha(alpha)
        e = self.edge(n)

        def build():
            w = self.W(alpha, e)
            sign = 1 if alpha == "r" else -1
            powers = _powers(w, self.p)
            return Universal.from_function(self.alg, 1, lambda t: powers[t] * half_qpow(self.p, sign * t * t))

        return self._memo(("J", alpha, e), build)

    def Nop(self, n: int, sign: int) -> Universal:
        s = self.site(n)
        return self._memo(("N", s, sign), lambda: Universal.from_function(self.alg, 1, lambda t: self.h(s, sign * t)))

    def U(self, alpha: str, n: int) -> Universal:
        if not 1 <= n <= self.N - 1:
            raise IndexError("holonomy index must lie in 1..N-1")
        return self._memo(("U", alpha, n), lambda: prod_u(*[self.J(alpha, k) for k in range(1, n + 1)]))

    def M(self, alpha: str, n: int = 0) -> Universal:
        if not 0 <= n < self.N:
            raise IndexError("monodromy base point must lie in 0..N-1")
        order = list(range(n + 1, self.N + 1)) + list(range(1, n + 1))
        return self._memo(("M", alpha, n), lambda: prod_u(*[self.J(alpha, k) for k in order]))

    def xi_site(self, n: int, k: int) -> Universal:
        """iota_n(h^k) as a constant one-leg element."""
        x = self.h(n, k)
        return Universal.from_function(self.alg, 1, lambda t: x)

    def xi_coproduct(self, n: int, k: int) -> Universal:
        """Delta_n(h^k) = Delta'_n(h^k): t -> q^{kt} h_n^k (Z_q is cocommutative)."""
        x = self.h(n, k)
        return Universal.from_function(self.alg, 1, lambda t: x * qpow(self.p, k * t))

    def center(self, alpha: str) -> list:
        """c^t_alpha: the (one-dimensional) trace of tau^t(M^alpha)."""
        m = self.M(alpha, 0)
        return [m.body[(t,)] for t in range(self.p)]


def build_currents(config: LatticeConfig) -> CurrentFamily:
    return CurrentFamily(config)


def _check_alpha(alpha: str) -> None:
    if alpha not in CHIRALITIES:
        raise ValueError("chirality must be 'r' or 'l'")


def _powers(w: WeylElement, p: int) -> list:
    out = [WeylElement.one(w.table)]
    for _ in range(1, p):
        out.append(out[-1] * w)
    return out


# ---------------------------------------------------------------------------
# relation suites

SUITE = "currents"


def _neighbours(N: int, n: int) -> set:
    return {(n - 2) % N + 1, n % N + 1, n}


def check_current_suite(fam, reports: list | None = None, suite: str = SUITE) -> list:
    """Def. 2 relations plus left currents, holonomies and monodromies.

    `fam` needs p, N, alg, J(alpha, n); relations that involve site
    elements are skipped when ``fam.has_N`` is false (image families).
    """
    reports = [] if reports is None else reports
    alg, N, p = fam.alg, fam.N, fam.p
    Rp, Rm = R_plus(alg), R_minus(alg)
    chk = lambda rel, ref, lhs, rhs, tag=None: check_relation(reports, suite, rel, ref, lhs, rhs, tag=tag)
    edges = range(1, N + 1)

    for n in edges:
        Jr, Jl = fam.J("r", n), fam.J("l", n)
        tag = f"n={n}"
        chk("K2", "functoriality of J^r", u2(Jr) * u1(Jr), Rm * delta_a(Jr), tag)
        chk("K2*", "unitarity of J^r", star_u(Jr), inverse_u(Jr), tag)
        chk("JJ", "R_+ J1 J2 R_- = J2 J1", Rp * u1(Jr) * u2(Jr) * Rm, u2(Jr) * u1(Jr), tag)
        chk("JJ", "R_- J1 J2 R_+ = J2 J1", Rm * u1(Jr) * u2(Jr) * Rp, u2(Jr) * u1(Jr), tag)
        Jr1, Jl1 = fam.J("r", n + 1), fam.J("l", n + 1)
        chk("K4", "neighbour exchange of J^r", u1(Jr1) * u2(Jr), u2(Jr) * Rp * u1(Jr1), tag)
        chk("DI", "functoriality of J^l", u1(Jl) * u2(Jl), Rp * delta_a(Jl), tag)
        chk("DI*", "unitarity of J^l", star_u(Jl), inverse_u(Jl), tag)
        chk("II", "neighbour exchange of J^l", u1(Jl) * Rm * u2(Jl1), u2(Jl1) * u1(Jl), tag)
        for m in edges:
            if m not in _neighbours(N, n):
                Jrm, Jlm = fam.J("r", m), fam.J("l", m)
                chk("Jbr", "ultralocality of J^r", u1(Jr) * u2(Jrm), u2(Jrm) * u1(Jr), f"n={n},m={m}")
                chk("II-far", "ultralocality of J^l", u1(Jl) * u2(Jlm), u2(Jlm) * u1(Jl), f"n={n},m={m}")
            Jrm = fam.J("r", m)
            chk("JI", "left and right currents commute", u1(Jl) * u2(Jrm), u2(Jrm) * u1(Jl), f"n={n},m={m}")

    if getattr(fam, "has_N", False):
        _site_relations(fam, chk, Rp, Rm)
    _holonomy_relations(fam, chk, Rp, Rm)
    _monodromy_relations(fam, chk, Rp, Rm)
    return reports


def _site_relations(fam, chk, Rp, Rm) -> None:
    alg, N, p = fam.alg, fam.N, fam.p
    for n in range(1, N + 1):
        Jr, Jl = fam.J("r", n), fam.J("l", n)
        tag = f"n={n}"
        for sgn, R in ((1, Rp), (-1, Rm)):
            Nn, Nm = fam.Nop(n, sgn), fam.Nop(n - 1, sgn)
            chk("JN", "N_{n,+-} J_n covariance", u1(Nn) * u2(Jr), u2(Jr) * R * u1(Nn), tag)
            chk("JN", "J_n N_{n-1,+-} covariance", u2(Jr) * u1(Nm), R * u1(Nm) * u2(Jr), tag)
        nchir = v_a(alg, 2) * inverse_u(fam.Nop(n - 1, 1)) * Jr * fam.Nop(n, -1)
        chk("nchir", "left current from right current", Jl, nchir, tag)
        for k in range(1, p):
            kt = f"n={n},k={k}"
            chk("K1", "iota_n(xi) J_n = J_n Delta'_n(xi)", fam.xi_site(n, k) * Jr, Jr * fam.xi_coproduct(n, k), kt)
            chk("K1", "Delta'_{n-1}(xi) J_n = J_n iota_{n-1}(xi)", fam.xi_coproduct(n - 1, k) * Jr, Jr * fam.xi_site(n - 1, k), kt)
            chk("FI", "iota_n(xi) J^l_n = J^l_n Delta_n(xi)", fam.xi_site(n, k) * Jl, Jl * fam.xi_coproduct(n, k), kt)
            chk("FI", "Delta_{n-1}(xi) J^l_n = J^l_n iota_{n-1}(xi)", fam.xi_coproduct(n - 1, k) * Jl, Jl * fam.xi_site(n - 1, k), kt)
            for m in range(N):
                if m % N not in (n % N, (n - 1) % N):
                    x = fam.xi_site(m, k)
                    chk("K1", "iota_m(xi) commutes with J^r_n", x * Jr, Jr * x, f"n={n},m={m},k={k}")
                    chk("FI", "iota_m(xi) commutes with J^l_n", x * Jl, Jl * x, f"n={n},m={m},k={k}")
    # holonomy covariance
    for n in range(1, N):
        for k in range(1, p):
            tag = f"n={n},k={k}"
            Ur, Ul = fam.U("r", n), fam.U("l", n)
            chk("u'", "Delta'_0(xi) U^r_n = U^r_n iota_0(xi)", fam.xi_coproduct(0, k) * Ur, Ur * fam.xi_site(0, k), tag)
            chk("u'", "iota_n(xi) U^r_n = U^r_n Delta'_n(xi)", fam.xi_site(n, k) * Ur, Ur * fam.xi_coproduct(n, k), tag)
            chk("u''", "Delta_0(xi) U^l_n = U^l_n iota_0(xi)", fam.xi_coproduct(0, k) * Ul, Ul * fam.xi_site(0, k), tag)
            chk("u''", "iota_n(xi) U^l_n = U^l_n Delta_n(xi)", fam.xi_site(n, k) * Ul, Ul * fam.xi_coproduct(n, k), tag)
            for m in range(1, N):
                if m != n:
                    x = fam.xi_site(m, k)
                    chk("u'", "iota_m(xi) commutes with U^r_n", x * Ur, Ur * x, f"n={n},m={m},k={k}")
                    chk("u''", "iota_m(xi) commutes with U^l_n", x * Ul, Ul * x, f"n={n},m={m},k={k}")
    # monodromy covariance
    Mr, Ml = fam.M("r"), fam.M("l")
    for k in range(1, p):
        d0 = fam.xi_coproduct(0, k)
        chk("Mrcov", "Delta'_0(xi) M^r = M^r Delta'_0(xi)", d0 * Mr, Mr * d0, f"k={k}")
        chk("Mlcov", "Delta_0(xi) M^l = M^l Delta_0(xi)", d0 * Ml, Ml * d0, f"k={k}")
        for m in range(1, N):
            x = fam.xi_site(m, k)
            chk("Mrcov", "iota_m(xi) commutes with M^r", x * Mr, Mr * x, f"m={m},k={k}")
            chk("Mlcov", "iota_m(xi) commutes with M^l", x * Ml, Ml * x, f"m={m},k={k}")
    for sgn, R in ((1, Rp), (-1, Rm)):
        N0 = fam.Nop(0, sgn)
        chk("Mrcov", "R N_0 M^r = M^r R N_0", R * u1(N0) * u2(Mr), u2(Mr) * R * u1(N0))
        chk("Mlcov", "N_0 R M^l = M^l N_0 R", u1(N0) * R * u2(Ml), u2(Ml) * u1(N0) * R)


def _holonomy_relations(fam, chk, Rp, Rm) -> None:
    N = fam.N
    for n in range(1, N):
        Ur, Ul = fam.U("r", n), fam.U("l", n)
        tag = f"n={n}"
        chk("DU", "functoriality of U^r", u2(Ur) * u1(Ur), Rm * delta_a(Ur), tag)
        chk("DU", "functoriality of U^l", u1(Ul) * u2(Ul), Rp * delta_a(Ul), tag)
        chk("cU", "unitarity of U^r", star_u(Ur), inverse_u(Ur), tag)
        chk("cU", "unitarity of U^l", star_u(Ul), inverse_u(Ul), tag)
        for R, Rb in ((Rp, Rm), (Rm, Rp)):
            chk("uu", "R U^r_1 U^r_2 R' = U^r_2 U^r_1", R * u1(Ur) * u2(Ur) * Rb, u2(Ur) * u1(Ur), tag)
            chk("uu", "R U^l_2 U^l_1 R' = U^l_1 U^l_2", R * u2(Ul) * u1(Ul) * Rb, u1(Ul) * u2(Ul), tag)
        for m in range(n + 1, N):
            Urm, Ulm = fam.U("r", m), fam.U("l", m)
            t2 = f"n={n},m={m}"
            chk("UU", "overlapping right holonomies", u2(Ur) * u1(Urm), Rm * u1(Urm) * u2(Ur), t2)
            chk("UU", "overlapping left holonomies", u1(Ul) * u2(Ulm), Rp * u2(Ulm) * u1(Ul), t2)


def _monodromy_relations(fam, chk, Rp, Rm) -> None:
    N = fam.N
    Mr, Ml = fam.M("r"), fam.M("l")
    chk("DM", "functoriality of M^r", u2(Mr) * Rp * u1(Mr), Rm * delta_a(Mr))
    chk("DM", "functoriality of M^l", u1(Ml) * Rm * u2(Ml), Rp * delta_a(Ml))
    chk("cM", "unitarity of M^r", star_u(Mr), inverse_u(Mr))
    chk("cM", "unitarity of M^l", star_u(Ml), inverse_u(Ml))
    for n in range(1, N):
        Ur, Ul = fam.U("r", n), fam.U("l", n)
        tag = f"n={n}"
        chk("UM", "R_+ U^r_n M^r = M^r R_+ U^r_n", Rp * u1(Ur) * u2(Mr), u2(Mr) * Rp * u1(Ur), tag)
        chk("UM", "R_- U^l_n M^l = M^l R_- U^l_n", Rm * u2(Ul) * u1(Ml), u1(Ml) * Rm * u2(Ul), tag)
    for alpha in CHIRALITIES:
        M0 = fam.M(alpha, 0)
        for n in range(1, N):
            Mn = fam.M(alpha, n)
            U = fam.U(alpha, n)
            chk("Mn", "M_n = U_n^{-1} M U_n", Mn, inverse_u(U) * M0 * U, f"{alpha},n={n}")
            chk("Mn-trace", "traces of M_n do not depend on n", Mn, M0, f"{alpha},n={n}")


def check_centrality(fam, reports: list | None = None, suite: str = SUITE) -> list:
    """c^t_alpha commutes with every current and every N_{m,+-}."""
    reports = [] if reports is None else reports
    p, N = fam.p, fam.N
    for alpha in CHIRALITIES:
        rep = RelationReport(suite, f"center-{alpha}", "c^t commutes with K_N", 0)
        for t, c in enumerate(fam.center(alpha)):
            others = []
            for beta in CHIRALITIES:
                for m in range(1, N + 1):
                    others += [(f"J^{beta}_{m}({s})", fam.J(beta, m).body[(s,)]) for s in range(p)]
            for m in range(N):
                others += [(f"h_{m}", fam.h(m))]
            for label, x in others:
                rep.instances_checked += 1
                if not c.commutes_with(x):
                    rep.add_failure({"t": t, "with": label}, "commutator nonzero")
        reports.append(rep)
    return reports


def center_acts_on_vertex(fam) -> bool:
    """True iff c^1_r fails to commute with Qr (vertex operators act on the center)."""
    c = fam.center("r")[1]
    return not c.commutes_with(fam.gen("Qr"))


def k2_sign_control(fam) -> RelationReport:
    """(K2) with R_- replaced by R_+; expected to fail."""
    reports: list = []
    Rp = R_plus(fam.alg)
    for n in range(1, fam.N + 1):
        Jr = fam.J("r", n)
        check_relation(reports, "currents-control", "K2-flipped", "R_- -> R_+ in (K2)", u2(Jr) * u1(Jr), Rp * delta_a(Jr), tag=f"n={n}")
    return reports[0]
