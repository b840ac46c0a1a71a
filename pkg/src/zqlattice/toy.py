"""The one-site toy model for Z_q on the dense backend.

The model space M^l (x) M^r has basis |s', s''> (index s' p + s''), with
p_l |s',s''> = s' and p_r |s',s''> = s''. Q_r shifts s'', Q_l shifts s'.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .cyclotomic import CycloNum, half_qpow, qpow
from .dense import DenseAlgebra, DenseOperator
from .report import RelationReport
from .universal import (
    R_minus,
    R_plus,
    Universal,
    check_relation,
    delta_a,
    embed,
    epsilon_a,
    inverse_u,
    leg_embed,
    permute,
    s_a,
    scalar_universal,
    sigma_insert,
    star_u,
)

__all__ = [
    "ToyModel",
    "ToyStructureData",
    "build_toy",
    "compute_structure_data",
    "left_data_from_right",
    "check_prop1",
    "check_left_data",
    "check_toy_suite",
    "check_prop4",
    "gauge_transform",
    "theta_from_F",
    "structure_data",
    "run_toy",
    "qr_off_diagonal_fails",
    "ax3_inverse_control",
    "gauge_F",
]


class ToyModel:
    def __init__(self, p: int):
        self.p = p
        self.dim = p * p
        self.alg = DenseAlgebra(p, self.dim)
        self.one = self.alg.one()
        self.Qr = DenseOperator.from_map(p, self.dim, lambda c: [(self.index(c // p, c % p + 1), CycloNum.one(p))])
        self.Ql = DenseOperator.from_map(p, self.dim, lambda c: [(self.index(c // p + 1, c % p), CycloNum.one(p))])
        self._Qr_pow = _powers(self.Qr, p)
        self._Ql_pow = _powers(self.Ql, p)
        self.Phi_r = Universal.from_function(self.alg, 1, lambda t: self._Qr_pow[t])
        self.Phi_l = Universal.from_function(self.alg, 1, lambda t: self._Ql_pow[t])
        self.M_r = Universal.from_function(self.alg, 1, lambda t: self.qdiag(lambda sl, sr: t * t + 2 * t * sr))
        self.M_l = Universal.from_function(self.alg, 1, lambda t: self.qdiag(lambda sl, sr: -t * t - 2 * t * sl))
        # g = S_a(Phi^l) Phi^r
        self.g = s_a(self.Phi_l) * self.Phi_r
        self.diag_basis = sorted(self.index(-s, s) for s in range(p))

    def index(self, sl: int, sr: int) -> int:
        p = self.p
        return (sl % p) * p + (sr % p)

    def qdiag(self, expo: Callable[[int, int], int]) -> DenseOperator:
        """Diagonal operator q^{expo(s', s'')}."""
        p = self.p
        return DenseOperator.diagonal(p, [qpow(p, expo(c // p, c % p)) for c in range(self.dim)])

    def center(self, alpha: str, f: Callable[[int], CycloNum]) -> DenseOperator:
        """f(p_alpha) as a diagonal operator; these span the center C^alpha."""
        p = self.p
        pick = (lambda c: c % p) if alpha == "r" else (lambda c: c // p)
        return DenseOperator.diagonal(p, [f(pick(c)) for c in range(self.dim)])

    def center_basis(self, alpha: str) -> list:
        return [self.center(alpha, lambda s, k=k: qpow(self.p, k * s)) for k in range(self.p)]

    def ribbon_center(self, alpha: str) -> DenseOperator:
        return self.center(alpha, lambda s: qpow(self.p, -s * s))

    def h_J(self, alpha: str, k: int = 1) -> DenseOperator:
        """Image of h^k under J^alpha = G (q^{p_alpha})."""
        return self.center(alpha, lambda s: qpow(self.p, k * s))

    def iota(self, k: int = 1) -> DenseOperator:
        """Diagonal action of h^k on M^l (x) M^r via the coproduct."""
        return self.qdiag(lambda sl, sr: k * (sl + sr))

    def N_iota(self, sign: int) -> Universal:
        return Universal.from_function(self.alg, 1, lambda t: self.qdiag(lambda sl, sr: sign * t * (sl + sr)))

    def N_J(self, alpha: str) -> Universal:
        """N with its second leg in J^r (v_a M^r), or N-tilde in J^l (v_a^{-1} M^l)."""
        if alpha == "r":
            return Universal.from_function(self.alg, 1, lambda t: self.qdiag(lambda sl, sr: 2 * t * sr))
        return Universal.from_function(self.alg, 1, lambda t: self.qdiag(lambda sl, sr: -2 * t * sl))

    def diagonal_dimension(self) -> int:
        """Dimension of {phi : p_r phi = -p_l phi}, counted from the basis."""
        return sum(1 for c in range(self.dim) if (c % self.p + c // self.p) % self.p == 0)


def build_toy(p: int) -> ToyModel:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd integer >= 3")
    return ToyModel(p)


def _powers(x: DenseOperator, p: int) -> list:
    out = [DenseOperator.identity(x.p, x.dim)]
    for _ in range(1, p):
        out.append(out[-1] * x)
    return out


def v_a(alg, power: int = 1) -> Universal:
    p = alg.p
    return scalar_universal(alg, 1, lambda t: qpow(p, -power * t * t))


def u(x: Universal, slot: int, total: int = 2) -> Universal:
    return leg_embed(x, slot, total)


# ---------------------------------------------------------------------------
# structure data


@dataclass
class ToyStructureData:
    alpha: str
    phi: Universal
    phi_inv: Universal
    F: Universal
    D: Universal
    Rp: Universal
    Rm: Universal
    sigma: Callable[[Universal, int], Universal]
    center_basis: list
    ribbon: DenseOperator

    def sigma_of(self, f: DenseOperator) -> Universal:
        const = Universal(self.phi.alg, 0, {(): f})
        return self.sigma(const, 1)


def compute_structure_data(phi: Universal, N: Universal, center_basis: list, ribbon: DenseOperator, alpha: str = "r") -> ToyStructureData:
    """F, sigma, D and the braiding matrices of a vertex operator."""
    alg = phi.alg
    phi_inv = inverse_u(phi)
    if alpha == "r":
        F = u(phi, 2) * u(phi, 1) * delta_a(phi_inv)
    else:
        F = u(phi, 1) * u(phi, 2) * delta_a(phi_inv)
    D = phi * N * phi_inv
    Fp = permute(F, (2, 1))
    Rp = Fp * R_plus(alg) * inverse_u(F)
    Rm = Fp * R_minus(alg) * inverse_u(F)

    def sigma(x: Universal, slot: int) -> Universal:
        return sigma_insert(phi, x, slot, phi_inv)

    return ToyStructureData(alpha, phi, phi_inv, F, D, Rp, Rm, sigma, center_basis, ribbon)


def _transport_center(toy: ToyModel, X: DenseOperator, src: str) -> DenseOperator:
    """S_lr: f(p_r) -> f(-p_l); and its inverse for src='l'."""
    p = toy.p
    if any(i != j for (i, j) in X.entries):
        raise ValueError("center element must be diagonal")
    if src == "r":
        f = [X.get(toy.index(0, s), toy.index(0, s)) for s in range(p)]
        for c in range(toy.dim):
            if not X.get(c, c).field_eq(f[c % p]):
                raise ValueError("not a function of p_r")
        return toy.center("l", lambda s: f[(-s) % p])
    f = [X.get(toy.index(s, 0), toy.index(s, 0)) for s in range(p)]
    for c in range(toy.dim):
        if not X.get(c, c).field_eq(f[c // p]):
            raise ValueError("not a function of p_l")
    return toy.center("r", lambda s: f[(-s) % p])


def _S_lr_n(toy: ToyModel, x: Universal) -> Universal:
    """S^{(n)}_lr: antipode inverse on every auxiliary leg, S_lr on the body."""
    p = toy.p
    body = {}
    for idx in x.body:
        src = tuple((-i) % p for i in idx)
        body[idx] = _transport_center(toy, x.body[src], "r")
    return Universal(x.alg, x.legs, body)


def left_data_from_right(toy: ToyModel, right: ToyStructureData, phi_l: Universal | None = None) -> ToyStructureData:
    """Left structure data fixed by the right data through S_lr."""
    phi_l = toy.Phi_l if phi_l is None else phi_l
    phi_l_inv = inverse_u(phi_l)
    F = _S_lr_n(toy, inverse_u(permute(right.F, (2, 1))))
    D = _S_lr_n(toy, inverse_u(right.D))
    Rp = _S_lr_n(toy, permute(right.Rp, (2, 1)))
    Rm = _S_lr_n(toy, permute(right.Rm, (2, 1)))

    def sigma(x: Universal, slot: int) -> Universal:
        # sigma_l(f) = S^{(1)}_lr(sigma_r(S_lr^{-1}(f))), applied entrywise
        p = toy.p
        total = x.legs + 1
        i = slot - 1
        body = {}
        for idx in _grid(p, total):
            t = idx[i]
            rest = idx[:i] + idx[i + 1:]
            f_r = _transport_center(toy, x.body[rest], "l")
            moved = right.phi.body[((-t) % p,)] * f_r * right.phi_inv.body[((-t) % p,)]
            body[idx] = _transport_center(toy, moved, "r")
        return Universal(x.alg, total, body)

    return ToyStructureData("l", phi_l, phi_l_inv, F, D, Rp, Rm, sigma, toy.center_basis("l"), toy.ribbon_center("l"))


def _grid(p: int, k: int):
    import itertools

    return itertools.product(range(p), repeat=k)


def theta_from_F(F: Universal) -> Universal:
    """theta(t) = sum f1 S(f2) (x) f3 evaluated in tau^t, i.e. F(t, -t)."""
    p = F.alg.p
    return Universal(F.alg, 1, {(t,): F.body[(t, (-t) % p)] for t in range(p)})


# ---------------------------------------------------------------------------
# suites


def _const(alg, x) -> Universal:
    return Universal(alg, 0, {(): x})


def _centrality(reports, suite, toy_or_alg_gens, data: ToyStructureData, tag: str) -> None:
    rep = RelationReport(suite, "centrality", "structure data commute with the image of G", 0)
    for name, U in (("F", data.F), ("D", data.D), ("R+", data.Rp), ("R-", data.Rm)):
        for idx, x in U.body.items():
            for g in toy_or_alg_gens:
                rep.instances_checked += 1
                if not x.commutes_with(g):
                    rep.add_failure({"object": name, "grid": list(idx), "side": tag}, "does not commute")
    for f in data.center_basis:
        for idx, x in data.sigma_of(f).body.items():
            for g in toy_or_alg_gens:
                rep.instances_checked += 1
                if not x.commutes_with(g):
                    rep.add_failure({"object": "sigma", "grid": list(idx), "side": tag}, "does not commute")
    _merge(reports, rep)


def _merge(reports: list, rep: RelationReport) -> None:
    for r in reports:
        if r.suite == rep.suite and r.relation == rep.relation:
            r.merge(rep)
            return
    reports.append(rep)


def check_prop1(data: ToyStructureData, gens: list | None = None, reports: list | None = None, suite: str = "toy-prop1") -> list:
    """Right structure data: (Dop), (ax1), (ax3), (ax2), (qYB), star rules."""
    reports = [] if reports is None else reports
    alg = data.F.alg
    chk = lambda rel, ref, a, b, tag=None: check_relation(reports, suite, rel, ref, a, b, tag=tag)
    v = _const(alg, data.ribbon)
    vu = Universal.from_function(alg, 1, lambda t: data.ribbon)
    vinv = Universal.from_function(alg, 1, lambda t: data.ribbon.inverse())
    chk("Dop", "D = v_a vv^{-1} sigma(vv)", data.D, v_a(alg) * vinv * data.sigma(v, 1))
    F = data.F
    lhs = embed(F, (2, 3), 3) * delta_a(F, 2)
    rhs = data.sigma(F, 3) * delta_a(F, 1)
    chk("ax1", "(e x F)(id x Delta)(F) = sigma_3(F)(Delta x id)(F)", lhs, rhs)
    D = data.D
    chk("ax3", "D_1 RR_- = RR_+ sigma_2(D)", u(D, 1) * data.Rm, data.Rp * data.sigma(D, 2))
    chk("ax3", "RR_- D_2 = sigma_1(D) RR_+", data.Rm * u(D, 2), data.sigma(D, 1) * data.Rp)
    for k, f in enumerate(data.center_basis):
        sf = data.sigma_of(f)
        lhs = data.sigma(sf, 2)
        rhs = F * delta_a(sf) * inverse_u(F)
        chk("ax2", "sigma_2 sigma_1(f) = Delta_F(sigma(f))", lhs, rhs, f"k={k}")
        chk("*s", "sigma(f)* = sigma(f*)", star_u(sf), data.sigma_of(f.star()), f"k={k}")
        chk("rs-hom", "sigma is multiplicative", data.sigma_of(f * f), sf * sf, f"k={k}")
    for name, RR in (("+", data.Rp), ("-", data.Rm)):
        lhs = embed(RR, (1, 2), 3) * data.sigma(RR, 2) * embed(RR, (2, 3), 3)
        rhs = data.sigma(RR, 1) * embed(RR, (1, 3), 3) * data.sigma(RR, 3)
        chk("qYB", f"quantum Yang-Baxter for RR_{name}", lhs, rhs)
        chk("*RR", f"RR_{name} unitary", star_u(RR), inverse_u(RR))
    chk("*F", "F* = S_a F^{-1}", star_u(F), _S_a(alg) * inverse_u(F))
    chk("*D", "D* = D^{-1}", star_u(D), inverse_u(D))
    # Delta_F(xi)* = Delta_F(xi*) for xi = h^k
    p = alg.p
    for k in range(1, p):
        dxi = scalar_universal(alg, 2, lambda t, s, k=k: qpow(p, k * (t + s)))
        dxis = scalar_universal(alg, 2, lambda t, s, k=k: qpow(p, -k * (t + s)))
        DF = F * dxi * inverse_u(F)
        DFs = F * dxis * inverse_u(F)
        chk("*DF", "Delta_F(xi)* = Delta_F(xi*)", star_u(DF), DFs, f"k={k}")
    chk("norm", "epsilon_a(Phi) = e", epsilon_a(data.phi), Universal(alg, 0, {(): alg.one()}))
    if gens:
        _centrality(reports, suite, gens, data, "r")
    return reports


def _S_a(alg) -> Universal:
    """S_a = R_+ Delta(kappa)(kappa x kappa)^{-1} with kappa(t) = q^{-t^2/2}."""
    p = alg.p
    return scalar_universal(alg, 2, lambda t, s: qpow(p, t * s) * half_qpow(p, -((t + s) ** 2) + t * t + s * s))


def check_left_data(data: ToyStructureData, gens: list | None = None, reports: list | None = None, suite: str = "toy-left") -> list:
    """Left mirror relations for the transported structure data."""
    reports = [] if reports is None else reports
    alg = data.F.alg
    chk = lambda rel, ref, a, b, tag=None: check_relation(reports, suite, rel, ref, a, b, tag=tag)
    v = _const(alg, data.ribbon)
    vv = Universal.from_function(alg, 1, lambda t: data.ribbon)
    chk("lDop", "D_l = v_a^{-1} vv sigma_l(vv^{-1})", data.D, v_a(alg, -1) * vv * data.sigma(_const(alg, data.ribbon.inverse()), 1))
    F = data.F
    lhs = embed(F, (1, 2), 3) * delta_a(F, 1)
    rhs = data.sigma(F, 1) * delta_a(F, 2)
    chk("lax1", "[F_l x e]_{1243}(Delta x id)(F_l) = sigma_1(F_l)(id x Delta)(F_l)", lhs, rhs)
    D = data.D
    chk("lax3", "D_2 RR_+ = RR_- sigma_1(D)", u(D, 2) * data.Rp, data.Rm * data.sigma(D, 1))
    chk("lax3", "RR_+ D_1 = sigma_2(D) RR_-", data.Rp * u(D, 1), data.sigma(D, 2) * data.Rm)
    for k, f in enumerate(data.center_basis):
        sf = data.sigma_of(f)
        lhs = data.sigma(sf, 1)
        rhs = F * delta_a(sf) * inverse_u(F)
        chk("lax2", "sigma_1 sigma_2(f) = Delta_F(sigma(f))", lhs, rhs, f"k={k}")
        chk("l*s", "sigma_l(f)* = sigma_l(f*)", star_u(sf), data.sigma_of(f.star()), f"k={k}")
    for name, RR in (("+", data.Rp), ("-", data.Rm)):
        lhs = embed(RR, (2, 3), 3) * data.sigma(RR, 2) * embed(RR, (1, 2), 3)
        rhs = data.sigma(RR, 3) * embed(RR, (1, 3), 3) * data.sigma(RR, 1)
        chk("lqYB", f"left Yang-Baxter for RR^l_{name}", lhs, rhs)
        chk("l*RR", f"RR^l_{name} unitary", star_u(RR), inverse_u(RR))
    chk("l*F", "F_l* = S_a^{-1} F_l^{-1}", star_u(F), inverse_u(_S_a(alg)) * inverse_u(F))
    chk("l*D", "D_l* = D_l^{-1}", star_u(D), inverse_u(D))
    theta = theta_from_F(F)
    chk("theta", "S_a(Phi^l) = (Phi^l)^{-1} theta_l", s_a(data.phi), data.phi_inv * theta)
    if gens:
        _centrality(reports, suite, gens, data, "l")
    return reports


def check_toy_suite(toy: ToyModel, right: ToyStructureData, left: ToyStructureData, reports: list | None = None, suite: str = "toy") -> list:
    """Covariance, OPE, braid, monodromy and chirality relations of both sectors."""
    reports = [] if reports is None else reports
    alg, p = toy.alg, toy.p
    chk = lambda rel, ref, a, b, tag=None: check_relation(reports, suite, rel, ref, a, b, tag=tag)
    Rp, Rm = R_plus(alg), R_minus(alg)
    Pr, Pl, Mr, Ml = toy.Phi_r, toy.Phi_l, toy.M_r, toy.M_l
    const = lambda x: Universal.from_function(alg, 1, lambda t: x)
    coprod = lambda x, k: Universal.from_function(alg, 1, lambda t: x * qpow(p, k * t))
    for k in range(1, p):
        hr, hl = toy.h_J("r", k), toy.h_J("l", k)
        chk("rcov", "eta Phi = Phi Delta'(eta)", const(hr) * Pr, Pr * coprod(hr, k), f"k={k}")
        chk("lcov", "eta Phi^l = Phi^l Delta(eta)", const(hl) * Pl, Pl * coprod(hl, k), f"k={k}")
        io = toy.iota(k)
        chk("iota", "iota(xi) Phi^r = Phi^r Delta'_iota(xi)", const(io) * Pr, Pr * coprod(io, k), f"k={k}")
        chk("iota", "iota(xi) Phi^l = Phi^l Delta_iota(xi)", const(io) * Pl, Pl * coprod(io, k), f"k={k}")
        sPl = s_a(Pl)
        chk("SPcov", "S_a(Phi^l) xi = Delta_iota(xi) S_a(Phi^l)", sPl * const(hl), coprod(hl, k) * sPl, f"k={k}")
    chk("rcov", "M_1 Phi_2 R_- = Phi_2 R_+ M_1", u(Mr, 1) * u(Pr, 2) * Rm, u(Pr, 2) * Rp * u(Mr, 1))
    chk("rOPE", "Phi_2 Phi_1 = F Delta_a(Phi)", u(Pr, 2) * u(Pr, 1), right.F * delta_a(Pr))
    chk("rOPE", "RR_+ Phi_2 Phi_1 = Phi_1 Phi_2 R_+", right.Rp * u(Pr, 2) * u(Pr, 1), u(Pr, 1) * u(Pr, 2) * Rp)
    chk("rOPE", "RR_- Phi_2 Phi_1 = Phi_1 Phi_2 R_-", right.Rm * u(Pr, 2) * u(Pr, 1), u(Pr, 1) * u(Pr, 2) * Rm)
    chk("rmon", "D Phi = v_a Phi M", right.D * Pr, v_a(alg) * Pr * Mr)
    for k, f in enumerate(right.center_basis):
        chk("rs", "Phi f = sigma(f) Phi", Pr * const(f), right.sigma_of(f) * Pr, f"k={k}")
    chk("rM", "M_2 R_+ M_1 = R_- Delta_a(M)", u(Mr, 2) * Rp * u(Mr, 1), Rm * delta_a(Mr))
    for R, Rb, nm in ((Rp, Rm, "+"), (Rm, Rp, "-")):
        chk("MMr", f"R_{nm}^{{-1}} M_2 R_+ M_1 = M_1 R_-^{{-1}} M_2 R_{nm}'", inverse_u(R) * u(Mr, 2) * Rp * u(Mr, 1), u(Mr, 1) * inverse_u(Rm) * u(Mr, 2) * Rb)
        chk("MMl", f"R_{nm}^{{-1}} M_1 R_- M_2 = M_2 R_+^{{-1}} M_1 R_{nm}'", inverse_u(R) * u(Ml, 1) * Rm * u(Ml, 2), u(Ml, 2) * inverse_u(Rp) * u(Ml, 1) * Rb)
    chk("lcov", "Phi^l_1 R_- M^l_2 = M^l_2 Phi^l_1 R_+", u(Pl, 1) * Rm * u(Ml, 2), u(Ml, 2) * u(Pl, 1) * Rp)
    chk("lOPE", "Phi^l_1 Phi^l_2 = F_l Delta_a(Phi^l)", u(Pl, 1) * u(Pl, 2), left.F * delta_a(Pl))
    chk("lOPE", "RR^l_+ Phi^l_1 Phi^l_2 = Phi^l_2 Phi^l_1 R_+", left.Rp * u(Pl, 1) * u(Pl, 2), u(Pl, 2) * u(Pl, 1) * Rp)
    chk("lOPE", "RR^l_- Phi^l_1 Phi^l_2 = Phi^l_2 Phi^l_1 R_-", left.Rm * u(Pl, 1) * u(Pl, 2), u(Pl, 2) * u(Pl, 1) * Rm)
    chk("lD", "D_l Phi^l = v_a^{-1} Phi^l M^l", left.D * Pl, v_a(alg, -1) * Pl * Ml)
    for k, f in enumerate(left.center_basis):
        chk("ls", "Phi^l f = sigma_l(f) Phi^l", Pl * const(f), left.sigma_of(f) * Pl, f"k={k}")
    chk("lM", "M^l_1 R_- M^l_2 = R_+ Delta_a(M^l)", u(Ml, 1) * Rm * u(Ml, 2), Rp * delta_a(Ml))
    chk("comm1", "Phi^r_1 Phi^l_2 = Phi^l_2 Phi^r_1", u(Pr, 1) * u(Pl, 2), u(Pl, 2) * u(Pr, 1))
    chk("comm1", "M^r_1 M^l_2 = M^l_2 M^r_1", u(Mr, 1) * u(Ml, 2), u(Ml, 2) * u(Mr, 1))
    chk("comm2", "Phi^r_1 M^l_2 = M^l_2 Phi^r_1", u(Pr, 1) * u(Ml, 2), u(Ml, 2) * u(Pr, 1))
    chk("comm2", "Phi^l_1 M^r_2 = M^r_2 Phi^l_1", u(Pl, 1) * u(Mr, 2), u(Mr, 2) * u(Pl, 1))
    for sgn, R in ((1, Rp), (-1, Rm)):
        Ni = toy.N_iota(sgn)
        chk("Niota", "N_1 Phi^r_2 = Phi^r_2 R N_1", u(Ni, 1) * u(Pr, 2), u(Pr, 2) * R * u(Ni, 1), f"sign={sgn}")
        chk("Niota", "N_1 Phi^l_2 = Phi^l_2 N_1 R", u(Ni, 1) * u(Pl, 2), u(Pl, 2) * u(Ni, 1) * R, f"sign={sgn}")
    # star rules, S_iota = e x e for Z_q
    chk("star", "(Phi^r)* = S_iota^{-1} (Phi^r)^{-1}", star_u(Pr), inverse_u(Pr))
    chk("star", "(Phi^l)* = S_iota (Phi^l)^{-1}", star_u(Pl), inverse_u(Pl))
    chk("star", "(M^r)* = (M^r)^{-1}", star_u(Mr), inverse_u(Mr))
    chk("star", "(M^l)* = (M^l)^{-1}", star_u(Ml), inverse_u(Ml))
    sPl2 = u(s_a(Pl), 2)
    chk("SPcov", "R_+ S_a(Phi^l)_2 M^l_1 = M^l_1 R_- S_a(Phi^l)_2", Rp * sPl2 * u(Ml, 1), u(Ml, 1) * Rm * sPl2)
    return reports


def check_prop4(toy: ToyModel, reports: list | None = None, suite: str = "toy-g") -> list:
    """Properties of g on the diagonal subspace."""
    reports = [] if reports is None else reports
    p = toy.p
    basis = toy.diag_basis
    rep = RelationReport(suite, "fSf", "g, M^r, M^l preserve the diagonal subspace", 0)
    for name, U in (("g", toy.g), ("M^r", toy.M_r), ("M^l", toy.M_l)):
        for idx, x in U.body.items():
            rep.instances_checked += 1
            if not x.leaves_invariant(basis):
                rep.add_failure({"object": name, "grid": list(idx)}, "leaves the diagonal subspace")
    _merge(reports, rep)
    if not rep.passed:
        return reports
    ralg = DenseAlgebra(p, len(basis))
    res = lambda U: Universal(ralg, U.legs, {k: v.restrict(basis) for k, v in U.body.items()})
    g, Mr, Ml = res(toy.g), res(toy.M_r), res(toy.M_l)
    vv = (toy.ribbon_center("r") * toy.ribbon_center("l").inverse()).restrict(basis)
    chk = lambda rel, ref, a, b, tag=None: check_relation(reports, suite, rel, ref, a, b, tag=tag)
    Rp, Rm = R_plus(ralg), R_minus(ralg)
    chk("qg", "g_2 g_1 = Delta_a(g)", u(g, 2) * u(g, 1), delta_a(g))
    chk("qg", "R_+ g_2 g_1 = g_1 g_2 R_+", Rp * u(g, 2) * u(g, 1), u(g, 1) * u(g, 2) * Rp)
    chk("qg", "R_- g_2 g_1 = g_1 g_2 R_-", Rm * u(g, 2) * u(g, 1), u(g, 1) * u(g, 2) * Rm)
    chk("qs", "M^r_1 g_2 R_- = g_2 R_+ M^r_1", u(Mr, 1) * u(g, 2) * Rm, u(g, 2) * Rp * u(Mr, 1))
    chk("qs", "M^l_1 R_- g_2 = R_+ g_2 M^l_1", u(Ml, 1) * Rm * u(g, 2), Rp * u(g, 2) * u(Ml, 1))
    chk("qr", "M^l g = g M^r", Ml * g, g * Mr)
    vu = Universal.from_function(ralg, 1, lambda t: vv)
    chk("qr", "vv g vv^{-1} = g", vu * g * inverse_u(vu), g)
    chk("unitary", "g* = g^{-1}", star_u(g), inverse_u(g))
    chk("antipode", "S_a(g) = g^{-1}", s_a(g), inverse_u(g))
    chk("counit", "epsilon_a(g) = e", epsilon_a(g), Universal(ralg, 0, {(): ralg.one()}))
    dim = RelationReport(suite, "diag-dim", "dim of the diagonal subspace equals p", 1)
    if toy.diagonal_dimension() != p or len(basis) != p:
        dim.add_failure({"dim": toy.diagonal_dimension()}, f"expected {p}")
    _merge(reports, dim)
    return reports


def qr_off_diagonal_fails(toy: ToyModel) -> bool:
    """M^l g = g M^r evaluated on the full model space must fail."""
    rep = check_relation([], "toy-g-control", "qr-full", "", toy.M_l * toy.g, toy.g * toy.M_r)
    return not rep.passed


def ax3_inverse_control(data: ToyStructureData) -> bool:
    """Replacing D by D^{-1} must break (ax3); returns True if it does."""
    Dinv = inverse_u(data.D)
    rep = check_relation([], "toy-control", "ax3-Dinv", "", u(Dinv, 1) * data.Rm, data.Rp * data.sigma(Dinv, 2))
    return not rep.passed


def gauge_transform(phi: Universal, lam: Universal, gens: list) -> Universal:
    """Phi -> Lambda Phi for a unitary Lambda with central body."""
    for idx, x in lam.body.items():
        if not (x.star() * x).equals(lam.alg.one()):
            raise ValueError(f"Lambda({idx}) is not unitary")
        for g in gens:
            if not x.commutes_with(g):
                raise ValueError(f"Lambda({idx}) is not central")
    return lam * phi


def gauge_F(data: ToyStructureData, lam: Universal) -> Universal:
    """F -> Lambda_2 sigma_2(Lambda_1) F Delta_a(Lambda^{-1})."""
    return u(lam, 2) * data.sigma(lam, 2) * data.F * delta_a(inverse_u(lam))


def structure_data(toy: ToyModel) -> tuple:
    right = compute_structure_data(toy.Phi_r, toy.N_J("r"), toy.center_basis("r"), toy.ribbon_center("r"), "r")
    left = left_data_from_right(toy, right)
    return right, left


def run_toy(p: int) -> list:
    toy = build_toy(p)
    right, left = structure_data(toy)
    gens_r = [toy.h_J("r")]
    gens_l = [toy.h_J("l")]
    reports = check_prop1(right, gens_r)
    check_left_data(left, gens_l, reports)
    check_toy_suite(toy, right, left, reports)
    check_prop4(toy, reports)
    return reports
