"""Lattice shift operators V_r and V_l.

Let V0 = rho_alpha(N-1) ... rho_alpha(1), where rho_alpha(k) is the Gaussian
q^{-+s^2/2} of the unitary W^alpha_k, and let C_alpha be the alternating
product of all W^alpha. The bulk identity W_n rho(n+1) rho(n) =
rho(n+1) rho(n) W_{n+1} says that X -> V0^{-1} X V0 advances the bulk by
one edge, so the shift is V_alpha = Z_alpha(C_alpha) V0^{-1}. Z is solved
for exactly: Z(C) = sum_s z_s C^s, with the z_s constrained linearly by
V J_n = J_{n+1} V and V Phi_n = Phi_{n+1} V.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomic import CycloNum, half_qpow
from .currents import CHIRALITIES, CurrentFamily
from .report import RelationReport
from .universal import Universal, check_relation
from .vertex import VertexFamily
from .weyl import WeylElement, function_of_unitary, gauss_coefficients, inv_monomial

__all__ = [
    "OddLengthError",
    "rho",
    "rho_gauss_coefficients",
    "alternating_product",
    "V0",
    "solve_z",
    "ShiftOperator",
    "build_shift",
    "check_shift_suite",
    "check_inner_time_steps",
]


class OddLengthError(ValueError):
    """The shift construction needs an odd number of sites."""


def _require_odd(N: int) -> None:
    if N % 2 == 0:
        raise OddLengthError(f"shift operators need an odd number of sites N, got N={N}")


def _rho_fn(p: int, alpha: str):
    sign = -1 if alpha == "r" else 1
    return lambda s: half_qpow(p, sign * s * s)


def rho(fam: CurrentFamily, alpha: str, k: int, inverse: bool = False) -> WeylElement:
    """rho_alpha(k) = q^{-+s^2/2} evaluated on W^alpha_k."""
    f = _rho_fn(fam.p, alpha)
    g = (lambda s: f(s).inv()) if inverse else f
    return function_of_unitary(fam.W(alpha, k), g)


def rho_gauss_coefficients(p: int, alpha: str) -> list:
    """Coefficients c_s of rho_alpha = sum_s c_s W^s."""
    return gauss_coefficients(p, _rho_fn(p, alpha))


def alternating_product(fam: CurrentFamily, alpha: str) -> WeylElement:
    """C_alpha = (W_1 W_3 ... W_N)(W_2 W_4 ... W_{N-1})^{-1}."""
    _require_odd(fam.N)
    odd = WeylElement.one(fam.table)
    even = WeylElement.one(fam.table)
    for k in range(1, fam.N + 1):
        if k % 2:
            odd = odd * fam.W(alpha, k)
        else:
            even = even * fam.W(alpha, k)
    return odd * inv_monomial(even)


def V0(fam: CurrentFamily, alpha: str, inverse: bool = False) -> WeylElement:
    """rho(N-1) rho(N-2) ... rho(1), or its inverse."""
    out = WeylElement.one(fam.table)
    ks = range(fam.N - 1, 0, -1)
    if inverse:
        for k in reversed(ks):
            out = out * rho(fam, alpha, k, inverse=True)
        return out
    for k in ks:
        out = out * rho(fam, alpha, k)
    return out


def _shift_targets(vf: VertexFamily, alpha: str, sites) -> list:
    """Pairs (X, Y) with V X V^{-1} = Y required."""
    fam = vf.fam
    pairs = [(f"J^{alpha}_{n}", fam.J(alpha, n), fam.J(alpha, n + 1)) for n in range(1, vf.N + 1)]
    pairs += [(f"Phi^{alpha}_{n}", vf.Phi(alpha, n), vf.Phi(alpha, n + 1)) for n in sites]
    return pairs


# ---------------------------------------------------------------------------
# linear algebra over Q(zeta_p)


def _nullspace(rows: list, ncols: int) -> list:
    """Basis of {z : row . z = 0 for all rows} over the cyclotomic field."""
    piv: list = []  # (col, row) with row[col] = 1, other pivot columns cleared
    for r in rows:
        r = [x.reduced() for x in r]
        for c, pr in piv:
            if not r[c].field_is_zero():
                f = r[c]
                r = [(a - f * b).reduced() for a, b in zip(r, pr)]
        lead = next((c for c in range(ncols) if not r[c].field_is_zero()), None)
        if lead is None:
            continue
        inv = r[lead].field_inv()
        r = [(a * inv).reduced() for a in r]
        piv = [(c, [(a - pr[lead] * b).reduced() for a, b in zip(pr, r)]) for c, pr in piv]
        piv.append((lead, r))
        if len(piv) == ncols:
            return []
    p = rows[0][0].p if rows else None
    pcols = {c for c, _ in piv}
    basis = []
    for free in range(ncols):
        if free in pcols:
            continue
        z = [CycloNum.zero(p) for _ in range(ncols)]
        z[free] = CycloNum.one(p)
        for c, pr in piv:
            z[c] = (-pr[free]).reduced()
        basis.append(z)
    return basis


def solve_z(vf: VertexFamily, alpha: str, sites=None, literal: bool = False) -> list:
    """All coefficient vectors z (Z(C) = sum_s z_s C^s) making V shift the lattice.

    The search runs over the whole p-dimensional space of functions of C;
    each returned vector is normalised so its first nonzero entry is 1.
    With ``literal`` the ansatz is Z(C) V0 instead of Z(C) V0^{-1}.
    """
    fam, p, N = vf.fam, vf.p, vf.N
    _require_odd(N)
    sites = range(-N, 2 * N) if sites is None else sites
    C = alternating_product(fam, alpha)
    base = V0(fam, alpha, inverse=not literal)
    CsV = []
    Cs = WeylElement.one(fam.table)
    for _ in range(p):
        CsV.append(Cs * base)
        Cs = Cs * C
    zero = CycloNum.zero(p)
    rows = []
    for _, X, Y in _shift_targets(vf, alpha, sites):
        for (t,), x in X.body.items():
            y = Y.body[(t,)]
            cols = [(A * x - y * A).terms for A in CsV]
            keys = set().union(*cols)
            for key in keys:
                rows.append([col.get(key, zero) for col in cols])
    sols = _nullspace(rows, p)
    out = []
    for z in sols:
        lead = next(x for x in z if not x.field_is_zero())
        inv = lead.field_inv()
        out.append([(x * inv).reduced() for x in z])
    return out


# ---------------------------------------------------------------------------


@dataclass
class ShiftOperator:
    alpha: str
    z: list
    V: WeylElement
    V_inv: WeylElement
    C: WeylElement
    base: WeylElement
    all_solutions: list = field(default_factory=list)


def build_shift(vf: VertexFamily, alpha: str, z: list | None = None) -> ShiftOperator:
    fam, p = vf.fam, vf.p
    sols = solve_z(vf, alpha) if z is None else [z]
    if not sols:
        raise ArithmeticError(f"no function Z_{alpha} makes V_{alpha} a shift")
    z = sols[0]
    C = alternating_product(fam, alpha)
    Z = WeylElement.zero(fam.table)
    Cs = WeylElement.one(fam.table)
    for zs in z:
        Z = Z + Cs * zs
        Cs = Cs * C
    # eigenvalue of Z on C = q^s is sum_k z_k q^{ks}
    eig = lambda s: sum((zk.shift(k * s) for k, zk in enumerate(z)), CycloNum.zero(p))
    Zinv = function_of_unitary(C, lambda s: eig(s).field_inv())
    base = V0(fam, alpha, inverse=True)
    return ShiftOperator(alpha, z, Z * base, V0(fam, alpha) * Zinv, C, base, sols)


def _const(vf, x):
    return Universal.from_function(vf.alg, 1, lambda t: x)


def check_shift_suite(vf: VertexFamily, reports: list | None = None, suite: str = "shift") -> list:
    """Shift property, bulk identities, (shv) and chiral separation for V_r and V_l."""
    reports = [] if reports is None else reports
    fam, p, N = vf.fam, vf.p, vf.N
    _require_odd(N)
    sites = range(-N, 2 * N)
    chk = lambda rel, ref, a, b, tag=None: check_relation(reports, suite, rel, ref, a, b, tag=tag)
    ops = {}
    zrep = RelationReport(suite, "z-solve", "Z_alpha exists and is unique up to scale", 0)
    inv_rep = RelationReport(suite, "V-inverse", "V V^{-1} = 1", 0)
    reports += [zrep, inv_rep]
    one = WeylElement.one(fam.table)
    for alpha in CHIRALITIES:
        sols = solve_z(vf, alpha, sites)
        zrep.instances_checked += 1
        if len(sols) != 1:
            zrep.add_failure({"alpha": alpha, "solutions": len(sols)}, "expected a one-dimensional solution space")
        if not sols:
            continue
        S = build_shift(vf, alpha, sols[0])
        S.all_solutions = sols
        ops[alpha] = S
        inv_rep.instances_checked += 1
        if not (S.V * S.V_inv).equals(one):
            inv_rep.add_failure({"alpha": alpha}, "inverse mismatch")
        V = _const(vf, S.V)
        for label, X, Y in _shift_targets(vf, alpha, sites):
            chk("shifts", "V X_n = X_{n+1} V", V * X, Y * V, f"{alpha},{label}")
        # bulk identity before Z
        for n in range(1, N - 1):
            W0, W1 = fam.W(alpha, n), fam.W(alpha, n + 1)
            rr = rho(fam, alpha, n + 1) * rho(fam, alpha, n)
            chk("bulk", "W_n rho(n+1) rho(n) = rho(n+1) rho(n) W_{n+1}", _const(vf, W0 * rr), _const(vf, rr * W1), f"{alpha},n={n}")
        for n in range(0, N - 1):
            Qn = vf.Phi(alpha, n).body[(1,)]
            Qn1 = vf.Phi(alpha, n + 1).body[(1,)]
            r = rho(fam, alpha, n + 1)
            chk("shv", "Q_n rho(n+1) = rho(n+1) Q_{n+1}", _const(vf, Qn * r), _const(vf, r * Qn1), f"{alpha},n={n}")
    for alpha, beta in (("r", "l"), ("l", "r")):
        if alpha not in ops:
            continue
        V = _const(vf, ops[alpha].V)
        for n in range(1, N + 1):
            X = fam.J(beta, n)
            chk("chiral", f"V_{alpha} commutes with J^{beta}", V * X, X * V, f"{alpha},n={n}")
        for n in sites:
            X = vf.Phi(beta, n)
            chk("chiral", f"V_{alpha} commutes with Phi^{beta}", V * X, X * V, f"{alpha},n={n}")
    return reports


def check_inner_time_steps(vf: VertexFamily, suite: str = "shift") -> list:
    """T_V = Ad(V_l V_r) and T_U = Ad(V_l V_r^{-1}) on currents, vertex operators and g_n."""
    from .automorphisms import ImageVertex

    reports: list = []
    Vr, Vl = build_shift(vf, "r"), build_shift(vf, "l")
    fam, N = vf.fam, vf.N
    for kind, V in (("TV", Vl.V * Vr.V), ("TU", Vl.V * Vr.V_inv)):
        img = ImageVertex(vf, kind)
        Vu = _const(vf, V)
        rel = f"{kind}-inner"
        for alpha in CHIRALITIES:
            for n in range(1, N + 1):
                X, Y = fam.J(alpha, n), img.fam.J(alpha, n)
                check_relation(reports, suite, rel, "V X = T(X) V", Vu * X, Y * Vu, tag=f"J^{alpha}_{n}")
            for n in range(N):
                check_relation(reports, suite, rel, "V X = T(X) V", Vu * vf.Phi(alpha, n), img.Phi(alpha, n) * Vu, tag=f"Phi^{alpha}_{n}")
        for n in range(N):
            check_relation(reports, suite, rel, "V X = T(X) V", Vu * vf.g(n), img.g(n) * Vu, tag=f"g_{n}")
    return reports
