"""Inner automorphisms of the lattice algebra and the discrete-time maps.

aut1, aut2 and aut3 are conjugations by explicit elements built from
ribbon-type Gauss functions; their closed-form images are compared with
the conjugation both symbolically and in the induced representation.
T_V and T_U are the light-cone time steps; their images are packaged as
current and vertex families so the relation suites can be rerun on them.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycloNum, half_qpow, qpow
from .currents import CHIRALITIES, CurrentFamily, v_a
from .dense import DenseOperator
from .report import RelationReport
from .universal import (
    Universal,
    check_relation,
    inverse_u,
    prod_u,
    scalar_universal,
    star_u,
)
from .vertex import (
    ChargeQuotient,
    VertexFamily,
    _requotient,
    beta_exact,
    check_def3_suite,
    check_g_suite,
    check_site_and_braid_suite,
    solve_gamma,
)
from .currents import check_current_suite
from .weyl import InducedRep, WeylElement, function_of_unitary, induced_rep

__all__ = [
    "AUTOMORPHISMS",
    "conjugator",
    "closed_form",
    "generator_keys",
    "generator_value",
    "check_aut_symbolic",
    "check_aut_in_rep",
    "ShiftedCurrents",
    "ImageVertex",
    "apply_TV",
    "apply_TU",
    "check_time_step",
    "check_clr",
    "derived_g_image",
    "check_derived_g",
]

AUTOMORPHISMS = ("aut1", "aut2", "aut3")


# ---------------------------------------------------------------------------
# conjugating elements


def _gauss(h: WeylElement, k: int, half: bool = False) -> WeylElement:
    """q^{k s^2} (or q^{k s^2 / 2}) as a function of the unitary h."""
    p = h.table.p
    if half:
        return function_of_unitary(h, lambda s: half_qpow(p, k * s * s))
    return function_of_unitary(h, lambda s: qpow(p, k * s * s))


def conjugator(vf: VertexFamily, which: str) -> tuple:
    """(V, V^{-1}) for the named automorphism x -> V x V^{-1}."""
    fam, N = vf.fam, vf.N
    if which == "aut1":
        # ribbon v_alpha = q^{-s^2}(h_alpha); V = v_r^{-1} v_l
        V = vf.center_fn("r", lambda s: qpow(vf.p, s * s)) * vf.center_fn("l", lambda s: qpow(vf.p, -s * s))
        Vi = vf.center_fn("l", lambda s: qpow(vf.p, s * s)) * vf.center_fn("r", lambda s: qpow(vf.p, -s * s))
        return V, Vi
    if which in ("aut2", "aut3"):
        half = which == "aut3"
        V = Vi = WeylElement.one(vf.table)
        for m in range(N):
            h = fam.h(m)
            V = V * _gauss(h, -1, half)
            Vi = Vi * _gauss(h, 1, half)
        return V, Vi
    raise ValueError(f"unknown automorphism {which!r}")


# ---------------------------------------------------------------------------
# generators and closed-form images


def generator_keys(vf: VertexFamily, sites=None) -> list:
    N = vf.N
    sites = range(-1, N + 1) if sites is None else sites
    keys = []
    for a in CHIRALITIES:
        keys += [("J", a, n) for n in range(1, N + 1)]
        keys += [("M", a, n) for n in range(N)]
        keys += [("Phi", a, n) for n in sites]
    keys += [("N", n, s) for n in range(N) for s in (1, -1)]
    keys += [("g", n) for n in range(N)]
    return keys


def generator_value(vf: VertexFamily, key: tuple) -> Universal:
    kind = key[0]
    if kind == "J":
        return vf.fam.J(key[1], key[2])
    if kind == "M":
        return vf.M(key[1], key[2])
    if kind == "Phi":
        return vf.Phi(key[1], key[2])
    if kind == "N":
        return vf.fam.Nop(key[1], key[2])
    if kind == "g":
        return vf.g(key[1])
    raise KeyError(key)


def _Nfull(vf, n, power=1):
    """N_n = N_{n,+} N_{n,-}^{-1}, i.e. t -> h_n^{2t}; power -1 gives N~_n."""
    fam = vf.fam
    return Universal.from_function(vf.alg, 1, lambda t: fam.h(n, 2 * power * t))


def _star_inv(x: Universal) -> Universal:
    return inverse_u(star_u(x))


def derived_g_image(vf: VertexFamily, which: str, n: int) -> Universal:
    """S_a(image of Phi^l_n) (image of Phi^r_n)."""
    from .universal import s_a

    return s_a(closed_form(vf, which, ("Phi", "l", n))) * closed_form(vf, which, ("Phi", "r", n))


def closed_form(vf: VertexFamily, which: str, key: tuple) -> Universal:
    """Image of a generator under aut1, aut2 or aut3."""
    X = generator_value(vf, key)
    kind = key[0]
    fam, alg = vf.fam, vf.alg
    if which == "aut1":
        if kind == "Phi":
            return X * vf.M(key[1], key[2])
        return X
    if which == "aut2":
        N_ = lambda n: _Nfull(vf, n)
        Nt = lambda n: _Nfull(vf, n, -1)
        if kind == "J":
            a, n = key[1], key[2]
            if a == "r":
                return N_(n - 1) * X * inverse_u(N_(n))
            return inverse_u(Nt(n - 1)) * X * Nt(n)
        if kind == "Phi":
            a, n = key[1], key[2]
            if a == "r":
                return v_a(alg) * X * inverse_u(N_(n))
            return v_a(alg) * X * Nt(n)
        if kind == "M":
            a, n = key[1], key[2]
            if a == "r":
                return N_(n) * X * inverse_u(N_(n))
            return inverse_u(Nt(n)) * X * Nt(n)
        if kind == "g":
            n = key[1]
            return Nt(n) * X * inverse_u(N_(n))
        return X
    if which == "aut3":
        Np = lambda n: fam.Nop(n, 1)
        Nm = lambda n: fam.Nop(n, -1)
        kappa_a = scalar_universal(alg, 1, lambda t: half_qpow(vf.p, -t * t))
        if kind == "J":
            a, n = key[1], key[2]
            if a == "r":
                return Np(n - 1) * _star_inv(X) * inverse_u(Np(n))
            return inverse_u(Nm(n - 1)) * _star_inv(X) * Nm(n)
        if kind == "Phi":
            a, n = key[1], key[2]
            if a == "r":
                return kappa_a * _star_inv(X) * inverse_u(Np(n))
            return kappa_a * _star_inv(X) * Nm(n)
        if kind == "M":
            a, n = key[1], key[2]
            if a == "r":
                return Np(n) * _star_inv(X) * inverse_u(Np(n))
            return inverse_u(Nm(n)) * _star_inv(X) * Nm(n)
        if kind == "g":
            # no listed image; use the one forced by Phi^l and Phi^r
            return derived_g_image(vf, which, key[1])
        return X
    raise ValueError(f"unknown automorphism {which!r}")


def _label(key: tuple) -> str:
    return ",".join(str(k) for k in key)


def _needs_constraint(which: str, key: tuple) -> bool:
    return key[0] == "g" and which == "aut1"


# ---------------------------------------------------------------------------
# checks


def check_aut_symbolic(vf: VertexFamily, which: str, keys=None, suite: str = "automorphisms") -> list:
    """Compare V X V^{-1} with the closed form in the Weyl algebra itself."""
    reports: list = []
    V, Vi = conjugator(vf, which)
    rep = RelationReport(suite, f"{which}-inverse", "V V^{-1} = 1", 1)
    if not (V * Vi).equals(WeylElement.one(vf.table)):
        rep.add_failure({}, "conjugator inverse is wrong")
    reports.append(rep)
    qa = None
    for key in keys or generator_keys(vf):
        X = generator_value(vf, key)
        lhs = X.map(lambda x: V * x * Vi)
        rhs = closed_form(vf, which, key)
        if _needs_constraint(which, key):
            qa = qa or ChargeQuotient(vf.table, _gamma(vf))
            lhs, rhs = _requotient(lhs, qa), _requotient(rhs, qa)
        check_relation(reports, suite, f"{which}-sym", "V X V^{-1} = closed form", lhs, rhs, tag=_label(key))
    return reports


def _gamma(vf: VertexFamily) -> int:
    sols = solve_gamma(vf)
    return sols[0] if sols else 0


def _charge_projector(vf: VertexFamily, rep: InducedRep, gamma: int) -> DenseOperator:
    p = vf.p
    C = rep.eval_in_rep(WeylElement.monomial(vf.table, vf.charge_vector()))
    out = DenseOperator.zero(p, rep.dim)
    Ck = DenseOperator.identity(p, rep.dim)
    for k in range(p):
        out = out + Ck * qpow(p, -gamma * k)
        Ck = Ck * C
    return out * CycloNum.scalar(p, Fraction(1, p))


def check_aut_in_rep(vf: VertexFamily, which: str, rep: InducedRep | None = None, keys=None, suite: str = "automorphisms") -> list:
    """Compare conjugation and closed forms as matrices in the induced representation."""
    rep = rep or induced_rep(vf.table)
    V, Vi = conjugator(vf, which)
    rV, rVi = rep.eval_in_rep(V), rep.eval_in_rep(Vi)
    report = RelationReport(suite, f"{which}-rep", "rho(V) rho(X) rho(V)^{-1} = rho(closed form)", 0)
    one = DenseOperator.identity(vf.p, rep.dim)
    report.instances_checked += 1
    if not (rV * rVi).equals(one):
        report.add_failure({"key": "inverse"}, "rho(V) rho(V^{-1}) != 1")
    P = None
    for key in keys or generator_keys(vf):
        X = generator_value(vf, key)
        Y = closed_form(vf, which, key)
        if _needs_constraint(which, key) and P is None:
            P = _charge_projector(vf, rep, _gamma(vf))
        for (t,), x in X.body.items():
            lhs = rV * rep.eval_in_rep(x) * rVi
            rhs = rep.eval_in_rep(Y.body[(t,)])
            if _needs_constraint(which, key):
                lhs, rhs = lhs * P, rhs * P
            report.instances_checked += 1
            if not lhs.equals(rhs):
                report.add_failure({"key": _label(key), "t": t}, "matrices differ")
    return [report]


def check_derived_g(vf: VertexFamily, which: str, suite: str = "automorphisms-diagnostic") -> list:
    """Conjugation of g_n against the image implied by the vertex operators."""
    reports: list = []
    V, Vi = conjugator(vf, which)
    qa = ChargeQuotient(vf.table, _gamma(vf))
    for n in range(vf.N):
        lhs = vf.g(n).map(lambda x: V * x * Vi)
        rhs = derived_g_image(vf, which, n)
        check_relation(reports, suite, f"{which}-g-derived", "V g V^{-1} = S_a(Phi^l image) Phi^r image", _requotient(lhs, qa), _requotient(rhs, qa), tag=f"n={n}")
    return reports


# ---------------------------------------------------------------------------
# light-cone time steps


class ShiftedCurrents:
    """Currents relabelled by J^r_n -> J^r_{n+dr}, J^l_n -> J^l_{n+dl}.

    Site elements exist only when both chiralities move together.
    """

    def __init__(self, base: CurrentFamily, dr: int, dl: int):
        self.base = base
        self.dr, self.dl = dr, dl
        self.config = base.config
        self.p, self.N = base.p, base.N
        self.table, self.alg = base.table, base.alg
        self.has_N = dr == dl
        self._cache: dict = {}

    def edge(self, n: int) -> int:
        return self.base.edge(n)

    def site(self, n: int) -> int:
        return self.base.site(n)

    def gen(self, name: str, power: int = 1) -> WeylElement:
        return self.base.gen(name, power)

    def J(self, alpha: str, n: int) -> Universal:
        return self.base.J(alpha, n + (self.dr if alpha == "r" else self.dl))

    def _need_N(self):
        if not self.has_N:
            raise AttributeError("site elements have no image under this map")

    def h(self, n: int, power: int = 1) -> WeylElement:
        self._need_N()
        return self.base.h(n + self.dr, power)

    def Nop(self, n: int, sign: int) -> Universal:
        self._need_N()
        return self.base.Nop(n + self.dr, sign)

    def xi_site(self, n: int, k: int) -> Universal:
        self._need_N()
        return self.base.xi_site(n + self.dr, k)

    def xi_coproduct(self, n: int, k: int) -> Universal:
        self._need_N()
        return self.base.xi_coproduct(n + self.dr, k)

    def U(self, alpha: str, n: int) -> Universal:
        key = ("U", alpha, n)
        if key not in self._cache:
            self._cache[key] = prod_u(*[self.J(alpha, k) for k in range(1, n + 1)])
        return self._cache[key]

    def M(self, alpha: str, n: int = 0) -> Universal:
        key = ("M", alpha, n)
        if key not in self._cache:
            order = list(range(n + 1, self.N + 1)) + list(range(1, n + 1))
            self._cache[key] = prod_u(*[self.J(alpha, k) for k in order])
        return self._cache[key]

    def center(self, alpha: str) -> list:
        m = self.M(alpha, 0)
        return [m.body[(t,)] for t in range(self.p)]


class ImageVertex(VertexFamily):
    """Vertex operators and g_n replaced by their images under a time step."""

    def __init__(self, base: VertexFamily, kind: str):
        if kind not in ("TV", "TU"):
            raise ValueError("kind must be 'TV' or 'TU'")
        self.base, self.kind = base, kind
        self.fam = ShiftedCurrents(base.fam, 1, 1) if kind == "TV" else ShiftedCurrents(base.fam, -1, 1)
        self.p, self.N = base.p, base.N
        self.table, self.alg = base.table, base.alg
        self._phi: dict = {}
        self._g: dict = {}
        self._init_center()

    def Phi(self, alpha: str, n: int) -> Universal:
        key = (alpha, n)
        if key not in self._phi:
            b, J = self.base, self.base.fam.J
            if self.kind == "TU" and alpha == "r":
                img = b.Phi("r", n) * inverse_u(J("r", n))
            else:
                img = b.Phi(alpha, n) * J(alpha, n + 1)
            self._phi[key] = img
        return self._phi[key]

    def g(self, n: int) -> Universal:
        if n not in self._g:
            b, J = self.base, self.base.fam.J
            right = J("r", n + 1) if self.kind == "TV" else inverse_u(J("r", n))
            self._g[n] = inverse_u(J("l", n + 1)) * b.g(n) * right
        return self._g[n]


def apply_TV(vf: VertexFamily) -> ImageVertex:
    return ImageVertex(vf, "TV")


def apply_TU(vf: VertexFamily) -> ImageVertex:
    return ImageVertex(vf, "TU")


def check_time_step(vf: VertexFamily, kind: str) -> list:
    """Rerun the current, vertex and g suites on the images of a time step.

    The closed-form braid law is evaluated with the antisymmetric exponent,
    since it is a consequence rather than a defining relation.
    """
    img = ImageVertex(vf, kind)
    suite = f"automorphisms-{kind}"
    reports: list = []
    check_current_suite(img.fam, reports, suite=suite)
    check_def3_suite(img, reports, suite=suite)
    check_site_and_braid_suite(img, reports=reports, suite=suite, braid_beta=beta_exact, braid_name="last33-antisym")
    check_g_suite(img, reports=reports, suite=suite)
    return reports


def check_clr(vf: VertexFamily, suite: str = "automorphisms") -> list:
    """Light-cone products of g in terms of currents."""
    reports: list = []
    J = vf.fam.J
    for n in range(1, vf.N + 1):
        g0, g1 = vf.g(n - 1), vf.g(n)
        back = J("l", n) * g1 * J("r", n + 1)
        fwd = inverse_u(J("l", n + 1)) * g1 * inverse_u(J("r", n))
        check_relation(reports, suite, "CLR", "g_{n-1}(t)^{-1} g_n(t-tau) = J^r_n J^r_{n+1}", inverse_u(g0) * back, J("r", n) * J("r", n + 1), tag=f"n={n}")
        check_relation(reports, suite, "CLR'", "g_{n-1}(t) g_n(t+tau)^{-1} = J^l_{n+1} J^l_n", g0 * inverse_u(fwd), J("l", n + 1) * J("l", n), tag=f"n={n}")
    return reports
