"""Normal-ordered Weyl (clock-and-shift) algebra of the Z_q lattice.

Generators G_0 .. G_{n-1} are unitaries of order p with
G_i G_j = q^{omega_ij} G_j G_i. A monomial G^a = G_0^{a_0} ... G_{n-1}^{a_{n-1}}
is stored by its exponent vector, and

    G^a G^b = q^{c(a, b)} G^{a+b},    c(a, b) = sum_{i > j} a_i b_j omega_ij.

c is bilinear, hence a 2-cocycle, which makes the product associative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .cyclotomic import CycloNum, check_root_order, inv2, qpow
from .dense import DenseAlgebra, DenseOperator

__all__ = [
    "OVERLAP_READINGS",
    "CommutationTable",
    "lattice_table",
    "WeylElement",
    "WeylAlgebra",
    "function_of_unitary",
    "InducedRep",
    "induced_rep",
]


class CommutationTable:
    """Antisymmetric integer table omega with A B = q^{omega(A,B)} B A."""

    def __init__(self, p: int, names: Sequence[str], omega: Sequence[Sequence[int]], N: int | None = None):
        check_root_order(p)
        n = len(names)
        if len(omega) != n or any(len(r) != n for r in omega):
            raise ValueError("omega must be square and match the generator list")
        for i in range(n):
            for j in range(n):
                if omega[i][j] != -omega[j][i]:
                    raise ValueError(f"omega not antisymmetric at {names[i]}, {names[j]}")
        self.p = p
        self.N = N
        self.overlap = None
        self.names = tuple(names)
        self.n = n
        self.omega = tuple(tuple(int(x) for x in r) for r in omega)
        self.index = {s: i for i, s in enumerate(self.names)}
        # lower[i] = [(j, omega_ij) for j < i with omega_ij != 0]
        self.lower = tuple(tuple((j, self.omega[i][j]) for j in range(i) if self.omega[i][j]) for i in range(n))

    def w(self, a: str, b: str) -> int:
        return self.omega[self.index[a]][self.index[b]]

    def cocycle(self, a: Sequence[int], b: Sequence[int]) -> int:
        s = 0
        lower = self.lower
        for i, ai in enumerate(a):
            if ai:
                for j, w in lower[i]:
                    bj = b[j]
                    if bj:
                        s += ai * bj * w
        return s

    def commutator_form(self, a: Sequence[int], b: Sequence[int]) -> int:
        """B(a, b) with G^a G^b = q^{B(a,b)} G^b G^a."""
        return self.cocycle(a, b) - self.cocycle(b, a)

    def unit(self, name: str, power: int = 1) -> tuple:
        e = [0] * self.n
        e[self.index[name]] = power % self.p
        return tuple(e)

    def __repr__(self):
        return f"CommutationTable(p={self.p}, N={self.N}, gens={self.names})"


def site_name(n: int, N: int) -> str:
    return f"H{n % N}"


def edge_name(n: int, N: int) -> str:
    return f"Wr{(n - 1) % N + 1}"


OVERLAP_READINGS = ("sum", "first")


@lru_cache(maxsize=None)
def lattice_table(p: int, N: int, overlap: str = "sum") -> CommutationTable:
    """The Z_q lattice table: sites H_0..H_{N-1}, edges Wr_1..Wr_N, Qr, Ql.

    Edge n joins sites n-1 and n; all indices are read mod N. At N = 2 the
    edges are each other's left and right neighbour, so the two cyclic
    neighbour rules hit the same pair with opposite signs. ``overlap="sum"``
    adds the contributions (they cancel); ``overlap="first"`` keeps only the
    rule for edge 1 and ignores the clash.
    """
    check_root_order(p)
    if not isinstance(N, int) or N < 2:
        raise ValueError("lattice size N must be an integer >= 2")
    if overlap not in OVERLAP_READINGS:
        raise ValueError(f"overlap must be one of {OVERLAP_READINGS}")
    names = [f"H{m}" for m in range(N)] + [f"Wr{m}" for m in range(1, N + 1)] + ["Qr", "Ql"]
    idx = {s: i for i, s in enumerate(names)}
    n = len(names)
    om = [[0] * n for _ in range(n)]

    def rel(a, b, k):
        om[idx[a]][idx[b]] += k
        om[idx[b]][idx[a]] -= k

    seen = set()
    for e in range(1, N + 1):
        rel(site_name(e, N), edge_name(e, N), +1)
        rel(site_name(e - 1, N), edge_name(e, N), -1)
        pair = frozenset((edge_name(e + 1, N), edge_name(e, N)))
        if overlap == "first" and pair in seen:
            continue
        seen.add(pair)
        rel(edge_name(e + 1, N), edge_name(e, N), +1)
    rel("H0", "Qr", +1)
    rel(edge_name(1, N), "Qr", +1)
    rel(edge_name(N, N), "Qr", +1)
    rel("H0", "Ql", +1)
    for row in om:
        if any(abs(x) > 1 for x in row):
            raise AssertionError("table entries must lie in {-1, 0, 1}")
    table = CommutationTable(p, names, om, N=N)
    table.overlap = overlap
    return table


class WeylElement:
    """Finite sum of normal-ordered monomials with CycloNum coefficients."""

    __slots__ = ("table", "terms")

    def __init__(self, table: CommutationTable, terms: dict):
        self.table = table
        self.terms = {k: v for k, v in terms.items() if not v.field_is_zero()}

    # constructors
    @classmethod
    def one(cls, table: CommutationTable) -> "WeylElement":
        return cls(table, {(0,) * table.n: CycloNum.one(table.p)})

    @classmethod
    def zero(cls, table: CommutationTable) -> "WeylElement":
        return cls(table, {})

    @classmethod
    def monomial(cls, table: CommutationTable, exps: Sequence[int], coeff: CycloNum | None = None) -> "WeylElement":
        p = table.p
        key = tuple(int(x) % p for x in exps)
        if len(key) != table.n:
            raise ValueError("exponent vector has wrong length")
        return cls(table, {key: coeff if coeff is not None else CycloNum.one(p)})

    @classmethod
    def gen(cls, table: CommutationTable, name: str, power: int = 1) -> "WeylElement":
        return cls.monomial(table, table.unit(name, power))

    @classmethod
    def scalar(cls, table: CommutationTable, c: CycloNum) -> "WeylElement":
        return cls(table, {(0,) * table.n: c})

    # structure
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def single(self):
        if len(self.terms) != 1:
            raise ValueError("not a single-term element")
        return next(iter(self.terms.items()))

    def _check(self, other: "WeylElement") -> None:
        if other.table is not self.table:
            raise ValueError("commutation table mismatch")

    # arithmetic
    def __mul__(self, other):
        if isinstance(other, (CycloNum, int, Fraction)):
            if isinstance(other, (int, Fraction)):
                other = CycloNum.scalar(self.table.p, other)
            return WeylElement(self.table, {k: v * other for k, v in self.terms.items()})
        if not isinstance(other, WeylElement):
            return NotImplemented
        self._check(other)
        return normal_product(self, other)

    def __rmul__(self, other):
        if isinstance(other, (CycloNum, int, Fraction)):
            return self * other
        return NotImplemented

    def __add__(self, other: "WeylElement") -> "WeylElement":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return WeylElement(self.table, out)

    def __sub__(self, other: "WeylElement") -> "WeylElement":
        return self + other * -1

    def __neg__(self):
        return self * -1

    def __pow__(self, n: int) -> "WeylElement":
        if n < 0:
            return inv_monomial(self) ** (-n)
        out = WeylElement.one(self.table)
        for _ in range(n):
            out = out * self
        return out

    def star(self) -> "WeylElement":
        return star(self)

    def equals(self, other: "WeylElement") -> bool:
        self._check(other)
        if self.terms.keys() != other.terms.keys():
            return False
        return all(v.field_eq(other.terms[k]) for k, v in self.terms.items())

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return other.table is self.table and self.equals(other)

    __hash__ = None

    def commutes_with(self, other: "WeylElement") -> bool:
        return (self * other).equals(other * self)

    def __repr__(self):
        parts = []
        names = self.table.names
        for k, v in sorted(self.terms.items())[:6]:
            mon = "*".join(f"{names[i]}^{e}" if e != 1 else names[i] for i, e in enumerate(k) if e) or "1"
            parts.append(f"({v.reduced()!r})*{mon}")
        more = " + ..." if len(self.terms) > 6 else ""
        return "WeylElement(" + (" + ".join(parts) or "0") + more + ")"


def normal_product(a: WeylElement, b: WeylElement) -> WeylElement:
    """Bilinear product with exact reordering phases."""
    a._check(b)
    t = a.table
    p = t.p
    out: dict = {}
    lower = t.lower
    bitems = list(b.terms.items())
    for ka, ca in a.terms.items():
        # L[j] = sum_{i > j} a_i omega_ij
        L = {}
        for i, ai in enumerate(ka):
            if ai:
                for j, w in lower[i]:
                    L[j] = L.get(j, 0) + ai * w
        for kb, cb in bitems:
            ph = 0
            for j, lj in L.items():
                bj = kb[j]
                if bj:
                    ph += lj * bj
            key = tuple((x + y) % p for x, y in zip(ka, kb))
            val = (ca * cb).shift(ph)
            if key in out:
                out[key] = out[key] + val
            else:
                out[key] = val
    return WeylElement(t, out)


def star(a: WeylElement) -> WeylElement:
    """(c G^a)* = c* q^{c(a,a)} G^{-a}: reversed factor order, re-normal-ordered."""
    t = a.table
    p = t.p
    out = {}
    for k, v in a.terms.items():
        out[tuple((-x) % p for x in k)] = v.star().shift(t.cocycle(k, k))
    return WeylElement(t, out)


def inv_monomial(a: WeylElement) -> WeylElement:
    if not a.is_monomial():
        raise ValueError("inv_monomial needs a single-term element; use the matrix backend")
    t = a.table
    p = t.p
    k, v = a.single()
    inv_c = v.inv() if v.monomial_exponent() else v.field_inv()
    return WeylElement(t, {tuple((-x) % p for x in k): inv_c.shift(t.cocycle(k, k))})


def weyl_symmetric(table: CommutationTable, exps: Sequence[int]) -> WeylElement:
    """exp(sum a_i log G_i) = q^{c(a,a)/2} G^a (symmetric ordering)."""
    p = table.p
    a = tuple(int(x) for x in exps)
    c = table.cocycle(a, a)
    return WeylElement.monomial(table, a, CycloNum.monomial(p, c * inv2(p)))


def function_of_unitary(m: WeylElement, f: Callable[[int], CycloNum]) -> WeylElement:
    """The element F(m) with F(m) v = f(t) v whenever m v = q^t v.

    F(m) = sum_s c_s m^s with c_s = (1/p) sum_t f(t) q^{-ts}.
    """
    if not m.is_monomial():
        raise ValueError("function_of_unitary expects a monomial")
    t = m.table
    p = t.p
    powers = [WeylElement.one(t)]
    for _ in range(1, p + 1):
        powers.append(powers[-1] * m)
    if not powers[p].equals(WeylElement.one(t)):
        raise ValueError("monomial does not have order p")
    vals = [f(x) for x in range(p)]
    out = WeylElement.zero(t)
    for s in range(p):
        cs = CycloNum.zero(p)
        for x, fx in enumerate(vals):
            cs = cs + fx.shift(-x * s)
        cs = cs * Fraction(1, p)
        out = out + powers[s] * cs
    return out


def gauss_coefficients(p: int, f: Callable[[int], CycloNum]) -> list:
    """The expansion coefficients c_s of function_of_unitary, reduced."""
    out = []
    for s in range(p):
        cs = CycloNum.zero(p)
        for x in range(p):
            cs = cs + f(x).shift(-x * s)
        out.append((cs * Fraction(1, p)).reduced())
    return out


class WeylAlgebra:
    """Adapter exposing WeylElement to the universal calculus."""

    def __init__(self, table: CommutationTable):
        self.table = table
        self.p = table.p
        self._one = WeylElement.one(table)

    def one(self):
        return self._one

    def scalar(self, c: CycloNum):
        return WeylElement.scalar(self.table, c)

    def star(self, x: WeylElement):
        return star(x)

    def inv(self, x: WeylElement):
        return inv_monomial(x)

    def eq(self, x: WeylElement, y: WeylElement) -> bool:
        return x.equals(y)

    def describe(self, x: WeylElement) -> str:
        return repr(x)


# ---------------------------------------------------------------------------
# induced representation


def _nullspace_mod(rows: list, n: int, p: int) -> list:
    """Basis of {x in GF(p)^n : r.x = 0 for every row r}."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-m[i][fc]) % p
        basis.append(tuple(v))
    return basis


def _rank_mod(vectors: list, n: int, p: int) -> int:
    m = [list(v) for v in vectors]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        r += 1
    return r


def _inverse_mod(mat: list, p: int) -> list:
    n = len(mat)
    a = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(mat)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] % p)
        a[c], a[piv] = a[piv], a[c]
        inv = pow(a[c][c], -1, p)
        a[c] = [(x * inv) % p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] % p:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[c])]
    return [r[n:] for r in a]


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


class InducedRep:
    """Irreducible representation induced from a Lagrangian subgroup.

    The commutator form B(a,b) on (Z_p)^n has a radical R (the central
    monomials). A maximal isotropic L containing R carries the character
    chi(l) = q^{-c(l,l)/2 + chi0(l)}; the representation space has basis
    e_v = G^v vac for v in a complement C of L, and

        G^a e_v = q^{c(a,v) - c(v',l)} chi(l) e_{v'},   a + v = v' + l.
    """

    def __init__(self, table: CommutationTable, central_character: dict | None = None):
        p = table.p
        if not _is_prime(p):
            raise ValueError("the induced representation needs prime p")
        self.table = table
        self.p = p
        n = table.n
        self.n = n
        bmat = [[table.omega[i][j] % p for j in range(n)] for i in range(n)]
        self.radical = _nullspace_mod(bmat, n, p)
        L = list(self.radical)
        while True:
            rows = [[sum(l[i] * bmat[i][j] for i in range(n)) % p for j in range(n)] for l in L] or [[0] * n]
            perp = _nullspace_mod(rows, n, p)
            extra = next((v for v in perp if _rank_mod(L + [v], n, p) > len(L)), None)
            if extra is None:
                break
            L.append(extra)
        self.lagrangian = L
        comp = []
        for i in range(n):
            e = tuple(1 if j == i else 0 for j in range(n))
            if _rank_mod(L + comp + [e], n, p) > len(L) + len(comp):
                comp.append(e)
        self.complement = comp
        self.comp_gens = [c.index(1) for c in comp]
        basis = L + comp
        # coordinates: x = sum_k coord_k basis_k ; solve with inverse of basis^T
        bt = [[basis[k][i] for k in range(n)] for i in range(n)]
        self._coord = _inverse_mod(bt, p)
        self._chi0 = self._character_on_basis(central_character or {})
        self.dim = p ** len(comp)
        self._cache: dict = {}
        self.algebra = DenseAlgebra(p, self.dim)

    def _coords(self, x: Sequence[int]) -> list:
        p = self.p
        return [sum(r[i] * x[i] for i in range(self.n)) % p for r in self._coord]

    def _character_on_basis(self, central: dict) -> list:
        p, n = self.p, self.n
        nl = len(self.lagrangian)
        nr = len(self.radical)
        chi0 = [0] * nl
        if not central:
            # G^r -> 1 on the radical basis
            for k, r in enumerate(self.radical):
                chi0[k] = (self.table.cocycle(r, r) * inv2(p)) % p
            return chi0
        # solve chi0 on the radical basis from the prescribed values
        given = []
        for vec, k in central.items():
            vec = tuple(int(x) % p for x in vec)
            if any(self.table.commutator_form(vec, self._unit(i)) % p for i in range(n)):
                raise ValueError(f"{vec} is not central: inconsistent character")
            co = self._coords(vec)
            if any(co[nl:]) or any(co[nr:nl]):
                raise ValueError(f"{vec} is not in the radical span")
            target = (k + self.table.cocycle(vec, vec) * inv2(p)) % p
            given.append((co[:nr], target))
        # linear system over GF(p)
        rows = [list(c) + [t] for c, t in given]
        sol = _solve_affine(rows, nr, p)
        if sol is None:
            raise ValueError("inconsistent central character")
        chi0[:nr] = sol
        return chi0

    def _unit(self, i: int) -> tuple:
        return tuple(1 if j == i else 0 for j in range(self.n))

    def _index(self, v: Sequence[int]) -> int:
        idx = 0
        for g in self.comp_gens:
            idx = idx * self.p + v[g]
        return idx

    def _vector(self, idx: int) -> tuple:
        v = [0] * self.n
        for g in reversed(self.comp_gens):
            v[g] = idx % self.p
            idx //= self.p
        return tuple(v)

    def _psi(self, l: Sequence[int], lcoords: Sequence[int]) -> int:
        p = self.p
        lin = sum(c * x for c, x in zip(lcoords, self._chi0))
        return (-self.table.cocycle(l, l) * inv2(p) + lin) % p

    def monomial_image(self, exps: Sequence[int]) -> DenseOperator:
        key = tuple(int(x) % self.p for x in exps)
        if key in self._cache:
            return self._cache[key]
        p, n = self.p, self.n
        t = self.table
        nl = len(self.lagrangian)
        entries = {}
        for col in range(self.dim):
            v = self._vector(col)
            s = tuple((a + b) % p for a, b in zip(key, v))
            co = self._coords(s)
            lco = co[:nl]
            l = [0] * n
            for c, b in zip(lco, self.lagrangian):
                if c:
                    for i in range(n):
                        l[i] = (l[i] + c * b[i]) % p
            vp = [0] * n
            for c, g in zip(co[nl:], self.comp_gens):
                vp[g] = c
            ph = t.cocycle(key, v) - t.cocycle(vp, l) + self._psi(l, lco)
            entries[(self._index(vp), col)] = CycloNum.monomial(p, ph)
        op = DenseOperator(p, self.dim, entries)
        self._cache[key] = op
        return op

    def eval_in_rep(self, x: WeylElement) -> DenseOperator:
        if x.table is not self.table:
            raise ValueError("table mismatch")
        out = DenseOperator.zero(self.p, self.dim)
        for k, c in x.terms.items():
            out = out + self.monomial_image(k) * c
        return out

    def generator_image(self, name: str) -> DenseOperator:
        return self.monomial_image(self.table.unit(name))


def _solve_affine(rows: list, nvars: int, p: int):
    """Solve sum_j a_ij x_j = b_i over GF(p); None if inconsistent."""
    m = [list(r) for r in rows]
    piv_cols = []
    r = 0
    for c in range(nvars):
        piv = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(m)):
        if m[i][nvars] % p:
            return None
    sol = [0] * nvars
    for i, c in enumerate(piv_cols):
        sol[c] = m[i][nvars]
    return sol


def induced_rep(table: CommutationTable, central_character: dict | None = None) -> InducedRep:
    return InducedRep(table, central_character)
