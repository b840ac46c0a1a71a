"""Exact arithmetic in the group ring Q[q]/(q^p - 1).

The ring splits as Q x Q(zeta_p): the first factor is the evaluation at
q = 1, the second the evaluation at a primitive p-th root of unity. Ring
equality compares raw coefficient tuples. Operator identities of the
lattice theory are statements about a primitive q, so callers that need
that weaker equality use :meth:`CycloNum.field_eq` or :meth:`reduced`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "CycloNum",
    "NotInvertibleError",
    "qpow",
    "half_qpow",
    "inv2",
    "check_root_order",
    "berkowitz_det",
]


class NotInvertibleError(ArithmeticError):
    """Raised when an element is a zero divisor in Q[q]/(q^p - 1)."""


def check_root_order(p: int) -> None:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        raise ValueError(f"root order must be an odd integer >= 3, got {p!r}")


def inv2(p: int) -> int:
    """Inverse of 2 modulo odd p."""
    return (p + 1) // 2


_ZERO = Fraction(0)
_ONE = Fraction(1)


class CycloNum:
    """Immutable element sum_k c_k q^k of Q[q]/(q^p - 1)."""

    __slots__ = ("p", "c", "_hash")

    def __init__(self, p: int, coeffs: Iterable, *, strict: bool = True):
        if strict:
            check_root_order(p)
        elif p < 1:
            raise ValueError("root order must be positive")
        c = tuple(Fraction(x) for x in coeffs)
        if len(c) != p:
            raise ValueError(f"expected {p} coefficients, got {len(c)}")
        self.p = p
        self.c = c
        self._hash = None

    @classmethod
    def _raw(cls, p: int, c: tuple) -> "CycloNum":
        obj = object.__new__(cls)
        obj.p = p
        obj.c = c
        obj._hash = None
        return obj

    # constructors
    @classmethod
    def zero(cls, p: int) -> "CycloNum":
        check_root_order(p)
        return cls._raw(p, (_ZERO,) * p)

    @classmethod
    def one(cls, p: int) -> "CycloNum":
        return cls.scalar(p, 1)

    @classmethod
    def scalar(cls, p: int, r, *, strict: bool = True) -> "CycloNum":
        if strict:
            check_root_order(p)
        c = [_ZERO] * p
        c[0] = Fraction(r)
        return cls._raw(p, tuple(c))

    @classmethod
    def monomial(cls, p: int, k: int, coeff=1, *, strict: bool = True) -> "CycloNum":
        if strict:
            check_root_order(p)
        c = [_ZERO] * p
        c[k % p] = Fraction(coeff)
        return cls._raw(p, tuple(c))

    # predicates
    def is_zero(self) -> bool:
        return not any(self.c)

    def is_one(self) -> bool:
        return self.c[0] == 1 and not any(self.c[1:])

    def monomial_exponent(self):
        """Return (k, coeff) if self is coeff*q^k with coeff != 0, else None."""
        k = None
        for i, x in enumerate(self.c):
            if x:
                if k is not None:
                    return None
                k = i
        if k is None:
            return None
        return k, self.c[k]

    def is_phase(self) -> bool:
        m = self.monomial_exponent()
        return m is not None and m[1] == 1

    # ring operations
    def _check(self, other: "CycloNum") -> None:
        if self.p != other.p:
            raise ValueError(f"root order mismatch: {self.p} vs {other.p}")

    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            c = [_ZERO] * self.p
            c[0] = Fraction(other)
            return CycloNum._raw(self.p, tuple(c))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycloNum._raw(self.p, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycloNum._raw(self.p, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return CycloNum._raw(self.p, tuple(-a for a in self.c))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum._raw(self.p, tuple(a * other for a in self.c))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.p
        out = [_ZERO] * p
        xs = [(i, a) for i, a in enumerate(self.c) if a]
        ys = [(j, b) for j, b in enumerate(o.c) if b]
        if len(xs) == 1 and len(ys) == 1:
            (i, a), (j, b) = xs[0], ys[0]
            out[(i + j) % p] = a * b if a != 1 else b
            return CycloNum._raw(p, tuple(out))
        for i, a in xs:
            for j, b in ys:
                k = i + j
                if k >= p:
                    k -= p
                out[k] += a * b
        return CycloNum._raw(p, tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> "CycloNum":
        """Multiply by q^k (a cyclic rotation of coefficients)."""
        p = self.p
        k %= p
        if k == 0:
            return self
        c = self.c
        return CycloNum._raw(p, c[p - k:] + c[: p - k])

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = CycloNum._raw(self.p, (_ONE,) + (_ZERO,) * (self.p - 1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def star(self) -> "CycloNum":
        """Involution q -> q^{-1}, coefficients are real."""
        c = self.c
        return CycloNum._raw(self.p, (c[0],) + tuple(reversed(c[1:])))

    def inv(self) -> "CycloNum":
        m = self.monomial_exponent()
        if m is not None:
            k, a = m
            return CycloNum.monomial(self.p, -k, 1 / a, strict=False)
        return CycloNum._raw(self.p, _solve_circulant(self.p, self.c))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum._raw(self.p, tuple(a / other for a in self.c))
        return self * other.inv()

    # equality
    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.p == other.p and self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c[0] == other and not any(self.c[1:])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, self.c))
        return self._hash

    def reduced(self) -> "CycloNum":
        """Canonical representative modulo 1 + q + ... + q^{p-1}.

        Two elements agree at a primitive root of unity iff their reduced
        forms are identical. The representative has zero top coefficient.
        """
        last = self.c[-1]
        if not last:
            return self
        return CycloNum._raw(self.p, tuple(a - last for a in self.c))

    def field_eq(self, other: "CycloNum") -> bool:
        self._check(other)
        d = [a - b for a, b in zip(self.c, other.c)]
        return all(x == d[0] for x in d)

    def field_is_zero(self) -> bool:
        c0 = self.c[0]
        return all(x == c0 for x in self.c)

    def field_inv(self) -> "CycloNum":
        """Inverse at a primitive root of unity (representative in the ring).

        The q = 1 component is moved to 1 first, so only vanishing at a
        primitive root raises.
        """
        lam = (1 - self.at_one()) / self.p
        return (self + CycloNum._raw(self.p, (lam,) * self.p)).inv().reduced()

    def at_one(self) -> Fraction:
        """Image in the q = 1 factor."""
        return sum(self.c, _ZERO)

    # display / serialization
    def to_list(self) -> list:
        return [str(x) for x in self.c]

    def __repr__(self):
        terms = []
        for k, a in enumerate(self.c):
            if not a:
                continue
            mon = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mon and a == 1:
                terms.append(mon)
            elif mon and a == -1:
                terms.append("-" + mon)
            else:
                terms.append(f"{a}{'*' + mon if mon else ''}")
        return "CycloNum(" + (" + ".join(terms) if terms else "0") + f"; p={self.p})"


def _solve_circulant(p: int, c: Sequence[Fraction]) -> tuple:
    """Solve x * y = 1 for y by Gauss elimination on the circulant matrix."""
    # column j of the multiplication matrix is x shifted by j
    a = [[c[(i - j) % p] for j in range(p)] + [_ONE if i == 0 else _ZERO] for i in range(p)]
    for col in range(p):
        piv = next((r for r in range(col, p) if a[r][col] != 0), None)
        if piv is None:
            raise NotInvertibleError("element is a zero divisor in Q[q]/(q^p-1)")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        row = [v / pv for v in a[col]]
        a[col] = row
        for r in range(p):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], row)]
    return tuple(a[i][p] for i in range(p))


def qpow(p: int, k: int) -> CycloNum:
    """q^{k mod p}."""
    check_root_order(p)
    return CycloNum.monomial(p, k)


def half_qpow(p: int, k: int) -> CycloNum:
    """q^{k/2}, realised as q^{k * (p+1)/2 mod p}."""
    check_root_order(p)
    return CycloNum.monomial(p, k * inv2(p))


def berkowitz_det(matrix: Sequence[Sequence[CycloNum]]) -> CycloNum:
    """Division-free determinant over a commutative ring (Berkowitz)."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    p = matrix[0][0].p
    one = CycloNum._raw(p, (_ONE,) + (_ZERO,) * (p - 1))
    zero = CycloNum._raw(p, (_ZERO,) * p)
    # characteristic polynomial coefficients of the leading r x r block, built up
    poly = [one, -matrix[0][0]]
    for r in range(1, n):
        a_rr = matrix[r][r]
        row = [matrix[r][j] for j in range(r)]
        col = [matrix[i][r] for i in range(r)]
        sub = [[matrix[i][j] for j in range(r)] for i in range(r)]
        # Toeplitz column: 1, -a_rr, -R C, -R A C, -R A^2 C, ...
        toe = [one, -a_rr]
        vec = col
        for _ in range(r):
            s = zero
            for x, y in zip(row, vec):
                s = s + x * y
            toe.append(-s)
            vec = [sum((sub[i][j] * vec[j] for j in range(r)), zero) for i in range(r)]
        new = []
        for i in range(r + 2):
            s = zero
            for j in range(min(i, len(poly) - 1) + 1):
                if i - j < len(toe):
                    s = s + toe[i - j] * poly[j]
            new.append(s)
        poly = new
    det = poly[n]
    return det if n % 2 == 0 else -det
