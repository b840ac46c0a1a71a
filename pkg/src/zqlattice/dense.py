"""Sparse exact matrices over Q(zeta_p).

Entries are CycloNums kept in the ring; comparison happens at a primitive
root of unity. All toy-model and induced-representation operators are
monomial (one nonzero entry per column), so a dict-of-entries layout keeps
products cheap.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable

from .cyclotomic import CycloNum, NotInvertibleError, check_root_order

__all__ = ["DenseOperator", "DenseAlgebra"]


class DenseOperator:
    __slots__ = ("p", "dim", "entries")

    def __init__(self, p: int, dim: int, entries: dict):
        self.p = p
        self.dim = dim
        self.entries = {k: v for k, v in entries.items() if not v.field_is_zero()}

    @classmethod
    def identity(cls, p: int, dim: int) -> "DenseOperator":
        one = CycloNum.one(p)
        return cls(p, dim, {(i, i): one for i in range(dim)})

    @classmethod
    def zero(cls, p: int, dim: int) -> "DenseOperator":
        return cls(p, dim, {})

    @classmethod
    def diagonal(cls, p: int, values: Iterable[CycloNum]) -> "DenseOperator":
        vals = list(values)
        return cls(p, len(vals), {(i, i): v for i, v in enumerate(vals)})

    @classmethod
    def from_map(cls, p: int, dim: int, fn) -> "DenseOperator":
        """fn(col) -> iterable of (row, value): the image of basis vector col."""
        entries = {}
        for j in range(dim):
            for i, v in fn(j):
                entries[(i, j)] = entries.get((i, j), CycloNum.zero(p)) + v
        return cls(p, dim, entries)

    def _check(self, other: "DenseOperator") -> None:
        if self.p != other.p or self.dim != other.dim:
            raise ValueError("operator shape or root order mismatch")

    def __mul__(self, other):
        if isinstance(other, (CycloNum, int)):
            return DenseOperator(self.p, self.dim, {k: v * other for k, v in self.entries.items()})
        self._check(other)
        rows_of = defaultdict(list)
        for (k, j), b in other.entries.items():
            rows_of[k].append((j, b))
        out: dict = {}
        summed = set()
        for (i, k), a in self.entries.items():
            for j, b in rows_of.get(k, ()):
                key = (i, j)
                prod = a * b
                if key in out:
                    out[key] = out[key] + prod
                    summed.add(key)
                else:
                    out[key] = prod
        # a product of field-nonzero entries is nonzero; only sums can cancel
        for key in summed:
            if out[key].field_is_zero():
                del out[key]
        return DenseOperator._trusted(self.p, self.dim, out)

    @classmethod
    def _trusted(cls, p: int, dim: int, entries: dict) -> "DenseOperator":
        obj = object.__new__(cls)
        obj.p, obj.dim, obj.entries = p, dim, entries
        return obj

    def __rmul__(self, other):
        if isinstance(other, (CycloNum, int)):
            return self * other
        return NotImplemented

    def __add__(self, other: "DenseOperator") -> "DenseOperator":
        self._check(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return DenseOperator(self.p, self.dim, out)

    def __sub__(self, other: "DenseOperator") -> "DenseOperator":
        return self + other * -1

    def __neg__(self):
        return self * -1

    def star(self) -> "DenseOperator":
        return DenseOperator(self.p, self.dim, {(j, i): v.star() for (i, j), v in self.entries.items()})

    def get(self, i: int, j: int) -> CycloNum:
        return self.entries.get((i, j), CycloNum.zero(self.p))

    def is_monomial(self) -> bool:
        cols = defaultdict(int)
        rows = defaultdict(int)
        for i, j in self.entries:
            cols[j] += 1
            rows[i] += 1
        return len(cols) == self.dim and all(c == 1 for c in cols.values()) and all(r == 1 for r in rows.values())

    def inverse(self) -> "DenseOperator":
        if self.is_monomial():
            out = {}
            for (i, j), v in self.entries.items():
                m = v.monomial_exponent()
                out[(j, i)] = v.inv() if m else v.field_inv()
            return DenseOperator(self.p, self.dim, out)
        return self._gauss_inverse()

    def _gauss_inverse(self) -> "DenseOperator":
        n, p = self.dim, self.p
        zero, one = CycloNum.zero(p), CycloNum.one(p)
        a = [[self.get(i, j) for j in range(n)] + [one if i == k else zero for k in range(n)] for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if not a[r][col].field_is_zero()), None)
            if piv is None:
                raise NotInvertibleError("singular operator")
            a[col], a[piv] = a[piv], a[col]
            inv = a[col][col].field_inv()
            a[col] = [(x * inv).reduced() for x in a[col]]
            for r in range(n):
                if r != col and not a[r][col].field_is_zero():
                    f = a[r][col]
                    a[r] = [(x - f * y).reduced() for x, y in zip(a[r], a[col])]
        return DenseOperator(p, n, {(i, j): a[i][n + j] for i in range(n) for j in range(n)})

    def equals(self, other: "DenseOperator") -> bool:
        self._check(other)
        keys = set(self.entries) | set(other.entries)
        return all(self.get(*k).field_eq(other.get(*k)) for k in keys)

    def __eq__(self, other):
        if not isinstance(other, DenseOperator):
            return NotImplemented
        return self.p == other.p and self.dim == other.dim and self.equals(other)

    __hash__ = None

    def commutes_with(self, other: "DenseOperator") -> bool:
        return (self * other).equals(other * self)

    def restrict(self, basis: list) -> "DenseOperator":
        """Matrix of the operator on the span of the given standard basis vectors."""
        pos = {b: i for i, b in enumerate(basis)}
        out = {}
        for (i, j), v in self.entries.items():
            if i in pos and j in pos:
                out[(pos[i], pos[j])] = v
        return DenseOperator(self.p, len(basis), out)

    def leaves_invariant(self, basis: list) -> bool:
        s = set(basis)
        return all(i in s for (i, j) in self.entries if j in s)

    def apply(self, col: int) -> dict:
        return {i: v for (i, j), v in self.entries.items() if j == col}

    def __repr__(self):
        return f"DenseOperator(dim={self.dim}, nnz={len(self.entries)}, p={self.p})"


class DenseAlgebra:
    """Adapter exposing DenseOperator to the universal calculus."""

    def __init__(self, p: int, dim: int):
        check_root_order(p)
        self.p = p
        self.dim = dim
        self._one = DenseOperator.identity(p, dim)

    def one(self):
        return self._one

    def scalar(self, c: CycloNum):
        return self._one * c

    def star(self, x: DenseOperator):
        return x.star()

    def inv(self, x: DenseOperator):
        return x.inverse()

    def eq(self, x: DenseOperator, y: DenseOperator) -> bool:
        return x.equals(y)

    def describe(self, x: DenseOperator) -> str:
        items = sorted(x.entries.items())[:4]
        return "{" + ", ".join(f"{k}: {v!r}" for k, v in items) + (", ..." if len(x.entries) > 4 else "") + "}"
