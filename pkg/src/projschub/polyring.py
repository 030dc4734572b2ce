"""Exact sparse multivariate polynomials over the integers.

Two variable families are supported: the torus weights ``t_1, t_2, ...`` and
the simple roots ``beta_1, beta_2, ...`` with ``beta_m = t_m - t_{m+1}``.

An exponent vector is stored as a tuple of ``(index, exponent)`` pairs sorted
by index, with no zero exponents. A polynomial maps such tuples to nonzero
Python ints.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping
from typing import Tuple

ExponentVector = Tuple[Tuple[int, int], ...]

ONE_MONOMIAL: ExponentVector = ()


class Family(enum.Enum):
    T = "t"
    BETA = "beta"


class FamilyMismatchError(ValueError):
    """Raised when combining polynomials in different variable families."""


def exponent_vector(entries: Mapping[int, int] | Iterable[tuple[int, int]]) -> ExponentVector:
    """Canonicalize an index->exponent association (zeros dropped, sorted)."""
    items = entries.items() if isinstance(entries, Mapping) else entries
    merged: dict[int, int] = {}
    for idx, e in items:
        if idx < 1:
            raise ValueError(f"variable index must be >= 1, got {idx}")
        if e < 0:
            raise ValueError(f"negative exponent {e} for index {idx}")
        merged[idx] = merged.get(idx, 0) + e
    return tuple(sorted((i, e) for i, e in merged.items() if e))


def from_dense(values: Iterable[int]) -> ExponentVector:
    """``(x_1, x_2, ...)`` -> sparse exponent vector."""
    return tuple((m, x) for m, x in enumerate(values, start=1) if x)


def to_dense(vec: ExponentVector, length: int) -> tuple[int, ...]:
    out = [0] * length
    for idx, e in vec:
        if idx > length:
            raise ValueError(f"index {idx} exceeds dense length {length}")
        out[idx - 1] = e
    return tuple(out)


def add_exponents(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for idx, e in b:
        d[idx] = d.get(idx, 0) + e
    return tuple(sorted(d.items()))


def degree(vec: ExponentVector) -> int:
    return sum(e for _, e in vec)


def max_index(vec: ExponentVector) -> int:
    return vec[-1][0] if vec else 0


class Polynomial:
    """Immutable integer polynomial in one variable family.

    Construct through :meth:`from_terms`, :meth:`var`, :meth:`const` or
    arithmetic; the constructor assumes its input is already canonical.
    """

    __slots__ = ("family", "_terms", "_hash")

    def __init__(self, family: Family, terms: dict[ExponentVector, int]):
        self.family = family
        self._terms = terms
        self._hash = None

    @classmethod
    def from_terms(cls, family: Family, terms: Mapping | Iterable) -> Polynomial:
        """Build from ``{exponents: coeff}`` or ``[(exponents, coeff), ...]``.

        Exponents may be any form accepted by :func:`exponent_vector`; equal
        monomials are merged and zero coefficients dropped.
        """
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[ExponentVector, int] = {}
        for exps, c in items:
            key = exponent_vector(exps)
            acc[key] = acc.get(key, 0) + int(c)
        return cls(family, {k: v for k, v in acc.items() if v})

    @classmethod
    def zero(cls, family: Family) -> Polynomial:
        return cls(family, {})

    @classmethod
    def const(cls, family: Family, c: int) -> Polynomial:
        return cls(family, {ONE_MONOMIAL: c} if c else {})

    @classmethod
    def one(cls, family: Family) -> Polynomial:
        return cls.const(family, 1)

    @classmethod
    def var(cls, family: Family, index: int) -> Polynomial:
        if index < 1:
            raise ValueError(f"variable index must be >= 1, got {index}")
        return cls(family, {((index, 1),): 1})

    @property
    def terms(self) -> Mapping[ExponentVector, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exps) -> int:
        return self._terms.get(exponent_vector(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.family is other.family and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.family, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, int):
            return Polynomial.const(self.family, other)
        if not isinstance(other, Polynomial):
            raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")
        if other.family is not self.family:
            raise FamilyMismatchError(
                f"{self.family.value} vs {other.family.value}; convert with beta_to_t first"
            )
        return other

    def __add__(self, other) -> Polynomial:
        return poly_arith(self, self._coerce(other), "add")

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.family, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> Polynomial:
        return poly_arith(self, self._coerce(other), "mul")

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.one(self.family)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def ordered_terms(self) -> list[tuple[ExponentVector, int]]:
        """Terms in the fixed display order.

        Higher total degree first. Ties are broken lexicographically with
        ``t_1 > t_2 > ...`` for t, and with the largest index leading for
        beta (so ``beta_3^2`` precedes ``beta_2*beta_3``).
        """
        if not self._terms:
            return []
        top = max(max_index(v) for v in self._terms)
        order = range(top, 0, -1) if self.family is Family.BETA else range(1, top + 1)

        def key(item):
            d = dict(item[0])
            return (degree(item[0]), tuple(d.get(m, 0) for m in order))

        return sorted(self._terms.items(), key=key, reverse=True)

    def __repr__(self) -> str:
        from projschub.render import to_text

        return f"Polynomial<{self.family.value}>({to_text(self)})"


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Add or multiply two polynomials of the same family."""
    if a.family is not b.family:
        raise FamilyMismatchError(
            f"{a.family.value} vs {b.family.value}; convert with beta_to_t first"
        )
    if op == "add":
        acc = dict(a._terms)
        for k, v in b._terms.items():
            s = acc.get(k, 0) + v
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
        return Polynomial(a.family, acc)
    if op == "mul":
        acc = {}
        for ka, va in a._terms.items():
            for kb, vb in b._terms.items():
                k = add_exponents(ka, kb)
                acc[k] = acc.get(k, 0) + va * vb
        return Polynomial(a.family, {k: v for k, v in acc.items() if v})
    raise ValueError(f"unknown op {op!r}")


def t_diff(a: int, b: int) -> Polynomial:
    """``t_a - t_b``."""
    return Polynomial.from_terms(Family.T, [(((a, 1),), 1), (((b, 1),), -1)])


def beta_to_t(p: Polynomial) -> Polynomial:
    """Substitute ``beta_m -> t_m - t_{m+1}`` and expand."""
    if p.family is not Family.BETA:
        raise FamilyMismatchError(f"beta_to_t expects a beta polynomial, got {p.family.value}")
    images: dict[tuple[int, int], Polynomial] = {}
    out = Polynomial.zero(Family.T)
    for exps, c in p.items():
        term = Polynomial.const(Family.T, c)
        for idx, e in exps:
            if (idx, e) not in images:
                images[idx, e] = t_diff(idx, idx + 1) ** e
            term = term * images[idx, e]
        out = out + term
    return out


def support_of(p: Polynomial) -> frozenset[ExponentVector]:
    """Exponent vectors carrying a nonzero coefficient."""
    return frozenset(p._terms)
