"""Sparse multivariate polynomials with order truncation and sound range
evaluation.

A polynomial is a map from exponent vectors (dense tuples of nonnegative
ints, one slot per variable) to float coefficients.  Coefficient
arithmetic is plain float arithmetic; zero coefficients are never stored.
Range evaluation is interval Horner over the variable order with monomial
grouping, so its result always contains the true range over a box.
"""

from __future__ import annotations

import math
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import DomainError, ShapeError
from .intervals import Box, Interval, iv_add, iv_mul, iv_pow, iv_scale

Expo = tuple[int, ...]


class SparsePolynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Expo, float] | None = None):
        self.nvars = nvars
        self.terms: dict[Expo, float] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ShapeError(f"exponent vector {e} has length != {nvars}")
                if c != 0.0:
                    self.terms[tuple(int(x) for x in e)] = float(c)

    # ---------------------------------------------------------------- constructors

    @staticmethod
    def zero(nvars: int) -> "SparsePolynomial":
        return SparsePolynomial(nvars)

    @staticmethod
    def constant(nvars: int, c: float) -> "SparsePolynomial":
        return SparsePolynomial(nvars, {(0,) * nvars: c})

    @staticmethod
    def variable(nvars: int, index: int) -> "SparsePolynomial":
        e = [0] * nvars
        e[index] = 1
        return SparsePolynomial(nvars, {tuple(e): 1.0})

    def copy(self) -> "SparsePolynomial":
        p = SparsePolynomial(self.nvars)
        p.terms = dict(self.terms)
        return p

    # ---------------------------------------------------------------- queries

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def constant_term(self) -> float:
        return self.terms.get((0,) * self.nvars, 0.0)

    def coefficient(self, expo: Expo) -> float:
        return self.terms.get(tuple(expo), 0.0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparsePolynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # ---------------------------------------------------------------- arithmetic

    def _check_same_space(self, other: "SparsePolynomial") -> None:
        if self.nvars != other.nvars:
            raise ShapeError(f"variable count mismatch: {self.nvars} != {other.nvars}")

    def add(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check_same_space(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0.0) + c
            if s == 0.0:
                out.pop(e, None)
            else:
                out[e] = s
        r = SparsePolynomial(self.nvars)
        r.terms = out
        return r

    def sub(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self.add(other.neg())

    def neg(self) -> "SparsePolynomial":
        r = SparsePolynomial(self.nvars)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def scale(self, c: float) -> "SparsePolynomial":
        if c == 0.0:
            return SparsePolynomial(self.nvars)
        r = SparsePolynomial(self.nvars)
        r.terms = {e: c * v for e, v in self.terms.items()}
        return r

    def mul(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check_same_space(other)
        out: dict[Expo, float] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0.0) + c1 * c2
                if s == 0.0:
                    out.pop(e, None)
                else:
                    out[e] = s
        r = SparsePolynomial(self.nvars)
        r.terms = out
        return r

    def split_by_degree(self, order: int) -> tuple["SparsePolynomial", "SparsePolynomial"]:
        """Return (terms of total degree <= order, the rest)."""
        keep: dict[Expo, float] = {}
        tail: dict[Expo, float] = {}
        for e, c in self.terms.items():
            (keep if sum(e) <= order else tail)[e] = c
        lo = SparsePolynomial(self.nvars)
        lo.terms = keep
        hi = SparsePolynomial(self.nvars)
        hi.terms = tail
        return lo, hi

    # ---------------------------------------------------------------- evaluation

    def eval(self, point: Sequence[float]) -> float:
        if len(point) != self.nvars:
            raise ShapeError(f"point dimension {len(point)} != {self.nvars}")
        total = 0.0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def eval_array(self, columns: Sequence[np.ndarray]) -> np.ndarray:
        """Vectorized evaluation; ``columns[i]`` holds variable i's samples."""
        if len(columns) != self.nvars:
            raise ShapeError(f"got {len(columns)} columns for {self.nvars} variables")
        n = len(columns[0]) if self.nvars else 1
        total = np.zeros(n)
        for e, c in self.terms.items():
            v = np.full(n, c)
            for col, k in zip(columns, e):
                if k:
                    v = v * col ** k
            total += v
        return total


def poly_add(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    return p.add(q)


def poly_scale(p: SparsePolynomial, c: float) -> SparsePolynomial:
    return p.scale(c)


def poly_range(p: SparsePolynomial, domain: Box) -> Interval:
    """Interval containing {p(x) | x in domain}, by interval Horner.

    Terms are grouped by the exponent of the first variable and the
    grouping recurses over the remaining variables, so each variable is
    read once per Horner chain.
    """
    if len(domain) != p.nvars:
        raise ShapeError(f"domain dimension {len(domain)} != {p.nvars}")
    if not p.terms:
        return Interval.zero()
    return _horner_range(p.terms, 0, p.nvars, domain)


def _horner_range(terms: Mapping[Expo, float], var: int, nvars: int, domain: Box) -> Interval:
    if var == nvars:
        # all exponents consumed: a single constant entry remains
        (c,) = terms.values()
        return Interval.point(c)
    groups: dict[int, dict[Expo, float]] = {}
    for e, c in terms.items():
        groups.setdefault(e[var], {})[e] = c
    degs = sorted(groups, reverse=True)
    x = domain[var]
    acc = _horner_range(groups[degs[0]], var + 1, nvars, domain)
    prev = degs[0]
    for d in degs[1:]:
        acc = iv_mul(acc, iv_pow(x, prev - d))
        acc = iv_add(acc, _horner_range(groups[d], var + 1, nvars, domain))
        prev = d
    if prev:
        acc = iv_mul(acc, iv_pow(x, prev))
    return acc


def poly_mul_trunc(
    p: SparsePolynomial, q: SparsePolynomial, order: int, domain: Box
) -> tuple[SparsePolynomial, Interval]:
    """Product truncated to total degree <= order.

    The discarded higher-degree terms are collected into one tail
    polynomial whose range over the domain is returned alongside.
    """
    prod = p.mul(q)
    kept, tail = prod.split_by_degree(order)
    if tail.is_zero():
        return kept, Interval.zero()
    return kept, poly_range(tail, domain)


# -------------------------------------------------------------------- calculus

def poly_derivative(p: SparsePolynomial, var: int) -> SparsePolynomial:
    out: dict[Expo, float] = {}
    for e, c in p.terms.items():
        k = e[var]
        if k == 0:
            continue
        ne = list(e)
        ne[var] = k - 1
        out[tuple(ne)] = c * k
    r = SparsePolynomial(p.nvars)
    r.terms = {e: c for e, c in out.items() if c != 0.0}
    return r


def poly_antiderivative(p: SparsePolynomial, var: int) -> SparsePolynomial:
    out: dict[Expo, float] = {}
    for e, c in p.terms.items():
        ne = list(e)
        ne[var] = e[var] + 1
        out[tuple(ne)] = c / (e[var] + 1)
    r = SparsePolynomial(p.nvars)
    r.terms = out
    return r


# -------------------------------------------------------------------- reshaping

def poly_lift(p: SparsePolynomial, nvars: int) -> SparsePolynomial:
    """Embed into a larger variable space (new trailing variables unused)."""
    if nvars < p.nvars:
        raise ShapeError(f"cannot lift from {p.nvars} to {nvars} variables")
    pad = (0,) * (nvars - p.nvars)
    r = SparsePolynomial(nvars)
    r.terms = {e + pad: c for e, c in p.terms.items()}
    return r


def poly_substitute_const(
    p: SparsePolynomial, var: int, value: float
) -> tuple[SparsePolynomial, Interval]:
    """Substitute a float constant for one variable and drop it.

    The powers ``value**k`` and coefficient products are computed in
    interval arithmetic; each resulting coefficient is re-centred to a
    float and the accumulated rounding radius is returned as a symmetric
    interval so callers can keep the substitution sound.
    """
    acc: dict[Expo, Interval] = {}
    vi = Interval.point(value)
    for e, c in p.terms.items():
        ne = e[:var] + e[var + 1:]
        contrib = iv_scale(iv_pow(vi, e[var]), c)
        prev = acc.get(ne)
        acc[ne] = contrib if prev is None else iv_add(prev, contrib)
    terms: dict[Expo, float] = {}
    err_lo = 0.0
    err_hi = 0.0
    for e, iv in acc.items():
        m = iv.mid
        if m != 0.0:
            terms[e] = m
        err_lo += iv.lo - m
        err_hi += iv.hi - m
    r = SparsePolynomial(p.nvars - 1)
    r.terms = terms
    return r, Interval(min(err_lo, 0.0), max(err_hi, 0.0))


# -------------------------------------------------------------------- rendering

def render_poly(p: SparsePolynomial, names: Sequence[str] | None = None) -> str:
    """Canonical text form: terms sorted graded-lex, coefficients via repr."""
    if not p.terms:
        return "0"
    if names is None:
        names = [f"x{i}" for i in range(p.nvars)]
    elif len(names) != p.nvars:
        raise ShapeError(f"got {len(names)} names for {p.nvars} variables")
    pieces = []
    for e in sorted(p.terms, key=lambda e: (sum(e), tuple(-k for k in e))):
        c = p.terms[e]
        factors = [repr(c)]
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        pieces.append("*".join(factors))
    return " + ".join(pieces)
