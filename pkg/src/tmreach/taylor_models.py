"""Taylor models: polynomial part plus interval remainder over a shared box.

A model (p, I) over a domain D encloses every function f with
f(x) in p(x) + I for all x in D.  All operations preserve that contract:
polynomial coefficients use plain float arithmetic, every discarded or
nonlinearly combined quantity is bounded over D and pushed into the
remainder with outward rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ShapeError
from .intervals import Box, Interval, iv_add, iv_mul, iv_scale
from .polynomials import (
    SparsePolynomial,
    poly_lift,
    poly_mul_trunc,
    poly_range,
    poly_substitute_const,
)


@dataclass(frozen=True)
class TaylorModel:
    poly: SparsePolynomial
    remainder: Interval
    domain: Box
    order: int

    def __post_init__(self):
        if self.poly.nvars != len(self.domain):
            raise ShapeError(
                f"polynomial over {self.poly.nvars} variables on a "
                f"{len(self.domain)}-dimensional domain"
            )
        if self.poly.degree() > self.order:
            raise ShapeError(
                f"polynomial degree {self.poly.degree()} exceeds order {self.order}"
            )

    def same_space(self, other: "TaylorModel") -> bool:
        return self.domain == other.domain and self.order == other.order

    def _require_same_space(self, other: "TaylorModel") -> None:
        if not self.same_space(other):
            raise ShapeError("Taylor models do not share a domain and order")


class TMVector:
    """Fixed-length sequence of Taylor models sharing one domain and order."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[TaylorModel]):
        comps = tuple(components)
        if comps:
            first = comps[0]
            for c in comps[1:]:
                if not first.same_space(c):
                    raise ShapeError("TMVector components disagree on domain or order")
        self.components = comps

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> TaylorModel:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    @property
    def domain(self) -> Box:
        return self.components[0].domain

    @property
    def order(self) -> int:
        return self.components[0].order


# ------------------------------------------------------------------ constructors

def tm_constant(c: float, domain: Box, order: int) -> TaylorModel:
    return TaylorModel(SparsePolynomial.constant(len(domain), c), Interval.zero(), domain, order)


def tm_variable(index: int, domain: Box, order: int) -> TaylorModel:
    return TaylorModel(SparsePolynomial.variable(len(domain), index), Interval.zero(), domain, order)


def tm_from_poly(p: SparsePolynomial, domain: Box, order: int) -> TaylorModel:
    return tm_truncate(TaylorModel(p, Interval.zero(), domain, max(order, p.degree())), order)


# ------------------------------------------------------------------ arithmetic

def tm_add(a: TaylorModel, b: TaylorModel) -> TaylorModel:
    a._require_same_space(b)
    return TaylorModel(a.poly.add(b.poly), iv_add(a.remainder, b.remainder), a.domain, a.order)


def tm_sub(a: TaylorModel, b: TaylorModel) -> TaylorModel:
    return tm_add(a, tm_neg(b))


def tm_neg(a: TaylorModel) -> TaylorModel:
    return TaylorModel(
        a.poly.neg(), Interval(-a.remainder.hi, -a.remainder.lo), a.domain, a.order
    )


def tm_scale(a: TaylorModel, c: float) -> TaylorModel:
    return TaylorModel(a.poly.scale(c), iv_scale(a.remainder, c), a.domain, a.order)


def tm_add_const(a: TaylorModel, c: float) -> TaylorModel:
    return TaylorModel(
        a.poly.add(SparsePolynomial.constant(a.poly.nvars, c)), a.remainder, a.domain, a.order
    )


def tm_add_interval(a: TaylorModel, iv: Interval) -> TaylorModel:
    return TaylorModel(a.poly, iv_add(a.remainder, iv), a.domain, a.order)


def tm_mul(a: TaylorModel, b: TaylorModel) -> TaylorModel:
    """Order-k product: p_a*p_b truncated, cross terms bounded over D."""
    a._require_same_space(b)
    kept, tail = poly_mul_trunc(a.poly, b.poly, a.order, a.domain)
    rem = tail
    if not (b.remainder.lo == 0.0 == b.remainder.hi):
        rem = iv_add(rem, iv_mul(poly_range(a.poly, a.domain), b.remainder))
    if not (a.remainder.lo == 0.0 == a.remainder.hi):
        rem = iv_add(rem, iv_mul(poly_range(b.poly, b.domain), a.remainder))
    rem = iv_add(rem, iv_mul(a.remainder, b.remainder))
    return TaylorModel(kept, rem, a.domain, a.order)


def tm_enclosure(a: TaylorModel) -> Interval:
    return iv_add(poly_range(a.poly, a.domain), a.remainder)


def tm_truncate(a: TaylorModel, new_order: int) -> TaylorModel:
    if new_order < 0:
        raise ShapeError(f"order must be nonnegative, got {new_order}")
    kept, tail = a.poly.split_by_degree(new_order)
    rem = a.remainder if tail.is_zero() else iv_add(a.remainder, poly_range(tail, a.domain))
    return TaylorModel(kept, rem, a.domain, new_order)


def tm_linear_map(
    weights: Sequence[Sequence[float]], bias: Sequence[float], v: TMVector
) -> TMVector:
    """Affine image W*v + B with exact coefficient arithmetic.

    The per-row reduction runs in ascending input index so results do not
    depend on any scheduling of callers.
    """
    ncols = len(v)
    out = []
    for row, b in zip(weights, bias):
        if len(row) != ncols:
            raise ShapeError(f"weight row length {len(row)} != vector length {ncols}")
        poly = SparsePolynomial.constant(v.domain and len(v.domain) or 0, float(b))
        poly = SparsePolynomial.constant(len(v.domain), float(b))
        rem = Interval.zero()
        for w, comp in zip(row, v):
            if w == 0.0:
                continue
            poly = poly.add(comp.poly.scale(float(w)))
            rem = iv_add(rem, iv_scale(comp.remainder, float(w)))
        out.append(TaylorModel(poly, rem, v.domain, v.order))
    return TMVector(out)


def tighter(a: TaylorModel, b: TaylorModel) -> bool:
    """Strict remainder-width order on equal-domain models."""
    a._require_same_space(b)
    return a.remainder.width < b.remainder.width


# ------------------------------------------------------------------ composition

def tm_compose_univariate(
    outer: SparsePolynomial, inner: TaylorModel, order: int, center: float = 0.0
) -> TaylorModel:
    """Over-approximate outer(z) at z = inner, with outer given in powers
    of (z - center).

    Evaluated by Horner over order-k Taylor-model arithmetic; a nonzero
    center only shifts the inner model's constant coefficient, which keeps
    the Horner iterates well scaled when the inner enclosure is narrow and
    far from zero.
    """
    if outer.nvars != 1:
        raise ShapeError(f"outer polynomial must be univariate, has {outer.nvars} variables")
    base = tm_truncate(inner, order) if inner.order != order else inner
    if center != 0.0:
        base = tm_add_const(base, -center)
    coeffs: dict[int, float] = {e[0]: c for e, c in outer.terms.items()}
    if not coeffs:
        return tm_constant(0.0, inner.domain, order)
    top = max(coeffs)
    acc = tm_constant(coeffs[top], inner.domain, order)
    for d in range(top - 1, -1, -1):
        acc = tm_mul(acc, base)
        c = coeffs.get(d, 0.0)
        if c != 0.0:
            acc = tm_add_const(acc, c)
    return acc


# ------------------------------------------------------------------ reshaping

def tm_extend_domain(a: TaylorModel, extra: Interval, order: int | None = None) -> TaylorModel:
    """Append one fresh variable (the new last axis) to the domain."""
    order = a.order if order is None else order
    return TaylorModel(
        poly_lift(a.poly, a.poly.nvars + 1), a.remainder, a.domain.extended(extra), order
    )


def tm_instantiate_last(a: TaylorModel, value: float) -> TaylorModel:
    """Substitute a float for the last variable and drop that axis.

    Coefficient rounding from the substitution is folded into the
    remainder, so the result still encloses every function the input did
    along the slice."""
    p, err = poly_substitute_const(a.poly, a.poly.nvars - 1, value)
    return TaylorModel(p, iv_add(a.remainder, err), a.domain.dropped_last(), a.order)
