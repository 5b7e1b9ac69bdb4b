"""Sound interval arithmetic with outward rounding.

Every operation returns an interval that contains the exact real-number
image of its operands.  Outward rounding is realized by post-hoc epsilon
inflation: each computed endpoint is pushed outward by ``EPS_REL`` times
its own magnitude, where ``EPS_REL`` is four machine epsilons.  This
dominates the rounding error of the underlying float operation (at most
half an ulp for arithmetic, a few ulps for libm calls) while keeping
exact-zero endpoints exact.  For a point argument the inflated width of
an elementary function is therefore at most ``2 * EPS_REL * (1 + |f(x)|)``.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, ShapeError

EPS_REL = 4.0 * sys.float_info.epsilon

_TWO_PI = 2.0 * math.pi


def _out_lo(x: float) -> float:
    return x - EPS_REL * abs(x)


def _out_hi(x: float) -> float:
    return x + EPS_REL * abs(x)


@dataclass(frozen=True)
class Interval:
    """Closed real interval [lo, hi] with finite endpoints.

    The empty set is never encoded as ``lo > hi``; operations that can
    produce it (:meth:`intersect`) return ``None`` as the sentinel.
    """

    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise DomainError(f"non-finite interval endpoint: [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise DomainError(f"inverted interval: [{self.lo}, {self.hi}]")

    @staticmethod
    def point(x: float) -> "Interval":
        return Interval(float(x), float(x))

    @staticmethod
    def zero() -> "Interval":
        return Interval(0.0, 0.0)

    @staticmethod
    def hull(values: Iterable[float]) -> "Interval":
        vs = list(values)
        return Interval(min(vs), max(vs))

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def rad(self) -> float:
        return 0.5 * (self.hi - self.lo)

    @property
    def mag(self) -> float:
        """Largest absolute value attained on the interval."""
        return max(abs(self.lo), abs(self.hi))

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return self.lo - slack <= x <= self.hi + slack

    def contains_interval(self, other: "Interval", slack: float = 0.0) -> bool:
        return self.lo - slack <= other.lo and other.hi <= self.hi + slack

    def intersect(self, other: "Interval") -> "Interval | None":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return None
        return Interval(lo, hi)

    def union(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def widened(self, delta: float) -> "Interval":
        return Interval(self.lo - delta, self.hi + delta)

    def scaled(self, factor: float) -> "Interval":
        """Shrink or grow symmetrically about the midpoint (no rounding)."""
        m, r = self.mid, self.rad
        return Interval(m - factor * r, m + factor * r)

    def sample(self, count: int) -> list[float]:
        if count == 1:
            return [self.mid]
        step = self.width / (count - 1)
        return [self.lo + i * step for i in range(count)]

    def __repr__(self) -> str:
        return f"[{self.lo!r}, {self.hi!r}]"


def _rounded(lo: float, hi: float) -> Interval:
    return Interval(_out_lo(lo), _out_hi(hi))


def iv_add(a: Interval, b: Interval) -> Interval:
    return _rounded(a.lo + b.lo, a.hi + b.hi)


def iv_sub(a: Interval, b: Interval) -> Interval:
    return _rounded(a.lo - b.hi, a.hi - b.lo)


def iv_neg(a: Interval) -> Interval:
    return Interval(-a.hi, -a.lo)


def iv_mul(a: Interval, b: Interval) -> Interval:
    ps = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    return _rounded(min(ps), max(ps))


def iv_scale(a: Interval, c: float) -> Interval:
    if c >= 0.0:
        return _rounded(a.lo * c, a.hi * c)
    return _rounded(a.hi * c, a.lo * c)


def iv_div(a: Interval, b: Interval) -> Interval:
    if b.lo <= 0.0 <= b.hi:
        raise DomainError(f"division by interval containing zero: {b}")
    ps = (a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi)
    return _rounded(min(ps), max(ps))


def iv_pow(a: Interval, k: int) -> Interval:
    if k < 0 or k != int(k):
        raise DomainError(f"iv_pow exponent must be a nonnegative integer, got {k}")
    if k == 0:
        return Interval(1.0, 1.0)
    if k == 1:
        return a
    if k % 2 == 0 and a.lo < 0.0 < a.hi:
        return _rounded(0.0, max(abs(a.lo), abs(a.hi)) ** k)
    lo, hi = a.lo ** k, a.hi ** k
    if lo > hi:
        lo, hi = hi, lo
    return _rounded(lo, hi)


def _monotone(f, a: Interval) -> Interval:
    return _rounded(f(a.lo), f(a.hi))


def _sigmoid(x: float) -> float:
    if x >= 0.0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


def _hits_phase(a: Interval, phase: float) -> bool:
    """Conservatively decide whether ``phase + 2*pi*k`` meets the interval.

    Errs toward inclusion: a critical point just outside the interval only
    widens the resulting bound, never narrows it.
    """
    if a.width >= _TWO_PI:
        return True
    k0 = math.floor((a.lo - phase) / _TWO_PI)
    for k in (k0, k0 + 1, k0 + 2):
        c = phase + _TWO_PI * k
        margin = 1e-9 * (1.0 + abs(c))
        if a.lo - margin <= c <= a.hi + margin:
            return True
    return False


def _iv_sin(a: Interval) -> Interval:
    lo = -1.0 if _hits_phase(a, -0.5 * math.pi) else min(math.sin(a.lo), math.sin(a.hi))
    hi = 1.0 if _hits_phase(a, 0.5 * math.pi) else max(math.sin(a.lo), math.sin(a.hi))
    return _rounded(lo, hi)


def _iv_cos(a: Interval) -> Interval:
    lo = -1.0 if _hits_phase(a, math.pi) else min(math.cos(a.lo), math.cos(a.hi))
    hi = 1.0 if _hits_phase(a, 0.0) else max(math.cos(a.lo), math.cos(a.hi))
    return _rounded(lo, hi)


def iv_elem(name: str, a: Interval) -> Interval:
    """Interval extension of an elementary function.

    Supported names: sin, cos, exp, log, sqrt, tanh, sigmoid.
    """
    if name == "sin":
        return _iv_sin(a)
    if name == "cos":
        return _iv_cos(a)
    if name == "exp":
        try:
            return _monotone(math.exp, a)
        except OverflowError:
            raise DomainError(f"exp overflows on {a}") from None
    if name == "log":
        if a.lo <= 0.0:
            raise DomainError(f"log requires a positive interval, got {a}")
        return _monotone(math.log, a)
    if name == "sqrt":
        if a.lo < 0.0:
            raise DomainError(f"sqrt requires a nonnegative interval, got {a}")
        lo = math.sqrt(a.lo)
        return Interval(max(0.0, _out_lo(lo)), _out_hi(math.sqrt(a.hi)))
    if name == "tanh":
        return _monotone(math.tanh, a)
    if name == "sigmoid":
        return _monotone(_sigmoid, a)
    raise DomainError(f"unknown elementary function {name!r}")


class Box:
    """Axis-aligned product of intervals, one per variable."""

    __slots__ = ("dims",)

    def __init__(self, dims: Sequence[Interval]):
        self.dims = tuple(dims)

    def __len__(self) -> int:
        return len(self.dims)

    def __getitem__(self, i: int) -> Interval:
        return self.dims[i]

    def __iter__(self):
        return iter(self.dims)

    def __eq__(self, other) -> bool:
        return isinstance(other, Box) and self.dims == other.dims

    def __hash__(self):
        return hash(tuple((d.lo, d.hi) for d in self.dims))

    def __repr__(self) -> str:
        return "Box(" + ", ".join(repr(d) for d in self.dims) + ")"

    def contains_point(self, xs: Sequence[float], slack: float = 0.0) -> bool:
        if len(xs) != len(self.dims):
            raise ShapeError(f"point dimension {len(xs)} != box dimension {len(self.dims)}")
        return all(d.contains(x, slack) for d, x in zip(self.dims, xs))

    def with_dim(self, i: int, replacement: Interval) -> "Box":
        dims = list(self.dims)
        dims[i] = replacement
        return Box(dims)

    def extended(self, extra: Interval) -> "Box":
        return Box(self.dims + (extra,))

    def dropped_last(self) -> "Box":
        return Box(self.dims[:-1])


def unit_box(n: int) -> Box:
    return Box([Interval(-1.0, 1.0)] * n)
