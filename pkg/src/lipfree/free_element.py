"""Finitely supported elements of the free space and Lipschitz functions on it."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import DegeneratePair, NonZeroAtBase, SpaceMismatch
from .metric_space import FiniteMetricSpace
from .rational import format_rational, parse_rational


def same_space(a: FiniteMetricSpace, b: FiniteMetricSpace) -> bool:
    return a is b or a == b


def _require_same(a, b):
    if not same_space(a, b):
        raise SpaceMismatch("operands live on different metric spaces")


@dataclass(frozen=True, eq=False)
class FreeElement:
    """A linear combination of point evaluations, stored in canonical form.

    ``weights`` maps non-base point indices to nonzero coefficients; the
    base point evaluation is the zero vector and is never stored.
    """

    space: FiniteMetricSpace
    weights: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "weights", {k: Fraction(v) for k, v in self.weights.items()})
        for k, v in self.weights.items():
            self.space.check_point(k)
            if k == self.space.base:
                raise ValueError("base point cannot carry a weight in canonical form")
            if v == 0:
                raise ValueError("zero coefficients are not allowed in canonical form")

    def __eq__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return same_space(self.space, other.space) and self.weights == other.weights

    __hash__ = None

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __rmul__(self, c):
        return scale(c, self)

    def is_zero(self) -> bool:
        return not self.weights

    def coefficient(self, x: int) -> Fraction:
        return self.weights.get(x, Fraction(0))

    def __repr__(self):
        terms = ", ".join(f"{self.space.points[k]}: {v}" for k, v in sorted(self.weights.items()))
        return f"FreeElement({{{terms}}})"

    def to_json(self) -> dict:
        return {
            "weights": {
                self.space.points[k]: format_rational(v) for k, v in sorted(self.weights.items())
            }
        }

    @classmethod
    def from_json(cls, space: FiniteMetricSpace, obj: dict) -> "FreeElement":
        try:
            raw = obj["weights"]
        except (KeyError, TypeError):
            raise ValueError("malformed element JSON: missing 'weights'") from None
        if not isinstance(raw, dict):
            raise ValueError("malformed element JSON: 'weights' must be an object")
        return from_weights(space, [(space.index(k), parse_rational(v)) for k, v in raw.items()])


@dataclass(frozen=True, eq=False)
class LipschitzFunction:
    """Values of a real function on the points, vanishing at the base point."""

    space: FiniteMetricSpace
    values: tuple

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != self.space.n:
            raise ValueError(f"expected {self.space.n} values, got {len(vals)}")
        if vals[self.space.base] != 0:
            raise NonZeroAtBase("a Lipschitz function must vanish at the base point")
        object.__setattr__(self, "values", vals)

    def __eq__(self, other):
        if not isinstance(other, LipschitzFunction):
            return NotImplemented
        return same_space(self.space, other.space) and self.values == other.values

    __hash__ = None

    def __call__(self, x: int) -> Fraction:
        return self.values[x]

    def to_json(self) -> dict:
        return {"values": [format_rational(v) for v in self.values]}

    @classmethod
    def from_json(cls, space: FiniteMetricSpace, obj: dict) -> "LipschitzFunction":
        try:
            raw = obj["values"]
        except (KeyError, TypeError):
            raise ValueError("malformed function JSON: missing 'values'") from None
        return cls(space, tuple(parse_rational(v) for v in raw))


def from_weights(space: FiniteMetricSpace, raw) -> FreeElement:
    """Canonicalize a mapping (or iterable of pairs) point -> coefficient.

    Repeated keys are summed, zero sums and the base point are dropped.
    """
    items = raw.items() if isinstance(raw, Mapping) else raw
    acc: dict[int, Fraction] = {}
    for k, v in items:
        space.check_point(k)
        acc[k] = acc.get(k, Fraction(0)) + Fraction(v)
    return FreeElement(space, {k: v for k, v in acc.items() if v != 0 and k != space.base})


def zero(space: FiniteMetricSpace) -> FreeElement:
    return FreeElement(space, {})


def delta(space: FiniteMetricSpace, x: int) -> FreeElement:
    """The evaluation functional at ``x`` (zero at the base point)."""
    return from_weights(space, {x: 1})


def molecule(space: FiniteMetricSpace, p: int, q: int) -> FreeElement:
    """The normalized difference (delta(p) - delta(q)) / d(p, q)."""
    space.check_point(p)
    space.check_point(q)
    if p == q:
        raise DegeneratePair(f"molecule needs distinct points, got ({p}, {q})")
    c = 1 / space.d(p, q)
    return from_weights(space, [(p, c), (q, -c)])


def support(m: FreeElement) -> frozenset:
    return frozenset(m.weights)


def add(m1: FreeElement, m2: FreeElement) -> FreeElement:
    _require_same(m1.space, m2.space)
    out = dict(m1.weights)
    for k, v in m2.weights.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return FreeElement(m1.space, out)


def scale(c, m: FreeElement) -> FreeElement:
    c = Fraction(c)
    if c == 0:
        return zero(m.space)
    return FreeElement(m.space, {k: c * v for k, v in m.weights.items()})


def pair(f: LipschitzFunction, m: FreeElement) -> Fraction:
    """The duality pairing <f, m> = sum of m's coefficients times f's values."""
    _require_same(f.space, m.space)
    return sum((v * f.values[k] for k, v in m.weights.items()), Fraction(0))


def lip_norm(f: LipschitzFunction) -> Fraction:
    """Lipschitz constant: the largest |f(x) - f(y)| / d(x, y) over distinct pairs."""
    sp, vals = f.space, f.values
    n = sp.n
    best = Fraction(0)
    for x in range(n):
        for y in range(x + 1, n):
            q = abs(vals[x] - vals[y]) / sp.dist[x][y]
            if q > best:
                best = q
    return best
