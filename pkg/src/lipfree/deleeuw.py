"""Difference-quotient map, its adjoint on pair measures, and measure calculus.

A measure on the off-diagonal pairs is stored sparsely as a mapping
``(x, y) -> mass``. Every such measure represents an element of the free
space through the adjoint, so ``adjoint`` always returns a FreeElement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotARepresentation, SpaceMismatch, WeightOutOfRange
from .free_element import FreeElement, LipschitzFunction, from_weights, same_space, support
from .kr_solver import NormSolution, free_norm
from .metric_space import FiniteMetricSpace
from .rational import format_rational, parse_rational


@dataclass(frozen=True, eq=False)
class DeLeeuwMeasure:
    space: FiniteMetricSpace
    mass: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "mass", {p: Fraction(v) for p, v in self.mass.items()})
        for (x, y), v in self.mass.items():
            self.space.check_point(x)
            self.space.check_point(y)
            if x == y:
                raise ValueError(f"diagonal pair ({x}, {x}) is not allowed")
            if v == 0:
                raise ValueError("zero masses are not allowed in canonical form")

    def __eq__(self, other):
        if not isinstance(other, DeLeeuwMeasure):
            return NotImplemented
        return same_space(self.space, other.space) and self.mass == other.mass

    __hash__ = None

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __rmul__(self, c):
        return scale(c, self)

    def __repr__(self):
        pts = self.space.points
        terms = ", ".join(f"({pts[x]},{pts[y]}): {v}" for (x, y), v in sorted(self.mass.items()))
        return f"DeLeeuwMeasure({{{terms}}})"

    def is_zero(self) -> bool:
        return not self.mass

    def is_positive(self) -> bool:
        return all(v > 0 for v in self.mass.values())

    @property
    def total_variation(self) -> Fraction:
        return sum((abs(v) for v in self.mass.values()), Fraction(0))

    def support(self) -> frozenset:
        return frozenset(self.mass)

    def to_json(self) -> dict:
        pts = self.space.points
        return {
            "mass": {
                f"{pts[x]}->{pts[y]}": format_rational(v) for (x, y), v in sorted(self.mass.items())
            }
        }

    @classmethod
    def from_json(cls, space: FiniteMetricSpace, obj: dict) -> "DeLeeuwMeasure":
        try:
            raw = obj["mass"]
        except (KeyError, TypeError):
            raise ValueError("malformed measure JSON: missing 'mass'") from None
        terms = []
        for key, v in raw.items():
            a, sep, b = key.partition("->")
            if not sep:
                raise ValueError(f"malformed pair key {key!r}; expected 'x->y'")
            terms.append(((space.index(a), space.index(b)), parse_rational(v)))
        return measure(space, terms)


def measure(space: FiniteMetricSpace, raw) -> DeLeeuwMeasure:
    """Canonicalize pair masses, summing repeated pairs and dropping zeros."""
    items = raw.items() if hasattr(raw, "items") else raw
    acc: dict = {}
    for p, v in items:
        acc[p] = acc.get(p, Fraction(0)) + Fraction(v)
    return DeLeeuwMeasure(space, {p: v for p, v in sorted(acc.items()) if v != 0})


def dirac(space: FiniteMetricSpace, x: int, y: int, mass=1) -> DeLeeuwMeasure:
    return measure(space, [((x, y), mass)])


def add(mu: DeLeeuwMeasure, nu: DeLeeuwMeasure) -> DeLeeuwMeasure:
    if not same_space(mu.space, nu.space):
        raise SpaceMismatch("measures live on different spaces")
    return measure(mu.space, list(mu.mass.items()) + list(nu.mass.items()))


def scale(c, mu: DeLeeuwMeasure) -> DeLeeuwMeasure:
    c = Fraction(c)
    return measure(mu.space, [(p, c * v) for p, v in mu.mass.items()])


def difference_quotients(space: FiniteMetricSpace, values: Sequence) -> dict:
    """(g(x) - g(y)) / d(x, y) on every ordered pair, for any function g."""
    d = space.dist
    return {(x, y): (values[x] - values[y]) / d[x][y] for x, y in space.ordered_pairs()}


def de_leeuw(f: LipschitzFunction) -> dict:
    return difference_quotients(f.space, f.values)


def adjoint(mu: DeLeeuwMeasure) -> FreeElement:
    """The element represented by ``mu``: the sum of mass(x,y) times the (x,y) molecule."""
    d = mu.space.dist
    terms = []
    for (x, y), v in mu.mass.items():
        c = v / d[x][y]
        terms.append((x, c))
        terms.append((y, -c))
    return from_weights(mu.space, terms)


def integrate(f: LipschitzFunction, mu: DeLeeuwMeasure) -> Fraction:
    """Integral of the difference quotients of ``f`` against ``mu``."""
    d, vals = mu.space.dist, f.values
    return sum(
        (v * (vals[x] - vals[y]) / d[x][y] for (x, y), v in mu.mass.items()), Fraction(0)
    )


def reflect(mu: DeLeeuwMeasure) -> DeLeeuwMeasure:
    """Pushforward under the coordinate swap (x, y) -> (y, x)."""
    return measure(mu.space, [((y, x), v) for (x, y), v in mu.mass.items()])


def jordan(mu: DeLeeuwMeasure) -> tuple[DeLeeuwMeasure, DeLeeuwMeasure]:
    pos = {p: v for p, v in mu.mass.items() if v > 0}
    neg = {p: -v for p, v in mu.mass.items() if v < 0}
    return DeLeeuwMeasure(mu.space, pos), DeLeeuwMeasure(mu.space, neg)


def symmetrize(mu: DeLeeuwMeasure) -> DeLeeuwMeasure:
    """Positive measure with the same adjoint: flip negative atoms onto reflected pairs."""
    pos, neg = jordan(mu)
    return add(pos, reflect(neg))


def shadow(pairs: Iterable) -> frozenset:
    """All points appearing as either coordinate of some pair."""
    out = set()
    for x, y in pairs:
        out.add(x)
        out.add(y)
    return frozenset(out)


def minimal_representation(m: FreeElement) -> DeLeeuwMeasure:
    """A positive representing measure of least total variation and minimal shadow.

    Solves the flow problem on the subspace spanned by the support of ``m``
    and the base point, then converts each flow atom a_xy into the mass
    a_xy * d(x, y).
    """
    space = m.space
    if m.is_zero():
        return DeLeeuwMeasure(space, {})
    sub, keep = space.subspace(support(m))
    inv = {orig: i for i, orig in enumerate(keep)}
    sub_m = from_weights(sub, {inv[k]: v for k, v in m.weights.items()})
    sol = free_norm(sub_m)
    return measure(
        space,
        [((keep[x], keep[y]), a * sub.dist[x][y]) for (x, y), a in sol.flow.items()],
    )


def support_inclusion_check(m: FreeElement, mu: DeLeeuwMeasure) -> bool:
    """Whether support(m) lies inside the shadow of mu's support.

    This always holds for a genuine representation; a False return means a bug.
    """
    if adjoint(mu) != m:
        raise NotARepresentation("the measure does not represent the given element")
    return support(m) <= shadow(mu.mass)


def weighted_restriction(mu: DeLeeuwMeasure, h: Sequence, coordinate: int = 1) -> DeLeeuwMeasure:
    """Multiply each atom (x, y) by h(x) (coordinate 1) or h(y) (coordinate 2).

    ``h`` is any [0, 1]-valued function on the points, given as a sequence
    of values; it need not vanish at the base point.
    """
    if coordinate not in (1, 2):
        raise ValueError("coordinate must be 1 or 2")
    if len(h) != mu.space.n:
        raise ValueError(f"weight needs {mu.space.n} values, got {len(h)}")
    h = [Fraction(v) for v in h]
    for i, v in enumerate(h):
        if not 0 <= v <= 1:
            raise WeightOutOfRange(f"h({mu.space.points[i]}) = {v} is outside [0, 1]")
    k = coordinate - 1
    return measure(mu.space, [(p, h[p[k]] * v) for p, v in mu.mass.items()])


def as_norm_solution(mu: DeLeeuwMeasure, witness: LipschitzFunction) -> NormSolution:
    """Re-express a positive measure as a flow a_xy = mass / d(x, y) with a given witness.

    Lets ``verify_solution`` certify hand-written representations.
    """
    d = mu.space.dist
    flow = {(x, y): v / d[x][y] for (x, y), v in mu.mass.items()}
    return NormSolution(mu.total_variation, flow, witness)
