"""Extreme points of the free-space unit ball over a finite space.

Two independent routes are provided. The metric criterion says the
molecule of (p, q) is extreme exactly when no third point lies metrically
between p and q. The vertex oracle instead asks an exact LP whether the
element is a convex combination of the other signed molecules. ``localize``
replays the support-shrinking argument on an explicit representing measure.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .deleeuw import (
    DeLeeuwMeasure,
    adjoint,
    minimal_representation,
    scale as scale_measure,
    shadow,
    weighted_restriction,
)
from .errors import DegeneratePair, NotUnitNorm
from .free_element import FreeElement, molecule
from .kr_solver import free_norm
from .lp import find_feasible
from .metric_space import FiniteMetricSpace
from .rational import format_rational

#: exposed constant of a molecule on a two-point space (empty minimum)
UNBOUNDED = math.inf


class Verdict(str, enum.Enum):
    EXTREME = "Extreme"
    NOT_EXTREME = "NotExtreme"
    NOT_A_MOLECULE = "NotAMolecule"


@dataclass(frozen=True)
class ExtremalityCertificate:
    verdict: Verdict
    pair: Optional[tuple] = None
    violating_point: Optional[int] = None
    exposed_constant: Optional[object] = None  # Fraction or UNBOUNDED
    localized: Optional[DeLeeuwMeasure] = None

    def __post_init__(self):
        if self.verdict is Verdict.EXTREME:
            if self.pair is None or self.violating_point is not None:
                raise ValueError("an Extreme certificate needs a pair and no violating point")
            if self.exposed_constant is None or not self.exposed_constant > 0:
                raise ValueError("an Extreme certificate needs a positive exposed constant")
        if self.verdict is Verdict.NOT_EXTREME and self.pair is not None:
            if self.violating_point is None:
                raise ValueError("a NotExtreme verdict on a pair needs a violating point")

    @property
    def is_extreme(self) -> bool:
        return self.verdict is Verdict.EXTREME

    def to_json(self, space: FiniteMetricSpace) -> dict:
        pts = space.points
        c = self.exposed_constant
        return {
            "verdict": self.verdict.value,
            "pair": None if self.pair is None else [pts[i] for i in self.pair],
            "violating_point": None if self.violating_point is None else pts[self.violating_point],
            "exposed_constant": (
                None if c is None else "unbounded" if c == UNBOUNDED else format_rational(c)
            ),
            "localized": None if self.localized is None else self.localized.to_json(),
        }


def _check_pair(space, p, q):
    space.check_point(p)
    space.check_point(q)
    if p == q:
        raise DegeneratePair(f"need distinct points, got ({p}, {q})")


def _exposure_ratios(space, p, q):
    d = space.dist
    for x in range(space.n):
        if x in (p, q):
            continue
        yield x, (d[p][x] + d[q][x] - d[p][q]) / min(d[p][x], d[q][x])


def strongly_exposed_constant(space: FiniteMetricSpace, p: int, q: int):
    """Largest C with d(p,x) + d(q,x) - d(p,q) >= C min(d(p,x), d(q,x)) for all x.

    Returns None when some x makes the left side vanish, and UNBOUNDED when
    the space has no point besides p and q.
    """
    _check_pair(space, p, q)
    best = UNBOUNDED
    for _, r in _exposure_ratios(space, p, q):
        if r == 0:
            return None
        best = r if best == UNBOUNDED else min(best, r)
    return best


def is_extreme_molecule(space: FiniteMetricSpace, p: int, q: int) -> ExtremalityCertificate:
    _check_pair(space, p, q)
    best = UNBOUNDED
    for x, r in _exposure_ratios(space, p, q):
        if r == 0:
            return ExtremalityCertificate(Verdict.NOT_EXTREME, pair=(p, q), violating_point=x)
        best = r if best == UNBOUNDED else min(best, r)
    return ExtremalityCertificate(Verdict.EXTREME, pair=(p, q), exposed_constant=best)


def enumerate_extreme(space: FiniteMetricSpace) -> list:
    """Unordered pairs (p < q) whose molecules are extreme points of the ball."""
    return [
        (p, q)
        for p in range(space.n)
        for q in range(p + 1, space.n)
        if is_extreme_molecule(space, p, q).is_extreme
    ]


def as_molecule(m: FreeElement) -> Optional[tuple]:
    """The ordered pair (x, y) with m equal to the (x, y) molecule, if any."""
    if not 1 <= len(m.weights) <= 2:
        return None
    space = m.space
    candidates = sorted(set(m.weights) | {space.base})
    for x in candidates:
        for y in candidates:
            if x != y and molecule(space, x, y) == m:
                return (x, y)
    return None


def certify(m: FreeElement) -> ExtremalityCertificate:
    """Metric-criterion verdict for an arbitrary element."""
    mol = as_molecule(m)
    if mol is None:
        return ExtremalityCertificate(Verdict.NOT_A_MOLECULE)
    return is_extreme_molecule(m.space, *mol)


def is_extreme_oracle(m: FreeElement) -> bool:
    """Vertex test of the unit ball by exact LP, independent of the metric criterion.

    The ball is the convex hull of the signed molecules, so ``m`` is a
    vertex iff it is one of them and is not a convex combination of the
    rest.
    """
    if free_norm(m).value != 1:
        return False
    space = m.space
    if as_molecule(m) is None:
        return False
    coords = [x for x in range(space.n) if x != space.base]
    neg = -m
    columns = []
    for x, y in space.ordered_pairs():
        g = molecule(space, x, y)
        if g == m or g == neg:
            continue
        columns.append([g.coefficient(c) for c in coords] + [Fraction(1)])
    if not columns:
        return True
    rows = [[col[i] for col in columns] for i in range(len(coords) + 1)]
    rhs = [m.coefficient(c) for c in coords] + [Fraction(1)]
    return find_feasible(rows, rhs) is None


def bump_weight(space: FiniteMetricSpace, x: int, z: int) -> tuple:
    """Cone weight max(0, 1 - d(w, x) / d(x, z)): 1 at x, 0 at z and beyond."""
    _check_pair(space, x, z)
    r = space.d(x, z)
    return tuple(max(Fraction(0), 1 - space.d(w, x) / r) for w in range(space.n))


def indicator_weight(space: FiniteMetricSpace, x: int, z: int) -> tuple:
    """Indicator of the open ball around x of radius d(x, z) / 2."""
    _check_pair(space, x, z)
    r = space.d(x, z) / 2
    return tuple(Fraction(int(space.d(w, x) < r)) for w in range(space.n))


def _restrict_step(mu, m, h, coordinate):
    lam = weighted_restriction(mu, h, coordinate)
    if lam.is_zero():
        return None
    lam = scale_measure(1 / lam.total_variation, lam)
    if adjoint(lam) != m:
        return None
    return lam


def localize(
    m: FreeElement,
    weight: Callable[[FiniteMetricSpace, int, int], tuple] = bump_weight,
) -> ExtremalityCertificate:
    """Shrink a norm-one positive representation of ``m`` onto a single pair.

    Starting from a minimal representation, repeatedly reweights it by
    functions that keep one atom (x, y) and kill a point z. If ``m`` is
    extreme every reweighted measure still represents ``m`` after
    normalization, so a failure proves ``m`` is not extreme. Survival
    leaves a Dirac mass on (x, y); the metric criterion then decides.
    """
    space = m.space
    if free_norm(m).value != 1:
        raise NotUnitNorm("localize requires an element of norm one")
    mu = minimal_representation(m)
    x, y = min(mu.mass)
    others = [z for z in range(space.n) if z not in (x, y)]
    for anchor, coordinate in ((x, 1), (y, 2)):
        for z in others:
            mu = _restrict_step(mu, m, weight(space, anchor, z), coordinate)
            if mu is None:
                return ExtremalityCertificate(Verdict.NOT_EXTREME)
    assert shadow(mu.mass) <= {x, y}
    assert mu.mass == {(x, y): 1}, mu
    cert = is_extreme_molecule(space, x, y)
    if not cert.is_extreme:
        return cert
    return ExtremalityCertificate(
        Verdict.EXTREME, pair=(x, y), exposed_constant=cert.exposed_constant, localized=mu
    )
