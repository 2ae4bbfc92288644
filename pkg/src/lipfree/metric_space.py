"""Finite pointed metric spaces with exact rational distances."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    AsymmetricDistance,
    DimensionMismatch,
    NonPositiveDistance,
    NonZeroDiagonal,
    TriangleViolation,
    UnknownPoint,
)
from .rational import format_rational, parse_rational


@dataclass(frozen=True)
class FiniteMetricSpace:
    """A validated finite metric space with a distinguished base point.

    Points are addressed by their index into ``points``; labels are only
    used for I/O. Instances are validated on construction and never
    mutated afterwards.
    """

    points: tuple[str, ...]
    dist: tuple[tuple[Fraction, ...], ...]
    base: int = 0

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(str(p) for p in self.points))
        object.__setattr__(
            self, "dist", tuple(tuple(Fraction(v) for v in row) for row in self.dist)
        )
        _validate(self.points, self.dist, self.base)

    def __len__(self):
        return len(self.points)

    @property
    def n(self) -> int:
        return len(self.points)

    def d(self, i: int, j: int) -> Fraction:
        return self.dist[i][j]

    def index(self, label) -> int:
        """Index of the point with the given label."""
        try:
            return self.points.index(str(label))
        except ValueError:
            raise UnknownPoint(f"no point labelled {label!r}") from None

    def check_point(self, i) -> int:
        if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < self.n:
            raise UnknownPoint(f"not a point index: {i!r}")
        return i

    def ordered_pairs(self):
        """All (x, y) with x != y, lexicographic in point order."""
        n = self.n
        return [(x, y) for x in range(n) for y in range(n) if x != y]

    def subspace(self, indices) -> tuple["FiniteMetricSpace", list[int]]:
        """Restrict to ``indices`` plus the base point.

        Returns the subspace and the list mapping subspace indices back to
        indices of ``self``. Point order is preserved.
        """
        keep = sorted(set(indices) | {self.base})
        sub = FiniteMetricSpace(
            points=[self.points[i] for i in keep],
            dist=[[self.dist[i][j] for j in keep] for i in keep],
            base=keep.index(self.base),
        )
        return sub, keep

    def to_json(self) -> dict:
        return {
            "points": list(self.points),
            "base": self.base,
            "dist": [[format_rational(v) for v in row] for row in self.dist],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "FiniteMetricSpace":
        try:
            points = obj["points"]
            dist = obj["dist"]
            base = obj.get("base", 0)
        except (KeyError, AttributeError, TypeError) as exc:
            raise ValueError(f"malformed space JSON: {exc}") from None
        if not isinstance(points, list) or not isinstance(dist, list):
            raise ValueError("malformed space JSON: points and dist must be lists")
        if not all(isinstance(row, list) for row in dist):
            raise ValueError("malformed space JSON: dist must be a list of lists")
        return build(points, [[parse_rational(v) for v in row] for row in dist], base)


def _validate(points, dist, base):
    n = len(points)
    if n < 2:
        raise DimensionMismatch("a space needs at least two points")
    if len(set(points)) != n:
        raise DimensionMismatch("point labels must be distinct")
    if len(dist) != n or any(len(row) != n for row in dist):
        raise DimensionMismatch(f"distance matrix must be {n}x{n}")
    if not isinstance(base, int) or isinstance(base, bool) or not 0 <= base < n:
        raise DimensionMismatch(f"base index {base!r} out of range")
    for i in range(n):
        if dist[i][i] != 0:
            raise NonZeroDiagonal(i)
        for j in range(i + 1, n):
            if dist[i][j] != dist[j][i]:
                raise AsymmetricDistance(i, j)
            if dist[i][j] <= 0:
                raise NonPositiveDistance(i, j)
    # exact check on the matrix scaled to integers by the common denominator
    lcd = math.lcm(*(v.denominator for row in dist for v in row))
    ints = [[v.numerator * (lcd // v.denominator) for v in row] for row in dist]
    for i in range(n):
        row_i = ints[i]
        for j in range(n):
            dij = row_i[j]
            row_j = ints[j]
            if any(a > dij + b for a, b in zip(row_i, row_j)):
                # report (i, j, k) with d(i,k) > d(i,j) + d(j,k), smallest k
                k = next(k for k in range(n) if row_i[k] > dij + row_j[k])
                raise TriangleViolation(i, j, k)


def build(points: Sequence, dist: Sequence[Sequence], base: int = 0) -> FiniteMetricSpace:
    """Validate and construct a space; raises on the first broken axiom."""
    return FiniteMetricSpace(points=tuple(points), dist=tuple(map(tuple, dist)), base=base)


def line_space(coords: Sequence, base: int = 0) -> FiniteMetricSpace:
    """Points of the real line with the absolute-value metric, labelled by coordinate."""
    xs = [Fraction(c) for c in coords]
    return build([format_rational(x) for x in xs], [[abs(a - b) for b in xs] for a in xs], base)


def chain_space(n: int) -> FiniteMetricSpace:
    """The uniform grid {0, 1/n, ..., 1} on the line, based at 0."""
    if n < 1:
        raise ValueError("n must be positive")
    return line_space([Fraction(k, n) for k in range(n + 1)])


def shortest_path_closure(dist: Sequence[Sequence]) -> list[list[Fraction]]:
    """Floyd-Warshall closure; the largest metric below a symmetric positive matrix."""
    n = len(dist)
    out = [[Fraction(v) for v in row] for row in dist]
    for k in range(n):
        row_k = out[k]
        for i in range(n):
            row_i = out[i]
            dik = row_i[k]
            for j in range(n):
                via = dik + row_k[j]
                if via < row_i[j]:
                    row_i[j] = via
    return out


def random_space(n: int, seed: int, scale=1) -> FiniteMetricSpace:
    """Deterministic random space on ``n`` points labelled "0".."n-1", based at "0".

    The generator picks one of three families: points on a line (many
    collinear triples), points of the integer plane under the L1 metric,
    or a random symmetric matrix repaired by shortest-path closure.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    scale = Fraction(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")
    rng = random.Random(f"lipfree:{n}:{seed}")
    kind = rng.choice(("line", "plane", "matrix"))
    if kind == "line":
        xs = rng.sample(range(3 * n), n)
        dist = [[abs(a - b) * scale for b in xs] for a in xs]
    elif kind == "plane":
        side = max(2, n)
        cells = rng.sample([(a, b) for a in range(side) for b in range(side)], n)
        dist = [[(abs(p[0] - q[0]) + abs(p[1] - q[1])) * scale for q in cells] for p in cells]
    else:
        dist = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = Fraction(rng.randint(1, 12), rng.randint(1, 3)) * scale
                dist[i][j] = dist[j][i] = v
        dist = shortest_path_closure(dist)
    return build([str(i) for i in range(n)], dist, 0)
