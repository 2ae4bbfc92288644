"""Exact free-space norm via primal network simplex over rationals.

The norm of ``m`` is the cost of the cheapest flow on the complete
directed graph over the points, with arc costs given by the metric, whose
divergence at each non-base point equals the coefficient of ``m`` there.
The base point absorbs the imbalance. Node potentials of an optimal tree
basis give a norming 1-Lipschitz function.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import SpaceMismatch
from .free_element import FreeElement, LipschitzFunction, from_weights, lip_norm, pair, same_space
from .rational import format_rational


@dataclass(frozen=True, eq=False)
class NormSolution:
    """Primal flow and dual witness certifying ``value`` as the norm."""

    value: Fraction
    flow: dict  # (x, y) -> positive Fraction
    witness: LipschitzFunction

    def to_json(self) -> dict:
        pts = self.witness.space.points
        return {
            "value": format_rational(self.value),
            "flow": {
                f"{pts[x]}->{pts[y]}": format_rational(a) for (x, y), a in sorted(self.flow.items())
            },
            "witness": self.witness.to_json(),
        }


class _NetworkSimplex:
    def __init__(self, space, supply):
        self.space = space
        self.n = space.n
        self.arcs = space.ordered_pairs()
        self.arc_id = {a: i for i, a in enumerate(self.arcs)}
        self.supply = supply
        self.pivots = 0

    def _initial_tree(self):
        base = self.space.base
        flow = {}
        for x in range(self.n):
            if x == base:
                continue
            b = self.supply[x]
            if b >= 0:
                flow[self.arc_id[(x, base)]] = b
            else:
                flow[self.arc_id[(base, x)]] = -b
        return flow

    def _potentials(self, tree):
        d = self.space.dist
        adj = [[] for _ in range(self.n)]
        for a in tree:
            u, v = self.arcs[a]
            adj[u].append((v, a))
            adj[v].append((u, a))
        pot = [None] * self.n
        base = self.space.base
        pot[base] = Fraction(0)
        queue = deque([base])
        while queue:
            a = queue.popleft()
            for b, arc in adj[a]:
                if pot[b] is not None:
                    continue
                u, v = self.arcs[arc]
                # tight arc: pot[u] - pot[v] = d(u, v)
                pot[b] = pot[a] - d[u][v] if u == a else pot[a] + d[u][v]
                queue.append(b)
        return pot, adj

    def _tree_path(self, adj, src, dst):
        """Arcs on the tree path src -> dst, each tagged True if traversed forward."""
        parent = {src: None}
        queue = deque([src])
        while queue:
            a = queue.popleft()
            if a == dst:
                break
            for b, arc in adj[a]:
                if b not in parent:
                    parent[b] = (a, arc)
                    queue.append(b)
        path = []
        node = dst
        while parent[node] is not None:
            prev, arc = parent[node]
            path.append((arc, self.arcs[arc] == (prev, node)))
            node = prev
        path.reverse()
        return path

    def solve(self):
        d = self.space.dist
        flow = self._initial_tree()
        while True:
            pot, adj = self._potentials(flow)
            entering = None
            # Bland: lowest-index arc with negative reduced cost
            for i, (u, v) in enumerate(self.arcs):
                if i in flow:
                    continue
                if d[u][v] - (pot[u] - pot[v]) < 0:
                    entering = i
                    break
            if entering is None:
                return flow, pot
            u, v = self.arcs[entering]
            cycle = self._tree_path(adj, v, u)
            backward = [arc for arc, fwd in cycle if not fwd]
            assert backward, "negative cycle on positive costs"
            theta = min(flow[arc] for arc in backward)
            leaving = min(arc for arc in backward if flow[arc] == theta)
            for arc, fwd in cycle:
                flow[arc] += theta if fwd else -theta
            del flow[leaving]
            flow[entering] = theta
            self.pivots += 1


def free_norm(m: FreeElement) -> NormSolution:
    """Compute the norm of ``m`` together with an optimal flow and norming function."""
    space = m.space
    if m.is_zero():
        return NormSolution(Fraction(0), {}, LipschitzFunction(space, (0,) * space.n))
    supply = [m.coefficient(x) for x in range(space.n)]
    supply[space.base] = -sum(m.weights.values(), Fraction(0))
    solver = _NetworkSimplex(space, supply)
    tree_flow, pot = solver.solve()
    flow = {solver.arcs[a]: f for a, f in tree_flow.items() if f > 0}
    value = sum((f * space.dist[x][y] for (x, y), f in flow.items()), Fraction(0))
    return NormSolution(value, dict(sorted(flow.items())), LipschitzFunction(space, pot))


def flow_divergence(space, flow) -> FreeElement:
    """The element sum of a_xy (delta(x) - delta(y)) carried by a flow."""
    terms = []
    for (x, y), a in flow.items():
        terms.append((x, a))
        terms.append((y, -a))
    return from_weights(space, terms)


def verify_solution(m: FreeElement, s: NormSolution) -> bool:
    """Check a NormSolution against ``m`` without trusting the solver.

    Verifies cost, divergence, dual feasibility with equal objective, and
    complementary slackness, all exactly.
    """
    space = m.space
    if not same_space(space, s.witness.space):
        raise SpaceMismatch("solution and element live on different spaces")
    d = space.dist
    f = s.witness.values
    for (x, y), a in s.flow.items():
        if x == y or not (0 <= x < space.n and 0 <= y < space.n) or a <= 0:
            return False
    if s.value != sum((a * d[x][y] for (x, y), a in s.flow.items()), Fraction(0)):
        return False
    if flow_divergence(space, s.flow) != m:
        return False
    if lip_norm(s.witness) > 1 or pair(s.witness, m) != s.value:
        return False
    return all(f[x] - f[y] == d[x][y] for (x, y) in s.flow)
