import json
from fractions import Fraction

import pytest
from hypothesis import given, settings

from lipfree.errors import (
    AsymmetricDistance,
    DimensionMismatch,
    NonPositiveDistance,
    NonZeroDiagonal,
    TriangleViolation,
)
from lipfree.metric_space import (
    FiniteMetricSpace,
    build,
    chain_space,
    random_space,
    shortest_path_closure,
)

from conftest import spaces


def assert_metric(sp):
    n = sp.n
    d = sp.dist
    assert n >= 2
    for i in range(n):
        assert d[i][i] == 0
        for j in range(n):
            assert d[i][j] == d[j][i]
            if i != j:
                assert d[i][j] > 0
            for k in range(n):
                assert d[i][k] <= d[i][j] + d[j][k]


def test_line_space_is_valid(line4):
    assert line4.points == ("0", "1", "2", "3")
    assert line4.d(0, 3) == 3
    assert line4.base == 0
    assert_metric(line4)


def test_two_point_space(two_points):
    assert two_points.n == 2
    assert two_points.d(0, 1) == 1


def test_triangle_violation_reports_triple():
    with pytest.raises(TriangleViolation) as exc:
        build(["0", "1", "2"], [[0, 1, 5], [1, 0, 1], [5, 1, 0]], 0)
    e = exc.value
    assert (e.i, e.j, e.k) == (0, 1, 2)


@pytest.mark.parametrize(
    "dist, err",
    [
        ([[0, 1], [2, 0]], AsymmetricDistance),
        ([[0, 0], [0, 0]], NonPositiveDistance),
        ([[0, -1], [-1, 0]], NonPositiveDistance),
        ([[1, 1], [1, 0]], NonZeroDiagonal),
        ([[0, 1, 1], [1, 0, 1]], DimensionMismatch),
    ],
)
def test_invalid_matrices(dist, err):
    with pytest.raises(err):
        build(["a", "b"], dist, 0)


def test_dimension_errors():
    with pytest.raises(DimensionMismatch):
        build(["a"], [[0]], 0)
    with pytest.raises(DimensionMismatch):
        build(["a", "b"], [[0, 1], [1, 0]], 2)
    with pytest.raises(DimensionMismatch):
        build(["a", "a"], [[0, 1], [1, 0]], 0)


def test_chain_space():
    c1 = chain_space(1)
    assert c1.points == ("0", "1") and c1.d(0, 1) == 1
    c4 = chain_space(4)
    assert c4.n == 5
    assert c4.d(c4.index("1/4"), c4.index("3/4")) == Fraction(1, 2)
    assert c4.base == c4.index("0")


def test_random_space_deterministic():
    assert random_space(5, 1) == random_space(5, 1)
    assert random_space(2, 99).n == 2


def test_random_spaces_always_valid():
    for k in range(1, 101):
        assert_metric(random_space(7, k))


def test_random_space_scale():
    a = random_space(4, 3)
    b = random_space(4, 3, scale=Fraction(1, 2))
    assert all(b.d(i, j) == a.d(i, j) / 2 for i in range(4) for j in range(4))


@settings(max_examples=50, deadline=None)
@given(spaces(2, 7))
def test_closure_idempotent_on_metrics(sp):
    assert shortest_path_closure(sp.dist) == [list(r) for r in sp.dist]


def test_json_round_trip():
    sp = random_space(6, 11, scale=Fraction(2, 3))
    text = json.dumps(sp.to_json())
    assert FiniteMetricSpace.from_json(json.loads(text)) == sp


def test_json_accepts_integer_strings_and_ints():
    sp = FiniteMetricSpace.from_json({"points": ["x", "y"], "base": 1, "dist": [["0", 3], ["3", "0"]]})
    assert sp.d(0, 1) == 3 and sp.base == 1


def test_json_rejects_floats():
    with pytest.raises(ValueError):
        FiniteMetricSpace.from_json({"points": ["x", "y"], "dist": [[0, 0.5], [0.5, 0]]})


def test_subspace_keeps_order_and_base(line4):
    sub, keep = line4.subspace({3, 1})
    assert keep == [0, 1, 3]
    assert sub.points == ("0", "1", "3")
    assert sub.d(1, 2) == 2
