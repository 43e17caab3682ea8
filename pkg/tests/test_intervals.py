from itertools import product

import pytest

from posetrank.core.intervals import (
    IntInterval,
    MalformedInterval,
    RelationClass,
    abs_interval,
    add,
    classify,
    contains_point,
    format_midpoint,
    leq_strong,
    leq_weak,
    lt_strong,
    lt_weak,
    make_interval,
    midpoint_doubled,
    points,
    proper_subset,
    separation,
    subset_of,
    subtract,
    width,
)

ALL_INTERVALS = [IntInterval(lo, hi) for lo in range(-5, 6) for hi in range(lo, 6)]


def _hull(values) -> IntInterval:
    return IntInterval(min(values), max(values))


def test_make_interval():
    assert make_interval(1, 3) == IntInterval(1, 3)
    assert make_interval(2, 2).is_point
    with pytest.raises(MalformedInterval):
        make_interval(3, 1)


@pytest.mark.parametrize("x, expected", [((1, 3), 2), ((2, 2), 0), ((0, 4), 4)])
def test_width(x, expected):
    assert width(IntInterval(*x)) == expected


@pytest.mark.parametrize(
    "x, doubled, rendered", [((1, 2), 3, "1.5"), ((2, 2), 4, "2.0"), ((0, 0), 0, "0.0"), ((-1, 0), -1, "-0.5")]
)
def test_midpoint(x, doubled, rendered):
    assert midpoint_doubled(IntInterval(*x)) == doubled
    assert format_midpoint(doubled) == rendered


def test_arithmetic_examples():
    assert add(IntInterval(1, 2), IntInterval(2, 3)) == IntInterval(3, 5)
    assert IntInterval(0, 0) + IntInterval(4, 7) == IntInterval(4, 7)
    assert add(IntInterval(-1, 2), IntInterval(-3, 0)) == IntInterval(-4, 2)
    assert subtract(IntInterval(1, 3), IntInterval(1, 2)) == IntInterval(-1, 2)
    assert IntInterval(1, 1) - IntInterval(0, 0) == IntInterval(1, 1)
    assert subtract(IntInterval(5, 5), IntInterval(5, 5)) == IntInterval(0, 0)
    assert abs_interval(IntInterval(-1, 2)) == IntInterval(0, 2)
    assert abs(IntInterval(-3, -1)) == IntInterval(1, 3)
    assert abs_interval(IntInterval(0, 0)) == IntInterval(0, 0)


def test_separation_examples():
    assert separation(IntInterval(1, 2), IntInterval(2, 3)) == IntInterval(0, 2)
    assert separation(IntInterval(2, 2), IntInterval(3, 3)) == IntInterval(1, 1)
    assert separation(IntInterval(1, 3), IntInterval(1, 3)) == IntInterval(0, 2)


def test_order_examples():
    assert leq_strong(IntInterval(0, 0), IntInterval(1, 1))
    assert not leq_strong(IntInterval(1, 2), IntInterval(2, 3))
    assert leq_strong(IntInterval(1, 2), IntInterval(1, 2))
    assert leq_weak(IntInterval(1, 2), IntInterval(2, 3))
    assert not leq_weak(IntInterval(1, 3), IntInterval(2, 2))
    assert leq_weak(IntInterval(0, 0), IntInterval(0, 0))
    assert subset_of(IntInterval(1, 1), IntInterval(1, 2))
    assert subset_of(IntInterval(1, 2), IntInterval(1, 3))
    assert not subset_of(IntInterval(0, 3), IntInterval(1, 2))


def test_strict_parts_exclude_equality():
    x = IntInterval(1, 2)
    assert not lt_weak(x, x)
    assert not lt_strong(x, x)
    assert not proper_subset(x, x)
    assert lt_weak(x, IntInterval(1, 3))
    assert proper_subset(x, IntInterval(1, 3))


@pytest.mark.parametrize(
    "x, y, expected",
    [
        ((1, 1), (1, 2), RelationClass.SUBSET),
        ((1, 2), (2, 2), RelationClass.SUPERSET),
        ((1, 2), (2, 3), RelationClass.PROPER_LEFT),
        ((2, 3), (1, 2), RelationClass.PROPER_RIGHT),
        ((0, 0), (1, 3), RelationClass.STRONG_LT),
        ((4, 4), (1, 3), RelationClass.STRONG_GT),
        ((2, 3), (2, 3), RelationClass.EQUAL),
    ],
)
def test_classify_examples(x, y, expected):
    assert classify(IntInterval(*x), IntInterval(*y)) is expected


def test_relation_symbols():
    assert [r.symbol for r in RelationClass] == ["=", "<_S", ">_S", "⊂", "⊃", "∘≤", "∘≥"]


def test_points_and_membership():
    x = IntInterval(-1, 2)
    assert points(x) == [-1, 0, 1, 2]
    assert contains_point(x, 0)
    assert not contains_point(x, 3)


def test_arithmetic_matches_setwise_oracle():
    for x in ALL_INTERVALS:
        magnitudes = {abs(z) for z in points(x)}
        assert abs_interval(x) == _hull(magnitudes)
        assert set(points(abs_interval(x))) == magnitudes
        assert (abs_interval(x).lo == 0) == contains_point(x, 0)
        for y in ALL_INTERVALS:
            pairs = list(product(points(x), points(y)))
            assert add(x, y) == _hull([p + q for p, q in pairs])
            assert subtract(x, y) == _hull([p - q for p, q in pairs])
            assert separation(x, y) == _hull([abs(p - q) for p, q in pairs])
            assert separation(x, y) == separation(y, x)


def test_strong_order_implies_weak_order():
    for x, y in product(ALL_INTERVALS, repeat=2):
        if leq_strong(x, y) and x != y:
            assert leq_weak(x, y)


def test_classify_generic_endpoint_orders():
    for x, y in product(ALL_INTERVALS, repeat=2):
        endpoints = [x.lo, x.hi, y.lo, y.hi]
        if x.is_point or y.is_point or len(set(endpoints)) < 4:
            continue
        relation = classify(x, y)
        if x.hi < y.lo:
            assert relation is RelationClass.STRONG_LT
        elif y.hi < x.lo:
            assert relation is RelationClass.STRONG_GT
        elif y.lo < x.lo and x.hi < y.hi:
            assert relation is RelationClass.SUBSET
            assert not leq_weak(x, y) and not leq_weak(y, x)
        elif x.lo < y.lo and y.hi < x.hi:
            assert relation is RelationClass.SUPERSET
        elif x.lo < y.lo < x.hi < y.hi:
            assert relation is RelationClass.PROPER_LEFT
        else:
            assert y.lo < x.lo < y.hi < x.hi
            assert relation is RelationClass.PROPER_RIGHT


def test_classify_is_antisymmetric():
    for x, y in product(ALL_INTERVALS, repeat=2):
        assert classify(y, x) is classify(x, y).dual
