"""Morphism dimensions, extension cases, sweeps and factorization."""

import pytest
from hypothesis import given, settings

from conftest import all_window_arcs, surface_and_arcs
from infgon.arcs import Arc, ArcClass, canonical_lift, parse_arc, shift_arc
from infgon.homs import (
    ExtCase,
    exchange_triangles,
    ext_ambient_dim,
    ext_case,
    ext_dim,
    factors_over,
    hom_dim,
    sweep_contains,
    sweep_intervals,
)
from infgon.surface import Point, Surface

C1 = Surface(True, 1)
C2 = Surface(True, 2)
U1 = Surface(False, 1)
U2 = Surface(False, 2)
U4 = Surface(False, 4)


def test_hom_uncompleted_examples():
    g = parse_arc(U1, "1:0-1:5")
    assert hom_dim(g, g) == 1  # identity
    assert hom_dim(g, parse_arc(U1, "1:2-1:7")) == 1
    assert hom_dim(parse_arc(U1, "1:0-1:3"), parse_arc(U1, "1:10-1:13")) == 0


def test_ext_case_examples():
    assert ext_case(parse_arc(C2, "1:0-a1"), parse_arc(C2, "a1-2:5")) is ExtCase.CLOCKWISE_AT_ACCUMULATION
    assert ext_case(parse_arc(C2, "a1-2:5"), parse_arc(C2, "1:0-a1")) is ExtCase.NONE
    both = parse_arc(C2, "a1-a2")
    assert ext_case(both, both) is ExtCase.DOUBLE_ACCUMULATION_SELF
    assert ext_case(parse_arc(C2, "1:0-2:0"), parse_arc(C2, "1:1-2:1")) is ExtCase.CROSSING


def test_hom_completed_examples():
    g = parse_arc(C1, "1:0-a1")
    assert hom_dim(g, g) == 1
    assert hom_dim(g, shift_arc(g, 1)) == 0
    both = parse_arc(C2, "a1-a2")
    assert hom_dim(both, both) == 1  # the shift fixes this arc


def test_ext_examples():
    assert ext_dim(parse_arc(C2, "1:0-2:0"), parse_arc(C2, "1:1-2:1")) == 1
    both = parse_arc(C2, "a1-a2")
    assert ext_dim(both, both) == 0
    assert hom_dim(both, shift_arc(both, 1)) == 1  # ambient space does not vanish
    assert ext_dim(parse_arc(C2, "1:0-a1"), parse_arc(C2, "a1-2:5")) == 0


def test_sweep_examples():
    def pairs(sweep):
        return sorted(((i.start, i.end) for i in sweep), key=lambda t: t[0].circuit_key())

    g, d = parse_arc(U1, "1:0-1:5"), parse_arc(U1, "1:2-1:7")
    assert pairs(sweep_intervals(g, d)) == [
        (U1.point(1, 2), U1.point(1, 5)),
        (U1.point(1, 7), U1.point(1, 0)),
    ]
    g, d = parse_arc(U1, "1:0-1:5"), parse_arc(U1, "1:0-1:3")
    assert pairs(sweep_intervals(g, d)) == [
        (U1.point(1, 0), U1.point(1, 0)),
        (U1.point(1, 3), U1.point(1, 5)),
    ]
    g = parse_arc(U1, "1:0-1:5")
    assert pairs(sweep_intervals(g, g)) == [
        (U1.point(1, 0), U1.point(1, 0)),
        (U1.point(1, 5), U1.point(1, 5)),
    ]
    with pytest.raises(ValueError):
        sweep_intervals(parse_arc(U1, "1:0-1:3"), parse_arc(U1, "1:10-1:13"))


def test_factors_over_examples():
    assert factors_over(parse_arc(U1, "1:0-1:5"), parse_arc(U1, "1:2-1:7"))
    assert not factors_over(
        parse_arc(U4, "1:0-3:0"), parse_arc(U4, "1:2-3:2"), ArcClass.COLLAPSING
    )
    # the swept intervals meet the odd interval on both sides here, so a
    # persistent arc (for instance 1:0-1:2) does factor this map
    assert factors_over(
        parse_arc(U2, "1:0-2:4"), parse_arc(U2, "1:2-2:6"), ArcClass.PERSISTENT
    )


def test_sweep_membership_gives_nonzero_composites():
    g, d = parse_arc(U1, "1:0-1:6"), parse_arc(U1, "1:2-1:9")
    sweep = sweep_intervals(g, d)
    for alpha in all_window_arcs(U1, 11):
        if sweep_contains(sweep, alpha):
            assert hom_dim(g, alpha) == 1, alpha
            assert hom_dim(alpha, d) == 1, alpha


@given(surface_and_arcs(2, completed_only=True))
@settings(max_examples=150)
def test_clockwise_case_holds_for_at_most_one_ordering(data):
    _, (g, d) = data
    forward = ext_case(g, d) is ExtCase.CLOCKWISE_AT_ACCUMULATION
    backward = ext_case(d, g) is ExtCase.CLOCKWISE_AT_ACCUMULATION
    assert not (forward and backward)


@given(surface_and_arcs(2, completed_only=True))
@settings(max_examples=150)
def test_restricted_ext_below_ambient_and_symmetric(data):
    _, (g, d) = data
    assert ext_dim(g, d) <= ext_ambient_dim(g, d)
    assert ext_dim(g, d) == ext_dim(d, g)


@given(surface_and_arcs(2))
@settings(max_examples=100)
def test_hom_is_shift_equivariant(data):
    _, (g, d) = data
    assert hom_dim(g, d) == hom_dim(shift_arc(g, 1), shift_arc(d, 1))


@given(surface_and_arcs(2, completed_only=True))
@settings(max_examples=150)
def test_persistent_restriction_matches_lifts(data):
    # arcs avoiding the accumulation points have their morphisms computed
    # upstairs between the canonical lifts
    _, (g, d) = data
    if any(p.pos is None for p in (*g.endpoints, *d.endpoints)):
        return
    assert hom_dim(g, d) == hom_dim(canonical_lift(g), canonical_lift(d))


def test_exchange_triangles_quadrilateral():
    g, gp = parse_arc(U1, "1:0-1:4"), parse_arc(U1, "1:2-1:6")
    sides = exchange_triangles(g, gp)
    got = {None if s is None else s for s in sides.all_sides()}
    assert got == {
        parse_arc(U1, "1:0-1:6"),
        parse_arc(U1, "1:2-1:4"),
        parse_arc(U1, "1:0-1:2"),
        parse_arc(U1, "1:4-1:6"),
    }
    # alpha sides pair each endpoint of g with its clockwise neighbour in gp
    assert set(sides.alpha) == {parse_arc(U1, "1:0-1:6"), parse_arc(U1, "1:2-1:4")}


def test_exchange_triangles_boundary_sides():
    sides = exchange_triangles(parse_arc(U1, "1:0-1:2"), parse_arc(U1, "1:1-1:3"))
    assert None in sides.all_sides()
    arcs = [s for s in sides.all_sides() if s is not None]
    assert parse_arc(U1, "1:0-1:3") in arcs


def test_exchange_triangles_adjacent_corner_sides_are_boundary():
    # consecutive corners in different intervals of a completed surface give
    # two genuine arcs and two boundary segments
    sides = exchange_triangles(parse_arc(C2, "1:0-2:0"), parse_arc(C2, "1:1-2:1"))
    arcs = {s for s in sides.all_sides() if s is not None}
    assert arcs == {parse_arc(C2, "1:1-2:0"), parse_arc(C2, "2:1-1:0")}
    assert sides.all_sides().count(None) == 2


@given(surface_and_arcs(2))
@settings(max_examples=150)
def test_exchange_sides_never_cross_the_diagonals(data):
    from infgon.arcs import cross_transverse

    _, (g, d) = data
    if not cross_transverse(g, d):
        return
    for s in exchange_triangles(g, d).all_sides():
        if s is not None:
            assert not cross_transverse(s, g)
            assert not cross_transverse(s, d)
