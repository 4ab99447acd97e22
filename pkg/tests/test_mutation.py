"""Frames, approximations, flips and module generators."""

import pytest

from infgon.arcs import Arc, parse_arc, shift_arc
from infgon.homs import ext_dim, hom_dim
from infgon.mutation import (
    UNDEFINED,
    MutabilityError,
    NotFinitelyGenerated,
    approximate,
    flip,
    is_mutable,
    mutability_report,
    quad_frame,
    right_module_generators,
)
from infgon.surface import Surface
from infgon.triangulation import (
    CertificateStatus,
    Side,
    Single,
    Triangulation,
    TriangulationError,
    Window,
    build_fountain,
    canonical_zigzag,
    from_window_set,
    validate_non_crossing,
    window_brute_force,
)

C1 = Surface(True, 1)
C2 = Surface(True, 2)


def fountain1():
    return build_fountain(C1, C1.point(1, 0))


def test_quad_frame_fountain_regular():
    t = fountain1()
    f = quad_frame(t, parse_arc(C1, "1:0-1:5"))
    assert (f.u_left, f.u_right) == (C1.point(1, 4), C1.point(1, 6))
    assert (f.v_left, f.v_right) == (C1.point(1, 6), C1.point(1, 4))


def test_quad_frame_fountain_accumulation():
    t = fountain1()
    f = quad_frame(t, parse_arc(C1, "1:0-a1"))
    assert f.u_left is UNDEFINED and f.u_right is UNDEFINED
    assert f.v_left == C1.accumulation(1) and f.v_right == C1.accumulation(1)


def test_quad_frame_needs_certificate():
    t = Triangulation(C1, (Single(parse_arc(C1, "1:0-1:2")),))
    with pytest.raises(TriangulationError):
        quad_frame(t, parse_arc(C1, "1:0-1:2"))


def test_quad_frame_square_window():
    w = Window.of_points([C1.point(1, i) for i in range(4)])
    diag = parse_arc(C1, "1:0-1:2")
    T = next(S for S in window_brute_force(w) if diag in S)
    t = from_window_set(w, T)
    f = quad_frame(t, diag)
    assert f.u_left == f.v_right == C1.point(1, 1)
    assert f.u_right == f.v_left == C1.point(1, 3)
    assert is_mutable(t, diag)
    assert flip(t, diag).new_arc == parse_arc(C1, "1:1-1:3")


def test_approximate_fountain():
    t = fountain1()
    res = approximate(t, parse_arc(C1, "1:0-a1"), Side.LEFT)
    assert not res.exists
    assert res.failed_scan is not None and res.failed_scan.progressions
    res = approximate(t, parse_arc(C1, "1:0-1:5"), Side.LEFT)
    assert res.exists
    assert res.summands == (parse_arc(C1, "1:0-1:4"),)
    res = approximate(t, parse_arc(C1, "1:0-1:5"), Side.RIGHT)
    assert res.exists
    assert res.summands == (parse_arc(C1, "1:0-1:6"),)


def test_mutability_fountain():
    t = fountain1()
    assert is_mutable(t, parse_arc(C1, "1:0-1:5"))
    ok, reason, _ = mutability_report(t, parse_arc(C1, "1:0-a1"))
    assert not ok and reason == "NoExtremum"


def test_flip_fountain_and_surgery():
    t = fountain1()
    a = parse_arc(C1, "1:0-1:5")
    res = flip(t, a)
    assert res.new_arc == parse_arc(C1, "1:4-1:6")
    nt = res.new_triangulation
    assert nt.certificate.status is CertificateStatus.CERTIFIED_MAXIMAL
    assert nt.contains(res.new_arc) and not nt.contains(a)
    assert nt.contains(parse_arc(C1, "1:0-1:4")) and nt.contains(parse_arc(C1, "1:0-1:6"))
    assert validate_non_crossing(nt).ok
    back = flip(nt, res.new_arc)
    assert back.new_arc == a
    assert back.new_triangulation.contains(a)
    # flipping a non-mutable arc raises with the reason attached
    with pytest.raises(MutabilityError) as err:
        flip(t, parse_arc(C1, "1:0-a1"))
    assert err.value.reason == "NoExtremum"


def test_flip_conflation_pattern():
    t = fountain1()
    res = flip(t, parse_arc(C1, "1:0-1:5"))
    first, second = res.conflations
    assert first.start == parse_arc(C1, "1:0-1:5") and first.end == res.new_arc
    assert second.start == res.new_arc and second.end == parse_arc(C1, "1:0-1:5")
    assert ext_dim(first.start, first.end) == 1
    for confl in res.conflations:
        for m in confl.middle:
            if m is not None:
                assert ext_dim(m, first.start) == 0
                assert ext_dim(m, first.end) == 0


def test_module_generators_fountain_single_fan():
    t = fountain1()
    gens = right_module_generators(t, parse_arc(C1, "1:2-1:7"))
    assert gens == [parse_arc(C1, "1:0-1:3")]
    # maps from every supported arc reach the generator
    for w in (4, 5, 6):
        assert hom_dim(Arc(C1.point(1, 0), C1.point(1, w)), gens[0]) == 1


def test_module_generators_limit_arc_case():
    t = fountain1()
    g = parse_arc(C1, "1:-5-a1")
    gens = right_module_generators(t, g)
    assert isinstance(gens, list)
    assert parse_arc(C1, "1:0-a1") in gens


def test_module_generators_small_and_empty_support():
    t = fountain1()
    # the only fountain arc mapping into the shift of {1:1, 1:3} is {1:0, 1:2}
    gens = right_module_generators(t, parse_arc(C1, "1:1-1:3"))
    assert gens == [parse_arc(C1, "1:0-1:2")]
    # an arc straddling the base is crossed by the whole fountain, yet one
    # generator suffices
    gens = right_module_generators(t, parse_arc(C1, "1:-1-1:1"))
    assert gens == [parse_arc(C1, "1:0-1:2")]
    # arcs of the fountain itself receive nothing: empty support, zero object
    gens = right_module_generators(t, parse_arc(C1, "1:0-1:5"))
    assert gens == []


def test_module_generators_zigzag_not_finite():
    z = canonical_zigzag(C1)
    res = right_module_generators(z, parse_arc(C1, "1:0-a1"))
    assert isinstance(res, NotFinitelyGenerated)
    assert res.param_range.lo is not None or res.param_range.hi is None


def test_module_generators_need_certificate():
    t = Triangulation(C1, (Single(parse_arc(C1, "1:0-1:2")),))
    with pytest.raises(TriangulationError):
        right_module_generators(t, parse_arc(C1, "1:0-1:2"))


def test_accumulation_base_fountain_mutability():
    t = build_fountain(C1, C1.accumulation(1))
    a = Arc(C1.accumulation(1), C1.point(1, 5))
    assert is_mutable(t, a)
    res = flip(t, a)
    assert res.new_arc == parse_arc(C1, "1:4-1:6")


def test_approximation_factors_every_map_on_windows():
    # every nonzero map out of (into) an arc towards the rest of its window
    # triangulation factors through the returned left (right) approximation
    from infgon.arcs import canonical_lift
    from infgon.homs import sweep_contains, sweep_intervals
    from infgon.triangulation import Window, from_window_set, window_brute_force

    w = Window.of_points([C1.point(1, i) for i in range(7)])
    for T in window_brute_force(w):
        t = from_window_set(w, T)
        for a in T:
            left = approximate(t, a, Side.LEFT)
            right = approximate(t, a, Side.RIGHT)
            assert left.exists and right.exists
            la = canonical_lift(a)
            for gamma in T - {a}:
                lg = canonical_lift(gamma)
                if hom_dim(a, gamma) == 1:
                    sweep = sweep_intervals(la, lg)
                    assert any(
                        sweep_contains(sweep, canonical_lift(s)) for s in left.summands
                    ), (a, gamma)
                if hom_dim(gamma, a) == 1:
                    sweep = sweep_intervals(lg, la)
                    assert any(
                        sweep_contains(sweep, canonical_lift(s)) for s in right.summands
                    ), (a, gamma)
