"""Desk-scale verification batteries.

Every battery recomputes its claim through an independent route (brute
force enumeration, the factorization oracle, bounded searches) and compares
against the engine, exactly and with zero tolerance.  ``run_all`` powers
both the test suite and the ``verify-suite`` CLI verb.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .arcs import Arc, canonical_lift, cross_transverse, format_arc, shift_arc
from .homs import (
    ExtCase,
    ext_case,
    ext_dim,
    ext_dim_oracle,
    hom_dim,
    sweep_contains,
    sweep_intervals,
)
from .mutation import (
    NotFinitelyGenerated,
    _remove_arc,
    approximate,
    flip,
    is_mutable,
    quad_frame,
    right_module_generators,
)
from .surface import Point, Surface, adjacent, between, format_point, step
from .triangulation import (
    Family,
    IntRange,
    LimitKind,
    Moving,
    Side,
    Single,
    Triangulation,
    Window,
    arc_crossing_in,
    build_fountain,
    canonical_zigzag,
    from_window_set,
    limit_of_family,
    validate_non_crossing,
    window_arcs,
    window_brute_force,
)


@dataclass
class CriterionResult:
    name: str
    passed: bool
    checked: int
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"{status} {self.name}: {self.checked} checks in {self.elapsed:.1f}s"
        if self.failures:
            msg += f" ({len(self.failures)} failures, first: {self.failures[0]})"
        return msg


def _points(surface: Surface, bound: int) -> list[Point]:
    pts: list[Point] = []
    for k in range(1, surface.intervals + 1):
        pts.extend(Point(surface, k, i) for i in range(-bound, bound + 1))
        if surface.completed:
            pts.append(Point(surface, k, None))
    return pts


def _all_arcs(surface: Surface, bound: int) -> list[Arc]:
    arcs = []
    for p, q in itertools.combinations(_points(surface, bound), 2):
        try:
            arcs.append(Arc(p, q))
        except ValueError:
            continue
    return arcs


@dataclass
class _PairScan:
    pairs: int = 0
    oracle_bad: list[str] = field(default_factory=list)
    symmetry_bad: list[str] = field(default_factory=list)
    containment_bad: list[str] = field(default_factory=list)
    drop_case_bad: list[str] = field(default_factory=list)


_SCAN_CACHE: dict[tuple[int, int], _PairScan] = {}
_STRICT_DROPS = {ExtCase.CLOCKWISE_AT_ACCUMULATION, ExtCase.DOUBLE_ACCUMULATION_SELF}


def _pair_scan(n: int, bound: int) -> _PairScan:
    key = (n, bound)
    if key in _SCAN_CACHE:
        return _SCAN_CACHE[key]
    scan = _PairScan()
    arcs = _all_arcs(Surface(True, n), bound)
    for g in arcs:
        for d in arcs:
            scan.pairs += 1
            e = ext_dim(g, d)
            if e != ext_dim(d, g):
                scan.symmetry_bad.append(f"{format_arc(g)} vs {format_arc(d)} on n={n}")
            o = ext_dim_oracle(g, d)
            if e != o:
                scan.oracle_bad.append(f"{format_arc(g)} vs {format_arc(d)} on n={n}: ext={e} oracle={o}")
            case = ext_case(g, d)
            ambient = 0 if case is ExtCase.NONE else 1
            if e > ambient:
                scan.containment_bad.append(f"{format_arc(g)} vs {format_arc(d)} on n={n}")
            if (ambient == 1 and e == 0) != (case in _STRICT_DROPS):
                scan.drop_case_bad.append(f"{format_arc(g)} vs {format_arc(d)} on n={n}: case={case}")
    _SCAN_CACHE[key] = scan
    return scan


def _scan_params(level: str) -> list[tuple[int, int]]:
    if level == "smoke":
        return [(1, 3), (2, 3)]
    return [(1, 6), (2, 6), (3, 6)]


def criterion_1_oracle_equivalence(level: str = "desk") -> CriterionResult:
    t0 = time.time()
    checked = 0
    failures: list[str] = []
    for n, bound in _scan_params(level):
        scan = _pair_scan(n, bound)
        checked += scan.pairs
        failures.extend(scan.oracle_bad[:5])
    return CriterionResult("1 ext-oracle equivalence", not failures, checked, failures, time.time() - t0)


def criterion_2_symmetry(level: str = "desk") -> CriterionResult:
    t0 = time.time()
    checked = 0
    failures: list[str] = []
    for n, bound in _scan_params(level):
        scan = _pair_scan(n, bound)
        checked += scan.pairs
        failures.extend(scan.symmetry_bad[:5])
    return CriterionResult("2 weak 2-Calabi-Yau symmetry", not failures, checked, failures, time.time() - t0)


def criterion_3_hom_asymmetry(level: str = "desk") -> CriterionResult:
    t0 = time.time()
    failures: list[str] = []
    checked = 0
    s2 = Surface(True, 2)
    base_g = Arc(Point(s2, 1, 0), Point(s2, 1, None))
    base_d = Arc(Point(s2, 1, None), Point(s2, 2, 5))
    for k in range(-3, 4):
        g = shift_arc(base_g, k)
        d = shift_arc(base_d, k)
        checked += 2
        if hom_dim(g, shift_arc(d, 1)) != 1:
            failures.append(f"expected dim 1 for {format_arc(g)} into shifted {format_arc(d)}")
        if hom_dim(d, shift_arc(g, 1)) != 0:
            failures.append(f"expected dim 0 for {format_arc(d)} into shifted {format_arc(g)}")
    return CriterionResult("3 hom asymmetry at an accumulation point", not failures, checked, failures, time.time() - t0)


def criterion_4_containment(level: str = "desk") -> CriterionResult:
    t0 = time.time()
    checked = 0
    failures: list[str] = []
    for n, bound in _scan_params(level):
        scan = _pair_scan(n, bound)
        checked += scan.pairs
        failures.extend(scan.containment_bad[:3])
        failures.extend(scan.drop_case_bad[:3])
    return CriterionResult("4 substructure containment and strict drops", not failures, checked, failures, time.time() - t0)


def _ct_windows(level: str) -> list[Window]:
    s1, s2, s3 = Surface(True, 1), Surface(True, 2), Surface(True, 3)
    wins = [
        Window.symmetric(s1, 1),
        Window.symmetric(s1, 2),
        Window.symmetric(s1, 3),
        Window.of_points([Point(s1, 1, i) for i in range(6)]),
        Window.symmetric(s2, 1),
        Window.symmetric(s3, 0),
    ]
    if level != "smoke":
        wins.append(Window.symmetric(s1, 4))
    return wins


def _is_weak_ct(w: Window, arcs_of_window: tuple[Arc, ...], T: frozenset[Arc]) -> bool:
    right = {x for x in arcs_of_window if all(ext_dim(x, t) == 0 for t in T)}
    if right != set(T):
        return False
    left = {x for x in arcs_of_window if all(ext_dim(t, x) == 0 for t in T)}
    return left == set(T)


def criterion_5_window_weak_ct(level: str = "desk") -> CriterionResult:
    t0 = time.time()
    checked = 0
    failures: list[str] = []
    for w in _ct_windows(level):
        arcs = window_arcs(w)
        sets = window_brute_force(w)
        # every fixpoint of the perpendicularity closure is pairwise
        # non-crossing and maximal, so checking the closure on each maximal
        # set decides the bijection in both directions
        for T in sets:
            checked += 1
            if not _is_weak_ct(w, arcs, T):
                failures.append(f"maximal set not weak cluster-tilting in window of {len(w.points)} points")
        if len(w.points) == 6 and all(p.pos is not None for p in w.points) and w.surface.intervals == 1:
            if len(sets) != 14:
                failures.append(f"hexagon count {len(sets)} != 14")
    return CriterionResult("5 window weak cluster-tilting bijection", not failures, checked, failures, time.time() - t0)


def _mutability_windows(level: str) -> list[Window]:
    s1, s2 = Surface(True, 1), Surface(True, 2)
    wins = [
        Window.symmetric(s1, 1),
        Window.symmetric(s1, 2),
        Window.of_points([Point(s1, 1, i) for i in range(6)]),
        Window.symmetric(s2, 1),
    ]
    if level != "smoke":
        wins.append(Window.symmetric(s1, 3))
    return wins


def _brute_unique_replacement(w: Window, sets: list[frozenset[Arc]], T: frozenset[Arc], a: Arc) -> bool:
    others = T - {a}
    count = 0
    for cand in window_arcs(w):
        if cand == a or cand in T:
            continue
        if frozenset(others | {cand}) in sets:
            count += 1
    return count == 1


def criterion_6_mutability_trichotomy(level: str = "desk") -> CriterionResult:
    t0 = time.time()
    checked = 0
    failures: list[str] = []
    for w in _mutability_windows(level):
        sets = window_brute_force(w)
        set_index = set(sets)
        for T in sets:
            t = from_window_set(w, T)
            for a in sorted(T, key=lambda x: (x.a.circuit_key(), x.b.circuit_key())):
                checked += 1
                c1 = _brute_unique_replacement(w, set_index, T, a)
                c2 = is_mutable(t, a)
                apx_l = approximate(t, a, Side.LEFT)
                apx_r = approximate(t, a, Side.RIGHT)
                frame = quad_frame(t, a)
                c3 = (
                    apx_l.exists
                    and apx_r.exists
                    and frame.u_left == frame.v_right
                    and frame.u_right == frame.v_left
                )
                if not (c1 == c2 == c3):
                    failures.append(
                        f"window {len(w.points)}pts arc {format_arc(a)}: brute={c1} frame={c2} approx={c3}"
                    )
    # fountains over one accumulation point
    s1 = Surface(True, 1)
    for base in (Point(s1, 1, 0), Point(s1, 1, None)):
        t = build_fountain(s1, base)
        partners: list[Point] = [Point(s1, 1, i) for i in range(-6, 7)]
        partners.append(Point(s1, 1, None))
        for v in partners:
            try:
                a = Arc(base, v)
            except ValueError:
                continue
            checked += 1
            c2 = is_mutable(t, a)
            apx_l = approximate(t, a, Side.LEFT)
            apx_r = approximate(t, a, Side.RIGHT)
            c3 = apx_l.exists and apx_r.exists
            if c3:
                frame = quad_frame(t, a)
                c3 = frame.u_left == frame.v_right and frame.u_right == frame.v_left
            c1 = _fountain_brute_unique_replacement(t, a)
            if not (c1 == c2 == c3):
                failures.append(f"fountain at {format_point(base)} arc {format_arc(a)}: {c1}/{c2}/{c3}")
    return CriterionResult("6 mutability trichotomy", not failures, checked, failures, time.time() - t0)


def _fountain_brute_unique_replacement(t: Triangulation, a: Arc) -> bool:
    """Bounded search for arcs completing t minus a.

    A replacement arc must avoid crossing every remaining arc of the
    fountain, which pins its endpoints next to the removed arc's endpoints,
    so a search window of radius |pos| + 3 is exhaustive.
    """
    surface = t.surface
    radius = 3 + max((abs(p.pos) for p in a.endpoints if p.pos is not None), default=0)
    rest = Triangulation(surface, _remove_arc(t, a))
    count = 0
    for cand in _all_arcs(surface, radius):
        if cand == a or t.contains(cand):
            continue
        if not cross_transverse(cand, a):
            continue  # must cross the removed arc, or the old set extends
        if arc_crossing_in(rest, cand) is None:
            count += 1
    return count == 1


def criterion_7_fountain_behaviour(level: str = "desk") -> CriterionResult:
    t0 = time.time()
    failures: list[str] = []
    checked = 0
    s1 = Surface(True, 1)
    b = Point(s1, 1, 0)
    t = build_fountain(s1, b)
    acc_arc = Arc(b, Point(s1, 1, None))
    checked += 1
    if is_mutable(t, acc_arc):
        failures.append("accumulation arc reported mutable")
    apx = approximate(t, acc_arc, Side.LEFT)
    checked += 1
    if apx.exists or apx.failed_scan is None:
        failures.append("left approximation of the accumulation arc should fail with a scan witness")
    else:
        prog = apx.failed_scan.progressions
        if not prog or prog[0].position_range().hi is not None:
            failures.append("failure witness should be an unbounded progression")
    for pos in (5, -4, 3):
        v = Point(s1, 1, pos)
        a = Arc(b, v)
        checked += 2
        if not is_mutable(t, a):
            failures.append(f"{format_arc(a)} should be mutable")
            continue
        res = flip(t, a)
        expected = Arc(step(v, -1), step(v, 1))
        if res.new_arc != expected:
            failures.append(f"flip of {format_arc(a)} gave {format_arc(res.new_arc)}, expected {format_arc(expected)}")
        if not res.new_triangulation.contains(expected) or res.new_triangulation.contains(a):
            failures.append("flip did not swap the arcs in the triangulation")
    return CriterionResult("7 fountain mutability and flips", not failures, checked, failures, time.time() - t0)


def _verify_generation(t: Triangulation, g: Arc, gens: list[Arc], bound: int) -> str | None:
    """Check every window-visible incoming arc factors through a generator."""
    window = Window.symmetric(t.surface, bound)
    sg = shift_arc(g, 1)
    support = [b for b in t.arcs_in_window(window) if hom_dim(b, sg) == 1]
    for beta in support:
        if beta in gens:
            continue
        ok = False
        for gen in gens:
            if hom_dim(beta, gen) != 1 or hom_dim(gen, sg) != 1:
                continue
            if all(p.pos is not None for arc in (beta, gen, sg) for p in arc.endpoints):
                lb = canonical_lift(beta)
                lsg = canonical_lift(sg)
                if hom_dim(lb, lsg) != 1:
                    continue
                if sweep_contains(sweep_intervals(lb, lsg), canonical_lift(gen)):
                    ok = True
                    break
            else:
                ok = True
                break
        if not ok:
            return f"support arc {format_arc(beta)} does not factor through generators for {format_arc(g)}"
    return None


def criterion_8_fan_finiteness(level: str = "desk") -> CriterionResult:
    t0 = time.time()
    failures: list[str] = []
    checked = 0
    rng = random.Random(0x1F6)
    s1 = Surface(True, 1)
    n_queries = 50 if level != "smoke" else 10
    for base in (Point(s1, 1, 0), Point(s1, 1, None)):
        t = build_fountain(s1, base)
        made = 0
        while made < n_queries // 2:
            pts = _points(s1, 10)
            p, q = rng.sample(pts, 2)
            try:
                g = Arc(p, q)
            except ValueError:
                continue
            made += 1
            checked += 1
            gens = right_module_generators(t, g)
            if isinstance(gens, NotFinitelyGenerated):
                failures.append(f"fountain query {format_arc(g)} reported not finitely generated")
                continue
            err = _verify_generation(t, g, gens, 12)
            if err:
                failures.append(err)
    z = canonical_zigzag(s1)
    queries = [Arc(Point(s1, 1, k), Point(s1, 1, None)) for k in range(-5, 5)]
    for g in queries:
        checked += 1
        res = right_module_generators(z, g)
        if not isinstance(res, NotFinitelyGenerated):
            failures.append(f"zigzag query {format_arc(g)} unexpectedly finitely generated")
    return CriterionResult("8 fans are functorially finite, leapfrogs are not", not failures, checked, failures, time.time() - t0)


def _limit_fixtures() -> list[tuple[Surface, Family, int | None]]:
    s1, s2, s3 = Surface(True, 1), Surface(True, 2), Surface(True, 3)
    fixtures: list[tuple[Surface, Family, int | None]] = []
    fixtures.append((s2, Family(Point(s2, 1, 0), Moving(1, 2, 1), IntRange(0, None)), None))
    fixtures.append((s2, Family(Point(s2, 1, None), Moving(2, 1, 1), IntRange(0, None)), None))
    fixtures.append((s1, Family(Point(s1, 1, None), Moving(1, -1, -1), IntRange(0, None)), None))
    fixtures.append((s1, Family(Point(s1, 1, 0), Moving(1, 2, 1), IntRange(0, None)), None))
    fixtures.append((s1, Family(Point(s1, 1, 0), Moving(1, -2, -1), IntRange(0, None)), None))
    fixtures.append((s2, Family(Point(s2, 2, 3), Moving(2, 5, 2), IntRange(0, None)), None))
    fixtures.append((s2, Family(Point(s2, 2, 3), Moving(1, 0, -1), IntRange(None, 0)), None))
    fixtures.append((s3, Family(Point(s3, 2, None), Moving(1, 0, -3), IntRange(0, None)), None))
    fixtures.append((s3, Family(Point(s3, 1, None), Moving(2, 4, 1), IntRange(-2, None)), None))
    fixtures.append((s3, Family(Point(s3, 3, None), Moving(3, 7, 1), IntRange(1, None)), None))
    fixtures.append((s2, Family(Point(s2, 1, 5), Moving(1, 7, 1), IntRange(0, None)), None))
    fixtures.append((s2, Family(Point(s2, 1, 5), Moving(1, 3, 1), IntRange(None, 0)), -1))
    fixtures.append((s1, Family(Point(s1, 1, None), Moving(1, 0, 2), IntRange(0, None)), None))
    fixtures.append((s2, Family(Point(s2, 2, None), Moving(2, -4, -2), IntRange(0, None)), None))
    fixtures.append((s2, Family(Point(s2, 2, None), Moving(2, 4, 2), IntRange(0, None)), None))
    fixtures.append((s3, Family(Point(s3, 1, -2), Moving(3, 0, 1), IntRange(0, None)), None))
    fixtures.append((s3, Family(Point(s3, 1, -2), Moving(3, 0, -1), IntRange(None, 5)), -1))
    fixtures.append((s1, Family(Point(s1, 1, 9), Moving(1, 11, 1), IntRange(0, None)), None))
    fixtures.append((s2, Family(Point(s2, 1, None), Moving(1, 3, 1), IntRange(2, None)), None))
    fixtures.append((s2, Family(Point(s2, 2, None), Moving(1, 3, -1), IntRange(None, -1)), -1))
    return fixtures


def criterion_9_limit_arcs(level: str = "desk") -> CriterionResult:
    t0 = time.time()
    failures: list[str] = []
    checked = 0
    for surface, fam, end in _limit_fixtures():
        checked += 1
        res = limit_of_family(surface, fam, end=end)
        mov = fam.moving_endpoints[0]
        p = fam.fixed_endpoint
        direction = end if end is not None else (1 if fam.domain.hi is None else -1)
        t_far = 900 * direction
        x1 = Point(surface, mov.interval, mov.pos_at(t_far))
        x2 = Point(surface, mov.interval, mov.pos_at(t_far + direction))
        x3 = Point(surface, mov.interval, mov.pos_at(t_far + 2 * direction))
        q = res.point if res.kind is LimitKind.ACCUMULATION_POINT else (
            res.arc.other_endpoint(p) if res.kind is LimitKind.ARC else None
        )
        if q is not None:
            # monotone approach from one fixed side, checked with cyclic
            # order only: successive terms stay strictly between their
            # predecessor and the claimed limit
            ascending = between(x1, x2, q) and between(x2, x3, q)
            descending = between(q, x2, x1) and between(q, x3, x2)
            if not (ascending or descending):
                failures.append(f"moving endpoint does not approach {format_point(q)}")
                continue
            if step(q, 1) != q:
                failures.append(f"claimed limit {format_point(q)} is not a fixed point of the successor")
                continue
            expected_kind = LimitKind.ACCUMULATION_POINT if q == p else (
                LimitKind.BOUNDARY_SEGMENT if adjacent(p, q) else LimitKind.ARC
            )
            if expected_kind != res.kind:
                failures.append(f"trichotomy mismatch: got {res.kind}, expected {expected_kind}")
                continue
        if res.kind is LimitKind.ARC:
            t = Triangulation(surface, (fam,))
            checked += 1
            if not validate_non_crossing(t).ok:
                failures.append("fixture family crosses itself")
                continue
            extended = Triangulation(surface, (fam, Single(res.arc)))
            if not validate_non_crossing(extended).ok:
                failures.append(f"adding limit arc {format_arc(res.arc)} introduced a crossing")
    return CriterionResult("9 limits of fan families", not failures, checked, failures, time.time() - t0)


def criterion_10_flip_involution(level: str = "desk") -> CriterionResult:
    t0 = time.time()
    failures: list[str] = []
    checked = 0
    for w in _mutability_windows(level):
        for T in window_brute_force(w):
            t = from_window_set(w, T)
            for a in sorted(T, key=lambda x: (x.a.circuit_key(), x.b.circuit_key())):
                if not is_mutable(t, a):
                    continue
                checked += 1
                res = flip(t, a)
                back = flip(res.new_triangulation, res.new_arc)
                if back.new_arc != a:
                    failures.append(f"flip involution broken at {format_arc(a)}")
                    continue
                orig = {gen.arc for gen in t.generators}
                restored = {gen.arc for gen in back.new_triangulation.generators}
                if orig != restored:
                    failures.append(f"double flip changed the triangulation at {format_arc(a)}")
                if ext_dim(a, res.new_arc) != 1 or ext_dim(res.new_arc, a) != 1:
                    failures.append(f"diagonals of flip at {format_arc(a)} not mutually extending")
                for confl in res.conflations:
                    for m in confl.middle:
                        if m is None:
                            continue
                        if ext_dim(m, a) != 0 or ext_dim(m, res.new_arc) != 0:
                            failures.append(f"conflation middle {format_arc(m)} crosses a diagonal")
    return CriterionResult("10 flip involution and exchange rigidity", not failures, checked, failures, time.time() - t0)


def _random_lift(rng: random.Random, g: Arc) -> Arc:
    target = canonical_lift(g).surface

    def lift(p: Point) -> Point:
        if p.pos is None:
            return Point(target, 2 * p.interval, rng.randint(-30, 30))
        return Point(target, 2 * p.interval - 1, p.pos)

    return Arc(lift(g.a), lift(g.b))


def criterion_11_lift_independence(level: str = "desk") -> CriterionResult:
    t0 = time.time()
    failures: list[str] = []
    checked = 0
    rng = random.Random(0xACC)
    s2 = Surface(True, 2)
    arcs = _all_arcs(s2, 4)
    acc_arcs = [a for a in arcs if a.a.pos is None or a.b.pos is None]
    n_pairs = 200 if level != "smoke" else 40
    n_lifts = 100 if level != "smoke" else 20
    pairs = []
    while len(pairs) < n_pairs:
        g = rng.choice(acc_arcs if rng.random() < 0.7 else arcs)
        d = rng.choice(acc_arcs if rng.random() < 0.7 else arcs)
        pairs.append((g, d))
    for g, d in pairs:
        reference = ext_dim_oracle(g, d)
        for _ in range(n_lifts):
            checked += 1
            got = ext_dim_oracle(g, d, lift_g=_random_lift(rng, g), lift_d=_random_lift(rng, d))
            if got != reference:
                failures.append(f"lift dependence for {format_arc(g)} vs {format_arc(d)}")
                break
    return CriterionResult("11 oracle lift independence", not failures, checked, failures, time.time() - t0)


ALL_CRITERIA = [
    criterion_1_oracle_equivalence,
    criterion_2_symmetry,
    criterion_3_hom_asymmetry,
    criterion_4_containment,
    criterion_5_window_weak_ct,
    criterion_6_mutability_trichotomy,
    criterion_7_fountain_behaviour,
    criterion_8_fan_finiteness,
    criterion_9_limit_arcs,
    criterion_10_flip_involution,
    criterion_11_lift_independence,
]


def run_all(level: str = "desk") -> list[CriterionResult]:
    return [crit(level) for crit in ALL_CRITERIA]
