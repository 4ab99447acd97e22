"""Finitely presented, possibly infinite collections of non-crossing arcs.

A triangulation is stored as a list of generators: single arcs plus affine
families whose endpoints move along one interval with a fixed stride.  That
vocabulary covers fountains, fans, split fans and zigzag ladders, and every
pairwise predicate (crossing, duplication, membership) reduces to integer
linear feasibility in the family parameters, decided exactly by
:mod:`infgon.affine`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

from .affine import (
    FULL_RANGE,
    IntRange,
    LinIneq,
    SymPoint,
    conjunction_model,
    cross_conjunctions,
    solve_1var_range,
    sym_eq_atoms,
)
from .arcs import Arc, format_arc, parse_arc
from .surface import Point, Surface, format_point, parse_point, parse_surface


class TriangulationError(ValueError):
    pass


class CrossingError(TriangulationError):
    def __init__(self, first: Arc, second: Arc):
        super().__init__(f"arcs cross: {format_arc(first)} and {format_arc(second)}")
        self.witness = (first, second)


class DuplicateArcError(TriangulationError):
    pass


class LeapfrogError(TriangulationError):
    pass


class ResourceLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class Moving:
    """Endpoint sweeping interval ``interval`` at positions base + stride*t."""

    interval: int
    base: int
    stride: int

    def __post_init__(self) -> None:
        if self.stride == 0:
            raise ValueError("moving endpoint needs a nonzero stride")

    def pos_at(self, t: int) -> int:
        return self.base + self.stride * t

    def param_for_pos(self, pos: int) -> Optional[int]:
        q, r = divmod(pos - self.base, self.stride)
        return q if r == 0 else None

    def position_range(self, domain: IntRange) -> IntRange:
        at = lambda t: None if t is None else self.pos_at(t)
        if self.stride > 0:
            return IntRange(at(domain.lo), at(domain.hi))
        return IntRange(at(domain.hi), at(domain.lo))

    def params_with_pos_in(self, lo: int | None, hi: int | None) -> IntRange:
        """Parameter range whose positions land in [lo, hi] (None = unbounded)."""
        ineqs: list[tuple[int, int]] = []
        if lo is not None:
            ineqs.append((self.stride, self.base - lo))
        if hi is not None:
            ineqs.append((-self.stride, hi - self.base))
        r = solve_1var_range(ineqs)
        return r if r is not None else IntRange(0, -1)


Endpoint = Union[Point, Moving]


@dataclass(frozen=True)
class Family:
    """One-parameter affine family of arcs over an integer domain."""

    e0: Endpoint
    e1: Endpoint
    domain: IntRange

    def __post_init__(self) -> None:
        if not isinstance(self.e0, Moving) and not isinstance(self.e1, Moving):
            raise ValueError("a family needs at least one moving endpoint; use Single instead")
        if self.domain.is_empty:
            raise ValueError("family domain is empty")

    def endpoint_at(self, surface: Surface, which: int, t: int) -> Point:
        e = self.e0 if which == 0 else self.e1
        if isinstance(e, Moving):
            return Point(surface, e.interval, e.pos_at(t))
        return e

    def arc_at(self, surface: Surface, t: int) -> Arc:
        return Arc(self.endpoint_at(surface, 0, t), self.endpoint_at(surface, 1, t))

    @property
    def fixed_endpoint(self) -> Optional[Point]:
        if isinstance(self.e0, Point):
            return self.e0
        if isinstance(self.e1, Point):
            return self.e1
        return None

    @property
    def moving_endpoints(self) -> list[Moving]:
        return [e for e in (self.e0, self.e1) if isinstance(e, Moving)]


@dataclass(frozen=True)
class Single:
    arc: Arc


Generator = Union[Single, Family]


class CertificateStatus(Enum):
    CERTIFIED_MAXIMAL = "maximal"
    WINDOW_CHECKED = "window-checked"
    UNVERIFIED = "unverified"


@dataclass(frozen=True)
class Certificate:
    status: CertificateStatus
    window: Optional["Window"] = None


UNVERIFIED = Certificate(CertificateStatus.UNVERIFIED)
CERTIFIED_MAXIMAL = Certificate(CertificateStatus.CERTIFIED_MAXIMAL)


@dataclass(frozen=True)
class Window:
    """Finite set of marked points used for brute-force checks and rendering."""

    surface: Surface
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        if len(set(self.points)) != len(self.points):
            raise ValueError("window points must be distinct")
        for p in self.points:
            if p.surface != self.surface:
                raise ValueError("window points must live on the window surface")
        object.__setattr__(self, "points", tuple(sorted(self.points, key=Point.circuit_key)))

    @staticmethod
    def symmetric(surface: Surface, bound: int, include_accumulation: bool = True) -> "Window":
        pts: list[Point] = []
        for k in range(1, surface.intervals + 1):
            pts.extend(Point(surface, k, i) for i in range(-bound, bound + 1))
            if surface.completed and include_accumulation:
                pts.append(Point(surface, k, None))
        return Window(surface, tuple(pts))

    @staticmethod
    def of_points(points: Sequence[Point]) -> "Window":
        if not points:
            raise ValueError("window needs at least one point")
        return Window(points[0].surface, tuple(points))

    def contains(self, p: Point) -> bool:
        return p in self.points


# --- symbolic encodings ----------------------------------------------------


def _sym_fixed(p: Point) -> SymPoint:
    slot, pos = p.circuit_key()
    if p.pos is None:
        return (slot, None)
    return (slot, (0, 0, pos))


def _sym_endpoint(e: Endpoint, var: int) -> SymPoint:
    if isinstance(e, Moving):
        aff = (e.stride, 0, e.base) if var == 0 else (0, e.stride, e.base)
        return (2 * e.interval - 1, aff)
    return _sym_fixed(e)


def _gen_sym_pair(gen: Generator, var: int) -> tuple[SymPoint, SymPoint]:
    if isinstance(gen, Single):
        return (_sym_fixed(gen.arc.a), _sym_fixed(gen.arc.b))
    return (_sym_endpoint(gen.e0, var), _sym_endpoint(gen.e1, var))


def _gen_domain(gen: Generator) -> IntRange:
    return IntRange(0, 0) if isinstance(gen, Single) else gen.domain


def _instantiate(surface: Surface, gen: Generator, t: int) -> Arc:
    return gen.arc if isinstance(gen, Single) else gen.arc_at(surface, t)


def crossing_witness(surface: Surface, gen_a: Generator, gen_b: Generator, same: bool = False) -> Optional[tuple[Arc, Arc]]:
    """A crossing pair of instances of the two generators, or None.

    ``same`` restricts to distinct instances (i < j) of one generator passed
    twice.
    """
    pair_a = _gen_sym_pair(gen_a, 0)
    pair_b = _gen_sym_pair(gen_b, 1)
    extra = (LinIneq(-1, 1, -1),) if same else ()
    for conj in cross_conjunctions(pair_a, pair_b):
        m = conjunction_model(conj, _gen_domain(gen_a), _gen_domain(gen_b), extra)
        if m is not None:
            return (_instantiate(surface, gen_a, m[0]), _instantiate(surface, gen_b, m[1]))
    return None


def duplicate_witness(surface: Surface, gen_a: Generator, gen_b: Generator) -> Optional[Arc]:
    pair_a = _gen_sym_pair(gen_a, 0)
    pair_b = _gen_sym_pair(gen_b, 1)
    for (b0, b1) in ((pair_b[0], pair_b[1]), (pair_b[1], pair_b[0])):
        atoms0 = sym_eq_atoms(pair_a[0], b0)
        atoms1 = sym_eq_atoms(pair_a[1], b1)
        if atoms0 is False or atoms1 is False:
            continue
        m = conjunction_model(atoms0 + atoms1, _gen_domain(gen_a), _gen_domain(gen_b))
        if m is not None:
            return _instantiate(surface, gen_a, m[0])
    return None


def arc_crosses_generator(surface: Surface, arc: Arc, gen: Generator) -> Optional[Arc]:
    """An instance of ``gen`` crossing ``arc``, or None."""
    hit = crossing_witness(surface, Single(arc), gen)
    return None if hit is None else hit[1]


def _invalid_family_param(surface: Surface, fam: Family) -> Optional[int]:
    """A parameter whose instance has equal or adjacent endpoints, if any."""
    e0, e1 = fam.e0, fam.e1
    i0 = e0.interval if isinstance(e0, Moving) else (e0.interval if e0.pos is not None else None)
    i1 = e1.interval if isinstance(e1, Moving) else (e1.interval if e1.pos is not None else None)
    acc0 = isinstance(e0, Point) and e0.pos is None
    acc1 = isinstance(e1, Point) and e1.pos is None
    if acc0 or acc1 or i0 != i1:
        return None  # distinct intervals or an accumulation endpoint: always valid
    c0 = (e0.stride, e0.base) if isinstance(e0, Moving) else (0, e0.pos)
    c1 = (e1.stride, e1.base) if isinstance(e1, Moving) else (0, e1.pos)
    dcoef, dconst = c1[0] - c0[0], c1[1] - c0[1]
    if dcoef == 0:
        if abs(dconst) <= 1:
            return fam.domain.lo if fam.domain.lo is not None else (fam.domain.hi if fam.domain.hi is not None else 0)
        return None
    for target in (-1, 0, 1):
        q, r = divmod(target - dconst, dcoef)
        if r == 0 and fam.domain.contains(q):
            return q
    return None


@dataclass(frozen=True)
class Triangulation:
    """Surface plus generator list; crossing freedom is checked separately.

    Construction validates structure only: families instantiate to genuine
    arcs everywhere and no arc is presented twice.  Use
    :func:`validate_non_crossing` for the geometric condition, and the
    builders for certified maximal collections.
    """

    surface: Surface
    generators: tuple[Generator, ...]
    certificate: Certificate = UNVERIFIED

    def __post_init__(self) -> None:
        for gen in self.generators:
            if isinstance(gen, Single):
                if gen.arc.surface != self.surface:
                    raise TriangulationError("generator arc on the wrong surface")
            else:
                for e in (gen.e0, gen.e1):
                    if isinstance(e, Moving):
                        if not 1 <= e.interval <= self.surface.intervals:
                            raise TriangulationError(f"moving endpoint interval {e.interval} out of range")
                    elif e.surface != self.surface:
                        raise TriangulationError("fixed endpoint on the wrong surface")
                bad = _invalid_family_param(self.surface, gen)
                if bad is not None:
                    raise TriangulationError(f"family degenerates at parameter {bad}")
        gens = self.generators
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                dup = duplicate_witness(self.surface, gens[i], gens[j])
                if dup is not None:
                    raise DuplicateArcError(f"arc {format_arc(dup)} appears in two generators")

    def contains(self, arc: Arc) -> bool:
        if arc.surface != self.surface:
            return False
        for gen in self.generators:
            if isinstance(gen, Single):
                if gen.arc == arc:
                    return True
            elif _family_param_of(self.surface, gen, arc) is not None:
                return True
        return False

    def arcs_in_window(self, window: Window) -> frozenset[Arc]:
        out: set[Arc] = set()
        pts = set(window.points)
        for gen in self.generators:
            if isinstance(gen, Single):
                if gen.arc.a in pts and gen.arc.b in pts:
                    out.add(gen.arc)
                continue
            params: Optional[IntRange] = gen.domain
            for e in (gen.e0, gen.e1):
                if params is None or params.is_empty:
                    break
                if isinstance(e, Moving):
                    positions = sorted(p.pos for p in pts if p.interval == e.interval and p.pos is not None)
                    if not positions:
                        params = None
                        break
                    params = params.intersect(e.params_with_pos_in(positions[0], positions[-1]))
                elif e not in pts:
                    params = None
            if params is None or params.is_empty:
                continue
            if not params.is_bounded:
                raise ResourceLimitError("family visible infinitely often in a finite window")
            for t in params.iterate():
                arc = gen.arc_at(self.surface, t)
                if arc.a in pts and arc.b in pts:
                    out.add(arc)
        return frozenset(out)

    def with_certificate(self, certificate: Certificate) -> "Triangulation":
        return Triangulation(self.surface, self.generators, certificate)


def _family_param_of(surface: Surface, fam: Family, arc: Arc) -> Optional[int]:
    def match(e: Endpoint, p: Point):
        if isinstance(e, Moving):
            if p.pos is None or p.interval != e.interval:
                return None
            t = e.param_for_pos(p.pos)
            return ("at", t) if t is not None else None
        return ("any",) if e == p else None

    for p, q in ((arc.a, arc.b), (arc.b, arc.a)):
        m0, m1 = match(fam.e0, p), match(fam.e1, q)
        if m0 is None or m1 is None:
            continue
        if m0 == ("any",) and m1 == ("any",):
            continue  # families always have a moving endpoint
        if m0 == ("any",):
            t = m1[1]
        elif m1 == ("any",):
            t = m0[1]
        else:
            if m0[1] != m1[1]:
                continue
            t = m0[1]
        if fam.domain.contains(t):
            return t
    return None


@dataclass(frozen=True)
class NonCrossingReport:
    ok: bool
    witness: Optional[tuple[Arc, Arc]] = None


def validate_non_crossing(t: Triangulation) -> NonCrossingReport:
    """Search all instance pairs, within and across generators, for a crossing."""
    gens = t.generators
    for i, gen in enumerate(gens):
        if isinstance(gen, Family):
            hit = crossing_witness(t.surface, gen, gen, same=True)
            if hit is not None:
                return NonCrossingReport(False, hit)
        for j in range(i + 1, len(gens)):
            hit = crossing_witness(t.surface, gen, gens[j])
            if hit is not None:
                return NonCrossingReport(False, hit)
    return NonCrossingReport(True)


def arc_crossing_in(t: Triangulation, arc: Arc) -> Optional[Arc]:
    """Some instance of t crossing the given arc, or None."""
    for gen in t.generators:
        hit = arc_crosses_generator(t.surface, arc, gen)
        if hit is not None:
            return hit
    return None


# --- builders ---------------------------------------------------------------


def build_fountain(surface: Surface, base: Point) -> Triangulation:
    """All arcs through one base point; maximal by construction."""
    if not surface.completed:
        raise ValueError("fountains are built on completed surfaces")
    if base.surface != surface:
        raise ValueError("base point on the wrong surface")
    gens: list[Generator] = []
    n = surface.intervals
    if base.pos is not None:
        k, p = base.interval, base.pos
        gens.append(Family(base, Moving(k, p + 2, 1), IntRange(0, None)))
        gens.append(Family(base, Moving(k, p - 2, -1), IntRange(0, None)))
        for j in range(1, n + 1):
            if j != k:
                gens.append(Family(base, Moving(j, 0, 1), FULL_RANGE))
            gens.append(Single(Arc(base, Point(surface, j, None))))
    else:
        for j in range(1, n + 1):
            gens.append(Family(base, Moving(j, 0, 1), FULL_RANGE))
            if j != base.interval:
                gens.append(Single(Arc(base, Point(surface, j, None))))
    t = Triangulation(surface, tuple(gens), CERTIFIED_MAXIMAL)
    report = validate_non_crossing(t)
    if not report.ok:
        raise CrossingError(*report.witness)
    return t


def _escape(m: Moving, direction: int, n: int) -> tuple[int, bool]:
    """(gap index, approached from below) for parameter going to +/- infinity."""
    upward = (m.stride > 0) == (direction > 0)
    if upward:
        return (m.interval, True)
    return (m.interval - 1 if m.interval > 1 else n, False)


def _affine_offset(u: Endpoint, v: Endpoint, lead: int = 0) -> Optional[int]:
    """Index offset c with u(t + c) == v(t + lead) identically, or None.

    Only moving-against-moving identities count; shared fixed endpoints give
    fans, not ladders.
    """
    if not (isinstance(u, Moving) and isinstance(v, Moving)):
        return None
    if u.interval != v.interval or u.stride != v.stride:
        return None
    q, r = divmod(v.base + v.stride * lead - u.base, u.stride)
    return q if r == 0 else None


def _chain_alignment(alpha: Family, beta: Family) -> Optional[tuple[int, int, int]]:
    """(x, y, c) such that beta's arc at t+c shares alpha(t)'s endpoint x and
    alpha(t+1)'s endpoint 1-x, through beta's endpoints y and 1-y."""
    a_ends = (alpha.e0, alpha.e1)
    b_ends = (beta.e0, beta.e1)
    for x in (0, 1):
        for y in (0, 1):
            c1 = _affine_offset(b_ends[y], a_ends[x], 0)
            c2 = _affine_offset(b_ends[1 - y], a_ends[1 - x], 1)
            if c1 is not None and c1 == c2:
                return (x, y, c1)
    return None


@dataclass(frozen=True)
class LeapfrogWitness:
    alpha: Family
    beta: Family
    offset: int
    direction: int
    curve_ends: tuple[str, str]


def _pair_leapfrog(surface: Surface, alpha: Family, beta: Family) -> Optional[LeapfrogWitness]:
    align = _chain_alignment(alpha, beta)
    if align is None:
        return None
    x, y, c = align
    # valid chain indices t: alpha at t and t+1, beta at t+c
    ray = alpha.domain
    ray = ray.intersect(IntRange(None if alpha.domain.lo is None else alpha.domain.lo - 1,
                                 None if alpha.domain.hi is None else alpha.domain.hi - 1))
    ray = ray.intersect(IntRange(None if beta.domain.lo is None else beta.domain.lo - c,
                                 None if beta.domain.hi is None else beta.domain.hi - c))
    if ray.is_empty:
        return None
    tip_a = (alpha.e0, alpha.e1)[x]
    tip_b = (alpha.e0, alpha.e1)[1 - x]
    n = surface.intervals
    directions = []
    if ray.hi is None:
        directions.append(1)
    if ray.lo is None:
        directions.append(-1)
    for direction in directions:
        esc_a = _escape(tip_a, direction, n)
        esc_b = _escape(tip_b, direction, n)
        if esc_a != esc_b:
            def describe(esc: tuple[int, bool]) -> str:
                gap, from_below = esc
                return f"a{gap}{'-' if from_below else '+'}"
            return LeapfrogWitness(alpha, beta, c, direction, (describe(esc_a), describe(esc_b)))
    return None


def detect_leapfrog(t: Triangulation) -> Optional[LeapfrogWitness]:
    """Find an infinite alternating tip-to-tip chain between two families.

    With finitely many generators any infinite leapfrog must eventually
    alternate between two families whose moving endpoints interleave, so
    the pairwise search below is complete for this vocabulary.  Chains whose
    two tip progressions escape to the same gap from the same side are
    monotone scallop chains, crossed by no arc, and do not count.
    """
    fams = [g for g in t.generators if isinstance(g, Family)]
    for alpha in fams:
        for beta in fams:
            if alpha is beta:
                continue
            w = _pair_leapfrog(t.surface, alpha, beta)
            if w is not None:
                return w
    return None


def build_zigzag_leapfrog(
    surface: Surface,
    alpha: Family,
    beta: Family,
    closing: Sequence[Arc] = (),
) -> Triangulation:
    """Triangulation whose core is an infinite alternating ladder of two families.

    Validates the tip-to-tip incidences symbolically, requires the chain to
    be infinite and genuinely leaping, and checks that the closing arcs
    finish the bounded pocket, so the result is certified maximal.
    """
    gens: tuple[Generator, ...] = (alpha, beta, *(Single(a) for a in closing))
    t = Triangulation(surface, gens)
    if _chain_alignment(alpha, beta) is None:
        raise LeapfrogError("families are not tip-to-tip aligned")
    witness = _pair_leapfrog(surface, alpha, beta)
    if witness is None:
        raise LeapfrogError("chain is finite or degenerates to a scallop run; not an infinite leapfrog")
    report = validate_non_crossing(t)
    if not report.ok:
        raise CrossingError(*report.witness)
    bound = 2 + max(
        (abs(e.base) for g in (alpha, beta) for e in (g.e0, g.e1) if isinstance(e, Moving)),
        default=0,
    )
    bound = max(bound, 2 + max((abs(p.pos) for a in closing for p in a.endpoints if p.pos is not None), default=0))
    check_window = Window.symmetric(surface, bound)
    if not window_check(t, check_window):
        raise LeapfrogError("closing arcs do not triangulate the complementary regions")
    return t.with_certificate(CERTIFIED_MAXIMAL)


def canonical_zigzag(surface: Surface | None = None) -> Triangulation:
    """The standard infinite ladder on one interval, both tails at the gap."""
    surface = surface or Surface(True, 1)
    alpha = Family(Moving(1, 0, 1), Moving(1, 0, -1), IntRange(1, None))
    beta = Family(Moving(1, 1, 1), Moving(1, 0, -1), IntRange(1, None))
    return build_zigzag_leapfrog(surface, alpha, beta)


# --- window machinery -------------------------------------------------------

WINDOW_POINT_LIMIT = 12


def window_arcs(w: Window) -> tuple[Arc, ...]:
    pts = w.points
    out = []
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            try:
                out.append(Arc(pts[i], pts[j]))
            except ValueError:
                continue
    return tuple(out)


def _polygon_diagonal_sets(m: int) -> list[frozenset[tuple[int, int]]]:
    @lru_cache(maxsize=None)
    def rec(lo: int, hi: int) -> tuple[frozenset[tuple[int, int]], ...]:
        if hi - lo < 2:
            return (frozenset(),)
        out = []
        for k in range(lo + 1, hi):
            extra = frozenset(
                d for d in ((lo, k), (k, hi)) if d[1] - d[0] > 1
            )
            for left in rec(lo, k):
                for right in rec(k, hi):
                    out.append(left | right | extra)
        return tuple(out)

    if m < 3:
        return [frozenset()]
    return list(rec(0, m - 1))


def window_brute_force(w: Window) -> list[frozenset[Arc]]:
    """Every maximal non-crossing set of window arcs, by polygon enumeration.

    Window arcs joining cyclically consecutive window points cross nothing
    and belong to every maximal set; the remaining choices are exactly the
    triangulations of the convex polygon on the window points.
    """
    m = len(w.points)
    if m > WINDOW_POINT_LIMIT:
        raise ResourceLimitError(f"window has {m} points, limit is {WINDOW_POINT_LIMIT}")
    pts = w.points
    mandatory: set[Arc] = set()
    for i in range(m):
        j = (i + 1) % m
        if i == j:
            continue
        try:
            mandatory.add(Arc(pts[i], pts[j]))
        except ValueError:
            continue
    out = []
    for diag_set in _polygon_diagonal_sets(m):
        arcs = set(mandatory)
        arcs.update(Arc(pts[i], pts[j]) for i, j in diag_set)
        out.append(frozenset(arcs))
    return out


def window_check(t: Triangulation, w: Window) -> bool:
    """Local maximality: every window arc is in t or crosses an instance of t."""
    for arc in window_arcs(w):
        if t.contains(arc):
            continue
        if arc_crossing_in(t, arc) is None:
            return False
    return True


def from_window_set(w: Window, arcs: Iterable[Arc]) -> Triangulation:
    """Package a maximal window arc set as a window-checked triangulation."""
    gens = tuple(Single(a) for a in sorted(set(arcs), key=lambda a: (a.a.circuit_key(), a.b.circuit_key())))
    t = Triangulation(w.surface, gens, Certificate(CertificateStatus.WINDOW_CHECKED, w))
    report = validate_non_crossing(t)
    if not report.ok:
        raise CrossingError(*report.witness)
    if not window_check(t, w):
        raise TriangulationError("arc set is not maximal within its window")
    return t


# --- limits of families ------------------------------------------------------


class LimitKind(Enum):
    ARC = "arc"
    ACCUMULATION_POINT = "accumulation-point"
    BOUNDARY_SEGMENT = "boundary-segment"


@dataclass(frozen=True)
class FamilyLimit:
    kind: LimitKind
    arc: Optional[Arc] = None
    point: Optional[Point] = None


def limit_of_family(surface: Surface, fam: Family, end: int | None = None) -> FamilyLimit:
    """Limit of a fan family whose moving endpoint escapes to an accumulation point.

    The moving endpoint converges to the accumulation point q closing its
    interval in the direction of escape.  The family converges to the arc
    from the fixed endpoint p to q, degenerating when p == q or when the
    two are adjacent.
    """
    from .surface import adjacent as _adjacent

    if not surface.completed:
        raise ValueError("limits of families exist on completed surfaces only")
    p = fam.fixed_endpoint
    if p is None:
        raise ValueError("limit needs a family with a fixed endpoint")
    movings = fam.moving_endpoints
    if len(movings) != 1:
        raise ValueError("limit needs exactly one moving endpoint")
    mov = movings[0]
    ends = []
    if fam.domain.hi is None:
        ends.append(1)
    if fam.domain.lo is None:
        ends.append(-1)
    if not ends:
        raise ValueError("family domain is bounded; no limit to take")
    if end is None:
        if len(ends) > 1:
            raise ValueError("domain unbounded on both sides; pass end=+1 or end=-1")
        end = ends[0]
    if end not in ends:
        raise ValueError(f"domain is bounded on the requested side (end={end})")
    gap, _ = _escape(mov, end, surface.intervals)
    q = Point(surface, gap, None)
    if p == q:
        return FamilyLimit(LimitKind.ACCUMULATION_POINT, point=q)
    if _adjacent(p, q):
        return FamilyLimit(LimitKind.BOUNDARY_SEGMENT)
    return FamilyLimit(LimitKind.ARC, arc=Arc(p, q))


# --- orientation reversal and neighbour scans --------------------------------


def reverse_point(p: Point) -> Point:
    n = p.surface.intervals
    if p.pos is None:
        return Point(p.surface, ((n - p.interval - 1) % n) + 1, None)
    return Point(p.surface, n + 1 - p.interval, -p.pos)


def reverse_arc(a: Arc) -> Arc:
    return Arc(reverse_point(a.a), reverse_point(a.b))


def _reverse_moving(m: Moving, n: int) -> Moving:
    return Moving(n + 1 - m.interval, -m.base, -m.stride)


def _reverse_generator(gen: Generator, n: int) -> Generator:
    if isinstance(gen, Single):
        return Single(reverse_arc(gen.arc))
    e0 = _reverse_moving(gen.e0, n) if isinstance(gen.e0, Moving) else reverse_point(gen.e0)
    e1 = _reverse_moving(gen.e1, n) if isinstance(gen.e1, Moving) else reverse_point(gen.e1)
    return Family(e0, e1, gen.domain)


@lru_cache(maxsize=None)
def reverse_triangulation(t: Triangulation) -> Triangulation:
    n = t.surface.intervals
    return Triangulation(t.surface, tuple(_reverse_generator(g, n) for g in t.generators))


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class Progression:
    """Affine progression of boundary points within one interval."""

    interval: int
    base: int
    stride: int
    domain: IntRange

    def position_range(self) -> IntRange:
        return Moving(self.interval, self.base, self.stride).position_range(self.domain)

    def clip_positions(self, lo: int | None, hi: int | None) -> Optional["Progression"]:
        m = Moving(self.interval, self.base, self.stride)
        params = self.domain.intersect(m.params_with_pos_in(lo, hi))
        if params.is_empty:
            return None
        return Progression(self.interval, self.base, self.stride, params)

    def reverse(self, n: int) -> "Progression":
        return Progression(n + 1 - self.interval, -self.base, -self.stride, self.domain)


@dataclass(frozen=True)
class NeighborScan:
    """Partner points of triangulation arcs at one endpoint, on one side.

    ``extremum`` is the maximum (left scans) or minimum (right scans) in the
    boundary order towards the far endpoint; None when the scan is empty or
    the bound is not attained.  ``empty`` distinguishes the two cases.
    """

    arc: Arc
    endpoint: Point
    side: Side
    singles: tuple[Point, ...]
    progressions: tuple[Progression, ...]
    extremum: Optional[Point]
    empty: bool


def _partners(t: Triangulation, e: Point) -> tuple[list[Point], list[Progression]]:
    singles: list[Point] = []
    progs: list[Progression] = []
    for gen in t.generators:
        if isinstance(gen, Single):
            if gen.arc.has_endpoint(e):
                singles.append(gen.arc.other_endpoint(e))
            continue
        for this, other in ((gen.e0, gen.e1), (gen.e1, gen.e0)):
            if isinstance(this, Point):
                if this == e:
                    assert isinstance(other, Moving)
                    progs.append(Progression(other.interval, other.base, other.stride, gen.domain))
            else:
                if e.pos is not None and e.interval == this.interval:
                    tpar = this.param_for_pos(e.pos)
                    if tpar is not None and gen.domain.contains(tpar):
                        if isinstance(other, Moving):
                            singles.append(Point(e.surface, other.interval, other.pos_at(tpar)))
                        else:
                            singles.append(other)
    return singles, progs


def neighbor_scan(t: Triangulation, a: Arc, endpoint: Point, side: Side) -> NeighborScan:
    """Partner points w of arcs {endpoint, w} in t lying on the given side of a.

    The left side at an endpoint e is the open boundary interval from e to
    the far endpoint; the right side is its complement.  Right scans are
    computed as left scans of the orientation-reversed picture.
    """
    if not t.contains(a):
        raise TriangulationError(f"arc {format_arc(a)} is not in the triangulation")
    if not a.has_endpoint(endpoint):
        raise ValueError("scan endpoint must belong to the arc")
    if side is Side.RIGHT:
        rt = reverse_triangulation(t)
        rscan = neighbor_scan(rt, reverse_arc(a), reverse_point(endpoint), Side.LEFT)
        n = t.surface.intervals
        return NeighborScan(
            arc=a,
            endpoint=endpoint,
            side=Side.RIGHT,
            singles=tuple(reverse_point(p) for p in rscan.singles),
            progressions=tuple(pr.reverse(n) for pr in rscan.progressions),
            extremum=None if rscan.extremum is None else reverse_point(rscan.extremum),
            empty=rscan.empty,
        )

    from .homs import open_interval_segments

    other = a.other_endpoint(endpoint)
    segs = open_interval_segments(endpoint, other)
    raw_singles, raw_progs = _partners(t, endpoint)

    kept_singles: list[Point] = []
    kept_progs: list[Progression] = []
    per_seg: list[tuple[list[int], list[Progression], Optional[Point]]] = []
    for seg in segs:
        if seg[0] == "acc":
            acc = Point(t.surface, seg[1], None)
            hit = acc if acc in raw_singles else None
            if hit is not None:
                kept_singles.append(hit)
            per_seg.append(([], [], hit))
            continue
        _, k, lo, hi = seg
        poss = [p.pos for p in raw_singles if p.pos is not None and p.interval == k
                and (lo is None or p.pos >= lo) and (hi is None or p.pos <= hi)]
        clipped = [pr.clip_positions(lo, hi) for pr in raw_progs if pr.interval == k]
        clipped = [c for c in clipped if c is not None]
        kept_singles.extend(Point(t.surface, k, p) for p in poss)
        kept_progs.extend(clipped)
        per_seg.append((poss, clipped, None))

    extremum: Optional[Point] = None
    for seg, (poss, clipped, acc_hit) in zip(reversed(segs), reversed(per_seg)):
        if acc_hit is not None:
            extremum = acc_hit
            break
        if not poss and not clipped:
            continue
        top: Optional[int] = max(poss) if poss else None
        unbounded = False
        for pr in clipped:
            r = pr.position_range()
            if r.hi is None:
                unbounded = True
                break
            top = r.hi if top is None else max(top, r.hi)
        if unbounded:
            extremum = None
        else:
            extremum = Point(t.surface, seg[1], top)
        break

    empty = not kept_singles and not kept_progs
    return NeighborScan(a, endpoint, Side.LEFT, tuple(kept_singles), tuple(kept_progs), extremum, empty)


# --- JSON round trip ----------------------------------------------------------


def _endpoint_to_json(e: Endpoint):
    if isinstance(e, Moving):
        return {"interval": e.interval, "base": e.base, "stride": e.stride}
    return format_point(e)


def _endpoint_from_json(surface: Surface, obj) -> Endpoint:
    if isinstance(obj, str):
        return parse_point(surface, obj)
    return Moving(int(obj["interval"]), int(obj["base"]), int(obj["stride"]))


def triangulation_to_json(t: Triangulation) -> dict:
    gens = []
    for gen in t.generators:
        if isinstance(gen, Single):
            gens.append({"single": format_arc(gen.arc)})
        else:
            gens.append(
                {
                    "family": {
                        "e0": _endpoint_to_json(gen.e0),
                        "e1": _endpoint_to_json(gen.e1),
                        "domain": [gen.domain.lo, gen.domain.hi],
                    }
                }
            )
    doc = {"surface": t.surface.describe(), "generators": gens}
    if t.certificate.status is CertificateStatus.CERTIFIED_MAXIMAL:
        doc["certificate"] = "maximal"
    elif t.certificate.status is CertificateStatus.WINDOW_CHECKED:
        doc["certificate"] = {"window": [format_point(p) for p in t.certificate.window.points]}
    return doc


def triangulation_from_json(doc: dict) -> Triangulation:
    surface = parse_surface(doc["surface"])
    gens: list[Generator] = []
    for item in doc["generators"]:
        if "single" in item:
            gens.append(Single(parse_arc(surface, item["single"])))
        elif "family" in item:
            f = item["family"]
            lo, hi = f["domain"]
            gens.append(
                Family(
                    _endpoint_from_json(surface, f["e0"]),
                    _endpoint_from_json(surface, f["e1"]),
                    IntRange(None if lo is None else int(lo), None if hi is None else int(hi)),
                )
            )
        else:
            raise ValueError(f"unknown generator record {item!r}")
    cert = UNVERIFIED
    spec = doc.get("certificate")
    if spec == "maximal":
        cert = CERTIFIED_MAXIMAL
    elif isinstance(spec, dict) and "window" in spec:
        pts = tuple(parse_point(surface, s) for s in spec["window"])
        cert = Certificate(CertificateStatus.WINDOW_CHECKED, Window(surface, pts))
    return Triangulation(surface, tuple(gens), cert)
