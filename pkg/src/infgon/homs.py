"""Morphism and extension dimensions for arcs, and the factorization oracle.

All morphism spaces here are zero- or one-dimensional, so the engine only
ever reports dimensions together with combinatorial witnesses; no field
scalars are materialized.

On an uncompleted surface, a nonzero map g -> d exists exactly when g
crosses the predecessor shift of d.  On a completed surface the nonzero
maps are classified by `ext_case`.  The restricted extension `ext_dim`
keeps only extensions whose connecting map factors through a persistent
(odd-interval) arc upstairs; `ext_dim_oracle` recomputes it from that
definition, never consulting `ext_dim`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .arcs import Arc, ArcClass, canonical_lift, cross_transverse, shift_arc, squeeze
from .surface import MixedSurfaceError, Point, Surface, _orient, adjacent, between, step


class ExtCase(Enum):
    """Why a completed arc pair carries a one-step extension, if it does."""

    CROSSING = "crossing"
    CLOCKWISE_AT_ACCUMULATION = "clockwise-at-accumulation"
    DOUBLE_ACCUMULATION_SELF = "double-accumulation-self"
    NONE = "none"


@dataclass(frozen=True)
class BoundaryInterval:
    """Closed anticlockwise boundary interval [start -> end].

    When start == end the interval is the single point.  Otherwise it is
    every point met walking anticlockwise from start to end, inclusive.
    """

    start: Point
    end: Point

    def contains(self, w: Point) -> bool:
        if self.start == self.end:
            return w == self.start
        if w == self.start or w == self.end:
            return True
        return _orient(self.start.circuit_key(), w.circuit_key(), self.end.circuit_key())

    def segments(self) -> list[tuple]:
        """Decompose into ('run', interval, lo, hi) and ('acc', interval) pieces, in order.

        lo/hi are inclusive position bounds; None means unbounded on that side.
        """
        return _segments(self.start, self.end, True, True)

    def position_ranges(self, interval: int) -> list[tuple[int | None, int | None]]:
        """Position ranges of the given interval's regular points inside the interval."""
        return [(seg[2], seg[3]) for seg in self.segments() if seg[0] == "run" and seg[1] == interval]

    def contains_accumulation(self, interval: int) -> bool:
        return any(seg == ("acc", interval) for seg in self.segments())


def _surface_slots(surface: Surface) -> list[int]:
    if surface.completed:
        return list(range(1, 2 * surface.intervals + 1))
    return list(range(1, 2 * surface.intervals, 2))


def _segments(x: Point, y: Point, closed_start: bool, closed_end: bool) -> list[tuple]:
    """Ordered decomposition of the boundary interval from x to y (anticlockwise).

    Used both for closed sweep intervals and for the open intervals cut off by
    an arc's endpoints.
    """
    surface = x.surface
    sx, px = x.circuit_key()
    sy, py = y.circuit_key()
    out: list[tuple] = []

    if x == y:
        if not (closed_start or closed_end):
            raise ValueError("open interval with equal endpoints is empty")
        if x.pos is None:
            return [("acc", x.interval)]
        return [("run", x.interval, x.pos, x.pos)]

    def head() -> None:
        if x.pos is None:
            if closed_start:
                out.append(("acc", x.interval))
        else:
            lo = px if closed_start else px + 1
            out.append(("run", x.interval, lo, None))

    def tail() -> None:
        if y.pos is None:
            if closed_end:
                out.append(("acc", y.interval))
        else:
            hi = py if closed_end else py - 1
            out.append(("run", y.interval, None, hi))

    if sx == sy:
        # Same accumulation slot would force x == y, so both points are regular.
        if px < py:
            lo = px if closed_start else px + 1
            hi = py if closed_end else py - 1
            return [("run", x.interval, lo, hi)] if lo <= hi else []
        # px > py: the interval wraps nearly the whole circle
        head()
        slots = _surface_slots(surface)
        i = slots.index(sx)
        for s in slots[i + 1 :] + slots[:i]:
            out.append(("acc", s // 2) if s % 2 == 0 else ("run", (s + 1) // 2, None, None))
        tail()
        return [seg for seg in out if seg[0] == "acc" or seg[2] is None or seg[3] is None or seg[2] <= seg[3]]

    head()
    slots = _surface_slots(surface)
    i, j = slots.index(sx), slots.index(sy)
    middle = slots[i + 1 : j] if i < j else slots[i + 1 :] + slots[:j]
    for s in middle:
        out.append(("acc", s // 2) if s % 2 == 0 else ("run", (s + 1) // 2, None, None))
    tail()
    return [seg for seg in out if seg[0] == "acc" or seg[2] is None or seg[3] is None or seg[2] <= seg[3]]


def open_interval_segments(x: Point, y: Point) -> list[tuple]:
    """Segments of the open anticlockwise interval (x, y), endpoints excluded."""
    if x == y:
        raise ValueError("open interval needs distinct endpoints")
    return _segments(x, y, False, False)


def hom_dim(g: Arc, d: Arc) -> int:
    """Dimension (0 or 1) of the morphism space g -> d."""
    if g.surface != d.surface:
        raise MixedSurfaceError("arcs on different surfaces")
    if g.surface.completed:
        return 0 if ext_case(g, shift_arc(d, -1)) is ExtCase.NONE else 1
    return 1 if cross_transverse(g, shift_arc(d, -1)) else 0


def ext_case(g: Arc, d: Arc) -> ExtCase:
    """Classify whether the completed pair (g, d) carries an extension of d by g.

    Crossing pairs always do.  Distinct arcs meeting at an accumulation
    point p carry one exactly when the angle from g to d at p, seen from
    inside the disc, turns clockwise; that holds for at most one ordering.
    An arc with both endpoints at accumulation points extends itself.
    """
    if g.surface != d.surface:
        raise MixedSurfaceError("arcs on different surfaces")
    if not g.surface.completed:
        raise ValueError("ext_case applies to completed arcs")
    if cross_transverse(g, d):
        return ExtCase.CROSSING
    if g == d:
        if g.a.pos is None and g.b.pos is None:
            return ExtCase.DOUBLE_ACCUMULATION_SELF
        return ExtCase.NONE
    shared = [p for p in g.endpoints if d.has_endpoint(p)]
    if len(shared) == 1 and shared[0].pos is None:
        p = shared[0]
        a = g.other_endpoint(p)
        b = d.other_endpoint(p)
        if a != b and _orient(p.circuit_key(), b.circuit_key(), a.circuit_key()):
            return ExtCase.CLOCKWISE_AT_ACCUMULATION
    return ExtCase.NONE


def ext_ambient_dim(g: Arc, d: Arc) -> int:
    """Extension dimension before restricting: 0 or 1 per `ext_case`."""
    return 0 if ext_case(g, d) is ExtCase.NONE else 1


def ext_dim(g: Arc, d: Arc) -> int:
    """Restricted extension dimension between completed arcs: 1 iff they cross."""
    if g.surface != d.surface:
        raise MixedSurfaceError("arcs on different surfaces")
    if not g.surface.completed:
        raise ValueError("ext_dim applies to completed arcs")
    return 1 if cross_transverse(g, d) else 0


def sweep_intervals(g: Arc, d: Arc) -> tuple[BoundaryInterval, BoundaryInterval]:
    """The two boundary intervals swept when rotating g clockwise onto d.

    Defined for uncompleted arcs with a nonzero map g -> d.  An arc factors
    a nonzero map g -> d exactly when it has one endpoint in each returned
    interval.  The strict interleaving witness below is unique up to
    swapping the two intervals.
    """
    if g.surface.completed:
        raise ValueError("sweep_intervals applies to uncompleted arcs")
    if hom_dim(g, d) != 1:
        raise ValueError("sweep_intervals needs a nonzero morphism g -> d")
    for x0, x1 in ((g.a, g.b), (g.b, g.a)):
        for y0, y1 in ((d.a, d.b), (d.b, d.a)):
            p1 = step(y1, -1).circuit_key()
            p2 = step(y0, -1).circuit_key()
            kx0, kx1 = x0.circuit_key(), x1.circuit_key()
            keys = {kx0, p1, kx1, p2}
            if len(keys) == 4 and _orient(kx0, p1, kx1) and _orient(kx0, kx1, p2):
                return (BoundaryInterval(y0, x0), BoundaryInterval(y1, x1))
    raise AssertionError("no strict interleaving witness despite nonzero morphism")


def sweep_contains(sweep: tuple[BoundaryInterval, BoundaryInterval], arc: Arc) -> bool:
    """True iff the arc has one endpoint in each of the two swept intervals."""
    i0, i1 = sweep
    return (i0.contains(arc.a) and i1.contains(arc.b)) or (i0.contains(arc.b) and i1.contains(arc.a))


def _ranges_admit_separated_pair(r0: tuple, r1: tuple) -> bool:
    """Whether positions p in r0 and q in r1 exist with |p - q| >= 2."""
    lo0, hi0 = r0
    lo1, hi1 = r1
    if hi0 is None or lo1 is None or hi0 - lo1 >= 2:
        return True
    return hi1 is None or lo0 is None or hi1 - lo0 >= 2


def _collapsing_arc_in_sweep(i0: BoundaryInterval, i1: BoundaryInterval, surface: Surface) -> bool:
    for k in range(2, surface.intervals + 1, 2):
        for r0 in i0.position_ranges(k):
            for r1 in i1.position_ranges(k):
                if _ranges_admit_separated_pair(r0, r1):
                    return True
    return False


def _persistent_arc_in_sweep(i0: BoundaryInterval, i1: BoundaryInterval, surface: Surface) -> bool:
    hits0 = {k: i0.position_ranges(k) for k in range(1, surface.intervals + 1, 2)}
    hits1 = {k: i1.position_ranges(k) for k in range(1, surface.intervals + 1, 2)}
    odd0 = [k for k, rs in hits0.items() if rs]
    odd1 = [k for k, rs in hits1.items() if rs]
    if not odd0 or not odd1:
        return False
    if any(k0 != k1 for k0 in odd0 for k1 in odd1):
        return True
    k = odd0[0]
    return any(_ranges_admit_separated_pair(r0, r1) for r0 in hits0[k] for r1 in hits1[k])


def factors_over(g: Arc, d: Arc, family: ArcClass | None = None) -> bool:
    """Whether a nonzero map g -> d factors through an arc of the given class.

    ``family`` None means all arcs.  Membership is decided symbolically on
    the two swept boundary intervals; the intervals may hold infinitely many
    points, so no arc enumeration happens.
    """
    sweep = sweep_intervals(g, d)
    i0, i1 = sweep
    if family is None:
        return True  # d itself (or g, for the identity) always qualifies
    if family is ArcClass.COLLAPSING:
        return _collapsing_arc_in_sweep(i0, i1, g.surface)
    if family is ArcClass.PERSISTENT:
        return _persistent_arc_in_sweep(i0, i1, g.surface)
    raise ValueError(f"unsupported arc family {family}")


@lru_cache(maxsize=None)
def _oracle_lift(g: Arc) -> Arc:
    return canonical_lift(g)


@lru_cache(maxsize=None)
def _oracle_shifted_lift(d: Arc) -> Arc:
    return shift_arc(canonical_lift(d), 1)


def ext_dim_oracle(g: Arc, d: Arc, lift_g: Arc | None = None, lift_d: Arc | None = None) -> int:
    """Recompute the restricted extension dimension from first principles.

    A restricted extension of d by g is a nonzero map g -> (shift of d) in
    the completed picture whose lift upstairs factors through a persistent
    arc while surviving the collapse (no collapsing arc can factor it).
    Both conditions are decided on the swept boundary intervals of the
    lifted pair.  Optional explicit lifts override the canonical ones; the
    answer does not depend on the choice.
    """
    if g.surface != d.surface:
        raise MixedSurfaceError("arcs on different surfaces")
    if lift_g is not None and squeeze(lift_g) != g:
        raise ValueError("lift_g does not lie over g")
    if lift_d is not None and squeeze(lift_d) != d:
        raise ValueError("lift_d does not lie over d")
    if ext_case(g, d) is ExtCase.NONE:
        return 0
    lg = _oracle_lift(g) if lift_g is None else lift_g
    sld = _oracle_shifted_lift(d) if lift_d is None else shift_arc(lift_d, 1)
    if hom_dim(lg, sld) != 1:
        return 0
    i0, i1 = sweep_intervals(lg, sld)
    if _collapsing_arc_in_sweep(i0, i1, lg.surface):
        return 0
    return 1 if _persistent_arc_in_sweep(i0, i1, lg.surface) else 0


@dataclass(frozen=True)
class ExchangeSides:
    """Sides of the quadrilateral spanned by two crossing arcs.

    With the crossing pair (g, gp), ``alpha`` holds the two sides of the
    triangles realizing gp -> alpha1 (+) alpha2 -> g, and ``beta`` the sides
    for g -> beta1 (+) beta2 -> gp.  A side is None when its endpoints are
    adjacent, i.e. the side is a boundary segment.
    """

    alpha: tuple[Arc | None, Arc | None]
    beta: tuple[Arc | None, Arc | None]

    def all_sides(self) -> tuple[Arc | None, ...]:
        return (*self.alpha, *self.beta)


def _side(p: Point, q: Point) -> Arc | None:
    if adjacent(p, q):
        return None
    return Arc(p, q)


def exchange_triangles(g: Arc, gp: Arc) -> ExchangeSides:
    """Quadrilateral sides for a crossing pair, split by exchange direction.

    Walking anticlockwise from an endpoint x of g the corners alternate
    x, u, y, v between the two arcs.  Alpha sides pair each endpoint of g
    with its clockwise neighbour among gp's endpoints; beta sides pair it
    with the anticlockwise neighbour.
    """
    if not cross_transverse(g, gp):
        raise ValueError("exchange_triangles needs a crossing pair")
    x, y = g.a, g.b
    u, v = gp.a, gp.b
    if not between(x, u, y):
        u, v = v, u
    alpha = (_side(x, v), _side(y, u))
    beta = (_side(x, u), _side(y, v))
    return ExchangeSides(alpha=alpha, beta=beta)
