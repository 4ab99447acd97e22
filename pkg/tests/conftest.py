import itertools

from hypothesis import settings
from hypothesis import strategies as st

from infgon.arcs import Arc
from infgon.surface import Point, Surface

settings.register_profile("fast", max_examples=60, deadline=None)
settings.load_profile("fast")

completed_surfaces = st.builds(Surface, st.just(True), st.integers(1, 4))
uncompleted_surfaces = st.builds(Surface, st.just(False), st.integers(1, 4))
any_surfaces = st.one_of(completed_surfaces, uncompleted_surfaces)


@st.composite
def points_on(draw, surface: Surface, bound: int = 8):
    k = draw(st.integers(1, surface.intervals))
    if surface.completed and draw(st.integers(0, 4)) == 0:
        return Point(surface, k, None)
    return Point(surface, k, draw(st.integers(-bound, bound)))


@st.composite
def surface_and_points(draw, n_points: int, completed_only: bool = False):
    surface = draw(completed_surfaces if completed_only else any_surfaces)
    pts = [draw(points_on(surface)) for _ in range(n_points)]
    return (surface, pts)


@st.composite
def arcs_on(draw, surface: Surface, bound: int = 8):
    p = draw(points_on(surface, bound))
    q = draw(points_on(surface, bound))
    try:
        return Arc(p, q)
    except ValueError:
        # repair the draw: two steps past p is always distinct, non-adjacent
        anchor = p.pos if p.pos is not None else 0
        return Arc(p, Point(surface, p.interval, anchor + 2))


@st.composite
def surface_and_arcs(draw, n_arcs: int, completed_only: bool = False):
    surface = draw(completed_surfaces if completed_only else any_surfaces)
    return (surface, [draw(arcs_on(surface)) for _ in range(n_arcs)])


def all_window_points(surface: Surface, bound: int):
    pts = []
    for k in range(1, surface.intervals + 1):
        pts.extend(Point(surface, k, i) for i in range(-bound, bound + 1))
        if surface.completed:
            pts.append(Point(surface, k, None))
    return pts


def all_window_arcs(surface: Surface, bound: int):
    arcs = []
    for p, q in itertools.combinations(all_window_points(surface, bound), 2):
        try:
            arcs.append(Arc(p, q))
        except ValueError:
            continue
    return arcs
