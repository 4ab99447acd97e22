"""Exact feasibility for linear inequalities in at most two integer unknowns.

The triangulation store presents every pairwise question about affine arc
families (do two instances cross, coincide, share an endpoint?) as a small
system of strict integer inequalities in the two family parameters.  This
module decides such systems exactly, including the thin-strip cases where
rational relaxation admits points but the integers do not, and returns a
witness assignment when one exists.

Inequalities are written a*i + b*j + c >= 0.  Symbolic boundary points are
(slot, affine) pairs: slot is the circuit slot of the interval, affine is
(coef_i, coef_j, const) for a regular point's position, or None for an
accumulation point (which is the unique point of its slot).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Optional, Sequence


class LinIneq(NamedTuple):
    a: int  # coefficient on i
    b: int  # coefficient on j
    c: int  # constant

    def eval(self, i: int, j: int) -> int:
        return self.a * i + self.b * j + self.c


@dataclass(frozen=True)
class IntRange:
    """Closed integer range; None bound means unbounded on that side."""

    lo: int | None
    hi: int | None

    @property
    def is_empty(self) -> bool:
        return self.lo is not None and self.hi is not None and self.lo > self.hi

    @property
    def is_bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    def contains(self, v: int) -> bool:
        return (self.lo is None or v >= self.lo) and (self.hi is None or v <= self.hi)

    def intersect(self, other: "IntRange") -> "IntRange":
        lo = self.lo if other.lo is None else (other.lo if self.lo is None else max(self.lo, other.lo))
        hi = self.hi if other.hi is None else (other.hi if self.hi is None else min(self.hi, other.hi))
        return IntRange(lo, hi)

    def iterate(self):
        if not self.is_bounded:
            raise ValueError("cannot iterate an unbounded range")
        return range(self.lo, self.hi + 1)

    def width_at_most(self, n: int) -> bool:
        return self.is_bounded and self.hi - self.lo + 1 <= n


FULL_RANGE = IntRange(None, None)
EMPTY_RANGE = IntRange(0, -1)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def range_ineqs(r: IntRange, var: int) -> list[LinIneq]:
    out = []
    if r.lo is not None:
        out.append(LinIneq(1, 0, -r.lo) if var == 0 else LinIneq(0, 1, -r.lo))
    if r.hi is not None:
        out.append(LinIneq(-1, 0, r.hi) if var == 0 else LinIneq(0, -1, r.hi))
    return out


def solve_1var(ineqs: Sequence[tuple[int, int]]) -> Optional[int]:
    """Find an integer i with a*i + c >= 0 for every (a, c), or None."""
    r = solve_1var_range(ineqs)
    if r is None:
        return None
    if r.lo is not None:
        return r.lo
    if r.hi is not None:
        return r.hi
    return 0


def solve_1var_range(ineqs: Sequence[tuple[int, int]]) -> Optional[IntRange]:
    """The full solution range of a one-variable system, or None when empty."""
    lo: int | None = None
    hi: int | None = None
    for a, c in ineqs:
        if a == 0:
            if c < 0:
                return None
        elif a > 0:
            bound = _ceil_div(-c, a)
            lo = bound if lo is None else max(lo, bound)
        else:
            bound = c // (-a)
            hi = bound if hi is None else min(hi, bound)
    if lo is not None and hi is not None and lo > hi:
        return None
    return IntRange(lo, hi)


def _mod_inverse(a: int, m: int) -> int:
    return pow(a % m, -1, m)


def solve_2var(
    ineqs: Sequence[LinIneq],
    i_range: IntRange = FULL_RANGE,
    j_range: IntRange = FULL_RANGE,
) -> Optional[tuple[int, int]]:
    """Find integers (i, j) satisfying every inequality, or None.

    Variable elimination with dark shadows, falling back to modular
    splinters when coefficients exceed one, so the answer is exact for
    arbitrary integer coefficients.
    """
    system = list(ineqs) + range_ineqs(i_range, 0) + range_ineqs(j_range, 1)
    i_only: list[tuple[int, int]] = []
    lowers: list[tuple[int, int, int]] = []  # b*j >= -a*i - c  stored as (b, a, c)
    uppers: list[tuple[int, int, int]] = []  # d*j <= a*i + c   stored as (d, a, c)
    for q in system:
        if q.b == 0:
            if q.a == 0:
                if q.c < 0:
                    return None
            else:
                i_only.append((q.a, q.c))
        elif q.b > 0:
            lowers.append((q.b, q.a, q.c))
        else:
            uppers.append((-q.b, q.a, q.c))

    def j_for(i: int) -> Optional[int]:
        jlo: int | None = None
        jhi: int | None = None
        for b, a, c in lowers:
            bound = _ceil_div(-a * i - c, b)
            jlo = bound if jlo is None else max(jlo, bound)
        for d, a, c in uppers:
            bound = (a * i + c) // d
            jhi = bound if jhi is None else min(jhi, bound)
        if jlo is not None and jhi is not None and jlo > jhi:
            return None
        if jlo is not None:
            return jlo
        if jhi is not None:
            return jhi
        return 0

    if not lowers or not uppers:
        i = solve_1var(i_only)
        if i is None:
            return None
        j = j_for(i)
        return None if j is None else (i, j)

    dark = list(i_only)
    exact = True
    for b, aL, cL in lowers:
        for d, aU, cU in uppers:
            # real shadow: b*(aU*i + cU) - d*(-aL*i - cL) >= 0
            coef = b * aU + d * aL
            const = b * cU + d * cL
            slack = (b - 1) * (d - 1)
            dark.append((coef, const - slack))
            if slack:
                exact = False
    i = solve_1var(dark)
    if i is not None:
        j = j_for(i)
        if j is not None:
            return (i, j)
    if exact:
        return None

    # Splinter search: any solution missed by the dark shadow has
    # b*j = -aL*i - cL + t for some lower bound and small offset t.
    dmax = max(d for d, _, _ in uppers)
    for b, aL, cL in lowers:
        if b == 1:
            continue
        t_max = (b * dmax - b - dmax) // dmax
        for t in range(t_max + 1):
            g = gcd(aL % b, b) if aL % b else b
            rhs = (t - cL) % b
            if rhs % g:
                continue
            if aL % b == 0:
                if rhs:
                    continue
                residue, modulus = 0, 1
            else:
                modulus = b // g
                residue = ((rhs // g) * _mod_inverse((aL % b) // g, modulus)) % modulus
            # substitute i = residue + modulus*s and b*j = -aL*i - cL + t
            sub: list[tuple[int, int]] = []
            ok = True
            for q in system:
                a2 = q.a * b - q.b * aL
                c2 = q.c * b + q.b * (t - cL)
                coef_s = a2 * modulus
                const = a2 * residue + c2
                if coef_s == 0:
                    if const < 0:
                        ok = False
                        break
                else:
                    sub.append((coef_s, const))
            if not ok:
                continue
            s = solve_1var(sub)
            if s is None:
                continue
            i = residue + modulus * s
            num = -aL * i - cL + t
            if num % b:
                continue
            j = num // b
            if all(q.eval(i, j) >= 0 for q in system):
                return (i, j)
    return None


# --- symbolic boundary points -------------------------------------------

SymPoint = tuple  # (slot: int, affine: tuple[int, int, int] | None)


def sym_lt(p: SymPoint, q: SymPoint):
    """Strict circuit-key comparison; True/False when decided, else a LinIneq."""
    sp, ap = p
    sq, aq = q
    if sp != sq:
        return sp < sq
    if ap is None or aq is None:
        return False  # a slot holds at most one accumulation point
    return LinIneq(aq[0] - ap[0], aq[1] - ap[1], aq[2] - ap[2] - 1)


def sym_eq_atoms(p: SymPoint, q: SymPoint):
    """Conjunction of atoms expressing p == q, or False when impossible."""
    sp, ap = p
    sq, aq = q
    if sp != sq:
        return False
    if ap is None and aq is None:
        return []
    if ap is None or aq is None:
        return False
    diff = (aq[0] - ap[0], aq[1] - ap[1], aq[2] - ap[2])
    return [LinIneq(*diff), LinIneq(-diff[0], -diff[1], -diff[2])]


def _cyc3(a: SymPoint, b: SymPoint, c: SymPoint) -> list[list]:
    lt = sym_lt
    return [[lt(a, b), lt(b, c)], [lt(b, c), lt(c, a)], [lt(c, a), lt(a, b)]]


def orient_conjunctions(a: SymPoint, b: SymPoint, c: SymPoint) -> list[list]:
    """DNF for strict anticlockwise orientation of three symbolic points."""
    return _cyc3(a, b, c)


def cross_conjunctions(pair_a: tuple[SymPoint, SymPoint], pair_b: tuple[SymPoint, SymPoint]) -> list[list]:
    """DNF whose satisfiability states that the two symbolic arcs cross.

    Each conjunction lists atoms (bool or LinIneq); strict cyclic
    orientation of distinct points already forces all four endpoints
    pairwise distinct, so no separate disequalities are needed.
    """
    p1, p2 = pair_a
    q1, q2 = pair_b
    out = []
    for r, s in ((q1, q2), (q2, q1)):
        for c1 in _cyc3(p1, r, p2):
            for c2 in _cyc3(p2, s, p1):
                out.append(c1 + c2)
    return out


def conjunction_model(
    atoms: Sequence,
    i_range: IntRange,
    j_range: IntRange,
    extra: Sequence[LinIneq] = (),
) -> Optional[tuple[int, int]]:
    ineqs: list[LinIneq] = list(extra)
    for t in atoms:
        if t is False:
            return None
        if t is True:
            continue
        ineqs.append(t)
    return solve_2var(ineqs, i_range, j_range)
