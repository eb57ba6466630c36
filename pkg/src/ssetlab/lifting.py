"""Right-lifting-property engine.

``extend`` solves extension problems by backtracking over the missing
non-degenerate cells in increasing dimension; candidate images for a cell are
exactly the formal simplices of the target whose faces match the already
forced values (the whole boundary is forced, since lower dimensions are
assigned first), read off a face-tuple index.  The same search with no pinned
cells enumerates all simplicial maps.

A refusal is exhaustive at the stored truncation.  When the target is a
truncation of a larger object and the problem reaches above it, "no lift" is
reported as ``undecided`` rather than as a refutation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .core import Cell, Formal, Inclusion, SMap, SSet, SimplicialError, degenerate
from .build import pointwise_cylinder, Cylinder


class EnumerationCap(SimplicialError):
    """Raised when map enumeration exceeds its configured cap."""


FOUND = "found"
NONE = "none"
UNDECIDED = "undecided"


@dataclass
class LiftProblem:
    """An extension problem: fill the square u = v . incl."""

    inclusion: Inclusion   # A -> B
    smap: SMap             # A -> X

    def __post_init__(self):
        if self.inclusion.domain is not self.smap.domain:
            if (self.inclusion.domain.cells != self.smap.domain.cells
                    or self.inclusion.domain.faces != self.smap.domain.faces):
                raise SimplicialError("lift problem legs must share their domain")

    @property
    def target(self) -> SSet:
        return self.smap.codomain


@dataclass
class LiftResult:
    status: str
    lift: Optional[SMap] = None


def _pinned_assignment(p: LiftProblem) -> Dict[Cell, Formal]:
    pinned: Dict[Cell, Formal] = {}
    for a in p.inclusion.domain.all_cells():
        img = p.inclusion.map.assignment[a]
        pinned[img.base] = p.smap.assignment[a]
    return pinned


def _solutions(B: SSet, X: SSet, pinned: Dict[Cell, Formal]) -> Iterator[Dict[Cell, Formal]]:
    """All face-consistent total assignments extending ``pinned``,
    in canonical order."""
    cells = [c for c in sorted(B.all_cells()) if c not in pinned]
    assign = dict(pinned)

    def candidates(c: Cell) -> Sequence[Formal]:
        if c.dim == 0:
            return X.formals(0)
        key = tuple(assign[f.base] if not f.word else
                    degenerate(assign[f.base], f.word)
                    for f in B.faces[c])
        return X.extension_index(c.dim).get(key, ())

    def go(k: int) -> Iterator[Dict[Cell, Formal]]:
        if k == len(cells):
            yield dict(assign)
            return
        c = cells[k]
        for cand in candidates(c):
            assign[c] = cand
            yield from go(k + 1)
            del assign[c]

    yield from go(0)


def extend(p: LiftProblem) -> LiftResult:
    """Search for a filler of the lift problem.

    The returned map is re-validated.  Absence means no filler exists among
    maps into the stored truncation of the target; when the target is
    truncated and the problem reaches above that bound the verdict is
    ``undecided`` instead of ``none``.
    """
    B, X = p.inclusion.codomain, p.target
    pinned = _pinned_assignment(p)
    for sol in _solutions(B, X, pinned):
        lift = SMap(B, X, sol, check=False)
        lift.validate()
        return LiftResult(FOUND, lift)
    missing_high = any(c.dim > X.truncation for c in B.all_cells()
                       if c not in pinned)
    if X.truncated and missing_high:
        return LiftResult(UNDECIDED)
    return LiftResult(NONE)


def extensions(p: LiftProblem, limit: Optional[int] = None) -> List[SMap]:
    """All fillers (up to ``limit``), for unique-filler checks."""
    B, X = p.inclusion.codomain, p.target
    out = []
    for sol in _solutions(B, X, _pinned_assignment(p)):
        out.append(SMap(B, X, sol, check=False))
        if limit is not None and len(out) >= limit:
            break
    return out


def iter_maps(A: SSet, X: SSet) -> Iterator[SMap]:
    """All simplicial maps A -> X, duplicate-free, in canonical order."""
    for sol in _solutions(A, X, {}):
        yield SMap(A, X, sol, check=False)


def enumerate_maps(A: SSet, X: SSet, cap: Optional[int] = None) -> List[SMap]:
    out = []
    for m in iter_maps(A, X):
        out.append(m)
        if cap is not None and len(out) > cap:
            raise EnumerationCap(
                f"more than {cap} maps from {A!r} to {X!r}")
    return out


# ---------------------------------------------------------------------------
# Fibrancy reports
# ---------------------------------------------------------------------------


@dataclass
class InclusionCheck:
    label: str
    verdict: str                       # "pass" | "fail" | "undecided"
    counterexample: Optional[LiftProblem] = None
    maps_checked: int = 0


@dataclass
class FibrancyReport:
    object_name: str
    family_name: str
    bounds: Dict[str, object]
    checks: List[InclusionCheck] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if any(c.verdict == "fail" for c in self.checks):
            return "fail"
        if any(c.verdict == "undecided" for c in self.checks):
            return "undecided"
        return "pass"

    def first_counterexample(self) -> Optional[LiftProblem]:
        for c in self.checks:
            if c.verdict == "fail":
                return c.counterexample
        return None


def check_inclusion(X: SSet, incl: Inclusion, label: str = "",
                    cap: Optional[int] = None) -> InclusionCheck:
    """Quantify over all maps of the inclusion's domain into X and extend."""
    verdict = "pass"
    counterexample = None
    count = 0
    for u in iter_maps(incl.domain, X):
        count += 1
        if cap is not None and count > cap:
            raise EnumerationCap(f"more than {cap} horn maps for {label}")
        res = extend(LiftProblem(incl, u))
        if res.status == NONE:
            verdict = "fail"
            counterexample = LiftProblem(incl, u)
            break
        if res.status == UNDECIDED and verdict == "pass":
            verdict = "undecided"
            counterexample = LiftProblem(incl, u)
    return InclusionCheck(label, verdict, counterexample, count)


def has_rlp(X: SSet, family: Sequence[Tuple[str, Inclusion]],
            object_name: str = "?", family_name: str = "?",
            bounds: Optional[Dict[str, object]] = None,
            stop_on_fail: bool = True) -> FibrancyReport:
    """Check the right lifting property of X against a labeled family.

    ``family`` is a sequence of (label, inclusion) pairs; the report carries
    one verdict per inclusion, each fail with a replayable counterexample.
    """
    report = FibrancyReport(object_name, family_name, dict(bounds or {}))
    for label, incl in family:
        chk = check_inclusion(X, incl, label)
        report.checks.append(chk)
        if chk.verdict == "fail" and stop_on_fail:
            break
    return report


# ---------------------------------------------------------------------------
# Bounded homotopy
# ---------------------------------------------------------------------------


def homotopy_step(iota: Inclusion, f: SMap, g: SMap,
                  cyl: Optional[Cylinder] = None) -> Optional[SMap]:
    """A single homotopy from f to g through the pointwise cylinder of iota,
    or None."""
    if f.domain is not g.domain or f.codomain is not g.codomain:
        raise SimplicialError("homotopy endpoints must be parallel maps")
    A, X = f.domain, f.codomain
    if cyl is None:
        cyl = pointwise_cylinder(iota, A)
    pinned: Dict[Cell, Formal] = {}
    for c in A.all_cells():
        pinned[cyl.end0.map.assignment[c].base] = f.assignment[c]
        pinned[cyl.end1.map.assignment[c].base] = g.assignment[c]
    for sol in _solutions(cyl.sset, X, pinned):
        h = SMap(cyl.sset, X, sol, check=False)
        h.validate()
        return h
    return None


def homotopic_bounded(iota: Inclusion, f: SMap, g: SMap, bound: int) -> bool:
    """Whether f and g are joined by a zigzag of at most ``bound`` homotopies.

    Closes under zigzags by enumerating all intermediate maps.
    """
    if f == g:
        return True
    A, X = f.domain, f.codomain
    cyl = pointwise_cylinder(iota, A)
    all_maps = list(iter_maps(A, X))
    keyed = {m.key(): m for m in all_maps}
    start, goal = f.key(), g.key()
    if start not in keyed or goal not in keyed:
        raise SimplicialError("endpoints are not maps of the shared domain")
    step_cache: Dict[Tuple[tuple, tuple], bool] = {}

    def joined(a: tuple, b: tuple) -> bool:
        key = (a, b) if a <= b else (b, a)
        hit = step_cache.get(key)
        if hit is None:
            hit = (homotopy_step(iota, keyed[key[0]], keyed[key[1]], cyl) is not None
                   or homotopy_step(iota, keyed[key[1]], keyed[key[0]], cyl) is not None)
            step_cache[key] = hit
        return hit

    frontier = {start}
    seen = {start}
    for _ in range(bound):
        nxt = set()
        for a in frontier:
            for b in keyed:
                if b in seen:
                    continue
                if joined(a, b):
                    if b == goal:
                        return True
                    nxt.add(b)
        seen |= nxt
        frontier = nxt
        if not frontier:
            break
    return goal in seen


# ---------------------------------------------------------------------------
# Retract verification
# ---------------------------------------------------------------------------


def verify_retract(inner: Inclusion, outer: Inclusion,
                   s: Tuple[SMap, SMap], r: Tuple[SMap, SMap]) -> bool:
    """Check that ``inner`` is a retract of ``outer``.

    s = (s_dom, s_cod) and r = (r_dom, r_cod) must form commuting squares
    with r . s = id on both objects.
    """
    s_dom, s_cod = s
    r_dom, r_cod = r
    A1, B1 = inner.domain, inner.codomain
    if (s_dom.domain is not A1 or s_cod.domain is not B1
            or r_dom.codomain is not A1 or r_cod.codomain is not B1
            or s_dom.codomain is not outer.domain
            or s_cod.codomain is not outer.codomain
            or r_dom.domain is not outer.domain
            or r_cod.domain is not outer.codomain):
        raise SimplicialError("retract square endpoints do not line up")
    for m in (s_dom, s_cod, r_dom, r_cod):
        if not m.is_valid():
            return False
    if s_dom.then(outer.map).assignment != inner.map.then(s_cod).assignment:
        return False
    if outer.map.then(r_cod).assignment != r_dom.then(inner.map).assignment:
        return False
    if s_dom.then(r_dom).assignment != {c: Formal(c) for c in A1.all_cells()}:
        return False
    if s_cod.then(r_cod).assignment != {c: Formal(c) for c in B1.all_cells()}:
        return False
    return True
