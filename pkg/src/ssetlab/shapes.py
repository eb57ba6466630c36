"""Catalog of named objects: J, K, pinched/augmented horns, unordered
triangulations and their augmented versions, composition/pinched/inverting
tilings, special horns, isoplexes and iso-horns, the two-cycle complex and
its boundary family, and the four-triangle example T.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .cat import free_iso_cat, inverted_interval_cat
from .core import (Cell, Formal, Inclusion, SMap, SSet, SimplicialError,
                   face_closure, identity_map, subcomplex,
                   word_from_collapse_set)
from .build import (GlueResult, ProductResult, boundary, edge_map, glue_edge,
                    horn, generalized_horn, nerve, product, pushout,
                    rename_cells, simplex_chain_formal, spine,
                    standard_simplex, subset_name, zero_skeleton)


# ---------------------------------------------------------------------------
# J and K
# ---------------------------------------------------------------------------


def build_J(D: int) -> SSet:
    """The nerve of the free-living isomorphism, truncated at D.

    Exactly two non-degenerate cells in every dimension; vertices "0", "1",
    with "u" = 0 -> 1 and "v" = 1 -> 0.
    """
    if D < 1:
        raise SimplicialError("J needs truncation >= 1")
    J = nerve(free_iso_cat(), D)
    names = {}
    for c in J.all_cells():
        if c.dim >= 1:
            names[c] = c.name.replace("0>1", "u").replace("1>0", "v")
    return rename_cells(J, names)


def j_edge(J: SSet) -> Inclusion:
    """The inclusion Delta[1] -> J picking the 0 -> 1 edge."""
    return Inclusion(edge_map(J, Formal(Cell(1, "u"))))


@dataclass
class NamedK:
    sset: SSet
    kappa: Inclusion   # Delta[1] -> K, the glued-in edge a -> b
    f_edge: Cell       # right inverse, b -> a  (kappa . f = id_b)
    g_edge: Cell       # left inverse,  b -> a  (g . kappa = id_a)


def pinched_2_simplex() -> GlueResult:
    """Delta[2] with its 0 -> 2 edge collapsed to a point."""
    return collapse_edge(standard_simplex(2), Formal(Cell(1, "02")))


def collapse_edge(A: SSet, e: Formal) -> GlueResult:
    """Collapse a non-degenerate edge of A (glue in a point along it)."""
    d1 = standard_simplex(1)
    pt = standard_simplex(0)
    s0 = SMap(d1, pt, {
        Cell(0, "0"): Formal(Cell(0, "0")),
        Cell(0, "1"): Formal(Cell(0, "0")),
        Cell(1, "01"): Formal(Cell(0, "0"), (0,)),
    }, check=False)
    return glue_edge(A, e, s0)


def build_K() -> NamedK:
    """The minimal inverting tiling: an edge kappa with a left inverse g and
    a right inverse f glued in, assembled from two pinched triangles."""
    P = pinched_2_simplex().sset
    f_map = edge_map(P, Formal(Cell(1, "12")))          # last edge of copy 1
    g_inc = Inclusion(edge_map(P, Formal(Cell(1, "01"))))  # first edge of copy 2
    K0 = pushout(f_map, g_inc).sset
    K = rename_cells(K0, {
        Cell(0, "1"): "a", Cell(0, "0"): "b",
        Cell(1, "12"): "kappa", Cell(1, "01"): "f", Cell(1, "12'"): "g",
        Cell(2, "012"): "cf", Cell(2, "012'"): "cg",
    })
    kappa = Inclusion(edge_map(K, Formal(Cell(1, "kappa"))))
    return NamedK(K, kappa, Cell(1, "f"), Cell(1, "g"))


# ---------------------------------------------------------------------------
# Pinched and augmented horns
# ---------------------------------------------------------------------------


@dataclass
class AugmentedHorn:
    """An augmented (or pinched) horn inclusion and its ambient data.

    ``realized`` includes Lambda^j[n] with the attachment glued along the
    edge i -> i+1 into Delta[n] with the same attachment.  Its complement is
    the top cell and the d_j face.
    """

    n: int
    j: int
    i: int
    attachment: Optional[Inclusion]   # None for the pinched case
    codomain: SSet
    realized: Inclusion
    simplex_leg: SMap                 # Delta[n] -> codomain
    attach_leg: Optional[SMap]        # X -> codomain


def _check_horn_params(n: int, j: int, i: int) -> None:
    if n < 2 or not 0 <= i <= n - 1 or j not in (i, i + 1):
        raise SimplicialError(f"bad augmented horn parameters n={n}, j={j}, i={i}")


def _aug_simplex(n: int, i: int, attachment: Optional[Inclusion]) -> GlueResult:
    dn = standard_simplex(n)
    e = Formal(Cell(1, subset_name([i, i + 1])))
    if attachment is None:
        return collapse_edge(dn, e)
    return glue_edge(dn, e, attachment)


def augmented_horn(n: int, j: int, i: int,
                   attachment: Optional[Inclusion]) -> AugmentedHorn:
    """Lambda^j[n]^X_{i -> i+1} into Delta[n]^X_{i -> i+1}.

    Pass attachment=None for the pinched horn (the edge is collapsed).
    """
    _check_horn_params(n, j, i)
    glue = _aug_simplex(n, i, attachment)
    C = glue.sset
    horn_cells = [glue.base_leg.apply(Formal(c)).base
                  for c in horn(n, j).domain.all_cells()
                  if not glue.base_leg.apply(Formal(c)).is_degenerate]
    extra: List[Cell] = []
    if attachment is not None:
        for c in attachment.codomain.all_cells():
            img = glue.glued_leg.apply(Formal(c))
            if not img.is_degenerate:
                extra.append(img.base)
    else:
        img = glue.glued_leg.apply(Formal(Cell(0, "0")))
        extra.append(img.base)
    realized = subcomplex(C, horn_cells + extra)
    return AugmentedHorn(n, j, i, attachment, C, realized,
                         glue.base_leg, glue.glued_leg)


def pinched_horn(n: int, j: int, i: int) -> AugmentedHorn:
    return augmented_horn(n, j, i, None)


def generalized_augmented_horn(n: int, S: Iterable[int], i: int,
                               attachment: Optional[Inclusion]) -> AugmentedHorn:
    """Lambda^S[n]^X_{i -> i+1} into Delta[n]^X_{i -> i+1}."""
    S = frozenset(S)
    if len(S) < 2 or not (0 <= i <= n - 1):
        raise SimplicialError(f"bad generalized augmented horn ({n}, {sorted(S)}, {i})")
    if len(S & {i, i + 1}) != 1:
        raise SimplicialError("exactly one of i, i+1 must lie in S")
    glue = _aug_simplex(n, i, attachment)
    C = glue.sset
    cells = [glue.base_leg.apply(Formal(c)).base
             for c in generalized_horn(n, S).domain.all_cells()
             if not glue.base_leg.apply(Formal(c)).is_degenerate]
    if attachment is not None:
        for c in attachment.codomain.all_cells():
            img = glue.glued_leg.apply(Formal(c))
            if not img.is_degenerate:
                cells.append(img.base)
    else:
        cells.append(glue.glued_leg.apply(Formal(Cell(0, "0"))).base)
    realized = subcomplex(C, cells)
    return AugmentedHorn(n, min(S & {i, i + 1}) if (i in S) else (i + 1),
                         i, attachment, C, realized, glue.base_leg,
                         glue.glued_leg)


# ---------------------------------------------------------------------------
# Unordered triangulations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UnorderedTriangulation:
    """A triangulated (n+1)-gon with vertices labeled by a permutation of
    0..n; edges point from lower to higher label."""

    n: int
    triangles: Tuple[Tuple[int, int, int], ...]   # sorted label triples

    def outer_edges(self) -> Tuple[Tuple[int, int], ...]:
        count: Dict[Tuple[int, int], int] = {}
        for (a, b, c) in self.triangles:
            for e in ((a, b), (b, c), (a, c)):
                count[e] = count.get(e, 0) + 1
        return tuple(sorted(e for e, k in count.items() if k == 1))

    def realize(self) -> SSet:
        verts = sorted({v for t in self.triangles for v in t})
        edges = sorted({e for t in self.triangles
                        for e in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2]))})
        cells = [[str(v) for v in verts],
                 [subset_name(e) for e in edges],
                 [subset_name(t) for t in self.triangles]]
        faces: Dict[Cell, Tuple[Formal, ...]] = {}
        for (a, b) in edges:
            faces[Cell(1, subset_name((a, b)))] = (
                Formal(Cell(0, str(b))), Formal(Cell(0, str(a))))
        for (a, b, c) in self.triangles:
            faces[Cell(2, subset_name((a, b, c)))] = (
                Formal(Cell(1, subset_name((b, c)))),
                Formal(Cell(1, subset_name((a, c)))),
                Formal(Cell(1, subset_name((a, b)))))
        return SSet(2, cells, faces)


def _polygon_triangulations(m: int) -> List[Tuple[Tuple[int, int, int], ...]]:
    """All triangulations of a convex m-gon on position indices 0..m-1."""
    def tri(lo: int, hi: int):
        if hi - lo < 2:
            return [()]
        out = []
        for mid in range(lo + 1, hi):
            for left in tri(lo, mid):
                for right in tri(mid, hi):
                    out.append(left + ((lo, mid, hi),) + right)
        return out
    return tri(0, m - 1)


def enumerate_triangulations(n: int) -> List[UnorderedTriangulation]:
    """All unordered triangulations of the (n+1)-gon, up to isomorphism of
    the realization."""
    from .core import iso_check
    if n < 2:
        raise SimplicialError("need a polygon with at least 3 vertices")
    m = n + 1
    seen: List[Tuple[UnorderedTriangulation, SSet]] = []
    out: List[UnorderedTriangulation] = []
    for labeling in itertools.permutations(range(m)):
        for tris in _polygon_triangulations(m):
            labeled = tuple(sorted(tuple(sorted(labeling[p] for p in t))
                                   for t in tris))
            T = UnorderedTriangulation(n, labeled)
            R = T.realize()
            if any(prev.triangles == labeled for prev, _ in seen):
                continue
            if any(iso_check(R, RP) is not None for _, RP in seen):
                continue
            seen.append((T, R))
            out.append(T)
    return out


# ---------------------------------------------------------------------------
# Augmented unordered triangulations
# ---------------------------------------------------------------------------


@dataclass
class AugTriangulation:
    """An unordered triangulation with a copy of I glued along every outer
    edge except the distinguished one; size 1 is I itself."""

    size: int
    iota: Inclusion                      # Delta[1] -> I
    base: Optional[UnorderedTriangulation]
    distinguished_labels: Optional[Tuple[int, int]]
    realization: SSet
    distinguished: Inclusion             # Delta[1] -> realization
    tri_leg: Optional[SMap] = None       # realization of base -> realization
    copy_legs: Dict[Tuple[int, int], SMap] = field(default_factory=dict)

    def key(self) -> tuple:
        if self.base is None:
            return (1,)
        return (self.size, self.base.triangles, self.distinguished_labels)


def _size_one(iota: Inclusion) -> AugTriangulation:
    return AugTriangulation(1, iota, None, None, iota.codomain, iota)


def realize_aug_triangulation(T: UnorderedTriangulation,
                              distinguished: Tuple[int, int],
                              iota: Inclusion) -> AugTriangulation:
    """Glue a copy of I along every outer edge except ``distinguished``."""
    outer = T.outer_edges()
    if distinguished not in outer:
        raise SimplicialError(f"{distinguished} is not an outer edge")
    R = T.realize()
    tri_leg = identity_map(R)
    current = R
    copy_legs: Dict[Tuple[int, int], SMap] = {}
    for e in outer:
        if e == distinguished:
            continue
        ecell = tri_leg.apply(Formal(Cell(1, subset_name(e))))
        glue = glue_edge(current, ecell, iota)
        current = glue.sset
        tri_leg = tri_leg.then(glue.base_leg)
        copy_legs = {k: m.then(glue.base_leg) for k, m in copy_legs.items()}
        copy_legs[e] = glue.glued_leg
    dist = Inclusion(edge_map(
        current, tri_leg.apply(Formal(Cell(1, subset_name(distinguished))))))
    return AugTriangulation(T.n, iota, T, distinguished, current, dist,
                            tri_leg, copy_legs)


def aug_triangulations(iota: Inclusion, max_size: int) -> Iterator[AugTriangulation]:
    """All I-augmented unordered triangulations of size <= max_size, smallest
    first, deduplicated by realization isomorphism respecting the
    distinguished edge."""
    from .core import iso_check
    if max_size < 1:
        raise SimplicialError("size bound must be >= 1")
    yield _size_one(iota)
    for size in range(2, max_size + 1):
        produced: List[AugTriangulation] = []
        for T in enumerate_triangulations(size):
            for e in T.outer_edges():
                cand = realize_aug_triangulation(T, e, iota)
                dup = False
                for prev in produced:
                    pin = {}
                    for k in range(2):
                        pin[cand.distinguished.map.assignment[Cell(0, str(k))].base] = \
                            prev.distinguished.map.assignment[Cell(0, str(k))].base
                    pin[cand.distinguished.map.assignment[Cell(1, "01")].base] = \
                        prev.distinguished.map.assignment[Cell(1, "01")].base
                    if (cand.realization.n_cells() == prev.realization.n_cells()
                            and iso_check(cand.realization, prev.realization,
                                          pinned=pin) is not None):
                        dup = True
                        break
                if not dup:
                    produced.append(cand)
        produced.sort(key=lambda a: a.key())
        yield from produced


def two_out_of_three_glue(U: AugTriangulation, V: AugTriangulation,
                          ) -> AugTriangulation:
    """Glue U and V onto the two spine faces of a fresh triangle; the result's
    distinguished edge is the long face.

    The new triangle has vertices x < z' < y with U along z' -> y (the d_0
    face) and V along x -> z' (the d_2 face); the distinguished edge is
    x -> y.  Labels are rebuilt by topological sort of the merged complex.
    """
    if U.iota is not V.iota and U.iota.codomain is not V.iota.codomain:
        raise SimplicialError("U and V must share their augmentation")
    mid = ("x", "z", "y")
    arcs: List[Tuple[str, str]] = [("x", "z"), ("z", "y"), ("x", "y")]
    tri_list: List[Tuple[str, str, str]] = [mid]

    def absorb(side: AugTriangulation, tag: str, lo: str, hi: str):
        if side.base is None:
            return {}
        d = side.distinguished_labels
        vmap = {d[0]: lo, d[1]: hi}
        for t in side.base.triangles:
            for v in t:
                if v not in vmap:
                    vmap[v] = f"{tag}{v}"
        for t in side.base.triangles:
            tri_list.append(tuple(vmap[v] for v in t))
            a, b, c = t
            for (p, q) in ((a, b), (b, c), (a, c)):
                arcs.append((vmap[p], vmap[q]))
        return vmap

    absorb(V, "v", "x", "z")
    absorb(U, "u", "z", "y")

    nodes = sorted({v for t in tri_list for v in t})
    # topological order of the merged edge digraph
    succ = {v: set() for v in nodes}
    indeg = {v: 0 for v in nodes}
    for (p, q) in arcs:
        if q not in succ[p]:
            succ[p].add(q)
            indeg[q] += 1
    order: List[str] = []
    ready = sorted(v for v in nodes if indeg[v] == 0)
    while ready:
        v = ready.pop(0)
        order.append(v)
        for w in sorted(succ[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
        ready.sort()
    if len(order) != len(nodes):
        raise SimplicialError("glued triangulations create a directed cycle")
    label = {v: k for k, v in enumerate(order)}
    tris = tuple(sorted(tuple(sorted(label[v] for v in t)) for t in tri_list))
    merged = UnorderedTriangulation(U.size + V.size, tris)
    return realize_aug_triangulation(
        merged, tuple(sorted((label["x"], label["y"]))), U.iota)


# ---------------------------------------------------------------------------
# Composition tilings, pinched tilings, inverting tilings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TileSpec:
    """C_i[n, n+1]: the spine of Delta[n+1] plus the triangle (i-1, i, i+1)."""
    n: int
    i: int

    def validate(self) -> None:
        if not (self.n >= 1 and 1 <= self.i <= self.n):
            raise SimplicialError(f"bad composition tile C_{self.i}[{self.n},{self.n+1}]")


def composition_tile(n: int, i: int):
    """Realize C_i[n, n+1] with its two spine inclusions.

    Returns (tile sset as subobject of Delta[n+1], long spine Sp[n+1] leg,
    short spine Sp[n] leg), both legs as SMaps from standalone spines.
    """
    TileSpec(n, i).validate()
    amb = standard_simplex(n + 1)
    keep = [Cell(0, str(v)) for v in range(n + 2)]
    keep += [Cell(1, subset_name((k, k + 1))) for k in range(n + 1)]
    keep += [Cell(1, subset_name((i - 1, i + 1))),
             Cell(2, subset_name((i - 1, i, i + 1)))]
    incl = subcomplex(amb, keep)
    tile = incl.domain

    long_sp = spine(n + 1).domain
    long_leg = SMap(long_sp, tile, {
        c: Formal(c) for c in long_sp.all_cells()}, check=False)

    short_sp = spine(n).domain
    chain = [v for v in range(n + 2) if v != i]
    s_assign: Dict[Cell, Formal] = {}
    for k in range(n + 1):
        s_assign[Cell(0, str(k))] = Formal(Cell(0, str(chain[k])))
    for k in range(n):
        s_assign[Cell(1, subset_name((k, k + 1)))] = Formal(
            Cell(1, subset_name((chain[k], chain[k + 1]))))
    short_leg = SMap(short_sp, tile, s_assign, check=False)
    return tile, long_leg, short_leg


@dataclass
class CompositionTiling:
    """A chain of composition tiles glued along alternating spines.

    ``tiles`` lists (n, i) pairs; ``left_len`` is the length of the unused
    spine of the first tile.  The left and right spine legs share endpoints
    and their union is the set of outer edges.
    """

    tiles: Tuple[TileSpec, ...]
    left_len: int
    realization: SSet
    left_spine: SMap     # Sp[r] -> realization
    right_spine: SMap    # Sp[s] -> realization

    @property
    def right_len(self) -> int:
        return self.right_spine.domain.n_cells()[1]

    def key(self) -> tuple:
        return (self.realization.size(), self.left_len,
                tuple((t.n, t.i) for t in self.tiles))


def composition_tiling(tiles: Sequence[Tuple[int, int]], left_len: int) -> CompositionTiling:
    """Glue the tile chain; shared spines alternate per m = max rule."""
    specs = [TileSpec(n, i) for (n, i) in tiles]
    for s in specs:
        s.validate()
    for a, b in zip(specs, specs[1:]):
        if abs(a.n - b.n) != 1:
            raise SimplicialError("adjacent tiles must differ by one in size")
    t0, long0, short0 = composition_tile(specs[0].n, specs[0].i)
    if left_len == specs[0].n + 1:
        left_leg, shared_leg = long0, short0
    elif left_len == specs[0].n:
        left_leg, shared_leg = short0, long0
    else:
        raise SimplicialError("left spine must be one of the first tile's spines")
    current = t0
    for prev, spec in zip(specs, specs[1:]):
        m = shared_leg.domain.n_cells()[1]
        if m != max(prev.n, spec.n):
            raise SimplicialError("shared spine does not match the tile chain")
        tile, longl, shortl = composition_tile(spec.n, spec.i)
        if m == spec.n + 1:
            glue_leg, next_leg = longl, shortl
        elif m == spec.n:
            glue_leg, next_leg = shortl, longl
        else:
            raise SimplicialError("shared spine does not fit the next tile")
        res = pushout(SMap(shared_leg.domain, current, shared_leg.assignment,
                           check=False),
                      Inclusion(glue_leg))
        left_leg = left_leg.then(res.left_leg.map)
        shared_leg = next_leg.then(res.right_leg)
        current = res.sset
    return CompositionTiling(tuple(specs), left_len, current, left_leg, shared_leg)


@dataclass
class PinchedTiling:
    """C~^r: a composition tiling C^{r,1} with its right spine collapsed."""

    tiling: CompositionTiling
    realization: SSet
    first_edge: Inclusion   # 0 -> 1 edge of the left spine
    last_edge: Inclusion    # (r-1) -> r edge of the left spine

    @property
    def r(self) -> int:
        return self.tiling.left_len

    def key(self) -> tuple:
        return (self.realization.size(), self.tiling.key())


def pinched_tiling(C: CompositionTiling) -> PinchedTiling:
    if C.right_len != 1:
        raise SimplicialError("pinching needs a right spine of length 1")
    e = C.right_spine.apply(Formal(Cell(1, "01")))
    glue = collapse_edge(C.realization, e)
    r = C.left_len
    sp = C.left_spine
    first = glue.base_leg.apply(sp.apply(Formal(Cell(1, subset_name((0, 1))))))
    last = glue.base_leg.apply(sp.apply(Formal(
        Cell(1, subset_name((r - 1, r))))))
    return PinchedTiling(C, glue.sset,
                         Inclusion(edge_map(glue.sset, first)),
                         Inclusion(edge_map(glue.sset, last)))


@dataclass
class InvertingTiling:
    """T: two pinched tilings glued, last edge of ``left`` to first edge of
    ``right``; e_T is the shared edge."""

    left: PinchedTiling
    right: PinchedTiling
    realization: SSet
    e_T: Inclusion

    def key(self) -> tuple:
        return (self.realization.size(), self.left.key(), self.right.key())

    def spec(self) -> dict:
        return {
            "left": {"tiles": [(t.n, t.i) for t in self.left.tiling.tiles],
                     "left_len": self.left.tiling.left_len},
            "right": {"tiles": [(t.n, t.i) for t in self.right.tiling.tiles],
                      "left_len": self.right.tiling.left_len},
        }


def inverting_tiling(left: PinchedTiling, right: PinchedTiling) -> InvertingTiling:
    res = pushout(
        SMap(left.last_edge.domain, left.realization,
             left.last_edge.map.assignment, check=False),
        Inclusion(SMap(right.first_edge.domain, right.realization,
                       right.first_edge.map.assignment, check=False)))
    eT = left.last_edge.map.then(res.left_leg.map)
    return InvertingTiling(left, right, res.sset,
                           Inclusion(eT, check=False))


def enumerate_pinched_tilings(max_cells: int, max_r: Optional[int] = None
                              ) -> List[PinchedTiling]:
    """All pinched tilings whose composition tiling C^{r,1} has at most
    ``max_cells`` non-degenerate cells (and r <= max_r when given)."""
    out: List[PinchedTiling] = []
    # breadth-first over tile chains; each added tile adds >= 2 cells
    frontier: List[Tuple[List[Tuple[int, int]], int]] = []
    for n in range(1, max_cells):
        for i in range(1, n + 1):
            for left_len in (n, n + 1):
                frontier.append(([(n, i)], left_len))
    results: List[CompositionTiling] = []
    while frontier:
        tiles, left_len = frontier.pop()
        try:
            C = composition_tiling(tiles, left_len)
        except SimplicialError:
            continue
        if C.realization.size() > max_cells:
            continue
        if max_r is not None and C.left_len > max_r:
            continue
        if C.right_len == 1:
            results.append(C)
        # extend by one more tile if there is room
        last_shared = C.right_len
        for dn in (-1, 1):
            n2 = tiles[-1][0] + dn
            if n2 < 1:
                continue
            if last_shared not in (n2, n2 + 1):
                continue
            for i2 in range(1, n2 + 1):
                ext = tiles + [(n2, i2)]
                if C.realization.size() + 2 <= max_cells:
                    frontier.append((ext, left_len))
    for C in sorted(results, key=lambda c: c.key()):
        out.append(pinched_tiling(C))
    return out


def enumerate_inverting_tilings(max_part_cells: int,
                                max_r: Optional[int] = None,
                                max_total_cells: Optional[int] = None
                                ) -> List[InvertingTiling]:
    """Inverting tilings from pinched tilings with the given bounds, ordered
    by realization cell count then canonical key, deduplicated up to
    isomorphism respecting e_T."""
    from .core import iso_check
    parts = enumerate_pinched_tilings(max_part_cells, max_r)
    tilings: List[InvertingTiling] = []
    for lp in parts:
        for rp in parts:
            T = inverting_tiling(lp, rp)
            if (max_total_cells is not None
                    and T.realization.size() > max_total_cells):
                continue
            tilings.append(T)
    tilings.sort(key=lambda t: t.key())
    kept: List[InvertingTiling] = []
    for T in tilings:
        dup = False
        for prev in kept:
            if prev.realization.n_cells() != T.realization.n_cells():
                continue
            pin = {T.e_T.map.assignment[c].base: prev.e_T.map.assignment[c].base
                   for c in T.e_T.domain.all_cells()}
            if iso_check(T.realization, prev.realization, pinned=pin) is not None:
                dup = True
                break
        if not dup:
            kept.append(T)
    return kept


@dataclass
class SpecialHorn:
    tiling: InvertingTiling
    horn: AugmentedHorn
    outer: bool


def enumerate_special_horns(max_tiling_cells: int, max_n: int
                            ) -> List[SpecialHorn]:
    """All T-augmented horn inclusions for inverting tilings T with at most
    ``max_tiling_cells`` cells and horn dimension <= max_n."""
    if max_tiling_cells < 1 or max_n < 2:
        raise SimplicialError("bounds must allow at least one horn")
    out: List[SpecialHorn] = []
    for T in enumerate_inverting_tilings(max_tiling_cells,
                                         max_total_cells=max_tiling_cells):
        for n in range(2, max_n + 1):
            for i in range(n):
                for j in (i, i + 1):
                    H = augmented_horn(n, j, i, T.e_T)
                    out.append(SpecialHorn(T, H, outer=not (0 < j < n)))
    return out


# ---------------------------------------------------------------------------
# Isoplexes and iso-horns
# ---------------------------------------------------------------------------


@dataclass
class Isoplex:
    n: int
    i: int
    truncation: int
    realization: SSet
    face_inclusions: Tuple[Inclusion, ...]


def isoplex(n: int, i: int, D: int) -> Isoplex:
    """The nerve of [n] with the arrow i -> i+1 inverted, truncated at D."""
    if D < n:
        raise SimplicialError("isoplex truncation must be at least n")
    N = nerve(inverted_interval_cat(n, i), D)
    faces = []
    for j in range(n + 1):
        keep = [c for c in N.all_cells()
                if str(j) not in _chain_vertices(N, c)]
        faces.append(subcomplex(N, keep))
    return Isoplex(n, i, D, N, tuple(faces))


def _chain_vertices(N: SSet, c: Cell) -> set:
    return {v.name for v in N.vertices(Formal(c))}


def iso_horn(n: int, i: int, D: int) -> Inclusion:
    """The union of all faces of the n-isoplex except the i-th."""
    if not (n >= 1 and 0 <= i <= n - 1):
        raise SimplicialError(f"bad iso-horn ({n}, {i})")
    plex = isoplex(n, i, D)
    cells: set = set()
    for j in range(n + 1):
        if j == i:
            continue
        cells |= plex.face_inclusions[j].image_cells()
    return subcomplex(plex.realization, cells)


# ---------------------------------------------------------------------------
# The two-cycle complex and its boundary family
# ---------------------------------------------------------------------------


def build_two_cycle() -> SSet:
    """Two vertices with edges a -> b and b -> a and nothing higher."""
    cells = [["a", "b"], ["ab", "ba"]]
    faces = {
        Cell(1, "ab"): (Formal(Cell(0, "b")), Formal(Cell(0, "a"))),
        Cell(1, "ba"): (Formal(Cell(0, "a")), Formal(Cell(0, "b"))),
    }
    return SSet(1, cells, faces)


def build_A_I_family(I: SSet, max_n: int) -> List[Inclusion]:
    """The inclusions (I x boundary Delta[n]) u ({v} x Delta[n]) into
    I x Delta[n] for n <= max_n and each vertex v of I."""
    out = []
    for n in range(max_n + 1):
        dn = standard_simplex(n)
        prod = product(I, dn, n + 1)
        bnd = boundary(n).image_cells() if n >= 1 else frozenset()
        for v in I.cells_of_dim(0):
            cells = []
            for c, (fi, fd) in prod.pair.items():
                if fd.base in bnd or fi.base == v:
                    cells.append(c)
            out.append(subcomplex(prod.sset, cells))
    return out


# ---------------------------------------------------------------------------
# The example complex T
# ---------------------------------------------------------------------------


@dataclass
class ExampleT:
    sset: SSet
    e_T: Inclusion
    functor_target_universe: Dict[str, tuple]
    functor_objects: Dict[str, str]
    functor_generators: Dict[str, tuple]


def build_example_T() -> ExampleT:
    """Four triangles on vertices w, x, y, z with two degenerate edges;
    e_T = x -> y is the only non-degenerate pre-isomorphism there.

    Ships the finite-sets functor refuting invertibility of the other edges:
    it sends x to {a}, y to {a'}, z and w to {a, c}.
    """
    cells = [["w", "x", "y", "z"],
             ["e", "wx", "wy", "xz", "yw", "yz", "zx"],
             ["xzx", "xyz", "ywy", "wxy"]]
    E = lambda nm: Formal(Cell(1, nm))
    V = lambda nm: Formal(Cell(0, nm))
    faces = {
        Cell(1, "e"): (V("y"), V("x")),
        Cell(1, "wx"): (V("x"), V("w")),
        Cell(1, "wy"): (V("y"), V("w")),
        Cell(1, "xz"): (V("z"), V("x")),
        Cell(1, "yw"): (V("w"), V("y")),
        Cell(1, "yz"): (V("z"), V("y")),
        Cell(1, "zx"): (V("x"), V("z")),
        # (x, z, x): witnesses zx . xz = id_x
        Cell(2, "xzx"): (E("zx"), Formal(Cell(0, "x"), (0,)), E("xz")),
        # (x, y, z): witnesses yz . e = xz
        Cell(2, "xyz"): (E("yz"), E("xz"), E("e")),
        # (y, w, y): witnesses wy . yw = id_y
        Cell(2, "ywy"): (E("wy"), Formal(Cell(0, "y"), (0,)), E("yw")),
        # (w, x, y): witnesses e . wx = wy
        Cell(2, "wxy"): (E("e"), E("wy"), E("wx")),
    }
    T = SSet(2, cells, faces)
    e_T = Inclusion(edge_map(T, Formal(Cell(1, "e"))))
    universe = {"A": ("a",), "AC": ("a", "c"), "Ap": ("a'",)}
    objects = {"x": "A", "y": "Ap", "z": "AC", "w": "AC"}
    generators = {
        "e": (("a", "a'"),),
        "zx": (("a", "a"), ("c", "a")),
        "xz": (("a", "a"),),
        "yz": (("a'", "a"),),
        "yw": (("a'", "a"),),
        "wy": (("a", "a'"), ("c", "a'")),
        "wx": (("a", "a"), ("c", "a")),
    }
    return ExampleT(T, e_T, universe, objects, generators)
