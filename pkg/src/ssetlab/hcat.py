"""The homotopy category of a simplicial set, as a presentation.

Objects are the vertices, generators the non-degenerate edges, and each
non-degenerate 2-cell imposes the relation d_0 . d_2 = d_1 (degenerate edges
read as identities).  The word problem is attacked by bounded bidirectional
rewriting; invertibility of an edge is semi-decided by the pair

* certification: an inverting-tiling extension of the edge, and
* refutation: a functor to a finite category sending the edge to a
  non-isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .cat import FinCat, finite_sets_cat
from .core import Cell, Formal, Inclusion, SMap, SSet, SimplicialError
from .build import edge_map
from .lifting import LiftProblem, extend
from .shapes import (AugTriangulation, InvertingTiling, aug_triangulations,
                     enumerate_inverting_tilings)

IdTok = Tuple[str, str]            # ("id", vertex)
Token = Union[str, IdTok]          # generator name or identity token


@dataclass
class CategoryPresentation:
    """Presentation of hX: vertices, edge generators, 2-cell relations."""

    objects: Tuple[str, ...]
    generators: Dict[str, Tuple[str, str]]       # edge name -> (src, dst)
    relations: List[Tuple[Token, Token, Token]]  # (f, g, h): g . f = h

    def endpoints(self, tok: Token) -> Tuple[str, str]:
        if isinstance(tok, tuple):
            return tok[1], tok[1]
        return self.generators[tok]


def presentation(X: SSet) -> CategoryPresentation:
    """Extract the presentation from cells of dimension <= 2."""
    objects = tuple(X.cell_names(0))
    generators = {}
    for e in X.cells_of_dim(1):
        s, t = X.edge_endpoints(Formal(e))
        generators[e.name] = (s.name, t.name)

    def tok(f: Formal) -> Token:
        if f.is_degenerate:
            return ("id", X.vertex(f, 0).name)
        return f.base.name

    relations = []
    for c in X.cells_of_dim(2):
        d0, d1, d2 = (X.face(c, i) for i in range(3))
        relations.append((tok(d2), tok(d0), tok(d1)))
    return CategoryPresentation(objects, generators, relations)


# ---------------------------------------------------------------------------
# Bounded word problem
# ---------------------------------------------------------------------------


@dataclass
class HomClasses:
    source: str
    target: str
    depth: int
    classes: List[FrozenSet[Tuple[str, ...]]]
    complete: bool


def _paths(p: CategoryPresentation, x: str, y: str, depth: int) -> List[Tuple[str, ...]]:
    """Identity-free generator words from x to y of length <= depth."""
    out = []
    if x == y:
        out.append(())
    frontier: List[Tuple[Tuple[str, ...], str]] = [((), x)]
    for _ in range(depth):
        nxt = []
        for word, at in frontier:
            for g, (s, t) in sorted(p.generators.items()):
                if s != at:
                    continue
                w2 = word + (g,)
                nxt.append((w2, t))
                if t == y:
                    out.append(w2)
        frontier = nxt
    return out


def _rewrites(p: CategoryPresentation, word: Tuple[str, ...], x: str,
              depth: int) -> Iterable[Tuple[str, ...]]:
    """Single rewriting moves in both directions, staying within the bound."""
    carriers = [x]
    for g in word:
        carriers.append(p.generators[g][1])
    for (f, g, h) in p.relations:
        f_id, g_id, h_id = (isinstance(t, tuple) for t in (f, g, h))
        if not f_id and not g_id:
            # contraction: ... f g ... -> ... h ...
            for t in range(len(word) - 1):
                if word[t] == f and word[t + 1] == g:
                    mid = () if h_id else (h,)
                    yield word[:t] + mid + word[t + 2:]
            # expansion: ... h ... -> ... f g ...
            if h_id:
                at = h[1]
                if len(word) + 2 <= depth:
                    for t in range(len(word) + 1):
                        if carriers[t] == at:
                            yield word[:t] + (f, g) + word[t:]
            else:
                if len(word) + 1 <= depth:
                    for t in range(len(word)):
                        if word[t] == h:
                            yield word[:t] + (f, g) + word[t + 1:]
        elif f_id and not g_id:
            # g . id = h: letter equivalences g <-> h
            yield from _letter_swap(word, g, h, depth)
        elif g_id and not f_id:
            yield from _letter_swap(word, f, h, depth)
        else:
            # id . id = h: h must be an identity; no move on identity-free words
            continue


def _letter_swap(word: Tuple[str, ...], a: str, h: Token, depth: int
                 ) -> Iterable[Tuple[str, ...]]:
    if isinstance(h, tuple):
        # a ~ identity: delete or insert impossible without carrier info here;
        # deletion is always sound
        for t in range(len(word)):
            if word[t] == a:
                yield word[:t] + word[t + 1:]
        return
    for t in range(len(word)):
        if word[t] == a:
            yield word[:t] + (h,) + word[t + 1:]
        if word[t] == h:
            yield word[:t] + (a,) + word[t + 1:]


def _closure(p: CategoryPresentation, x: str, y: str, depth: int
             ) -> List[FrozenSet[Tuple[str, ...]]]:
    words = _paths(p, x, y, depth)
    index = {w: k for k, w in enumerate(words)}
    parent = list(range(len(words)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def unite(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for w in words:
        for w2 in _rewrites(p, w, x, depth):
            if w2 in index:
                unite(index[w], index[w2])
    groups: Dict[int, set] = {}
    for w in words:
        groups.setdefault(find(index[w]), set()).add(w)
    return sorted((frozenset(g) for g in groups.values()),
                  key=lambda g: sorted(g)[0])


def bounded_hom(p: CategoryPresentation, x: str, y: str, depth: int) -> HomClasses:
    """Equivalence classes of generator words from x to y, rewriting both
    ways on words of length <= depth.

    ``complete`` is set when the closure at depth-1 already has the same
    classes restricted to shorter words, i.e. the last layer contributed
    nothing new.
    """
    if depth < 0:
        raise SimplicialError("depth must be >= 0")
    classes = _closure(p, x, y, depth)
    complete = False
    if depth >= 1:
        prev = _closure(p, x, y, depth - 1)
        short_now = sorted(
            frozenset(w for w in g if len(w) <= depth - 1)
            for g in classes if any(len(w) <= depth - 1 for w in g))
        if sorted(prev) == short_now and len(prev) == len(classes):
            complete = True
    return HomClasses(x, y, depth, classes, complete)


# ---------------------------------------------------------------------------
# Pre-isomorphism search and refutation
# ---------------------------------------------------------------------------


@dataclass
class PreIsoVerdict:
    edge: Formal
    verdict: str                      # "certified" | "refuted" | "exhausted"
    tiling: Optional[InvertingTiling] = None
    witness: Optional[SMap] = None
    functor: Optional["FunctorCertificate"] = None
    bounds: Dict[str, int] = field(default_factory=dict)


def _edge_as_map(X: SSet, e: Union[Formal, SMap]) -> SMap:
    if isinstance(e, SMap):
        return e
    return edge_map(X, e)


def extend_edge_along(X: SSet, e: Union[Formal, SMap],
                      incl: Inclusion) -> Optional[SMap]:
    """A map incl.codomain -> X restricting to the edge e along incl."""
    emap = _edge_as_map(X, e)
    u = SMap(incl.domain, X,
             {c: emap.assignment[c] for c in incl.domain.all_cells()},
             check=False)
    res = extend(LiftProblem(incl, u))
    return res.lift if res.status == "found" else None


def preiso_search(X: SSet, e: Union[Formal, SMap], cell_bound: int,
                  n_bound: int = 6) -> PreIsoVerdict:
    """Certify an edge as a categorical pre-isomorphism by extending it along
    an inverting tiling.

    ``cell_bound`` bounds the non-degenerate cell count of the composition
    tilings the inverting tilings are built from; ``n_bound`` bounds their
    spine length.  Tilings are tried smallest realization first, so K comes
    first.  "exhausted" is an honest unknown, not a refutation.
    """
    if cell_bound < 1 or n_bound < 1:
        raise SimplicialError("bounds must be >= 1")
    emap = _edge_as_map(X, e)
    efor = emap.assignment[Cell(1, "01")]
    for T in enumerate_inverting_tilings(cell_bound, max_r=n_bound):
        w = extend_edge_along(X, emap, T.e_T)
        if w is not None:
            return PreIsoVerdict(efor, "certified", tiling=T, witness=w,
                                 bounds={"cell_bound": cell_bound,
                                         "n_bound": n_bound})
    return PreIsoVerdict(efor, "exhausted",
                         bounds={"cell_bound": cell_bound, "n_bound": n_bound})


@dataclass
class FunctorCertificate:
    """A functor from (the presentation of) X to a finite category."""

    target: FinCat
    object_images: Dict[str, str]
    generator_images: Dict[str, str]

    def image_of(self, p: CategoryPresentation, tok: Token) -> str:
        if isinstance(tok, tuple):
            return self.target.identity[self.object_images[tok[1]]]
        return self.generator_images[tok]


class NotAFunctor(SimplicialError):
    """The supplied assignment does not respect the presentation."""


def check_functor(p: CategoryPresentation, F: FunctorCertificate) -> None:
    """Raise NotAFunctor unless F respects endpoints and all relations."""
    for o in p.objects:
        if F.object_images.get(o) not in F.target.objects:
            raise NotAFunctor(f"object {o!r} has no valid image")
    for g, (s, t) in p.generators.items():
        m = F.generator_images.get(g)
        if m is None or m not in F.target.morphisms:
            raise NotAFunctor(f"generator {g!r} has no valid image")
        if F.target.morphisms[m] != (F.object_images[s], F.object_images[t]):
            raise NotAFunctor(f"image of {g!r} has wrong endpoints")
    for (f, g, h) in p.relations:
        lhs = F.target.compose(F.image_of(p, g), F.image_of(p, f))
        if lhs != F.image_of(p, h):
            raise NotAFunctor(f"relation {(f, g, h)!r} is not respected")


def noniso_functor_check(X: SSet, F: FunctorCertificate,
                         e: Union[Formal, Cell]) -> bool:
    """True iff F is a functor on the presentation of X and sends e to a
    non-isomorphism (a valid refutation of pre-invertibility).

    A non-functorial assignment raises NotAFunctor; it never counts as a
    refutation.
    """
    p = presentation(X)
    check_functor(p, F)
    if isinstance(e, Cell):
        e = Formal(e)
    if e.is_degenerate:
        return False
    return not F.target.is_iso(F.generator_images[e.base.name])


# ---------------------------------------------------------------------------
# Almost-I-edge search
# ---------------------------------------------------------------------------


def almost_edge_search(X: SSet, e: Union[Formal, SMap], iota: Inclusion,
                       size_bound: int) -> Optional[Tuple[AugTriangulation, SMap]]:
    """Search for an I-augmented unordered triangulation witness that the
    edge factors through its distinguished edge; None when the bound
    exhausts."""
    if size_bound < 1:
        raise SimplicialError("size bound must be >= 1")
    emap = _edge_as_map(X, e)
    for aug in aug_triangulations(iota, size_bound):
        w = extend_edge_along(X, emap, aug.distinguished)
        if w is not None:
            return aug, w
    return None
