"""Constructors and colimits: simplices, horns, nerves, products, pushouts,
edge gluing, skeleta and pointwise cylinders.

All colimits are taken along inclusions.  Canonical naming: in a pushout the
left leg's names win and adjoined cells keep their right-hand names, primed
on collision, so repeated constructions are reproducible and diffable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .cat import FinCat
from .core import (Cell, Formal, Inclusion, SMap, SSet, SimplicialError,
                   degenerate, face_closure, formal_token, normalize_word,
                   strip_collapses, subcomplex, word_from_collapse_set)

_BIG = 1 << 30


# ---------------------------------------------------------------------------
# Standard simplices and their subobjects
# ---------------------------------------------------------------------------


def subset_name(vs: Sequence[int]) -> str:
    vs = sorted(vs)
    if not vs:
        raise SimplicialError("empty vertex set")
    if vs[-1] <= 9:
        return "".join(str(v) for v in vs)
    return ",".join(str(v) for v in vs)


def standard_simplex(n: int) -> SSet:
    """Delta[n]: non-degenerate k-cells are the (k+1)-subsets of {0..n}."""
    if n < 0:
        raise SimplicialError("n must be >= 0")
    cells: List[List[str]] = [[] for _ in range(n + 1)]
    faces: Dict[Cell, Tuple[Formal, ...]] = {}
    for k in range(n + 1):
        for vs in itertools.combinations(range(n + 1), k + 1):
            nm = subset_name(vs)
            cells[k].append(nm)
            if k >= 1:
                fs = []
                for i in range(k + 1):
                    sub = vs[:i] + vs[i + 1:]
                    fs.append(Formal(Cell(k - 1, subset_name(sub))))
                faces[Cell(k, nm)] = tuple(fs)
    return SSet(n, cells, faces)


def simplex_chain_formal(n: int, values: Sequence[int]) -> Formal:
    """The simplex of Delta[n] with the given weakly increasing vertex chain."""
    if any(values[t] > values[t + 1] for t in range(len(values) - 1)):
        raise SimplicialError(f"chain {values!r} is not monotone")
    if values and not (0 <= values[0] and values[-1] <= n):
        raise SimplicialError(f"chain {values!r} out of range for Delta[{n}]")
    distinct = sorted(set(values))
    word = word_from_collapse_set(
        t for t in range(len(values) - 1) if values[t] == values[t + 1])
    return Formal(Cell(len(distinct) - 1, subset_name(distinct)), word)


def monotone_map(m: int, n: int, values: Sequence[int],
                 dom: Optional[SSet] = None, cod: Optional[SSet] = None) -> SMap:
    """The simplicial map Delta[m] -> Delta[n] sending vertex k to values[k]."""
    if len(values) != m + 1:
        raise SimplicialError("need one value per vertex")
    dom = dom if dom is not None else standard_simplex(m)
    cod = cod if cod is not None else standard_simplex(n)
    assignment = {}
    for k in range(m + 1):
        for vs in itertools.combinations(range(m + 1), k + 1):
            cell = Cell(k, subset_name(vs))
            assignment[cell] = simplex_chain_formal(n, [values[v] for v in vs])
    return SMap(dom, cod, assignment, check=False)


def _simplex_subobject(n: int, keep, ambient: Optional[SSet] = None) -> Inclusion:
    amb = ambient if ambient is not None else standard_simplex(n)
    cells = [c for c in amb.all_cells() if keep(c)]
    return subcomplex(amb, cells)


def boundary(n: int, ambient: Optional[SSet] = None) -> Inclusion:
    """The boundary inclusion into Delta[n]."""
    return _simplex_subobject(n, lambda c: c.dim < n, ambient)


def horn(n: int, i: int, ambient: Optional[SSet] = None) -> Inclusion:
    """The horn Lambda^i[n] into Delta[n]: all faces except the i-th."""
    if not (n >= 1 and 0 <= i <= n):
        raise SimplicialError(f"bad horn ({n}, {i})")
    omitted = subset_name([v for v in range(n + 1) if v != i])
    return _simplex_subobject(
        n, lambda c: c.dim < n and not (c.dim == n - 1 and c.name == omitted),
        ambient)


def generalized_horn(n: int, S: Iterable[int], ambient: Optional[SSet] = None) -> Inclusion:
    """Lambda^S[n]: the union of the d_j faces of Delta[n] for j in S."""
    S = frozenset(S)
    if len(S) < 2 or not S <= set(range(n + 1)):
        raise SimplicialError(f"bad generalized horn index set {sorted(S)}")
    amb = ambient if ambient is not None else standard_simplex(n)

    def keep(c: Cell) -> bool:
        vs = set(int(v) for v in
                 (c.name.split(",") if "," in c.name else c.name))
        return not S <= vs

    return _simplex_subobject(n, keep, amb)


def spine(n: int, ambient: Optional[SSet] = None) -> Inclusion:
    """Sp[n]: the union of the edges i -> i+1 in Delta[n]."""
    if n < 1:
        raise SimplicialError("spine needs n >= 1")
    edges = {subset_name([i, i + 1]) for i in range(n)}
    return _simplex_subobject(
        n, lambda c: c.dim == 0 or (c.dim == 1 and c.name in edges), ambient)


def is_inner(n: int, i: int) -> bool:
    return 0 < i < n


# ---------------------------------------------------------------------------
# Nerves
# ---------------------------------------------------------------------------


def chain_formal(C: FinCat, arrows: Sequence[str], src: str) -> Formal:
    """Normal form of a composable chain: strip identities into the word."""
    word: List[int] = []
    rest = list(arrows)
    t = 0
    while t < len(rest):
        if C.is_identity(rest[t]):
            word.append(t)
            rest.pop(t)
        else:
            t += 1
    if rest:
        base = Cell(len(rest), "|".join(rest))
    else:
        base = Cell(0, src)
    return Formal(base, normalize_word(word))


def nerve(C: FinCat, D: int) -> SSet:
    """The nerve, truncated at D: n-cells are identity-free n-chains."""
    C.validate()
    nonid = [m for m in sorted(C.morphisms) if not C.is_identity(m)]
    cells: List[List[str]] = [list(C.objects)]
    chains: List[List[Tuple[str, ...]]] = [[]]
    current: List[Tuple[str, ...]] = [(m,) for m in nonid]
    faces: Dict[Cell, Tuple[Formal, ...]] = {}
    for d in range(1, D + 1):
        cells.append(["|".join(ch) for ch in current])
        chains.append(current)
        nxt = []
        for ch in current:
            for m in nonid:
                if C.src(m) == C.dst(ch[-1]):
                    nxt.append(ch + (m,))
        current = nxt
    for d in range(1, D + 1):
        for ch in chains[d]:
            fs = []
            for i in range(d + 1):
                if i == 0:
                    fs.append(chain_formal(C, ch[1:], C.dst(ch[0])))
                elif i == d:
                    fs.append(chain_formal(C, ch[:-1], C.src(ch[0])))
                else:
                    comp = C.compose(ch[i], ch[i - 1])
                    fs.append(chain_formal(
                        C, ch[:i - 1] + (comp,) + ch[i + 1:], C.src(ch[0])))
            faces[Cell(d, "|".join(ch))] = tuple(fs)
    return SSet(D, cells, faces, truncated=bool(current))


# ---------------------------------------------------------------------------
# Products
# ---------------------------------------------------------------------------


@dataclass
class ProductResult:
    sset: SSet
    left: SSet
    right: SSet
    proj1: SMap
    proj2: SMap
    pair: Dict[Cell, Tuple[Formal, Formal]]
    cell_of: Dict[Tuple[Formal, Formal], Cell]

    def pair_formal(self, fa: Formal, fb: Formal) -> Formal:
        """The product simplex with the given component simplices."""
        if fa.dim != fb.dim:
            raise SimplicialError("components must have equal dimension")
        common = set(fa.word) & set(fb.word)
        a = Formal(fa.base, strip_collapses(fa.word, common))
        b = Formal(fb.base, strip_collapses(fb.word, common))
        return Formal(self.cell_of[(a, b)], word_from_collapse_set(common))


def product(X: SSet, Y: SSet, D: int) -> ProductResult:
    """The categorical product truncated at D, with both projections.

    Non-degenerate q-cells are the pairs of formal q-simplices whose
    degeneracy words are disjoint.
    """
    cells: List[List[str]] = [[] for _ in range(D + 1)]
    pair: Dict[Cell, Tuple[Formal, Formal]] = {}
    cell_of: Dict[Tuple[Formal, Formal], Cell] = {}
    for q in range(D + 1):
        for fa in X.formals(q):
            wa = set(fa.word)
            for fb in Y.formals(q):
                if wa & set(fb.word):
                    continue
                nm = f"({formal_token(fa)}|{formal_token(fb)})"
                cell = Cell(q, nm)
                cells[q].append(nm)
                pair[cell] = (fa, fb)
                cell_of[(fa, fb)] = cell

    truncated = X.truncated or Y.truncated
    if not truncated:
        for fa in X.formals(D + 1):
            wa = set(fa.word)
            if any(not (wa & set(fb.word)) for fb in Y.formals(D + 1)):
                truncated = True
                break

    faces: Dict[Cell, Tuple[Formal, ...]] = {}
    result = ProductResult(None, X, Y, None, None, pair, cell_of)  # type: ignore
    for cell, (fa, fb) in pair.items():
        q = cell.dim
        if q == 0:
            continue
        fs = []
        for i in range(q + 1):
            fs.append(result.pair_formal(
                X.formal_face(fa, i), Y.formal_face(fb, i)))
        faces[cell] = tuple(fs)
    sset = SSet(D, cells, faces, truncated=truncated)
    proj1 = SMap(sset, X, {c: p[0] for c, p in pair.items()}, check=False)
    proj2 = SMap(sset, Y, {c: p[1] for c, p in pair.items()}, check=False)
    result.sset, result.proj1, result.proj2 = sset, proj1, proj2
    return result


# ---------------------------------------------------------------------------
# Pushouts
# ---------------------------------------------------------------------------


@dataclass
class PushoutResult:
    sset: SSet
    left_leg: Inclusion      # codomain of f  ->  pushout
    right_leg: SMap          # codomain of g  ->  pushout
    renamed: Dict[Cell, Cell]  # adjoined cells of B, by their new names


def pushout(f: SMap, g: Inclusion) -> PushoutResult:
    """The pushout of X <-f- Z -g-> B along the inclusion g.

    Cells are X's cells plus B's cells outside the image of g; faces landing
    in the image are rewritten through f.  The leg opposite g is an inclusion.
    """
    if g.domain is not f.domain and not (
            g.domain.cells == f.domain.cells and g.domain.faces == f.domain.faces):
        raise SimplicialError("pushout legs must share their domain")
    X, B = f.codomain, g.codomain

    exact_x = X.truncation if X.truncated else _BIG
    exact_b = B.truncation if B.truncated else _BIG
    D = min(max(X.truncation, B.truncation), exact_x, exact_b)
    truncated = X.truncated or B.truncated
    for d in range(D + 1, X.truncation + 1):
        if X.cell_names(d):
            raise SimplicialError("incompatible truncations in pushout")

    preimage: Dict[Cell, Cell] = {}
    for z in g.domain.all_cells():
        preimage[g.map.assignment[z].base] = z

    taken = [set(X.cell_names(d)) for d in range(D + 1)]
    cells = [list(X.cell_names(d)) for d in range(D + 1)]
    renamed: Dict[Cell, Cell] = {}
    for d in range(min(D, B.truncation) + 1):
        for nm in B.cell_names(d):
            b = Cell(d, nm)
            if b in preimage:
                continue
            fresh = nm
            while fresh in taken[d]:
                fresh += "'"
            taken[d].add(fresh)
            cells[d].append(fresh)
            renamed[b] = Cell(d, fresh)
    for d in range(D + 1, B.truncation + 1):
        for nm in B.cell_names(d):
            if Cell(d, nm) not in preimage:
                raise SimplicialError("incompatible truncations in pushout")

    def push_formal(fb: Formal) -> Formal:
        if fb.base in preimage:
            return degenerate(f.apply(Formal(preimage[fb.base])), fb.word)
        return Formal(renamed[fb.base], fb.word)

    faces: Dict[Cell, Tuple[Formal, ...]] = {
        c: X.faces[c] for c in X.all_cells() if c.dim >= 1}
    for b, nb in renamed.items():
        if b.dim >= 1:
            faces[nb] = tuple(push_formal(fb) for fb in B.faces[b])

    P = SSet(D, cells, faces, truncated=truncated)
    left = Inclusion(
        SMap(X, P, {c: Formal(c) for c in X.all_cells()}, check=False),
        check=False)
    right_assign = {}
    for b in B.all_cells():
        if b in preimage:
            right_assign[b] = f.apply(Formal(preimage[b]))
        else:
            right_assign[b] = Formal(renamed[b])
    right = SMap(B, P, right_assign, check=False)
    return PushoutResult(P, left, right, renamed)


# ---------------------------------------------------------------------------
# Edge gluing
# ---------------------------------------------------------------------------


def edge_map(A: SSet, e: Formal, delta1: Optional[SSet] = None) -> SMap:
    """The map Delta[1] -> A classifying a (possibly degenerate) edge."""
    if e.dim != 1:
        raise SimplicialError(f"{e!r} is not an edge")
    d1 = delta1 if delta1 is not None else standard_simplex(1)
    s, t = A.edge_endpoints(e)
    return SMap(d1, A, {
        Cell(0, "0"): Formal(s),
        Cell(0, "1"): Formal(t),
        Cell(1, "01"): e,
    }, check=False)


@dataclass
class GlueResult:
    sset: SSet
    base_leg: SMap    # A -> glued object (an Inclusion when x is one)
    glued_leg: SMap   # X -> glued object


def glue_edge(A: SSet, e: Union[Formal, SMap], x: Union[SMap, Inclusion]) -> GlueResult:
    """The pushout of A <- Delta[1] -> X along the edge e of A.

    With x an inclusion this is the X-augmented object (A's names survive);
    with X a point it is the pinched object.
    """
    if isinstance(e, SMap):
        emap = e
    else:
        emap = edge_map(A, e)
    if isinstance(x, Inclusion):
        xmap = SMap(emap.domain, x.codomain,
                    {c: x.map.assignment[c] for c in emap.domain.all_cells()},
                    check=False)
        res = pushout(SMap(emap.domain, A, emap.assignment, check=False),
                      Inclusion(xmap, check=False))
        return GlueResult(res.sset, res.left_leg.map, res.right_leg)
    # x is a bare map: glue along the edge inclusion instead
    if emap.assignment[Cell(1, "01")].is_degenerate:
        raise SimplicialError(
            "gluing along a degenerate edge needs an inclusion on the other leg")
    xm = SMap(emap.domain, x.codomain,
              {c: x.assignment[c] for c in emap.domain.all_cells()}, check=False)
    res = pushout(xm, Inclusion(emap))
    return GlueResult(res.sset, res.right_leg, res.left_leg.map)


# ---------------------------------------------------------------------------
# Skeleta
# ---------------------------------------------------------------------------


def skeleton(X: SSet, k: int) -> Inclusion:
    """The subobject generated by cells of dimension <= k."""
    if not 0 <= k <= X.truncation:
        raise SimplicialError("skeleton degree out of range")
    return subcomplex(X, [c for c in X.all_cells() if c.dim <= k],
                      truncated=False if k < X.truncation else X.truncated)


def zero_skeleton(X: SSet) -> Inclusion:
    return skeleton(X, 0)


# ---------------------------------------------------------------------------
# Pointwise cylinders
# ---------------------------------------------------------------------------


@dataclass
class Cylinder:
    """The pointwise cylinder of X for an edge inclusion iota: Delta[1] -> I.

    Delta[1] x X with a copy of I glued along the vertical edge over every
    vertex of X.  ``prod`` is the Delta[1] x X part (its cell names survive
    in ``sset``); ``icopy[(v, c)]`` locates the copy of the I-cell c glued at
    the X-vertex v.
    """

    sset: SSet
    iota: Inclusion
    base: SSet
    prod: ProductResult
    end0: Inclusion
    end1: Inclusion
    icopy: Dict[Tuple[Cell, Cell], Formal]

    def end(self, eps: int) -> Inclusion:
        return self.end0 if eps == 0 else self.end1

    def end_cells(self, eps: int) -> frozenset:
        return self.end(eps).image_cells()

    def boundary_cells(self) -> frozenset:
        return self.end_cells(0) | self.end_cells(1)

    def sub_cells(self, cells_of_base: Iterable[Cell]) -> frozenset:
        """Cells of the cylinder over a subobject of the base (iota (.) A)."""
        keep = face_closure(self.base, cells_of_base)
        out = set()
        for c, (fa, fb) in self.prod.pair.items():
            if fb.base in keep:
                out.add(c)
        for (v, ic), f in self.icopy.items():
            if v in keep and not f.is_degenerate:
                out.add(f.base)
        return face_closure(self.sset, out)

    def sub(self, cells_of_base: Iterable[Cell]) -> Inclusion:
        return subcomplex(self.sset, self.sub_cells(cells_of_base))


def _full_word(dim: int) -> Tuple[int, ...]:
    return word_from_collapse_set(range(dim))


def pointwise_cylinder(iota: Inclusion, X: SSet, D: Optional[int] = None) -> Cylinder:
    """Build iota (.) X as the pushout of
    Delta[1] x X  <-  Delta[1] x sk_0 X  ->  I x sk_0 X."""
    I = iota.codomain
    if iota.domain.n_cells() != (2, 1):
        raise SimplicialError("iota must include Delta[1]")
    if D is None:
        D = max(X.top_dim() + 1, I.top_dim())
    d1 = iota.domain
    X0 = zero_skeleton(X).domain
    prodX = product(d1, X, D)
    Z = product(d1, X0, D)
    BI = product(I, X0, D)

    f_top = SMap(Z.sset, prodX.sset, {
        c: Formal(prodX.cell_of[Z.pair[c]]) for c in Z.sset.all_cells()
    }, check=False)
    g_assign = {}
    for c in Z.sset.all_cells():
        fa, fb = Z.pair[c]
        g_assign[c] = Formal(BI.cell_of[(iota.apply(fa), fb)])
    g_incl = Inclusion(SMap(Z.sset, BI.sset, g_assign, check=False), check=False)

    po = pushout(f_top, g_incl)
    cyl = po.sset

    ends = []
    for eps in ("0", "1"):
        assign = {}
        for c in X.all_cells():
            fa = Formal(Cell(0, eps), _full_word(c.dim))
            assign[c] = Formal(prodX.cell_of[(fa, Formal(c))])
        ends.append(Inclusion(SMap(X, cyl, assign, check=False), check=False))

    icopy: Dict[Tuple[Cell, Cell], Formal] = {}
    for v in X.cells_of_dim(0):
        for ic in I.all_cells():
            bcell = BI.cell_of[(Formal(ic), Formal(v, _full_word(ic.dim)))]
            icopy[(v, ic)] = po.right_leg.apply(Formal(bcell))

    return Cylinder(cyl, iota, X, prodX, ends[0], ends[1], icopy)


# ---------------------------------------------------------------------------
# Renaming
# ---------------------------------------------------------------------------


def rename_cells(X: SSet, names: Dict[Cell, str]) -> SSet:
    """A copy of X with some cells renamed (per-dimension uniqueness kept)."""
    new_name = {c: names.get(c, c.name) for c in X.all_cells()}
    cells = [[new_name[Cell(d, nm)] for nm in X.cell_names(d)] for d in X.dims()]

    def rn(f: Formal) -> Formal:
        return Formal(Cell(f.base.dim, new_name[f.base]), f.word)

    faces = {}
    for c in X.all_cells():
        if c.dim >= 1:
            faces[Cell(c.dim, new_name[c])] = tuple(rn(f) for f in X.faces[c])
    return SSet(X.truncation, cells, faces, truncated=X.truncated)
