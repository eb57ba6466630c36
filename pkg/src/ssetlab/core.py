"""Core representation of finite, dimension-truncated simplicial sets.

A simplicial set is presented by its non-degenerate simplices.  Every simplex
is a formal degeneracy s_{w1} s_{w2} ... s_{wk} applied to a non-degenerate
cell, with the word kept in admissible (strictly decreasing) normal form, so
equality of simplices is structural equality of ``Formal`` values.  Face
tables store, for each non-degenerate n-cell with n >= 1, the formal
(n-1)-simplices d_0 .. d_n.

Everything here is immutable after construction; operations never mutate
their inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence


class SimplicialError(Exception):
    """Malformed simplicial data (bad word, missing face, invalid map)."""


# ---------------------------------------------------------------------------
# Degeneracy words
# ---------------------------------------------------------------------------

DegWord = tuple  # tuple[int, ...], strictly decreasing in normal form


def normalize_word(word: Sequence[int]) -> DegWord:
    """Normal form of a degeneracy word via s_i s_j = s_{j+1} s_i for i <= j.

    Words act outermost-first: (w1, w2, ..., wk) means s_{w1}(s_{w2}(...)).
    The normal form is strictly decreasing and equals the set of positions at
    which the corresponding degenerate simplex is collapsed.
    """
    w = list(word)
    if any(i < 0 for i in w):
        raise SimplicialError(f"negative degeneracy index in {word!r}")
    changed = True
    while changed:
        changed = False
        for t in range(len(w) - 1):
            a, b = w[t], w[t + 1]
            if a <= b:
                w[t], w[t + 1] = b + 1, a
                changed = True
    return tuple(w)


def word_collapse_set(word: Sequence[int]) -> frozenset:
    """Collapse positions of an admissible word (they coincide as a set)."""
    return frozenset(normalize_word(word))


def word_from_collapse_set(positions: Iterable[int]) -> DegWord:
    return tuple(sorted(positions, reverse=True))


def strip_collapses(word: Sequence[int], removed: Iterable[int]) -> DegWord:
    """Remove collapse positions from an admissible word, shifting the rest.

    If a simplex with collapse set ``word`` is written as s_R applied to a
    lower simplex (R = ``removed``), this is the lower simplex's word.
    """
    removed = sorted(set(removed))
    out = []
    for j in word:
        if j in removed:
            continue
        out.append(j - sum(1 for r in removed if r < j))
    return tuple(sorted(out, reverse=True))


# ---------------------------------------------------------------------------
# Cells and formal simplices
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Cell:
    """A non-degenerate simplex, identified by (dimension, name)."""

    dim: int
    name: str

    def __repr__(self) -> str:
        return f"{self.dim}:{self.name}"


@dataclass(frozen=True, order=True)
class Formal:
    """A possibly-degenerate simplex: an admissible word applied to a cell."""

    base: Cell
    word: DegWord = ()

    @property
    def dim(self) -> int:
        return self.base.dim + len(self.word)

    @property
    def is_degenerate(self) -> bool:
        return bool(self.word)

    def __repr__(self) -> str:
        if not self.word:
            return repr(self.base)
        ws = "".join(f"s{i}" for i in self.word)
        return f"{ws}({self.base!r})"


def degenerate(f: Formal, extra: Sequence[int]) -> Formal:
    """Apply further degeneracies (outermost-first) to a formal simplex."""
    if not extra:
        return f
    return Formal(f.base, normalize_word(tuple(extra) + f.word))


def formal_token(f: Formal) -> str:
    """Compact printable token for a formal simplex, used in composite names."""
    if not f.word:
        return f.base.name
    return "".join(f"s{i}" for i in f.word) + " " + f.base.name


# ---------------------------------------------------------------------------
# Simplicial sets
# ---------------------------------------------------------------------------


class SSet:
    """A truncated simplicial set presented by non-degenerate cells.

    Parameters
    ----------
    truncation:
        All non-degenerate cells have dimension <= truncation.
    cells:
        Per dimension, the ordered tuple of cell names.
    faces:
        For each cell of dimension n >= 1, the tuple (d_0, ..., d_n) of
        formal (n-1)-simplices.
    truncated:
        True when the intended object has (or may have) non-degenerate cells
        above the truncation which were dropped; consumers must then treat
        negative search results as "(<= truncation)-certified" only.
    """

    __slots__ = (
        "truncation", "cells", "faces", "truncated",
        "_face_memo", "_vertex_memo", "_formal_memo", "_ext_index",
        "_cellset", "__weakref__",
    )

    def __init__(self, truncation: int, cells: Sequence[Sequence[str]],
                 faces: Mapping[Cell, Sequence[Formal]],
                 truncated: bool = False, check: bool = True):
        if truncation < 0:
            raise SimplicialError("truncation must be >= 0")
        padded = [tuple(cells[d]) if d < len(cells) else ()
                  for d in range(truncation + 1)]
        self.truncation = truncation
        self.cells = tuple(padded)
        self.faces = {c: tuple(fs) for c, fs in faces.items()}
        self.truncated = truncated
        self._face_memo = {}
        self._vertex_memo = {}
        self._formal_memo = {}
        self._ext_index = {}
        self._cellset = frozenset(
            Cell(d, nm) for d, names in enumerate(self.cells) for nm in names)
        if check:
            self._check_wellformed()

    # -- basic queries ------------------------------------------------------

    def dims(self) -> range:
        return range(self.truncation + 1)

    def cell_names(self, dim: int) -> tuple:
        if dim < 0 or dim > self.truncation:
            return ()
        return self.cells[dim]

    def cells_of_dim(self, dim: int) -> tuple:
        return tuple(Cell(dim, nm) for nm in self.cell_names(dim))

    def all_cells(self) -> Iterator[Cell]:
        for d in self.dims():
            yield from self.cells_of_dim(d)

    def n_cells(self) -> tuple:
        """Non-degenerate cell counts by dimension, highest dims trimmed."""
        counts = [len(names) for names in self.cells]
        while len(counts) > 1 and counts[-1] == 0:
            counts.pop()
        return tuple(counts)

    def size(self) -> int:
        return sum(len(names) for names in self.cells)

    def has_cell(self, cell: Cell) -> bool:
        return cell in self._cellset

    def top_dim(self) -> int:
        for d in range(self.truncation, -1, -1):
            if self.cells[d]:
                return d
        return 0

    # -- faces and vertices -------------------------------------------------

    def face(self, cell: Cell, i: int) -> Formal:
        if cell.dim == 0:
            raise SimplicialError("a vertex has no faces")
        return self.faces[cell][i]

    def formal_face(self, f: Formal, i: int) -> Formal:
        """d_i of a formal simplex, in normal form.

        Uses d_i s_j = s_{j-1} d_i (i < j), d_j s_j = d_{j+1} s_j = id and
        d_i s_j = s_j d_{i-1} (i > j + 1), then the stored face table.
        """
        if not 0 <= i <= f.dim:
            raise SimplicialError(f"face index {i} out of range for {f!r}")
        if f.dim == 0:
            raise SimplicialError("a vertex has no faces")
        key = (f, i)
        memo = self._face_memo
        hit = memo.get(key)
        if hit is not None:
            return hit
        if f.word:
            j, rest = f.word[0], f.word[1:]
            inner = Formal(f.base, rest)
            if i < j:
                res = degenerate(self.formal_face(inner, i), (j - 1,))
            elif i in (j, j + 1):
                res = inner
            else:
                res = degenerate(self.formal_face(inner, i - 1), (j,))
        else:
            res = self.faces[f.base][i]
        memo[key] = res
        return res

    def vertex(self, f: Formal, j: int) -> Cell:
        """The j-th vertex of a formal simplex."""
        key = (f, j)
        hit = self._vertex_memo.get(key)
        if hit is not None:
            return hit
        g, k = f, j
        while g.dim > 0:
            if k == 0:
                g = self.formal_face(g, g.dim)
            else:
                g = self.formal_face(g, 0)
                k -= 1
        self._vertex_memo[key] = g.base
        return g.base

    def vertices(self, f: Formal) -> tuple:
        return tuple(self.vertex(f, j) for j in range(f.dim + 1))

    def edge_endpoints(self, e: Formal) -> tuple:
        """(source, target) of a formal edge."""
        if e.dim != 1:
            raise SimplicialError(f"{e!r} is not an edge")
        return self.vertex(e, 0), self.vertex(e, 1)

    # -- enumeration of formal simplices ------------------------------------

    def formals(self, dim: int) -> tuple:
        """All formal simplices of the given dimension, in canonical order."""
        hit = self._formal_memo.get(dim)
        if hit is not None:
            return hit
        out = []
        for p in range(min(dim, self.truncation) + 1):
            k = dim - p
            for nm in self.cell_names(p):
                base = Cell(p, nm)
                if k == 0:
                    out.append(Formal(base))
                else:
                    for positions in itertools.combinations(range(dim), k):
                        out.append(Formal(base, word_from_collapse_set(positions)))
        res = tuple(sorted(out, key=lambda f: (len(f.word), f.base, f.word)))
        self._formal_memo[dim] = res
        return res

    def extension_index(self, dim: int) -> dict:
        """Map from face tuples (d_0..d_dim) to the formal simplices with them."""
        hit = self._ext_index.get(dim)
        if hit is not None:
            return hit
        index: dict = {}
        for f in self.formals(dim):
            key = tuple(self.formal_face(f, i) for i in range(dim + 1))
            index.setdefault(key, []).append(f)
        self._ext_index[dim] = index
        return index

    # -- validation ----------------------------------------------------------

    def _check_wellformed(self) -> None:
        names_seen = [set() for _ in self.dims()]
        for d, names in enumerate(self.cells):
            for nm in names:
                if nm in names_seen[d]:
                    raise SimplicialError(f"duplicate cell name {nm!r} in dim {d}")
                names_seen[d].add(nm)
        for cell, fs in self.faces.items():
            if not self.has_cell(cell):
                raise SimplicialError(f"face table entry for unknown cell {cell!r}")
            if len(fs) != cell.dim + 1:
                raise SimplicialError(f"{cell!r} needs {cell.dim + 1} faces")
            for f in fs:
                if f.dim != cell.dim - 1:
                    raise SimplicialError(f"face {f!r} of {cell!r} has wrong dim")
                if normalize_word(f.word) != f.word:
                    raise SimplicialError(f"face {f!r} of {cell!r} not in normal form")
                if not self.has_cell(f.base):
                    raise SimplicialError(f"face {f!r} of {cell!r} references a missing cell")
        for d in self.dims():
            if d >= 1:
                for cell in self.cells_of_dim(d):
                    if cell not in self.faces:
                        raise SimplicialError(f"missing face table for {cell!r}")

    def validate(self) -> None:
        """Check all simplicial identities d_i d_j = d_{j-1} d_i (i < j)."""
        for d in self.dims():
            if d < 2:
                continue
            for cell in self.cells_of_dim(d):
                f = Formal(cell)
                for j in range(d + 1):
                    for i in range(j):
                        left = self.formal_face(self.formal_face(f, j), i)
                        right = self.formal_face(self.formal_face(f, i), j - 1)
                        if left != right:
                            raise SimplicialError(
                                f"simplicial identity fails on {cell!r}: "
                                f"d_{i} d_{j} = {left!r} != {right!r} = d_{j-1} d_{i}")

    def is_valid(self) -> bool:
        try:
            self.validate()
        except SimplicialError:
            return False
        return True

    def __repr__(self) -> str:
        return f"SSet(counts={self.n_cells()}, D={self.truncation})"


# ---------------------------------------------------------------------------
# Simplicial maps
# ---------------------------------------------------------------------------


class SMap:
    """A simplicial map, given by images of non-degenerate domain cells."""

    __slots__ = ("domain", "codomain", "assignment")

    def __init__(self, domain: SSet, codomain: SSet,
                 assignment: Mapping[Cell, Formal], check: bool = True):
        self.domain = domain
        self.codomain = codomain
        self.assignment = dict(assignment)
        if check:
            self.validate()

    def apply(self, f: Formal) -> Formal:
        img = self.assignment[f.base]
        return degenerate(img, f.word)

    def __call__(self, f) -> Formal:
        if isinstance(f, Cell):
            f = Formal(f)
        return self.apply(f)

    def validate(self) -> None:
        for d in self.domain.dims():
            for cell in self.domain.cells_of_dim(d):
                img = self.assignment.get(cell)
                if img is None:
                    raise SimplicialError(f"no image assigned for {cell!r}")
                if img.dim != d:
                    raise SimplicialError(f"image of {cell!r} has wrong dimension")
                if not self.codomain.has_cell(img.base):
                    raise SimplicialError(f"image of {cell!r} not in codomain")
                for i in range(d + 1):
                    if d == 0:
                        break
                    lhs = self.apply(self.domain.face(cell, i))
                    rhs = self.codomain.formal_face(img, i)
                    if lhs != rhs:
                        raise SimplicialError(
                            f"map does not commute with d_{i} on {cell!r}: "
                            f"{lhs!r} != {rhs!r}")

    def is_valid(self) -> bool:
        try:
            self.validate()
        except SimplicialError:
            return False
        return True

    def then(self, other: "SMap") -> "SMap":
        """Composition self followed by other."""
        if other.domain is not self.codomain:
            raise SimplicialError("composition mismatch")
        assignment = {c: other.apply(f) for c, f in self.assignment.items()}
        return SMap(self.domain, other.codomain, assignment, check=False)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SMap)
                and self.domain is other.domain
                and self.codomain is other.codomain
                and self.assignment == other.assignment)

    def __hash__(self):
        return hash(frozenset(self.assignment.items()))

    def key(self) -> tuple:
        """Canonical sort key (assignment in cell order)."""
        return tuple(sorted(self.assignment.items()))

    def __repr__(self) -> str:
        return f"SMap({self.domain!r} -> {self.codomain!r})"


def identity_map(X: SSet) -> SMap:
    return SMap(X, X, {c: Formal(c) for c in X.all_cells()}, check=False)


def constant_map(X: SSet, Y: SSet, v: Cell) -> SMap:
    """The map collapsing all of X to the vertex v of Y."""
    assignment = {}
    for c in X.all_cells():
        word = word_from_collapse_set(range(c.dim))
        assignment[c] = Formal(v, word)
    return SMap(X, Y, assignment, check=False)


def is_mono(f: SMap) -> bool:
    """Levelwise injectivity: non-degenerate cells map injectively to
    non-degenerate simplices."""
    for d in f.domain.dims():
        seen = set()
        for cell in f.domain.cells_of_dim(d):
            img = f.assignment[cell]
            if img.is_degenerate or img in seen:
                return False
            seen.add(img)
    return True


class Inclusion:
    """A simplicial map certified levelwise injective."""

    __slots__ = ("map", "injective_by_dim")

    def __init__(self, smap: SMap, check: bool = True):
        if check and not is_mono(smap):
            raise SimplicialError("map is not an inclusion")
        self.map = smap
        self.injective_by_dim = tuple(True for _ in smap.domain.dims())

    @property
    def domain(self) -> SSet:
        return self.map.domain

    @property
    def codomain(self) -> SSet:
        return self.map.codomain

    def apply(self, f: Formal) -> Formal:
        return self.map.apply(f)

    def __call__(self, f) -> Formal:
        return self.map(f)

    def image_cells(self) -> frozenset:
        return frozenset(self.map.assignment[c].base
                         for c in self.domain.all_cells())

    def complement(self) -> list:
        """Codomain cells not in the image, in canonical order."""
        img = self.image_cells()
        return [c for c in self.codomain.all_cells() if c not in img]

    def __repr__(self) -> str:
        return f"Inclusion({self.domain!r} into {self.codomain!r})"


# ---------------------------------------------------------------------------
# Subobjects
# ---------------------------------------------------------------------------


def face_closure(X: SSet, seed: Iterable[Cell]) -> frozenset:
    """Smallest face-closed cell set containing the seed."""
    todo = list(seed)
    out = set()
    while todo:
        c = todo.pop()
        if c in out:
            continue
        if not X.has_cell(c):
            raise SimplicialError(f"{c!r} is not a cell of the ambient object")
        out.add(c)
        if c.dim >= 1:
            for f in X.faces[c]:
                todo.append(f.base)
    return frozenset(out)


def subcomplex(X: SSet, cells: Iterable[Cell], truncated: Optional[bool] = None) -> Inclusion:
    """The subobject generated by the given cells, with names reused.

    Returns the inclusion into X.
    """
    closed = face_closure(X, cells)
    by_dim = [[] for _ in X.dims()]
    for d in X.dims():
        for nm in X.cell_names(d):
            if Cell(d, nm) in closed:
                by_dim[d].append(nm)
    faces = {c: X.faces[c] for c in closed if c.dim >= 1}
    sub = SSet(X.truncation, by_dim, faces,
               truncated=X.truncated if truncated is None else truncated,
               check=False)
    incl = SMap(sub, X, {c: Formal(c) for c in closed}, check=False)
    return Inclusion(incl, check=False)


def sub_union(X: SSet, *parts: Iterable[Cell]) -> frozenset:
    out: set = set()
    for p in parts:
        out |= face_closure(X, p)
    return frozenset(out)


def sub_intersection(X: SSet, a: Iterable[Cell], b: Iterable[Cell]) -> frozenset:
    return face_closure(X, a) & face_closure(X, b)


def same_ambient(a: Inclusion, b: Inclusion) -> None:
    if a.codomain is not b.codomain:
        raise SimplicialError("subobjects live in different ambient objects")


def union(a: Inclusion, b: Inclusion) -> Inclusion:
    same_ambient(a, b)
    return subcomplex(a.codomain, a.image_cells() | b.image_cells())


def intersection(a: Inclusion, b: Inclusion) -> Inclusion:
    same_ambient(a, b)
    return subcomplex(a.codomain, a.image_cells() & b.image_cells())


# ---------------------------------------------------------------------------
# Isomorphism search
# ---------------------------------------------------------------------------


def _vertex_profile(X: SSet):
    """Refinement signature for vertices: incidence pattern in all cells."""
    prof = {Cell(0, nm): [] for nm in X.cell_names(0)}
    for d in X.dims():
        if d == 0:
            continue
        for cell in X.cells_of_dim(d):
            vs = X.vertices(Formal(cell))
            for pos, v in enumerate(vs):
                prof[v].append((d, pos))
    return {v: tuple(sorted(p)) for v, p in prof.items()}


def iso_check(X: SSet, Y: SSet, pinned: Optional[Mapping[Cell, Cell]] = None):
    """Find an isomorphism X -> Y extending ``pinned``, or return None.

    The search assigns vertices by backtracking over profile-compatible
    candidates; higher cells are then forced through the face-tuple index of
    Y, branching only among parallel cells (cells with identical faces).
    """
    if X.n_cells() != Y.n_cells():
        return None
    pinned = dict(pinned or {})
    profX, profY = _vertex_profile(X), _vertex_profile(Y)
    xverts = list(X.cells_of_dim(0))
    yverts = list(Y.cells_of_dim(0))

    for v, w in pinned.items():
        if v.dim == 0 and profX[v] != profY[w]:
            return None

    top = max(X.top_dim(), Y.top_dim())

    def extend_cells(assign: dict, used_by_dim: dict, dim: int):
        """Assign all cells of dimension ``dim`` consistently, then recurse."""
        if dim > top:
            return dict(assign)
        xs = [c for c in X.cells_of_dim(dim) if c not in assign]
        index = Y.extension_index(dim) if dim >= 1 else None

        def place(k: int):
            if k == len(xs):
                return extend_cells(assign, used_by_dim, dim + 1)
            c = xs[k]
            key = tuple(
                _map_formal(assign, X.face(c, i)) for i in range(dim + 1))
            if any(f is None for f in key):
                return None
            cands = []
            for f in index.get(key, ()):
                if f.word or f.base in used_by_dim[dim]:
                    continue
                cands.append(f.base)
            for cand in cands:
                assign[c] = cand
                used_by_dim[dim].add(cand)
                res = place(k + 1)
                if res is not None:
                    return res
                del assign[c]
                used_by_dim[dim].remove(cand)
            return None

        return place(0)

    def _map_formal(assign, f: Formal):
        img = assign.get(f.base)
        if img is None:
            return None
        return Formal(img, f.word)

    def place_vertices():
        assign = {c: w for c, w in pinned.items()}
        used = set(assign.values())
        free = [v for v in xverts if v not in assign]

        def go(k: int):
            if k == len(free):
                used_by_dim = {d: set() for d in range(1, top + 1)}
                for c, w in pinned.items():
                    if c.dim >= 1:
                        used_by_dim[c.dim].add(w)
                return extend_cells(dict(assign), used_by_dim, 1)
            v = free[k]
            for w in yverts:
                if w in used or profY[w] != profX[v]:
                    continue
                assign[v] = w
                used.add(w)
                res = go(k + 1)
                if res is not None:
                    return res
                del assign[v]
                used.remove(w)
            return None

        return go(0)

    result = place_vertices()
    if result is None:
        return None
    # sanity: result is a full bijection on cells
    for d in X.dims():
        for c in X.cells_of_dim(d):
            if c not in result:
                return None
    return result


def iso_as_map(X: SSet, Y: SSet, assign: Mapping[Cell, Cell]) -> SMap:
    return SMap(X, Y, {c: Formal(w) for c, w in assign.items()}, check=False)
