"""Finite categories with explicit hom-sets and full composition tables.

Used as nerve input, as targets for functor-based non-invertibility
refutations, and to present the walking shapes ([n], the free-living
isomorphism, [n] with one arrow inverted).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

from .core import SimplicialError


class CategoryError(SimplicialError):
    """Inconsistent composition table (missing composites, associativity)."""


@dataclass(frozen=True)
class FinCat:
    """A finite category.

    ``morphisms`` maps each morphism name to (source, target).  ``identity``
    maps each object to its identity morphism's name.  ``table`` maps
    (g, f) -> g after f, for every composable pair.
    """

    objects: Tuple[str, ...]
    morphisms: Dict[str, Tuple[str, str]] = field(default_factory=dict)
    identity: Dict[str, str] = field(default_factory=dict)
    table: Dict[Tuple[str, str], str] = field(default_factory=dict)

    def src(self, m: str) -> str:
        return self.morphisms[m][0]

    def dst(self, m: str) -> str:
        return self.morphisms[m][1]

    def is_identity(self, m: str) -> bool:
        return self.identity.get(self.src(m)) == m and self.src(m) == self.dst(m)

    def compose(self, g: str, f: str) -> str:
        """g after f."""
        if self.dst(f) != self.src(g):
            raise CategoryError(f"{g} after {f} is not composable")
        return self.table[(g, f)]

    def hom(self, x: str, y: str) -> list:
        return [m for m, (s, t) in sorted(self.morphisms.items())
                if s == x and t == y]

    def validate(self) -> None:
        for o in self.objects:
            i = self.identity.get(o)
            if i is None or self.morphisms.get(i) != (o, o):
                raise CategoryError(f"missing identity for object {o!r}")
        for m, (s, t) in self.morphisms.items():
            if s not in self.objects or t not in self.objects:
                raise CategoryError(f"morphism {m!r} has unknown endpoints")
        ms = sorted(self.morphisms)
        for g in ms:
            for f in ms:
                if self.dst(f) != self.src(g):
                    continue
                h = self.table.get((g, f))
                if h is None:
                    raise CategoryError(f"missing composite {g} after {f}")
                if self.morphisms[h] != (self.src(f), self.dst(g)):
                    raise CategoryError(f"composite {g} after {f} has wrong endpoints")
        for m in ms:
            if self.table.get((m, self.identity[self.src(m)])) != m:
                raise CategoryError(f"right identity law fails for {m}")
            if self.table.get((self.identity[self.dst(m)], m)) != m:
                raise CategoryError(f"left identity law fails for {m}")
        for h in ms:
            for g in ms:
                if self.dst(g) != self.src(h):
                    continue
                for f in ms:
                    if self.dst(f) != self.src(g):
                        continue
                    if self.table[(self.table[(h, g)], f)] != self.table[(h, self.table[(g, f)])]:
                        raise CategoryError(
                            f"associativity fails on ({h}, {g}, {f})")

    def is_iso(self, m: str) -> bool:
        s, t = self.morphisms[m]
        for u in self.hom(t, s):
            if (self.table[(u, m)] == self.identity[s]
                    and self.table[(m, u)] == self.identity[t]):
                return True
        return False

    def op(self) -> "FinCat":
        """The opposite category (same morphism names, endpoints swapped)."""
        morphisms = {m: (t, s) for m, (s, t) in self.morphisms.items()}
        table = {(f, g): h for (g, f), h in self.table.items()}
        return FinCat(self.objects, morphisms, dict(self.identity), table)


def cat_from_hom_relation(objects, related, name=None) -> FinCat:
    """Thin category with a morphism x -> y whenever related(x, y).

    ``related`` must be reflexive and transitive on ``objects``.
    """
    objects = tuple(objects)
    morphisms = {}
    identity = {}
    for x in objects:
        for y in objects:
            if related(x, y):
                m = f"{x}>{y}"
                morphisms[m] = (x, y)
                if x == y:
                    identity[x] = m
    table = {}
    for g, (gs, gt) in morphisms.items():
        for f, (fs, ft) in morphisms.items():
            if ft == gs:
                table[(g, f)] = f"{fs}>{gt}"
    c = FinCat(objects, morphisms, identity, table)
    c.validate()
    return c


def poset_cat(n: int) -> FinCat:
    """The linear order 0 <= 1 <= ... <= n as a category."""
    objs = [str(k) for k in range(n + 1)]
    return cat_from_hom_relation(objs, lambda x, y: int(x) <= int(y))


def free_iso_cat() -> FinCat:
    """Two objects with exactly one morphism in every hom-set."""
    objs = ("0", "1")
    return cat_from_hom_relation(objs, lambda x, y: True)


def inverted_interval_cat(n: int, i: int) -> FinCat:
    """The linear order [n] with the arrow c_i -> c_{i+1} made invertible.

    Thin: a morphism c_a -> c_b exists iff collapsing {i, i+1} sends a at or
    below b.
    """
    if not (n >= 1 and 0 <= i <= n - 1):
        raise CategoryError(f"bad isoplex parameters n={n}, i={i}")

    def collapse(a: int) -> int:
        return a if a <= i else a - 1

    objs = [str(k) for k in range(n + 1)]
    return cat_from_hom_relation(
        objs, lambda x, y: collapse(int(x)) <= collapse(int(y)))


def parallel_pair_cat() -> FinCat:
    """A non-thin three-object category: two parallel arrows pushed forward.

    Objects 0, 1, 2 with hom(0,1) = {f1, f2}, hom(1,2) = {g},
    hom(0,2) = {h1, h2} and g after fi = hi.
    """
    objects = ("0", "1", "2")
    morphisms = {
        "id0": ("0", "0"), "id1": ("1", "1"), "id2": ("2", "2"),
        "f1": ("0", "1"), "f2": ("0", "1"),
        "g": ("1", "2"),
        "h1": ("0", "2"), "h2": ("0", "2"),
    }
    identity = {"0": "id0", "1": "id1", "2": "id2"}
    table = {}
    for m, (s, t) in morphisms.items():
        table[(m, identity[s])] = m
        table[(identity[t], m)] = m
    table[("g", "f1")] = "h1"
    table[("g", "f2")] = "h2"
    c = FinCat(objects, morphisms, identity, table)
    c.validate()
    return c


def finite_sets_cat(universe: Mapping[str, tuple]) -> FinCat:
    """The full category of the given named finite sets and all functions.

    ``universe`` maps an object name to a tuple of element names.  Morphism
    names record their graph, so the category is reconstructible from names.
    """
    objects = tuple(sorted(universe))
    morphisms = {}
    identity = {}
    graphs = {}

    def fn_name(src, dst, graph) -> str:
        body = ",".join(f"{a}>{b}" for a, b in graph)
        return f"{src}->{dst}[{body}]"

    import itertools
    for s in objects:
        for t in objects:
            dom, cod = universe[s], universe[t]
            for values in itertools.product(cod, repeat=len(dom)):
                graph = tuple(zip(dom, values))
                nm = fn_name(s, t, graph)
                morphisms[nm] = (s, t)
                graphs[nm] = dict(graph)
                if s == t and all(a == b for a, b in graph):
                    identity[s] = nm
    table = {}
    for g, (gs, gt) in morphisms.items():
        for f, (fs, ft) in morphisms.items():
            if ft != gs:
                continue
            comp = tuple((a, graphs[g][graphs[f][a]]) for a in universe[fs])
            table[(g, f)] = fn_name(fs, gt, comp)
    c = FinCat(objects, morphisms, identity, table)
    c.validate()
    return c
