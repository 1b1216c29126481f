"""Partition of the edges of a graph into a-, b- and c-type classes.

Two edges are equivalent when they coincide or form a 2-edge bond; the
classes are the transitive closure of that rule. Cut edges are the a-type
singletons, closure classes of size at least two are the b-type classes,
and every other edge is c-type.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .multigraph import Multigraph, bridges, id_key, two_edge_bond_pairs


@dataclass(frozen=True)
class EdgeClassification:
    a_edges: frozenset[str]
    b_classes: tuple[tuple[str, ...], ...]  # each sorted by id_key; [0] is the representative
    c_edges: frozenset[str]

    @property
    def p(self) -> int:
        return len(self.a_edges)

    @property
    def r(self) -> int:
        return len(self.b_classes)

    @property
    def q(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.b_classes)

    @property
    def s(self) -> int:
        return len(self.c_edges)

    def representative(self, j: int) -> str:
        return self.b_classes[j][0]

    def kind(self, edge: str) -> tuple[str, int | None]:
        """``("a", None)``, ``("b", class_index)`` or ``("c", None)``."""
        if edge in self.a_edges:
            return "a", None
        for j, cls in enumerate(self.b_classes):
            if edge in cls:
                return "b", j
        if edge in self.c_edges:
            return "c", None
        raise KeyError(edge)

    def all_edges(self) -> frozenset[str]:
        return self.a_edges | self.c_edges | frozenset(e for b in self.b_classes for e in b)


def classify(g: Multigraph) -> EdgeClassification:
    a = bridges(g)
    parent = {e.id: e.id for e in g.edges if e.id not in a}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for pair in two_edge_bond_pairs(g):
        x, y = sorted(pair, key=id_key)
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx
    groups: dict[str, list[str]] = {}
    for e in parent:
        groups.setdefault(find(e), []).append(e)
    b_classes = sorted(
        (tuple(sorted(m, key=id_key)) for m in groups.values() if len(m) >= 2),
        key=lambda cls: id_key(cls[0]),
    )
    c = frozenset(m[0] for m in groups.values() if len(m) == 1)
    return EdgeClassification(a, tuple(b_classes), c)


def _n_components(g: Multigraph, removed: frozenset[str]) -> int:
    # deliberately independent of the multigraph module's traversal helpers
    adj: dict[str, list[str]] = {v: [] for v in g.vertices}
    for e in g.edges:
        if e.id not in removed:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
    unseen = set(g.vertices)
    n = 0
    while unseen:
        n += 1
        frontier = [unseen.pop()]
        while frontier:
            x = frontier.pop()
            for y in adj[x]:
                if y in unseen:
                    unseen.remove(y)
                    frontier.append(y)
    return n


def classification_problems(g: Multigraph, cls: EdgeClassification) -> list[str]:
    """Every invariant violated by ``cls``, re-derived from connectivity tests."""
    problems = []
    edges = [e.id for e in g.edges]
    members = list(cls.a_edges) + list(cls.c_edges) + [e for b in cls.b_classes for e in b]
    if sorted(members) != sorted(edges):
        problems.append("classes do not partition the edge set")
        return problems

    cut = {e for e in edges if _n_components(g, frozenset((e,))) > 1}

    def bond2(e, f):
        return e not in cut and f not in cut and _n_components(g, frozenset((e, f))) > 1

    if set(cls.a_edges) != cut:
        problems.append("a-type edges differ from the cut edges")
    for j, b in enumerate(cls.b_classes):
        if len(b) < 2:
            problems.append(f"b-class {j} has fewer than two edges")
        if list(b) != sorted(b, key=id_key):
            problems.append(f"b-class {j} is not ordered by identifier")
        for e in b:
            if e in cut:
                problems.append(f"b-class {j} contains cut edge {e}")
        for e, f in itertools.combinations(b, 2):
            if not bond2(e, f):
                problems.append(f"b-class {j}: {{{e}, {f}}} is not a bond")
        outsiders = [x for x in edges if x not in b and x not in cut]
        for x in outsiders:
            if all(bond2(x, e) for e in b):
                problems.append(f"b-class {j} is not maximal: {x} bonds with every member")
    reps = [b[0] for b in cls.b_classes]
    if reps != sorted(reps, key=id_key):
        problems.append("b-classes are not ordered by representative")
    for c in cls.c_edges:
        if c in cut:
            problems.append(f"c-type edge {c} is a cut edge")
        for x in edges:
            if x != c and bond2(c, x):
                problems.append(f"c-type edge {c} forms a 2-edge bond with {x}")
    return problems


def verify_classification(g: Multigraph, cls: EdgeClassification) -> bool:
    return not classification_problems(g, cls)
