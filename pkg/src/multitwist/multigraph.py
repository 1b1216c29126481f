"""Finite connected multigraphs with loops and parallel edges.

Vertices and edges carry string identifiers. Wherever an algorithm needs a
"least" identifier it uses :func:`id_key`, a natural ordering (``e2`` sorts
before ``e10``), so every result below is deterministic.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

_CHUNK = re.compile(r"(\d+)")


def id_key(ident: str):
    """Natural sort key for identifiers; the raw string breaks ties."""
    parts = tuple((0, int(c), "") if c.isdigit() else (1, 0, c) for c in _CHUNK.split(ident) if c)
    return parts, ident


class GraphError(ValueError):
    """Malformed graph or violated operation precondition."""


class DisconnectedGraphError(GraphError):
    pass


class CycleGuardError(GraphError):
    """Refusal to enumerate cycles of a graph over the size guard."""


@dataclass(frozen=True)
class Edge:
    id: str
    u: str
    v: str

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, x: str) -> str:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise GraphError(f"vertex {x} is not an end of edge {self.id}")


class Multigraph:
    """Immutable connected multigraph.

    ``vertices`` is sorted by :func:`id_key`; ``edges`` keeps the order it
    was given in (the text format round-trips it).
    """

    __slots__ = ("vertices", "edges", "_edge", "_incident")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Edge | tuple[str, str, str]] = ()):
        verts = list(vertices)
        if len(set(verts)) != len(verts):
            dup = next(v for v in verts if verts.count(v) > 1)
            raise GraphError(f"duplicate vertex {dup}")
        if not verts:
            raise GraphError("empty graph")
        es = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
        lookup: dict[str, Edge] = {}
        vset = set(verts)
        for e in es:
            if e.id in lookup:
                raise GraphError(f"duplicate edge {e.id}")
            for x in (e.u, e.v):
                if x not in vset:
                    raise GraphError(f"edge {e.id} references unknown vertex {x}")
            lookup[e.id] = e
        object.__setattr__(self, "vertices", tuple(sorted(verts, key=id_key)))
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "_edge", lookup)
        incident: dict[str, list[str]] = {v: [] for v in verts}
        for e in es:
            incident[e.u].append(e.id)
            if not e.is_loop:
                incident[e.v].append(e.id)
        object.__setattr__(
            self, "_incident", {v: tuple(sorted(ids, key=id_key)) for v, ids in incident.items()}
        )
        if num_components(self.vertices, es) != 1:
            raise DisconnectedGraphError("graph is not connected")

    def __setattr__(self, name, value):
        raise AttributeError("Multigraph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        es = ", ".join(f"{e.id}:{e.u}-{e.v}" for e in self.edges)
        return f"Multigraph(vertices={list(self.vertices)}, edges=[{es}])"

    def edge(self, ident: str) -> Edge:
        try:
            return self._edge[ident]
        except KeyError:
            raise GraphError(f"unknown edge {ident}") from None

    def has_edge(self, ident: str) -> bool:
        return ident in self._edge

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    def sorted_edge_ids(self) -> list[str]:
        return sorted(self._edge, key=id_key)

    def incident(self, v: str) -> tuple[str, ...]:
        return self._incident[v]

    def degree(self, v: str) -> int:
        """Number of edge ends at ``v``; a loop counts twice."""
        return sum(2 if self._edge[e].is_loop else 1 for e in self._incident[v])

    @property
    def cycle_rank(self) -> int:
        """Rank of the fundamental group: |E| - |V| + 1."""
        return len(self.edges) - len(self.vertices) + 1

    def relabel(self, vertex_map: Mapping[str, str], edge_map: Mapping[str, str]) -> "Multigraph":
        return Multigraph(
            (vertex_map[v] for v in self.vertices),
            (Edge(edge_map[e.id], vertex_map[e.u], vertex_map[e.v]) for e in self.edges),
        )


def num_components(vertices: Iterable[str], edges: Iterable[Edge]) -> int:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = len(parent)
    for e in edges:
        a, b = find(e.u), find(e.v)
        if a != b:
            parent[a] = b
            count -= 1
    return count


def _components_without(g: Multigraph, removed: set[str]) -> list[frozenset[str]]:
    seen: set[str] = set()
    comps = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for eid in g.incident(x):
                if eid in removed:
                    continue
                y = g.edge(eid).other(x)
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


# ---------------------------------------------------------------- trails

@dataclass(frozen=True)
class Trail:
    """A walk with distinct edges.

    ``steps`` holds ``(edge_id, direction)`` pairs; direction ``+1`` means the
    edge is traversed from its stored ``u`` to ``v``, ``-1`` the reverse.
    """

    start: str
    steps: tuple[tuple[str, int], ...]

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e for e, _ in self.steps)

    def vertex_sequence(self, g: Multigraph) -> list[str]:
        seq = [self.start]
        for eid, d in self.steps:
            e = g.edge(eid)
            tail, head = (e.u, e.v) if d > 0 else (e.v, e.u)
            if tail != seq[-1]:
                raise GraphError(f"trail breaks at edge {eid}")
            seq.append(head)
        return seq

    def end(self, g: Multigraph) -> str:
        return self.vertex_sequence(g)[-1]

    def is_valid(self, g: Multigraph) -> bool:
        ids = self.edge_ids
        if len(set(ids)) != len(ids):
            return False
        try:
            self.vertex_sequence(g)
        except GraphError:
            return False
        return True


def canonical_cycle(edge_seq: Sequence[str]) -> tuple[str, ...]:
    """Lexicographically least rotation or reflection of a cyclic sequence."""
    n = len(edge_seq)
    seq = list(edge_seq)
    candidates = []
    for s in (seq, seq[::-1]):
        for i in range(n):
            candidates.append(tuple(s[i:] + s[:i]))
    return min(candidates, key=lambda c: [id_key(x) for x in c])


@dataclass(frozen=True)
class Cycle:
    """An embedded circle, stored as its canonical edge sequence."""

    edges: tuple[str, ...]

    @classmethod
    def from_sequence(cls, edge_seq: Sequence[str]) -> "Cycle":
        if not edge_seq:
            raise GraphError("cycles have positive length")
        return cls(canonical_cycle(edge_seq))

    @property
    def edge_set(self) -> frozenset[str]:
        return frozenset(self.edges)

    def __len__(self):
        return len(self.edges)

    def weight(self, w: Mapping[str, int]) -> int:
        return sum(w[e] for e in self.edges)


def is_cycle(g: Multigraph, edge_seq: Sequence[str]) -> bool:
    """True iff ``edge_seq`` is, in this cyclic order, an embedded closed trail."""
    if not edge_seq or len(set(edge_seq)) != len(edge_seq):
        return False
    first = g.edge(edge_seq[0])
    for start in dict.fromkeys((first.u, first.v)):
        verts = [start]
        ok = True
        for eid in edge_seq:
            e = g.edge(eid)
            if verts[-1] not in (e.u, e.v):
                ok = False
                break
            verts.append(e.other(verts[-1]))
        if ok and verts[-1] == start and len(set(verts[:-1])) == len(verts) - 1:
            return True
    return False


# ------------------------------------------------------- bridges and bonds

def bridges(g: Multigraph) -> frozenset[str]:
    """Cut edges, by iterative low-link DFS over edge identifiers.

    Skipping the parent *edge* rather than the parent vertex makes parallel
    edges count as back edges, so they are never reported.
    """
    order: dict[str, int] = {}
    low: dict[str, int] = {}
    found = set()
    for root in g.vertices:
        if root in order:
            continue
        order[root] = low[root] = len(order)
        stack = [(root, None, iter(g.incident(root)))]
        while stack:
            x, via, it = stack[-1]
            advanced = False
            for eid in it:
                if eid == via:
                    continue
                y = g.edge(eid).other(x)
                if y not in order:
                    order[y] = low[y] = len(order)
                    stack.append((y, eid, iter(g.incident(y))))
                    advanced = True
                    break
                low[x] = min(low[x], order[y])
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[x])
                if low[x] > order[parent]:
                    found.add(via)
    return frozenset(found)


def is_bond(g: Multigraph, s: Iterable[str], components: bool = False):
    """Whether ``s`` is a minimal disconnecting edge set.

    With ``components=True`` returns ``(flag, sides)`` where ``sides`` is the
    pair of vertex sets of ``g - s`` when ``s`` is a bond, else ``None``.
    """
    s = set(s)
    for e in s:
        g.edge(e)
    comps = _components_without(g, s)
    ok = len(comps) > 1 and all(len(_components_without(g, s - {e})) == 1 for e in s)
    if components:
        return ok, (tuple(comps) if ok else None)
    return ok


def two_edge_bond_pairs(g: Multigraph) -> frozenset[frozenset[str]]:
    """All 2-edge bonds, by scanning every pair of non-bridges."""
    cut = bridges(g)
    candidates = [e.id for e in g.edges if e.id not in cut and not e.is_loop]
    pairs = set()
    for e, f in itertools.combinations(candidates, 2):
        if len(_components_without(g, {e, f})) > 1:
            pairs.add(frozenset((e, f)))
    return frozenset(pairs)


def cycle_signatures(g: Multigraph) -> dict[str, frozenset[int]]:
    """For each edge, the indices of the fundamental cycles that contain it.

    Two non-bridge edges form a 2-edge bond exactly when their signatures
    agree; bridges have the empty signature.
    """
    tree = spanning_tree(g)
    sig: dict[str, set[int]] = {e.id: set() for e in g.edges}
    for j, f in enumerate(tree.non_tree_edges):
        for eid, _ in tree.fundamental_trail(f).steps:
            sig[eid].add(j)
    return {e: frozenset(s) for e, s in sig.items()}


def two_edge_bond_pairs_fast(g: Multigraph) -> frozenset[frozenset[str]]:
    """Same result as :func:`two_edge_bond_pairs`, in one spanning-tree pass."""
    groups: dict[frozenset[int], list[str]] = {}
    for e, s in cycle_signatures(g).items():
        if s:
            groups.setdefault(s, []).append(e)
    return frozenset(
        frozenset(p) for members in groups.values() for p in itertools.combinations(members, 2)
    )


# ---------------------------------------------------------- spanning trees

@dataclass(frozen=True)
class SpanningTree:
    graph: Multigraph
    tree_edges: frozenset[str]
    parent_edge: Mapping[str, str | None] = field(repr=False)
    depth: Mapping[str, int] = field(repr=False)

    @property
    def non_tree_edges(self) -> tuple[str, ...]:
        return tuple(e for e in self.graph.sorted_edge_ids() if e not in self.tree_edges)

    @property
    def rank(self) -> int:
        return len(self.graph.edges) - len(self.tree_edges)

    def tree_path(self, a: str, b: str) -> Trail:
        """The unique tree path from ``a`` to ``b``."""
        g = self.graph
        up_a, up_b = [], []
        x, y = a, b
        while self.depth[x] > self.depth[y]:
            up_a.append(self.parent_edge[x])
            x = g.edge(self.parent_edge[x]).other(x)
        while self.depth[y] > self.depth[x]:
            up_b.append(self.parent_edge[y])
            y = g.edge(self.parent_edge[y]).other(y)
        while x != y:
            up_a.append(self.parent_edge[x])
            x = g.edge(self.parent_edge[x]).other(x)
            up_b.append(self.parent_edge[y])
            y = g.edge(self.parent_edge[y]).other(y)
        steps = []
        cur = a
        for eid in up_a + up_b[::-1]:
            e = g.edge(eid)
            nxt = e.other(cur)
            steps.append((eid, 1 if (e.u, e.v) == (cur, nxt) else -1))
            cur = nxt
        return Trail(a, tuple(steps))

    def fundamental_trail(self, f: str) -> Trail:
        """Closed trail: ``f`` from its stored ``u`` to ``v``, then the tree path home."""
        if f in self.tree_edges:
            raise GraphError(f"{f} is a tree edge")
        e = self.graph.edge(f)
        back = self.tree_path(e.v, e.u)
        return Trail(e.u, ((f, 1),) + back.steps)

    def fundamental_cycle(self, f: str) -> Cycle:
        return Cycle.from_sequence(self.fundamental_trail(f).edge_ids)

    @property
    def fundamental_cycles(self) -> dict[str, Cycle]:
        return {f: self.fundamental_cycle(f) for f in self.non_tree_edges}


def spanning_tree(g: Multigraph) -> SpanningTree:
    """Breadth-first tree from the least vertex, scanning edges in id order."""
    root = g.vertices[0]
    parent: dict[str, str | None] = {root: None}
    depth = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for eid in g.incident(x):
            y = g.edge(eid).other(x)
            if y not in parent:
                parent[y] = eid
                depth[y] = depth[x] + 1
                queue.append(y)
    tree = frozenset(e for e in parent.values() if e is not None)
    return SpanningTree(g, tree, parent, depth)


# --------------------------------------------------------------- cycles

DEFAULT_CYCLE_GUARD = 16


def enumerate_cycles(g: Multigraph, max_edges: int = DEFAULT_CYCLE_GUARD) -> frozenset[Cycle]:
    """Every embedded cycle exactly once, loops included.

    Each cycle is grown from its least edge, using only larger edges, so
    the search space is split without overlap; both traversal directions
    collapse under canonicalization.
    """
    if len(g.edges) > max_edges:
        raise CycleGuardError(
            f"graph has {len(g.edges)} edges, over the cycle enumeration guard of {max_edges}"
        )
    rank_of = {e: i for i, e in enumerate(g.sorted_edge_ids())}
    found = set()
    for e0 in g.sorted_edge_ids():
        e = g.edge(e0)
        if e.is_loop:
            found.add(Cycle((e0,)))
            continue
        lo = rank_of[e0]
        target = e.u
        # simple paths v -> u avoiding e0 and smaller edges
        stack = [(e.v, [e0], {e.v})]
        while stack:
            x, path, visited = stack.pop()
            for fid in g.incident(x):
                if rank_of[fid] <= lo or fid in path:
                    continue
                f = g.edge(fid)
                if f.is_loop:
                    continue
                y = f.other(x)
                if y == target:
                    found.add(Cycle.from_sequence(path + [fid]))
                elif y not in visited:
                    stack.append((y, path + [fid], visited | {y}))
    return frozenset(found)


# ---------------------------------------------------------- contraction

def contract(g: Multigraph, h: Iterable[str]) -> tuple[Multigraph, dict[str, str]]:
    """Delete the edges of ``h`` and identify their ends.

    Each merged vertex keeps the least identifier of its class. Returns the
    new graph and the map from its edges to the edges of ``g`` (identifiers
    are preserved, so the map is the identity on ``E(g) - h``).
    """
    h = set(h)
    for e in h:
        g.edge(e)
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for eid in h:
        e = g.edge(eid)
        a, b = find(e.u), find(e.v)
        if a != b:
            lo, hi = sorted((a, b), key=id_key)
            parent[hi] = lo
    verts = sorted({find(v) for v in g.vertices}, key=id_key)
    edges = [Edge(e.id, find(e.u), find(e.v)) for e in g.edges if e.id not in h]
    return Multigraph(verts, edges), {e.id: e.id for e in edges}


# ----------------------------------------------------- edge-disjoint paths

def _two_disjoint_paths(g: Multigraph, u: str, v: str, excluded: frozenset[str] = frozenset()):
    """Two edge-disjoint simple (u, v)-paths via two unit-capacity augmentations."""
    flow = {e.id: 0 for e in g.edges if not e.is_loop and e.id not in excluded}

    def augment() -> bool:
        prev: dict[str, tuple[str, str, int] | None] = {u: None}
        queue = deque([u])
        while queue and v not in prev:
            x = queue.popleft()
            for eid in g.incident(x):
                if eid not in flow:
                    continue
                e = g.edge(eid)
                d = 1 if x == e.u else -1
                if flow[eid] * d >= 1:
                    continue
                y = e.other(x)
                if y not in prev:
                    prev[y] = (x, eid, d)
                    queue.append(y)
        if v not in prev:
            return False
        y = v
        while prev[y] is not None:
            x, eid, d = prev[y]
            flow[eid] += d
            y = x
        return True

    for _ in range(2):
        if not augment():
            return None
    out_edges: dict[str, list[tuple[str, int]]] = {}
    for eid, f in flow.items():
        if f:
            e = g.edge(eid)
            tail = e.u if f > 0 else e.v
            out_edges.setdefault(tail, []).append((eid, f))
    for lst in out_edges.values():
        lst.sort(key=lambda t: id_key(t[0]))
    paths = []
    for _ in range(2):
        verts = [u]
        steps: list[tuple[str, int]] = []
        while verts[-1] != v:
            eid, d = out_edges[verts[-1]].pop(0)
            e = g.edge(eid)
            nxt = e.v if d > 0 else e.u
            if nxt in verts:
                # shortcut the closed detour back to nxt
                cut = verts.index(nxt)
                verts = verts[: cut + 1]
                steps = steps[:cut]
            else:
                verts.append(nxt)
                steps.append((eid, d))
        paths.append(Trail(u, tuple(steps)))
    return tuple(paths)


def edge_disjoint_paths(g: Multigraph, u: str, v: str) -> tuple[Trail, Trail]:
    """Two (u, v)-paths with no common edge; ``g`` must be bridgeless."""
    if u == v:
        raise GraphError("endpoints must differ")
    for x in (u, v):
        if x not in g.vertices:
            raise GraphError(f"unknown vertex {x}")
    cut = bridges(g)
    if cut:
        raise GraphError(f"graph has a bridge ({min(cut, key=id_key)}); precondition violated")
    paths = _two_disjoint_paths(g, u, v)
    assert paths is not None  # bridgeless connected graphs are 2-edge-connected
    return paths


def two_cycles_through(g: Multigraph, c: str) -> tuple[Cycle, Cycle]:
    """Two cycles whose edge sets meet exactly in ``{c}``, for a non-loop c-type edge."""
    e = g.edge(c)
    if e.is_loop:
        raise GraphError(f"edge {c} is a loop; precondition violated")
    if c in bridges(g):
        raise GraphError(f"edge {c} is a cut edge, not c-type; precondition violated")
    partner = next((p for p in two_edge_bond_pairs(g) if c in p), None)
    if partner is not None:
        other = next(iter(partner - {c}))
        raise GraphError(f"edge {c} forms a 2-edge bond with {other}, not c-type; precondition violated")
    paths = _two_disjoint_paths(g, e.v, e.u, excluded=frozenset((c,)))
    if paths is None:
        raise GraphError(f"no two edge-disjoint paths around {c}")
    return tuple(Cycle.from_sequence((c,) + p.edge_ids) for p in paths)
