"""Surfaces cut along a reduction system.

A :class:`SurfaceModel` is the reduction system graph together with the
genus of each complementary piece. The genus of the closed surface is
derived from Euler characteristic additivity, never stored.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .edge_classes import classify
from .multigraph import Edge, Multigraph
from .torelli import torelli_rank


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SurfaceModel:
    graph: Multigraph
    genus_of: Mapping[str, int]

    def __post_init__(self):
        gs = dict(self.genus_of)
        if set(gs) != set(self.graph.vertices):
            raise SurfaceError("genus must be given for every vertex and only for vertices")
        for v, x in gs.items():
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise SurfaceError(f"genus of {v} must be a nonnegative integer")
        object.__setattr__(self, "genus_of", MappingProxyType(gs))

    def __eq__(self, other):
        if not isinstance(other, SurfaceModel):
            return NotImplemented
        return self.graph == other.graph and dict(self.genus_of) == dict(other.genus_of)

    def degree(self, v: str) -> int:
        return self.graph.degree(v)

    @property
    def is_exempt(self) -> bool:
        """Single vertex with no edges or one loop (sphere/torus style inputs)."""
        return len(self.graph.vertices) == 1 and len(self.graph.edges) <= 1


def genus(s: SurfaceModel) -> int:
    """Genus of the closed surface, from ``2g - 2 = sum(2*gamma_v + b_v - 2)``."""
    total = sum(2 * s.genus_of[v] + s.degree(v) - 2 for v in s.graph.vertices)
    if total % 2 or total < -2:
        raise SurfaceError(f"inconsistent Euler characteristic: 2g - 2 = {total}")
    g = total // 2 + 1
    assert g == s.graph.cycle_rank + sum(s.genus_of.values())
    return g


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def validate(s: SurfaceModel) -> ValidationReport:
    """Check that ``s`` comes from an honest reduction system.

    A genus-0 piece with one boundary curve would make that curve
    null-homotopic; a genus-0 piece with two would make two curves isotopic.
    The lone-loop graph is exempt (an annulus inside a torus is fine).
    """
    out = []
    for v in s.graph.vertices:
        b, gam = s.degree(v), s.genus_of[v]
        if gam == 0 and b == 1:
            out.append(f"vertex {v}: genus-0 piece with one boundary curve (disc)")
        if gam == 0 and b == 2 and not s.is_exempt:
            out.append(f"vertex {v}: genus-0 piece with two boundary curves (annulus)")
    if not out and not s.is_exempt:
        small = sum(1 for v in s.graph.vertices if s.degree(v) <= 2)
        g = genus(s)
        if g < s.graph.cycle_rank + small:
            out.append(f"genus {g} below cycle rank plus low-degree vertex count {s.graph.cycle_rank + small}")
    return ValidationReport(tuple(out))


def omega(s: SurfaceModel) -> int:
    """Number of pieces that are neither pairs of pants nor one-holed tori."""
    return sum(
        1
        for v in s.graph.vertices
        if (s.genus_of[v], s.degree(v)) not in ((0, 3), (1, 1))
    )


def census(s: SurfaceModel) -> Counter:
    """``(degree, genus) -> number of vertices``."""
    return Counter((s.degree(v), s.genus_of[v]) for v in s.graph.vertices)


def euler_from_census(c: Mapping[tuple[int, int], int]) -> int:
    """``-chi`` of the closed surface summed piece type by piece type."""
    total = 0
    for (b, gam), n in c.items():
        if b == 1:
            total += (2 * gam - 1) * n
        elif b == 2:
            total += 2 * gam * n
        else:
            total += (2 * gam + b - 2) * n
    return total


def omega_from_census(c: Mapping[tuple[int, int], int]) -> int:
    """Omega as ``nu_1^{>=2} + nu_2^{>=1} + nu_3^{>=1} + nu_4 + ...``.

    Closed pieces and the lone annulus only occur in the exempt graphs and
    are counted on top.
    """
    total = 0
    for (b, gam), n in c.items():
        if b == 1 and gam >= 2 or b == 2 and gam >= 1 or b == 3 and gam >= 1 or b >= 4:
            total += n
        elif b == 0 or (b, gam) == (2, 0):
            total += n
    return total


@dataclass(frozen=True)
class BoundsReport:
    genus: int
    rank: int
    vertices: int
    omega: int
    vertex_bound_ok: bool
    vertex_slack: int
    genus_bound_ok: bool | None  # None when genus < 2
    genus_slack: int | None
    notes: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.vertex_bound_ok and self.genus_bound_ok is not False

    def lines(self) -> list[str]:
        out = [
            f"genus {self.genus}",
            f"rank {self.rank}",
            f"vertices {self.vertices}",
            f"omega {self.omega}",
            f"vertex_bound rank<=vertices-1 {self.rank}<={self.vertices - 1} "
            f"{'OK' if self.vertex_bound_ok else 'FAIL'} slack {self.vertex_slack}",
        ]
        if self.genus_bound_ok is None:
            out.append("genus_bound skipped (genus < 2)")
        else:
            out.append(
                f"genus_bound rank+omega<=2g-3 {self.rank + self.omega}<={2 * self.genus - 3} "
                f"{'OK' if self.genus_bound_ok else 'FAIL'} slack {self.genus_slack}"
            )
        return out


def check_bounds(s: SurfaceModel) -> BoundsReport:
    g = genus(s)
    rk = torelli_rank(classify(s.graph))
    nu = len(s.graph.vertices)
    om = omega(s)
    notes = []
    if g >= 2:
        gslack = 2 * g - 3 - (rk + om)
        gok = gslack >= 0
    else:
        gslack, gok = None, None
        notes.append("genus below 2: rank+omega bound not applicable")
    vslack = nu - 1 - rk
    return BoundsReport(g, rk, nu, om, vslack >= 0, vslack, gok, gslack, tuple(notes))


# -------------------------------------------------------------- generators

def gen_extremal(g: int) -> SurfaceModel:
    """Tree of ``g`` one-holed tori and ``g - 2`` pants with all curves separating.

    Caterpillar layout: pants ``p1 .. p{g-2}`` on a path, tori ``t1 .. tg``
    hung off it so every pants vertex is trivalent.
    """
    if isinstance(g, bool) or not isinstance(g, int) or g < 2:
        raise SurfaceError(f"extremal family needs g >= 2, got {g!r}")
    tori = [f"t{i}" for i in range(1, g + 1)]
    if g == 2:
        return SurfaceModel(Multigraph(tori, [Edge("a1", "t1", "t2")]), {"t1": 1, "t2": 1})
    pants = [f"p{i}" for i in range(1, g - 1)]
    edges = []
    for x, y in zip(pants, pants[1:]):
        edges.append((x, y))
    slots = []
    for p in pants:
        used = (p != pants[0]) + (p != pants[-1])
        slots += [p] * (3 - used)
    assert len(slots) == g
    for p, t in zip(slots, tori):
        edges.append((p, t))
    es = [Edge(f"a{i}", x, y) for i, (x, y) in enumerate(edges, 1)]
    genus_of = {**{p: 0 for p in pants}, **{t: 1 for t in tori}}
    return SurfaceModel(Multigraph(pants + tori, es), genus_of)


def gen_random(g: int, seed: int, max_edges: int | None = None) -> SurfaceModel:
    """Deterministic random valid model of genus ``g``.

    Draws a connected multigraph (random tree plus extra edges, loops and
    parallels allowed), gives every low-degree vertex the genus it needs,
    then scatters the remaining genus. Draws that cannot fit are redrawn.
    """
    if isinstance(g, bool) or not isinstance(g, int) or g < 2:
        raise SurfaceError(f"random models need g >= 2, got {g!r}")
    rng = random.Random(seed)
    while True:
        nu = rng.randint(1, 2 * g - 2)
        k = rng.randint(0, g)
        if max_edges is not None and nu - 1 + k > max_edges:
            continue
        verts = [f"v{i}" for i in range(nu)]
        pairs = [(verts[rng.randrange(i)], verts[i]) for i in range(1, nu)]
        pairs += [(rng.choice(verts), rng.choice(verts)) for _ in range(k)]
        rng.shuffle(pairs)
        es = [Edge(f"e{i}", *uv) for i, uv in enumerate(pairs)]
        graph = Multigraph(verts, es)
        exempt = nu == 1 and len(es) <= 1
        need = {v: 1 if graph.degree(v) <= 2 and not exempt else 0 for v in verts}
        spare = g - k - sum(need.values())
        if spare < 0:
            continue
        for _ in range(spare):
            need[rng.choice(verts)] += 1
        model = SurfaceModel(graph, need)
        assert validate(model).ok and genus(model) == g
        return model
