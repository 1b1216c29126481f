"""Integer symplectic model of first homology and the twist action on it.

Coordinates of a model built from a surface are laid out as
``[x_1..x_k, y_1..y_k, handles...]`` where ``k`` is the cycle rank of the
graph, ``x_j`` is the class of the j-th non-tree edge, ``y_j`` is a dual
curve crossing the j-th fundamental cycle, and each vertex of genus ``gamma``
contributes ``gamma`` hyperbolic pairs in vertex order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Mapping, Sequence

from . import intlinalg as la
from .edge_classes import EdgeClassification, classify
from .multigraph import SpanningTree, spanning_tree
from .surface import SurfaceModel, genus, validate
from .torelli import Multitwist


class HomologyError(ValueError):
    pass


@dataclass(frozen=True)
class SymplecticLattice:
    """Z^rank with the alternating form given by hyperbolic index pairs.

    ``pairs`` lists ``(i, j)`` with ``<e_i, e_j> = 1``; every coordinate is in
    exactly one pair.
    """

    rank: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        used = sorted(i for p in self.pairs for i in p)
        if used != list(range(self.rank)):
            raise HomologyError("hyperbolic pairs must cover each coordinate exactly once")

    @classmethod
    def standard(cls, g: int) -> "SymplecticLattice":
        """Basis ``a_1, b_1, ..., a_g, b_g``."""
        return cls(2 * g, tuple((2 * i, 2 * i + 1) for i in range(g)))

    @property
    def genus(self) -> int:
        return self.rank // 2

    @property
    def form(self) -> la.Matrix:
        J = [[0] * self.rank for _ in range(self.rank)]
        for i, j in self.pairs:
            J[i][j] = 1
            J[j][i] = -1
        return tuple(tuple(r) for r in J)

    def pair(self, u: Sequence[int], w: Sequence[int]) -> int:
        return sum(u[i] * w[j] - u[j] * w[i] for i, j in self.pairs)

    def basis_vector(self, i: int) -> tuple[int, ...]:
        return tuple(int(i == j) for j in range(self.rank))

    def transvection(self, v: Sequence[int], power: int = 1) -> la.Matrix:
        """Matrix of ``w -> w + power * <v, w> v`` (exact for every power since v is isotropic)."""
        row = tuple(self.pair(v, self.basis_vector(c)) for c in range(self.rank))
        return la.matadd(la.identity(self.rank), la.scale(power, la.outer(v, row)))

    def is_symplectic(self, m: la.Matrix) -> bool:
        J = self.form
        return la.matmul(la.matmul(la.transpose(m), J), m) == J


@dataclass(frozen=True, eq=False)
class HomologyModel:
    surface: SurfaceModel
    lattice: SymplecticLattice
    tree: SpanningTree
    classification: EdgeClassification
    non_tree_edges: tuple[str, ...]
    signed_membership: Mapping[str, tuple[int, ...]]  # sigma_e, before orientation fixing
    orientation: Mapping[str, int]  # +1 / -1 flips applied for b-class normalization
    curve_class: Mapping[str, tuple[int, ...]]
    dual_class: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.non_tree_edges)

    def handle_coordinates(self) -> range:
        return range(2 * self.k, self.lattice.rank)


def build_model(s: SurfaceModel) -> HomologyModel:
    report = validate(s)
    if not report.ok:
        raise HomologyError("invalid surface model: " + "; ".join(report.violations))
    g = s.graph
    tree = spanning_tree(g)
    nontree = tree.non_tree_edges
    k = len(nontree)
    handles = sum(s.genus_of.values())
    rank = 2 * (k + handles)
    pairs = [(j, k + j) for j in range(k)]
    base = 2 * k
    for v in g.vertices:
        for _ in range(s.genus_of[v]):
            pairs.append((base, base + 1))
            base += 2
    lattice = SymplecticLattice(rank, tuple(pairs))

    sigma = {e.id: [0] * k for e in g.edges}
    for j, f in enumerate(nontree):
        for eid, d in tree.fundamental_trail(f).steps:
            sigma[eid][j] = d
    sigma = {e: tuple(v) for e, v in sigma.items()}

    cls = classify(g)
    orient = {e.id: 1 for e in g.edges}
    for b in cls.b_classes:
        # representative's leading coordinate made positive, the rest matched to it
        lead = next(x for x in sigma[b[0]] if x)
        orient[b[0]] = lead
        ref = tuple(lead * x for x in sigma[b[0]])
        for e in b[1:]:
            if sigma[e] == ref:
                continue
            if tuple(-x for x in sigma[e]) == ref:
                orient[e] = -1
            else:
                raise HomologyError(f"b-class edges {b[0]} and {e} are not homologous up to sign")

    def embed(coeffs):
        return tuple(coeffs) + (0,) * (rank - k)

    curve = {e: embed(orient[e] * x for x in sigma[e]) for e in sigma}
    dual = tuple(lattice.basis_vector(k + j) for j in range(k))
    model = HomologyModel(s, lattice, tree, cls, nontree, sigma, orient, curve, dual)
    assert lattice.rank == 2 * genus(s)
    return model


def _check_graph(model: HomologyModel, m: Multitwist) -> None:
    if m.graph != model.surface.graph:
        raise HomologyError("multitwist graph does not match the model's graph")


def twist_action(model: HomologyModel, m: Multitwist) -> la.Matrix:
    """Matrix of ``w -> w + sum_e eps_e <[e], w> [e]`` on the model's lattice.

    The curve classes are isotropic and pairwise orthogonal, so the
    individual twist powers commute and their deviations from the identity add.
    """
    _check_graph(model, m)
    lat = model.lattice
    M = la.identity(lat.rank)
    for e, eps in m.exponents.items():
        v = model.curve_class[e]
        if eps and any(v):
            M = la.matadd(M, la.matsub(lat.transvection(v, eps), la.identity(lat.rank)))
    return M


def is_identity_action(model: HomologyModel, m: Multitwist, modulus: int | None = None) -> bool:
    """Whether the twist action is trivial on H_1 (with ``Z/modulus`` coefficients if given)."""
    M = twist_action(model, m)
    return la.is_zero(la.matsub(M, la.identity(model.lattice.rank)), modulus)


def constraint_matrix(model: HomologyModel) -> tuple[la.Matrix, tuple[str, ...]]:
    """Linear map from exponent vectors to the flattened ``action - identity``.

    Columns follow edge-id order (returned alongside).
    """
    lat = model.lattice
    edges = tuple(model.surface.graph.sorted_edge_ids())
    cols = []
    for e in edges:
        delta = la.matsub(lat.transvection(model.curve_class[e]), la.identity(lat.rank))
        cols.append([x for row in delta for x in row])
    return la.transpose(cols), edges


def homology_kernel(model: HomologyModel) -> list[tuple[int, ...]]:
    """Z-basis of the exponent vectors acting trivially, by exact elimination."""
    a, edges = constraint_matrix(model)
    return la.integer_kernel(a, len(edges))


def homology_kernel_rank(model: HomologyModel) -> int:
    return len(homology_kernel(model))


# ------------------------------------------------------ multitransvections

class TransvectionError(ValueError):
    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


@dataclass(frozen=True)
class Transvection:
    vector: tuple[int, ...]
    exponent: int


def _primitive(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def _independent(u: Sequence[int], v: Sequence[int]) -> bool:
    return any(u[i] * v[j] - u[j] * v[i] for i, j in itertools.combinations(range(len(u)), 2))


def multitransvection(lattice: SymplecticLattice, pairs: Sequence[tuple[Sequence[int], int]]) -> la.Matrix:
    """Product ``T_1^m_1 T_2^m_2 ...`` of transvections, left to right.

    The vectors must be primitive, pairwise orthogonal and pairwise linearly
    independent; every violation is reported.
    """
    items = [Transvection(tuple(v), m) for v, m in pairs]
    problems = []
    for i, t in enumerate(items):
        if len(t.vector) != lattice.rank:
            problems.append(f"vector {i} has length {len(t.vector)}, expected {lattice.rank}")
        elif not any(t.vector):
            problems.append(f"vector {i} is zero")
        elif not _primitive(t.vector):
            problems.append(f"vector {i} is not primitive")
    if not problems:
        for (i, s), (j, t) in itertools.combinations(enumerate(items), 2):
            if lattice.pair(s.vector, t.vector):
                problems.append(f"vectors {i} and {j} are not orthogonal")
            if not _independent(s.vector, t.vector):
                problems.append(f"vectors {i} and {j} are linearly dependent")
    if problems:
        raise TransvectionError(problems)
    M = la.identity(lattice.rank)
    for t in items:
        M = la.matmul(M, lattice.transvection(t.vector, t.exponent))
    return M


@dataclass(frozen=True)
class Counterexample:
    lattice: SymplecticLattice
    pairs: tuple[tuple[tuple[int, ...], int], ...]
    matrix: la.Matrix

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.pairs)


def conjecture_counterexample() -> Counterexample:
    """Four orthogonal primitive vectors ``a_1 + i a_2`` with a trivial nonzero product.

    In genus 2 with basis ``a_1, b_1, a_2, b_2``, the exponents
    ``(1, -3, 3, -1)`` are the third finite difference, which kills
    every polynomial of degree <= 2 in ``i``; the product's deviation from
    the identity is such a polynomial entrywise.
    """
    lat = SymplecticLattice.standard(2)
    pairs = tuple(((1, 0, i, 0), m) for i, m in zip(range(1, 5), (1, -3, 3, -1)))
    return Counterexample(lat, pairs, multitransvection(lat, pairs))
