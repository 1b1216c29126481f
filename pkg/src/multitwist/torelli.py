"""Torelli membership, rank and generator decomposition for multitwists.

A multitwist assigns an integer exponent to every edge of a reduction
system graph. It acts trivially on homology exactly when every c-type
exponent vanishes and every b-class has exponent sum zero; a-type exponents
are free. The same conditions taken modulo ``m`` decide membership in the
level-``m`` congruence subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Union

from .edge_classes import EdgeClassification, classify
from .multigraph import DEFAULT_CYCLE_GUARD, Multigraph, enumerate_cycles, id_key


class NotTorelliError(ValueError):
    """Raised when a decomposition is requested for a non-Torelli multitwist."""


@dataclass(frozen=True, eq=False)
class Multitwist:
    graph: Multigraph
    exponents: Mapping[str, int]

    def __post_init__(self):
        exps = dict(self.exponents)
        ids = set(self.graph.edge_ids)
        if set(exps) != ids:
            missing = sorted(ids - set(exps), key=id_key)
            extra = sorted(set(exps) - ids, key=id_key)
            raise ValueError(f"exponents must cover every edge exactly (missing {missing}, extra {extra})")
        for e, x in exps.items():
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"exponent of {e} is not an integer")
        object.__setattr__(self, "exponents", MappingProxyType(exps))

    def __eq__(self, other):
        if not isinstance(other, Multitwist):
            return NotImplemented
        return self.graph == other.graph and dict(self.exponents) == dict(other.exponents)

    def vector(self) -> tuple[int, ...]:
        """Exponents in edge-id order."""
        return tuple(self.exponents[e] for e in self.graph.sorted_edge_ids())

    def __add__(self, other: "Multitwist") -> "Multitwist":
        if self.graph != other.graph:
            raise ValueError("multitwists live on different graphs")
        return Multitwist(self.graph, {e: x + other.exponents[e] for e, x in self.exponents.items()})

    def __neg__(self) -> "Multitwist":
        return Multitwist(self.graph, {e: -x for e, x in self.exponents.items()})

    @classmethod
    def zero(cls, graph: Multigraph) -> "Multitwist":
        return cls(graph, {e: 0 for e in graph.edge_ids})


@dataclass(frozen=True)
class SeparatingTwist:
    edge: str
    exponent: int


@dataclass(frozen=True)
class BPMap:
    """``(D_plus D_minus^-1)^exponent`` for a bounding pair."""

    edge_plus: str
    edge_minus: str
    exponent: int


TwistFactor = Union[SeparatingTwist, BPMap]


def violations(cls: EdgeClassification, w: Mapping[str, int], modulus: int | None = None) -> list[str]:
    """Reasons a weighting fails the membership conditions, in a fixed order.

    c-type edges by identifier first, then b-classes by index.
    """

    def nonzero(x):
        return x != 0 if modulus is None else x % modulus != 0

    suffix = "" if modulus is None else f" (mod {modulus})"
    out = []
    for c in sorted(cls.c_edges, key=id_key):
        if nonzero(w[c]):
            out.append(f"c-type edge {c} has nonzero exponent{suffix}")
    for j, b in enumerate(cls.b_classes):
        total = sum(w[e] for e in b)
        if nonzero(total):
            out.append(f"b-class {j} {{{','.join(b)}}} has nonzero exponent sum {total}{suffix}")
    return out


def zero_on_all_cycles(g: Multigraph, w: Mapping[str, int], cls: EdgeClassification | None = None) -> bool:
    """Decide whether every cycle has weight zero, from the edge classes alone."""
    if cls is None:
        cls = classify(g)
    return not violations(cls, w)


def zero_on_all_cycles_oracle(g: Multigraph, w: Mapping[str, int], max_edges: int = DEFAULT_CYCLE_GUARD) -> bool:
    """Brute force: sum ``w`` over every enumerated cycle."""
    return all(cyc.weight(w) == 0 for cyc in enumerate_cycles(g, max_edges))


def is_torelli(m: Multitwist, cls: EdgeClassification | None = None) -> bool:
    if cls is None:
        cls = classify(m.graph)
    return not violations(cls, m.exponents)


def is_gamma_m(m: Multitwist, modulus: int, cls: EdgeClassification | None = None) -> bool:
    """Whether ``m`` acts trivially on homology with ``Z/modulus`` coefficients."""
    if isinstance(modulus, bool) or not isinstance(modulus, int) or modulus < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {modulus!r}")
    if cls is None:
        cls = classify(m.graph)
    return not violations(cls, m.exponents, modulus)


def torelli_rank(cls: EdgeClassification) -> int:
    return cls.p + sum(q - 1 for q in cls.q)


def torelli_basis(g: Multigraph, cls: EdgeClassification | None = None) -> list[Multitwist]:
    """Free basis: unit twists on cut edges, then ``b_k - b_1`` per b-class."""
    if cls is None:
        cls = classify(g)
    zero = {e: 0 for e in g.edge_ids}
    basis = []
    for a in sorted(cls.a_edges, key=id_key):
        basis.append(Multitwist(g, {**zero, a: 1}))
    for b in cls.b_classes:
        for other in b[1:]:
            basis.append(Multitwist(g, {**zero, other: 1, b[0]: -1}))
    return basis


def decompose(m: Multitwist, cls: EdgeClassification | None = None) -> list[TwistFactor]:
    """Write a Torelli multitwist as separating twists and BP maps.

    Each b-class exponent ``beta_k`` (k >= 2) becomes ``BPMap(b_k, b_1)^beta_k``;
    the representative's own exponent is absorbed because the class sums to zero.
    """
    if cls is None:
        cls = classify(m.graph)
    bad = violations(cls, m.exponents)
    if bad:
        raise NotTorelliError(bad[0])
    factors: list[TwistFactor] = []
    for a in sorted(cls.a_edges, key=id_key):
        if m.exponents[a]:
            factors.append(SeparatingTwist(a, m.exponents[a]))
    for b in cls.b_classes:
        for other in b[1:]:
            if m.exponents[other]:
                factors.append(BPMap(other, b[0], m.exponents[other]))
    return factors


def recompose(g: Multigraph, factors: list[TwistFactor]) -> Multitwist:
    exps = {e: 0 for e in g.edge_ids}
    for f in factors:
        if isinstance(f, SeparatingTwist):
            exps[f.edge] += f.exponent
        else:
            exps[f.edge_plus] += f.exponent
            exps[f.edge_minus] -= f.exponent
    return Multitwist(g, exps)
