"""Line-based graph text format.

::

    # comment
    vertex <id> genus=<n>
    edge <id> <vertex> <vertex> weight=<n>

``genus`` and ``weight`` are optional and default to 0; vertices must be
declared before edges use them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .multigraph import DisconnectedGraphError, Edge, Multigraph
from .surface import SurfaceModel
from .torelli import Multitwist

_INT = re.compile(r"[+-]?\d+\Z")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column, self.message = line, column, message
        where = "" if line is None else f"line {line}, column {column}: "
        super().__init__(where + message)


@dataclass(frozen=True, eq=False)
class ParsedInput:
    graph: Multigraph
    genus_of: Mapping[str, int]
    weights: Mapping[str, int]
    genus_given: frozenset[str]

    @property
    def has_all_genera(self) -> bool:
        return self.genus_given == frozenset(self.graph.vertices)

    def surface(self) -> SurfaceModel:
        if not self.has_all_genera:
            missing = sorted(set(self.graph.vertices) - self.genus_given)
            raise ParseError(f"genus required for every vertex (missing on {', '.join(missing)})")
        return SurfaceModel(self.graph, self.genus_of)

    def multitwist(self) -> Multitwist:
        return Multitwist(self.graph, self.weights)


def _tokens(line: str):
    for m in re.finditer(r"\S+", line):
        yield m.group(), m.start() + 1


def _parse_fields(toks, lineno, allowed: str) -> tuple[int, bool]:
    value = 0
    seen = False
    for tok, col in toks:
        key, eq, raw = tok.partition("=")
        if not eq or key != allowed:
            raise ParseError(f"unexpected field {tok!r}", lineno, col)
        if seen:
            raise ParseError(f"repeated field {key!r}", lineno, col)
        if not _INT.match(raw):
            raise ParseError(f"malformed integer {raw!r}", lineno, col + len(key) + 1)
        value = int(raw)
        seen = True
    return value, seen


def parse_input(text: str) -> ParsedInput:
    vertices: list[str] = []
    genus: dict[str, int] = {}
    given: set[str] = set()
    edges: list[Edge] = []
    weights: dict[str, int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = list(_tokens(line))
        kind, kcol = toks[0]
        if kind == "vertex":
            if len(toks) < 2:
                raise ParseError("vertex line needs an identifier", lineno, kcol)
            vid, col = toks[1]
            if vid in genus:
                raise ParseError(f"duplicate vertex {vid!r}", lineno, col)
            g, seen = _parse_fields(toks[2:], lineno, "genus")
            if g < 0:
                raise ParseError("genus must be nonnegative", lineno, toks[2][1])
            vertices.append(vid)
            genus[vid] = g
            if seen:
                given.add(vid)
        elif kind == "edge":
            if len(toks) < 4:
                raise ParseError("edge line needs an identifier and two vertices", lineno, kcol)
            eid, col = toks[1]
            if eid in weights:
                raise ParseError(f"duplicate edge {eid!r}", lineno, col)
            for vid, vcol in toks[2:4]:
                if vid not in genus:
                    raise ParseError(f"unknown vertex {vid!r}", lineno, vcol)
            w, _ = _parse_fields(toks[4:], lineno, "weight")
            edges.append(Edge(eid, toks[2][0], toks[3][0]))
            weights[eid] = w
        else:
            raise ParseError(f"unknown record type {kind!r}", lineno, kcol)
    if not vertices:
        raise ParseError("empty graph")
    try:
        graph = Multigraph(vertices, edges)
    except DisconnectedGraphError:
        raise ParseError("graph is not connected") from None
    return ParsedInput(graph, genus, weights, frozenset(given))


def dump(graph: Multigraph, genus_of: Mapping[str, int] | None = None,
         weights: Mapping[str, int] | None = None) -> str:
    lines = []
    for v in graph.vertices:
        lines.append(f"vertex {v}" + ("" if genus_of is None else f" genus={genus_of[v]}"))
    for e in graph.edges:
        w = None if weights is None else weights[e.id]
        lines.append(f"edge {e.id} {e.u} {e.v}" + ("" if not w else f" weight={w}"))
    return "\n".join(lines) + "\n"


def dump_surface(s: SurfaceModel, weights: Mapping[str, int] | None = None) -> str:
    return dump(s.graph, s.genus_of, weights)
