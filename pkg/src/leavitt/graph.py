"""Finite directed multigraphs and the graph-level notions used throughout:
sources and source cycles, hereditary/saturated vertex sets, trees, source
elimination, out-splitting, and cycle/exit enumeration.

All values are immutable; vertex and edge ids are opaque strings ordered
lexicographically, and every set-valued result is emitted in that order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """A finite directed multigraph with named vertices and edges."""

    vertices: tuple[str, ...]
    edges: tuple[str, ...]
    src: "FrozenMap"
    rng: "FrozenMap"

    @staticmethod
    def build(vertices: Iterable[str], edges: Iterable[tuple[str, str, str]]) -> "Graph":
        """Construct and validate a graph from ``vertices`` and
        ``(edge_id, src, rng)`` triples."""
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            dup = sorted(v for v in set(vs) if vs.count(v) > 1)
            raise GraphError(f"duplicate vertex id(s): {dup}")
        vset = set(vs)
        eids, smap, rmap = [], {}, {}
        for eid, s, r in edges:
            if eid in smap:
                raise GraphError(f"duplicate edge id: {eid!r}")
            if s not in vset:
                raise GraphError(f"edge {eid!r}: unknown source vertex {s!r}")
            if r not in vset:
                raise GraphError(f"edge {eid!r}: unknown range vertex {r!r}")
            eids.append(eid)
            smap[eid] = s
            rmap[eid] = r
        if vset & set(eids):
            raise GraphError(f"ids used both as vertex and edge: {sorted(vset & set(eids))}")
        return Graph(tuple(sorted(vs)), tuple(sorted(eids)), FrozenMap(smap), FrozenMap(rmap))

    def out_edges(self, v: str) -> tuple[str, ...]:
        return tuple(e for e in self.edges if self.src[e] == v)

    def in_edges(self, v: str) -> tuple[str, ...]:
        return tuple(e for e in self.edges if self.rng[e] == v)

    def is_acyclic(self) -> bool:
        return not cycles_and_exits(self)

    def check_vertex(self, v: str) -> None:
        if v not in self.vertices:
            raise GraphError(f"unknown vertex {v!r}")

    def to_json(self) -> str:
        return json.dumps(
            {"vertices": list(self.vertices),
             "edges": [[e, self.src[e], self.rng[e]] for e in self.edges]}
        )

    def __repr__(self):
        return f"Graph(|V|={len(self.vertices)}, |E|={len(self.edges)})"


class FrozenMap(dict):
    """Hashable read-only dict (keys and values are strings)."""

    def __hash__(self):
        return hash(frozenset(self.items()))

    def __setitem__(self, *a):
        raise TypeError("FrozenMap is immutable")


@dataclass(frozen=True)
class Cycle:
    """A cycle, stored rotated so its base is the smallest vertex on it."""

    edges: tuple[str, ...]
    base: str

    def vertex_set(self, g: Graph) -> tuple[str, ...]:
        return tuple(sorted(g.src[e] for e in self.edges))

    def vertices_in_order(self, g: Graph) -> tuple[str, ...]:
        return tuple(g.src[e] for e in self.edges)

    def __len__(self):
        return len(self.edges)


@dataclass(frozen=True)
class SourceDescriptor:
    """A source of the graph: a source vertex, or a source cycle."""

    kind: str  # "vertex" | "cycle"
    V: tuple[str, ...]
    W: tuple[str, ...]
    isolated: bool
    cycle: Optional[Cycle] = field(default=None)

    @property
    def vertex(self) -> str:
        assert self.kind == "vertex"
        return self.V[0]


def parse_graph(text: str) -> Graph:
    """Parse the JSON graph format ``{"vertices": [...], "edges": [[id, src, rng], ...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    if not isinstance(doc, dict):
        raise GraphError("graph document must be a JSON object")
    for key in ("vertices", "edges"):
        if key not in doc:
            raise GraphError(f"missing field {key!r}")
        if not isinstance(doc[key], list):
            raise GraphError(f"field {key!r} must be a list")
    vs = doc["vertices"]
    for i, v in enumerate(vs):
        if not isinstance(v, str) or not v:
            raise GraphError(f"vertices[{i}]: vertex id must be a nonempty string")
    triples = []
    for i, item in enumerate(doc["edges"]):
        if (not isinstance(item, list) or len(item) != 3
                or not all(isinstance(x, str) and x for x in item)):
            raise GraphError(f"edges[{i}]: expected [edge_id, src_vertex, rng_vertex]")
        triples.append(tuple(item))
    return Graph.build(vs, triples)


def canonical_cycle(g: Graph, edge_seq: list[str]) -> Cycle:
    """Rotate a cyclic edge sequence so the base is the minimal vertex."""
    verts = [g.src[e] for e in edge_seq]
    k = verts.index(min(verts))
    rotated = tuple(edge_seq[k:] + edge_seq[:k])
    return Cycle(rotated, g.src[rotated[0]])


def rotate_cycle(g: Graph, c: Cycle, base: str) -> Cycle:
    """The rotation of ``c`` based at ``base`` (must be a vertex of ``c``)."""
    verts = [g.src[e] for e in c.edges]
    if base not in verts:
        raise GraphError(f"vertex {base!r} not on cycle")
    k = verts.index(base)
    return Cycle(tuple(c.edges[k:] + c.edges[:k]), base)


def cycles_and_exits(g: Graph) -> list[tuple[Cycle, list[str]]]:
    """All cycles of ``g`` (canonically rotated) with their exit edges.

    An exit of a cycle ``c`` is an edge leaving a vertex of ``c`` that is not
    one of the cycle's own edges.
    """
    found: dict[tuple[str, ...], Cycle] = {}

    def walk(path_edges: list[str], seen_vertices: list[str]):
        v = g.rng[path_edges[-1]]
        if v in seen_vertices:
            if v == seen_vertices[0]:
                c = canonical_cycle(g, path_edges)
                found.setdefault(c.edges, c)
            return
        for e in g.out_edges(v):
            walk(path_edges + [e], seen_vertices + [v])

    for start in g.vertices:
        for e in g.out_edges(start):
            walk([e], [start])

    result = []
    for c in sorted(found.values(), key=lambda c: (c.base, c.edges)):
        on_cycle = set(c.edges)
        cverts = set(c.vertex_set(g))
        exits = [e for e in g.edges if g.src[e] in cverts and e not in on_cycle]
        result.append((c, exits))
    return result


def find_sources(g: Graph) -> list[SourceDescriptor]:
    """All source vertices and source cycles, vertex-sources first.

    A source vertex receives no edges; a source cycle is a cycle each of whose
    vertices receives exactly one edge (the cycle's own).  An empty result
    means the graph falls outside the engine's supported cases.
    """
    out: list[SourceDescriptor] = []
    for v in g.vertices:
        if not g.in_edges(v):
            W = tuple(u for u in g.vertices if u != v)
            isolated = not any(g.rng[e] in W for e in g.out_edges(v))
            out.append(SourceDescriptor("vertex", (v,), W, isolated))
    for c, _exits in cycles_and_exits(g):
        cverts = c.vertex_set(g)
        if all(len(g.in_edges(v)) == 1 for v in cverts):
            W = tuple(u for u in g.vertices if u not in cverts)
            isolated = not any(g.rng[e] in W
                               for v in cverts for e in g.out_edges(v))
            out.append(SourceDescriptor("cycle", cverts, W, isolated, cycle=c))
    return out


def tree(g: Graph, v: str) -> tuple[str, ...]:
    """T(v): every vertex reachable from ``v`` (including ``v``)."""
    g.check_vertex(v)
    seen = {v}
    frontier = [v]
    while frontier:
        u = frontier.pop()
        for e in g.out_edges(u):
            r = g.rng[e]
            if r not in seen:
                seen.add(r)
                frontier.append(r)
    return tuple(sorted(seen))


def is_hereditary(g: Graph, W: Iterable[str]) -> bool:
    Wset = set(W)
    return all(g.rng[e] in Wset for e in g.edges if g.src[e] in Wset)


def hereditary_saturated_closure(g: Graph, W: Iterable[str]) -> tuple[str, ...]:
    """Smallest superset of ``W`` closed under forward reachability and
    saturation, computed by alternating to a fixpoint."""
    H = set(W)
    for v in H:
        g.check_vertex(v)
    changed = True
    while changed:
        changed = False
        for e in g.edges:
            if g.src[e] in H and g.rng[e] not in H:
                H.add(g.rng[e])
                changed = True
        for v in g.vertices:
            if v in H:
                continue
            outs = g.out_edges(v)
            if outs and all(g.rng[e] in H for e in outs):
                H.add(v)
                changed = True
    return tuple(sorted(H))


def source_elimination(g: Graph, s: SourceDescriptor) -> Graph:
    """The restriction graph E_W: drop the source's vertices and the edges
    they emit."""
    _check_source(g, s)
    W = set(s.W)
    keep = [(e, g.src[e], g.rng[e]) for e in g.edges if g.src[e] in W]
    return Graph.build(sorted(W), keep)


def delta_set(g: Graph, s: SourceDescriptor) -> list[str]:
    """Delta(V): edges from the source into its complement, in id order."""
    _check_source(g, s)
    V, W = set(s.V), set(s.W)
    return [e for e in g.edges if g.src[e] in V and g.rng[e] in W]


def theta_paths(g: Graph, s: SourceDescriptor, N: int) -> list[tuple[str, tuple[str, ...]]]:
    """Theta_N(V): V-to-V paths traversing the source cycle at most N times,
    as ``(start_vertex, edge_tuple)`` pairs (the tuple is empty for the
    trivial path at a vertex).

    Since W is hereditary, every V-to-V path is a run along the cycle; a run
    of length L counts as c-power ``L // n`` (n the cycle length), so Theta_N
    consists of the runs of length at most (N + 1) * n - 1 from each cycle
    vertex.  For a vertex-source, Theta(v) is the trivial path at v.
    """
    _check_source(g, s)
    if N < 0:
        raise GraphError("N must be nonnegative")
    if s.kind == "vertex":
        return [(s.vertex, ())]
    c = s.cycle
    n = len(c)
    out = []
    for v in c.vertex_set(g):
        rot = rotate_cycle(g, c, v)
        for L in range((N + 1) * n):
            out.append((v, tuple(rot.edges[k % n] for k in range(L))))
    out.sort(key=lambda p: (len(p[1]), p[0], p[1]))
    return out


def _check_source(g: Graph, s: SourceDescriptor) -> None:
    for desc in find_sources(g):
        if desc.kind == s.kind and desc.V == s.V:
            return
    raise GraphError(f"{s.V} is not a source of this graph")


def outsplit(g: Graph, v: str, last_edge: Optional[str] = None):
    """Out-split at a source vertex ``v`` with at least two outgoing edges.

    The partition is {all but one} | {``last_edge``} (default: the
    order-maximal outgoing edge).  Returns the new graph and a correspondence
    record: ``(v0, vhat, old_edge, new_edge)`` where ``v0`` is ``v`` viewed in
    the new graph and ``new_edge`` replaces ``old_edge`` with source ``vhat``.
    """
    g.check_vertex(v)
    if g.in_edges(v):
        raise GraphError(f"{v!r} is not a source vertex")
    outs = g.out_edges(v)
    if len(outs) < 2:
        raise GraphError(f"out-split needs >= 2 edges at {v!r}, found {len(outs)}")
    if last_edge is None:
        last_edge = max(outs)
    if last_edge not in outs:
        raise GraphError(f"{last_edge!r} does not leave {v!r}")
    vhat = _fresh_id(v + "^", set(g.vertices) | set(g.edges))
    gid = _fresh_id(last_edge + "'", set(g.vertices) | set(g.edges) | {vhat})
    verts = list(g.vertices) + [vhat]
    triples = []
    for e in g.edges:
        if e == last_edge:
            triples.append((gid, vhat, g.rng[e]))
        else:
            triples.append((e, g.src[e], g.rng[e]))
    return Graph.build(verts, triples), OutsplitData(v, vhat, last_edge, gid)


@dataclass(frozen=True)
class OutsplitData:
    v0: str
    vhat: str
    old_edge: str
    new_edge: str


def _fresh_id(base: str, taken: set[str]) -> str:
    cand = base
    while cand in taken:
        cand += "'"
    return cand
