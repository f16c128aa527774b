"""Cycle matroids of multigraphs and perspectives by vertex identification.

Edges carry the matroid element labels (exactly 1..n, each once); loops and
parallel edges are allowed and matter: a loop is a one-element circuit, a
parallel pair a two-element circuit.  Identifying vertices coarsens the
cycle structure, and (cycle_matroid(G), cycle_matroid(G with identified
vertices)) is always a perspective.
"""

from dataclasses import dataclass

from .errors import DomainError
from .matroid import Matroid
from .setcore import GroundSet, bit


@dataclass(frozen=True)
class Multigraph:
    """Vertices are strings; edges are (label, u, v) with u = v for a loop."""

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple((l, u, v) for l, u, v in self.edges))
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise DomainError("duplicate vertex names")
        labels = sorted(l for l, _, _ in self.edges)
        if labels != list(range(1, len(labels) + 1)):
            raise DomainError(
                f"edge labels must be exactly 1..{len(labels)}, each used once; got {labels}"
            )
        for _, u, v in self.edges:
            if u not in vset or v not in vset:
                raise DomainError(f"edge endpoint {u!r} or {v!r} is not a declared vertex")


def cycle_matroid(g: Multigraph, ground: GroundSet | None = None) -> Matroid:
    """Matroid on the edge labels whose circuits are the simple cycles of g.

    A nonempty edge set is a simple cycle exactly when every touched vertex
    has degree 2 (a loop counts twice) and the touched subgraph is connected;
    all 2^|E| edge subsets are scanned, which is fine at desk scale.
    """
    m = len(g.edges)
    if ground is None:
        ground = GroundSet(m)
    elif ground.size != m:
        raise DomainError(f"ground set has {ground.size} elements but the graph has {m} edges")
    endpoint = {l: (u, v) for l, u, v in g.edges}
    labels = sorted(endpoint)
    circuits = []
    for mask in range(1, 1 << m):
        deg = {}
        for l in labels:
            if mask & bit(l):
                u, v = endpoint[l]
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
        if any(d != 2 for d in deg.values()):
            continue
        if _connected(deg.keys(), (endpoint[l] for l in labels if mask & bit(l))):
            circuits.append(mask)
    return Matroid.from_circuits(ground, circuits)


def identify_vertices(g: Multigraph, classes) -> Multigraph:
    """Merge each class of the given vertex partition into one vertex.

    Edge labels survive; an edge inside a class becomes a loop.  Merged
    vertices are named by joining the sorted class members with '+'.
    """
    classes = [tuple(c) for c in classes]
    flat = [v for c in classes for v in c]
    if sorted(flat) != sorted(g.vertices) or len(set(flat)) != len(flat):
        raise DomainError("classes do not partition the vertex set")
    name = {}
    for c in classes:
        merged = "+".join(sorted(c)) if len(c) > 1 else c[0]
        for v in c:
            name[v] = merged
    return Multigraph(
        vertices=tuple(dict.fromkeys(name[v] for v in g.vertices)),
        edges=tuple((l, name[u], name[v]) for l, u, v in g.edges),
    )


def _connected(vertices, edge_endpoints) -> bool:
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edge_endpoints:
        parent[find(u)] = find(v)
    roots = {find(v) for v in parent}
    return len(roots) <= 1
