"""Graph families used by the verification experiments.

Shipped families: paths, cycles, stars, complete graphs, complete bipartite
graphs, and every connected graph on up to seven vertices (one representative
per isomorphism class, via the networkx graph atlas). Family specs are short
strings like ``connected:5`` so experiments are reproducible from the
command line.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import ParseError
from .graphs import Graph, is_bipartite, is_connected

MAX_ATLAS_VERTICES = 7


def path_graph(n: int) -> Graph:
    """P_n on vertices v0..v{n-1}."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    verts = [f"v{i}" for i in range(n)]
    return Graph(verts, [(verts[i], verts[i + 1]) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """C_n on vertices v0..v{n-1}."""
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    verts = [f"v{i}" for i in range(n)]
    return Graph(verts, [(verts[i], verts[(i + 1) % n]) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices: center c0 joined to n-1 leaves."""
    if n < 2:
        raise ValueError("star needs at least two vertices")
    leaves = [f"v{i}" for i in range(1, n)]
    return Graph(["c0"] + leaves, [("c0", leaf) for leaf in leaves])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    verts = [f"v{i}" for i in range(n)]
    return Graph(
        verts,
        [(verts[i], verts[j]) for i in range(n) for j in range(i + 1, n)],
    )


def complete_bipartite_graph(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("both parts need at least one vertex")
    part_a = [f"a{i}" for i in range(m)]
    part_b = [f"b{i}" for i in range(n)]
    return Graph(part_a + part_b, [(a, b) for a in part_a for b in part_b])


@lru_cache(maxsize=None)
def connected_graphs(max_vertices: int) -> tuple[Graph, ...]:
    """Every connected graph with 1..max_vertices vertices, up to isomorphism.

    Backed by the networkx graph atlas, which covers up to seven vertices.
    Atlas nodes are renamed v0.. so everything downstream stays string-keyed
    and lexicographically ordered; the atlas index order is preserved.
    """
    if max_vertices < 1:
        return ()
    if max_vertices > MAX_ATLAS_VERTICES:
        raise ValueError(
            f"connected-graph family is atlas-backed and stops at {MAX_ATLAS_VERTICES} vertices"
        )
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for nxg in graph_atlas_g():
        n = nxg.number_of_nodes()
        if n < 1 or n > max_vertices:
            continue
        g = Graph(
            [f"v{i}" for i in nxg.nodes()],
            [(f"v{u}", f"v{v}") for u, v in nxg.edges()],
        )
        if is_connected(g):
            out.append(g)
    return tuple(out)


def bipartite_family(max_vertices: int = 8) -> tuple[Graph, ...]:
    """Bipartite members of the shipped families up to max_vertices vertices.

    All connected bipartite graphs up to seven vertices, plus the
    eight-vertex paths, cycles, stars and complete bipartite graphs when the
    bound allows them.
    """
    atlas_bound = min(max_vertices, MAX_ATLAS_VERTICES)
    members = [g for g in connected_graphs(atlas_bound) if is_bipartite(g)]
    for n in range(MAX_ATLAS_VERTICES + 1, max_vertices + 1):
        members.append(path_graph(n))
        if n % 2 == 0:
            members.append(cycle_graph(n))
        members.append(star_graph(n))
        for m in range(2, n // 2 + 1):
            members.append(complete_bipartite_graph(m, n - m))
    return tuple(members)


def resolve_family(spec: str) -> tuple[Graph, ...]:
    """Turn a family spec string into a list of graphs.

    Grammar:
        connected:N     all connected graphs with at most N vertices (N <= 7)
        bipartite:N     bipartite members of the shipped families, <= N vertices
        path:N          the path on N vertices
        cycle:N         the cycle on N vertices
        star:N          the star on N vertices
        complete:N      the complete graph on N vertices
        biclique:M,N    the complete bipartite graph K_{M,N}
        triangle        shorthand for cycle:3
    """
    spec = spec.strip()
    if spec == "triangle":
        return (cycle_graph(3),)
    if ":" not in spec:
        raise ParseError(f"bad family spec {spec!r}")
    kind, _, arg = spec.partition(":")
    try:
        if kind == "connected":
            return connected_graphs(int(arg))
        if kind == "bipartite":
            return bipartite_family(int(arg))
        if kind == "path":
            return (path_graph(int(arg)),)
        if kind == "cycle":
            return (cycle_graph(int(arg)),)
        if kind == "star":
            return (star_graph(int(arg)),)
        if kind == "complete":
            return (complete_graph(int(arg)),)
        if kind == "biclique":
            m_str, _, n_str = arg.partition(",")
            return (complete_bipartite_graph(int(m_str), int(n_str)),)
    except ValueError as exc:
        raise ParseError(f"bad family spec {spec!r}: {exc}") from None
    raise ParseError(f"unknown family kind {kind!r}")
