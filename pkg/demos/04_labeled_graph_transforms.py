"""
Labeled-graph transforms with induced labelings
===============================================

Four operations rewrite a signed labeled graph while the labels follow
along: carried elements keep their sets, new edges get endpoint sumsets,
and a vertex replacing an edge inherits that edge's label. Watching balance
across these operations is the interesting part.
"""

from sumsign import (
    Graph,
    IntegerSet,
    Labeling,
    cut_edges,
    delete_vertex,
    derive,
    elementary_transformation,
    is_balanced_oracle,
    spanned_subgraph,
    subdivide_edge,
)

triangle = Graph(["u", "v", "w"], [("u", "v"), ("u", "w"), ("v", "w")])
slg = derive(triangle, Labeling(8, {
    "u": IntegerSet([0, 1]),
    "v": IntegerSet([0, 2]),
    "w": IntegerSet([0, 2, 4]),
}))
print("start: balanced triangle, all edges positive:",
      {f"{a}{b}": str(s) for (a, b), s in slg.signs.items()})

# Subdividing an edge replaces it with a vertex carrying the edge label.
# On a cut edge this provably preserves balance; on a cycle edge it does
# not have to. Here the triangle edge uv is on a cycle, and the subdivided
# graph picks up exactly one negative edge.
outcome = subdivide_edge(slg, ("u", "v"))
print()
print(f"subdivide uv -> new vertex {outcome.added_vertices[0]} "
      f"labeled {outcome.result.labeling.get(outcome.added_vertices[0]).to_text()}")
for e in outcome.result.graph.edges:
    print(f"  {e[0]} {e[1]} : {outcome.result.edge_labels[e].to_text()} "
          f"{outcome.result.signs[e]}")
print("balanced after subdividing a cycle edge:",
      is_balanced_oracle(outcome.result)[0])

# The same operation on a cut edge keeps balance.
path = Graph(["a", "b"], [("a", "b")])
pslg = derive(path, Labeling(4, {"a": IntegerSet([0, 1]), "b": IntegerSet([0, 2])}))
sub = subdivide_edge(pslg, ("a", "b"))
print()
print(f"K2 edge is a cut edge: {cut_edges(path)}; "
      f"subdivision balanced: {is_balanced_oracle(sub.result)[0]}")

# The elementary transformation removes a triangle-free degree-2 vertex and
# joins its neighbors. On a vertex lying on a cycle it can flip balance:
c4 = Graph(["v0", "v1", "v2", "v3"],
           [("v0", "v1"), ("v1", "v2"), ("v2", "v3"), ("v0", "v3")])
c4_slg = derive(c4, Labeling(3, {
    "v0": IntegerSet([0]), "v1": IntegerSet([1]),
    "v2": IntegerSet([2]), "v3": IntegerSet([3]),
}))
print()
print("all-singleton C4 is balanced (four negative edges):",
      is_balanced_oracle(c4_slg)[0])
homeo = elementary_transformation(c4_slg, "v1")
print("after removing v1 and joining v0 v2:",
      {f"{a}{b}": str(s) for (a, b), s in homeo.result.signs.items()},
      "balanced:", is_balanced_oracle(homeo.result)[0])

# Vertex deletion never breaks balance; spanning subgraphs report how many
# negative edges were dropped so parity arguments stay possible.
print()
dele = delete_vertex(c4_slg, "v0")
print("delete v0 from the balanced C4: balanced:",
      is_balanced_oracle(dele.result)[0])
span, removed_negatives = spanned_subgraph(c4_slg, [("v1", "v2"), ("v2", "v3")])
print(f"span keeping two edges: removed {removed_negatives} negative edges; "
      f"balanced: {is_balanced_oracle(span.result)[0]}")
print("provenance:")
for line in span.provenance_lines():
    print(f"  {line}")
