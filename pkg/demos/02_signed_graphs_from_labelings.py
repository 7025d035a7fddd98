"""
Deriving signed graphs from set-labelings
=========================================

Label each vertex with a distinct non-empty integer set; each edge then
carries the sumset of its endpoints and the sign (-1) ** |sumset|. For
progression-valued labelings the sign is predictable from sizes alone.
"""

from sumsign import (
    Graph,
    IntegerSet,
    Labeling,
    derive,
    deterministic_ratio,
    predicted_sign,
    validate_aiasl,
    validate_iasi,
)

triangle = Graph(["u", "v", "w"], [("u", "v"), ("u", "w"), ("v", "w")])
labeling = Labeling(8, {
    "u": IntegerSet([0, 1]),
    "v": IntegerSet([0, 2]),
    "w": IntegerSet([0, 2, 4]),
})

slg = derive(triangle, labeling)
print("edge labels and signs:")
for e in triangle.edges:
    print(f"  {e[0]} {e[1]} : {slg.edge_labels[e].to_text()} {slg.signs[e]}")

# Every label is a progression and every edge ratio is an integer within
# bounds, so this is a valid arithmetic labeling. The edge-label map is
# injective too, making it a set-indexer.
print("arithmetic labeling:", validate_aiasl(slg).ok)
print("edge-injective (indexer):", validate_iasi(slg))

# The deterministic ratio of an edge compares its endpoint differences.
for e in triangle.edges:
    print(f"  ratio({e[0]}{e[1]}) = {deterministic_ratio(slg, e)}")

# Signs follow from cardinality parities alone:
#   odd ratio  -> positive iff endpoint parities differ
#   even ratio -> positive iff the smaller-difference endpoint is even-sized
print("predicted vs derived:")
for e in triangle.edges:
    print(f"  {e[0]} {e[1]} : predicted {predicted_sign(slg, e)}, derived {slg.signs[e]}")

# A failing labeling: {0,1,3} is not a progression, and a ratio of 3
# exceeds the size-2 endpoint.
bad = derive(
    Graph(["a", "b", "c"], [("a", "b"), ("b", "c")]),
    Labeling(8, {
        "a": IntegerSet([0, 1, 3]),
        "b": IntegerSet([0, 1]),
        "c": IntegerSet([0, 3, 6]),
    }),
)
check = validate_aiasl(bad)
print()
print("diagnostics for an invalid labeling:")
for v, reason in check.vertex_failures:
    print(f"  vertex {v}: {reason}")
for e, reason in check.edge_failures:
    print(f"  edge {e[0]} {e[1]}: {reason}")
