"""
Balance and clusterability of signed graphs
===========================================

A signed graph is balanced when every simple cycle carries an even number
of negative edges. Two independent checks are provided: cycle enumeration
(the definition) and parity propagation (fast, with a two-camp witness).
"""

from sumsign import (
    Sign,
    SignedGraph,
    cycle_graph,
    edge_key,
    is_balanced_fast,
    is_balanced_oracle,
    is_clusterable,
    signed_graph_from_pattern,
    sweep_sign_patterns,
)


def signed(graph, negatives=()):
    neg = {edge_key(*e) for e in negatives}
    return SignedGraph(
        graph=graph,
        signs={e: Sign.NEGATIVE if e in neg else Sign.POSITIVE for e in graph.edges},
    )


# A 4-cycle with two negative edges is balanced: both checks agree, and the
# fast one also returns the two camps with every negative edge crossing.
c4 = signed(cycle_graph(4), negatives=[("v0", "v1"), ("v2", "v3")])
balanced, summaries = is_balanced_oracle(c4)
print("C4 with two negatives:")
for s in summaries:
    print(f"  cycle {' '.join(s.cycle)}: negatives={s.negative_edge_count} sign={s.sign_product}")
fast, camps = is_balanced_fast(c4)
print(f"  oracle: {balanced}, fast: {fast}, camps: {camps}")

# One negative edge on a triangle is unbalanced and not clusterable either:
# the triangle itself is a cycle with exactly one negative edge.
tri = signed(cycle_graph(3), negatives=[("v0", "v1")])
print()
print("triangle with one negative:")
print(f"  balanced: {is_balanced_oracle(tri)[0]}")
result = is_clusterable(tri)
print(f"  clusterable: {result.clusterable}, witness cycle: {result.violating_cycle}")

# An all-negative triangle is clusterable (three singleton camps) although
# it is not balanced: clusterability is strictly weaker.
allneg = signed(cycle_graph(3), negatives=cycle_graph(3).edges)
print()
print("all-negative triangle:")
print(f"  balanced: {is_balanced_oracle(allneg)[0]}")
print(f"  clusters: {is_clusterable(allneg).clusters}")

# Sweeping every sign pattern of a graph runs both checks on all 2^m
# patterns at once; they never disagree, and the balanced patterns number
# exactly 2^(n-1) on a connected graph.
print()
for n in (3, 4, 5):
    sweep = sweep_sign_patterns(cycle_graph(n))
    print(f"C{n}: {sweep.patterns_checked} patterns, "
          f"{len(sweep.balanced_patterns)} balanced, "
          f"{len(sweep.disagreements)} disagreements")

# Any pattern can be replayed as a concrete signed graph.
sg = signed_graph_from_pattern(cycle_graph(5), 0b00011)
print()
print("pattern 0b00011 on C5:", {f"{u}{v}": str(s) for (u, v), s in sg.signs.items()})
print("balanced:", is_balanced_fast(sg)[0])
