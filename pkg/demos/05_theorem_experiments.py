"""
Exhaustive claim verification at desk scale
===========================================

Each structural claim about sumset-signed graphs is encoded as a predicate
and checked over every labeling of a graph family inside finite bounds.
Reports either confirm the claim within bounds or list every counterexample,
smallest first, and each counterexample replays through the public pipeline.
"""

from sumsign import (
    SearchBounds,
    construct_balanced_bipartite_labeling,
    cycle_graph,
    derive,
    enumerate_aiasl,
    is_balanced_fast,
    is_bipartite,
    verify_theorem,
)

bounds = SearchBounds(universe_max=8, max_label_size=3)

# How big is the search space? The triangle alone admits tens of thousands
# of arithmetic labelings over {0..8} with sets of up to three elements.
count = sum(1 for _ in enumerate_aiasl(cycle_graph(3), bounds))
print(f"triangle labelings within bounds: {count}")

# The per-edge sign prediction is confirmed exhaustively.
report = verify_theorem("POSITIVE_EDGE", "triangle", SearchBounds(6, 3))
print(f"\nPOSITIVE_EDGE: {report.verdict.value} over {report.cases_checked} pairs")

# Balanced does NOT imply bipartite in general: the triangle has balanced
# labelings, e.g. ones making every edge positive. The report lists them
# smallest first.
report = verify_theorem("BALANCE_BIPARTITE_REV", "triangle", bounds)
print(f"\nBALANCE_BIPARTITE_REV: {report.verdict.value} "
      f"({len(report.counterexamples)} counterexamples in {report.cases_checked} labelings)")
first = report.counterexamples[0]
print("smallest counterexample:")
for v, s in first.labeling.items():
    print(f"  {v}: {s.to_text()}")
slg = derive(first.graph, first.labeling)
print(f"  balanced: {is_balanced_fast(slg)[0]}, "
      f"bipartite: {is_bipartite(first.graph)}")

# Restricted to labelings whose every edge ratio is odd, the equivalence
# holds: signs then depend only on size parities, and parity disagreements
# around an odd cycle cannot all cancel.
odd_bounds = SearchBounds(8, 3, odd_ratios_only=True)
report = verify_theorem("BALANCE_BIPARTITE_REV", "triangle", odd_bounds)
print(f"\nsame claim, odd ratios only: {report.verdict.value} "
      f"over {report.cases_checked} labelings")

# For bipartite graphs a balanced labeling always exists by construction:
# one side gets odd-size sets, the other even-size sets, all differences 1.
c6 = cycle_graph(6)
labeling = construct_balanced_bipartite_labeling(c6)
print("\nconstructed labeling of C6:",
      {v: s.to_text() for v, s in labeling.items()})
print("balanced:", is_balanced_fast(derive(c6, labeling))[0])

# Set-labelings need not be set-indexers: some admissible labelings give
# two edges the same sumset. The experiment finds the smallest ones.
report = verify_theorem("IASI_INJECTIVITY", "path:3", SearchBounds(2, 3))
print(f"\nIASI_INJECTIVITY on the 3-path: {report.verdict.value}")
print(report.counterexamples[0].explanation)

# Transform claims: the cut-edge direction of the subdivision claim holds
# everywhere in bounds, and the on-cycle direction of the homeomorphism
# claim fails, which the report records rather than hides.
report = verify_theorem("HOMEOMORPHISM", "cycle:4", SearchBounds(3, 3))
print(f"\nHOMEOMORPHISM on C4: {report.verdict.value}")
print(f"on-cycle transformations that preserved balance: "
      f"{len(report.counterexamples)} of {report.cases_checked}")
print("first recorded instance:")
first = report.counterexamples[0]
for v, s in first.labeling.items():
    print(f"  {v}: {s.to_text()}")
print(f"  ({first.explanation})")
