"""
Integer sets, sumsets, and arithmetic progressions
==================================================

The value layer everything else builds on: finite sets of non-negative
integers, their sumsets, and the closed-form size of a sumset of two
compatible progressions.
"""

from sumsign import IntegerSet, ap_profile, ap_sumset_cardinality, set_parity, sumset

# A sumset collects every pairwise sum.
a = IntegerSet([1, 2])
b = IntegerSet([3, 5])
print(f"{a.to_text()} + {b.to_text()} = {sumset(a, b).to_text()}")

# The + operator is the same thing.
print(f"{{0,1}} + {{0,2,4}} = {(IntegerSet([0, 1]) + IntegerSet([0, 2, 4])).to_text()}")

# Progression detection: a profile is (first, common difference, length).
for elems in [(3,), (2, 5, 8), (1, 2, 4)]:
    s = IntegerSet(elems)
    print(f"profile of {s.to_text()}: {ap_profile(s)}")

# Parity of a set means parity of its size; it decides edge signs later.
for elems in [(0, 1), (7,), (0, 2, 4)]:
    print(f"parity of {IntegerSet(elems).to_text()}: {set_parity(IntegerSet(elems))}")

print()
print("Sumsets of compatible progressions have a closed-form size.")
print("Take A of length m with difference d, and B of length n with")
print("difference k*d where k <= m. Then |A + B| = m + k*(n - 1):")
print()
for (a_elems, b_elems, m, n, k) in [
    ((0, 1), (0, 2), 2, 2, 2),
    ((0, 1, 2), (0, 1, 2), 3, 3, 1),
    ((5,), (0, 3, 6, 9, 12), 1, 5, 1),
]:
    actual = len(sumset(IntegerSet(a_elems), IntegerSet(b_elems)))
    formula = ap_sumset_cardinality(m, n, k)
    print(f"  |{IntegerSet(a_elems).to_text()} + {IntegerSet(b_elems).to_text()}| "
          f"= {actual}, formula gives {formula}")

# The k <= m condition matters: with k too large the shifted copies of A
# leave gaps and the sumset is not a progression at all.
wide = sumset(IntegerSet([0, 1]), IntegerSet([0, 3, 6]))
print()
print(f"{{0,1}} + {{0,3,6}} = {wide.to_text()} "
      f"(profile: {ap_profile(wide)}; ratio 3 > 2 breaks the progression)")
