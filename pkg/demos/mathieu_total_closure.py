"""The Mathieu group M11 is completely determined by its 5-point statistics.

M11 is exactly 4-transitive: it moves 4-tuples as freely as the full
symmetric group, so its 4-closure is all of S11. One step higher the
picture snaps: the 5-closure is M11 itself. The check below verifies the
hypotheses, both closure orders, and produces a permutation outside M11
witnessing that the 4-closure really is bigger.
"""

from math import factorial

from closurelab import catalog_group, complete_lemma_check, print_cycles

A = catalog_group("M11")
print(f"M11: degree {A.degree}, order {A.group.order()}")

report = complete_lemma_check(A, k=4, out_trivial=True, maximal_in_alt=True)
print(f"status: {report.status}")
print(f"exact transitivity degree: {report.transitivity}")
print(f"4-closure order: {report.closure_order_at_k} "
      f"(= 11! = {factorial(11)}: the full symmetric group)")
print(f"5-closure order: {report.closure_order_at_k_plus_1} (= M11 itself)")
print(f"witness in the 4-closure but outside M11: {print_cycles(report.witness)}")
print(f"  witness in M11: {A.group.contains(report.witness)}")
print()
print("So two groups with the same orbits on 4-tuples can differ (M11 vs S11),")
print("but any group with M11's orbits on 5-tuples IS M11.")
