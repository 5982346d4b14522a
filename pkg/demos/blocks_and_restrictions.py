"""Block systems, quotients, and how closures interact with both.

An imprimitive action shuffles blocks of points; the closure of the whole
action is constrained by the closures of the quotient (on blocks) and of
the block stabilizer (inside one block). For intransitive actions the same
story plays out orbit by orbit.
"""

from closurelab import (
    block_lemma_check,
    catalog_group,
    intransitive_certificate,
    is_primitive,
    k_closure,
    maximal_block_systems,
    natural_action,
    restriction_lemma_check,
    union,
)

print("== Block systems of small groups ==")
for name in ["D4", "D6", "C6"]:
    A = catalog_group(name)
    systems = maximal_block_systems(A)
    print(f"  {name}: primitive: {is_primitive(A)}, "
          f"{len(systems)} maximal system(s)")
    for S in systems:
        print("    " + " | ".join(S.labels(A.domain)))
print()

print("== The closure respects blocks, quotients, and restrictions ==")
A = catalog_group("D6")
S = maximal_block_systems(A)[0]
record = block_lemma_check(A, S, k=2)
print(f"  D6 with {S.num_blocks} blocks, k=2:")
print(f"    blocks preserved by the closure: {record.preserved}")
print(f"    quotient action contained in quotient closure: {record.quotient_ok}")
print(f"    in-block action contained in in-block closure: {record.restriction_ok}")
print(f"    all checks together: {record.holds}")
print()

print("== Intransitive actions close orbit by orbit ==")
a5 = catalog_group("A5").group
double = union([natural_action(a5), natural_action(a5)])
record = restriction_lemma_check(double, k=2)
print(f"  A5 acting on two 5-point orbits, k=2: "
      f"per-orbit containments hold: {record.holds}")
verdict = intransitive_certificate(double, k=4)
print(f"  certificate at k=4: {verdict.status}")
print(f"  detail: {verdict.detail}")
H = k_closure(double, 4)
print(f"  direct check: 4-closure order {H.order()} vs group order {a5.order()}")
print("  (at k=2 the certificate would fail: each orbit's 2-closure is all")
print("  of S5, so 2-point statistics cannot pin this action down)")
