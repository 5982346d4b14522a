"""Run named verification suites and inspect their reports.

Each suite is a fixed list of claims; every claim pairs a computed value
against an independently stated expectation and records what fact it pins
down. Reports serialize to plain dictionaries, so they round-trip through
JSON untouched.
"""

import json

from closurelab import SuiteResult, run_suite, suite_names

print("registered suites:")
for name in suite_names():
    print(f"  {name}")
print()

for name in ["psl-bases", "block-lemma"]:
    result = run_suite(name)
    print(f"suite {name}: {'pass' if result.passed else 'FAIL'} "
          f"({len(result.claims)} claims)")
    for claim in result.claims[:3]:
        print(f"  [{'pass' if claim.passed else 'FAIL'}] {claim.claim_id}: "
              f"expected {claim.expected}, got {claim.computed}")
        print(f"        {claim.citation}")
    if len(result.claims) > 3:
        print(f"  ... and {len(result.claims) - 3} more")
    print()

print("reports round-trip through JSON:")
result = run_suite("partition-bases")
wire = json.dumps(result.to_dict())
back = SuiteResult.from_dict(json.loads(wire))
print(f"  {len(wire)} bytes; equal after round-trip: {back == result}")
