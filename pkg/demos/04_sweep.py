"""Exhaustive desk-scale sweep over family skeletons.

Enumerates every skeleton up to 2 axioms and 3 multiplicative links (up to
isomorphism), verifies each family, and tallies proof-net counts.  The
governing facts: a family has a net iff it is PS-connected, and a family
with two or more distinct nets always has distance exactly 2.
"""

from collections import Counter

from mllnets import count_proof_nets, enumerate_skeletons, verify_family

MAX_AXIOMS, MAX_MULT = 2, 3

skeletons = enumerate_skeletons(MAX_AXIOMS, MAX_MULT)
print(f"skeletons up to {MAX_AXIOMS} axioms, {MAX_MULT} mult links:",
      len(skeletons))

by_classes = Counter()
failures = 0
for sk in skeletons:
    report = verify_family(sk)
    by_classes[report.net_count_up_to_equality] += 1
    if not report.all_passed:
        failures += 1

print("families by number of net classes:")
for m in sorted(by_classes):
    print(f"  {m} classes: {by_classes[m]} families")
print("verification failures:", failures)

# families realizing exactly m nets exist for every small m
from mllnets import find_families_with_net_count

for m in (0, 1, 2):
    hits = find_families_with_net_count(m, 2)
    print(f"families with exactly {m} net class(es) within 2 mult links:",
          len(hits))
