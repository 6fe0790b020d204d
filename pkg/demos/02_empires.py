"""Empires, principal switchings, and the splitting tensor.

The empire of an occurrence a is the largest sub-proof-net concluding a.
Two independent computations must agree: intersecting switched components
(brute force) and closing under the imperialism rules (saturation).
"""

from mllnets import (
    EmpireStrategy,
    empire,
    find_splitting_tensor,
    parse_structure,
    principal_switching,
    tensor_order,
)

THETA1 = """\
ax 1 2
ax 3 4
tensor 1 4 5
par 3 2 6
par 5 6 7
"""

pn = parse_structure(THETA1)
for i in sorted(pn.indices):
    brute = empire(pn, i)
    sat = empire(pn, i, EmpireStrategy.SATURATION)
    assert brute.members == sat.members
    print(f"e({i}) = {sorted(brute.members)}  conclusions {sorted(brute.conclusions)}")

print("\nprincipal switching for 1:",
      {l.conclusion: s for l, s in principal_switching(pn, 1).choices})

# the two premise empires of a splitting tensor partition the net
split = parse_structure("ax 1 2\nax 3 4\npar 1 2 5\npar 3 4 6\ntensor 5 6 7")
link, left, right = find_splitting_tensor(split)
print("\nsplitting tensor concludes", link.conclusion)
print("  left empire ", sorted(left.members))
print("  right empire", sorted(right.members))

big = parse_structure(THETA1 + """\
ax 8 9
ax 10 11
tensor 8 11 12
par 10 9 13
par 12 13 14
tensor 7 14 15
""")
order = tensor_order(big)
print("\ntensor order on the doubled net:")
for l1, l2 in sorted(order, key=lambda p: (p[0].conclusion, p[1].conclusion)):
    print(f"  {l1.conclusion} < {l2.conclusion}")
