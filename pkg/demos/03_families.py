"""PS-families, the metric, and tensor/par exchange.

Forgetting which multiplicative links are tensor and which are par leaves
a skeleton; its 2^m assignments form a family.  The distance between two
members is the least number of label disagreements over all isomorphisms
of the induced graphs.  Proof nets inside one family behave like the
codewords of a one-error-detecting code.
"""

from mllnets import (
    count_proof_nets,
    distance,
    equals,
    exchange_path,
    family_distance,
    is_proof_net,
    is_ps_connected,
    parse_structure,
    render,
    skeleton_of,
    theorem1_condition,
    tpex,
    verify_family,
)

THETA1 = """\
ax 1 2
ax 3 4
tensor 1 4 5
par 3 2 6
par 5 6 7
"""

pn1 = parse_structure(THETA1)
a, b, c = pn1.link_of(5), pn1.link_of(6), pn1.link_of(7)

# exchanging the tensor with par b keeps net-hood; with par c it does not
print("exchange (5,6): condition", theorem1_condition(pn1, a, b),
      " net after flip", is_proof_net(tpex(pn1, [a], [b])))
print("exchange (5,7): condition", theorem1_condition(pn1, a, c),
      " net after flip", is_proof_net(tpex(pn1, [a], [c])))

pn2 = tpex(pn1, [a], [b])
print("\nd(pn1, pn2) =", distance(pn1, pn2), " equal:", equals(pn1, pn2))

path = exchange_path(pn1, pn2)
print("exchange path hops:", path.hops)
for step in path.steps:
    print(render(step).replace("\n", "; ").rstrip("; "))

sk = skeleton_of(pn1)
print("\nskeleton members:", sk.member_count)
print("proof nets (raw, up to equality):", count_proof_nets(sk))
print("PS-connected:", is_ps_connected(sk))
print("family distance:", family_distance(sk))

report = verify_family(sk)
print("\nfull verification report:")
for name, ok in report.checks_passed:
    print(f"  {'PASS' if ok else 'FAIL'} {name}")
