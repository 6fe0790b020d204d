"""Proof structures and the switching-based correctness criterion.

A proof structure wires indexed formula occurrences with ax/tensor/par
links.  It is a proof net when every switching (a Left/Right choice for
each par-link) yields a graph that is acyclic and connected.
"""

from mllnets import (
    diagnose,
    dr_graph,
    is_mix_correct,
    is_proof_net,
    parse_structure,
    sequentialize,
    switchings,
)

THETA1 = """\
ax 1 2
ax 3 4
tensor 1 4 5
par 3 2 6
par 5 6 7
"""

ps = parse_structure(THETA1)
print("structure with conclusions", sorted(ps.conclusions))
for i in sorted(ps.indices):
    print(f"  {i}: {ps.formula_of(i)}")

print("\nswitchings:", len(switchings(ps)))
for s in switchings(ps):
    g = dr_graph(ps, s)
    choice = {link.conclusion: side for link, side in s.choices}
    print(f"  {choice}  acyclic={g.is_acyclic()}  connected={g.is_connected()}")

print("\nis_proof_net:", is_proof_net(ps))
print("sequentialize succeeds:", sequentialize(ps) is not None)

# a tensor on a single axiom closes a cycle
bad = parse_structure("ax 1 2\ntensor 1 2 3")
ok, s, cycle, comps = diagnose(bad)
print("\ntensor on one axiom: proof net =", ok, " cycle =", cycle)

# (p par p^) par (p par p^): every switching is acyclic but one disconnects
witness = parse_structure("ax 1 2\nax 3 4\npar 1 2 5\npar 3 4 6\npar 5 6 7")
print("double-par witness: net =", is_proof_net(witness),
      " MIX-correct =", is_mix_correct(witness))
