import pytest

from mllnets.core import IdLink, ParLink, TensorLink, link_counts, parse_structure
from mllnets.errors import SwitchingMismatchError
from mllnets.switching import (
    LEFT,
    DRSwitching,
    IdLeaf,
    ParStep,
    TensorSplit,
    diagnose,
    dr_graph,
    is_mix_correct,
    is_proof_net,
    sequentialize,
    switchings,
)

from conftest import (
    CROSS,
    DOUBLE_PAR,
    PAR_AXIOM,
    TENSOR_AXIOM,
    TENSOR_OF_PARS,
    THETA1,
)


def test_switching_counts(theta1, cross):
    all_tensor = parse_structure("ax 1 2\nax 3 4\ntensor 2 3 5")
    (only,) = switchings(all_tensor)
    assert only.choices == ()
    assert len(switchings(theta1)) == 4
    assert len(switchings(cross)) == 2


def test_dr_graph_single_axiom():
    ps = parse_structure("ax 1 2")
    (s,) = switchings(ps)
    g = dr_graph(ps, s)
    assert g.nodes == {1, 2}
    assert g.edges == frozenset({frozenset({1, 2})})


def test_dr_graph_cross_left(cross):
    s = DRSwitching(((cross.link_of(6), LEFT),))
    g = dr_graph(cross, s)
    expected = {
        frozenset(e) for e in [(1, 2), (3, 4), (1, 5), (4, 5), (3, 6)]
    }
    assert g.edges == expected


def test_dr_graph_edge_count(theta1):
    c = link_counts(theta1)
    for s in switchings(theta1):
        assert len(dr_graph(theta1, s).edges) == c.id + 2 * c.tensor + c.par


def test_switching_mismatch(theta1, cross):
    s = switchings(cross)[0]
    with pytest.raises(SwitchingMismatchError):
        dr_graph(theta1, s)


def test_is_proof_net_examples():
    assert is_proof_net(parse_structure(PAR_AXIOM))
    assert not is_proof_net(parse_structure(TENSOR_AXIOM))
    assert not is_proof_net(parse_structure(DOUBLE_PAR))
    assert is_proof_net(parse_structure(TENSOR_OF_PARS))
    assert is_proof_net(parse_structure(THETA1))
    assert is_proof_net(parse_structure(CROSS))


def test_mix_correctness():
    witness = parse_structure(DOUBLE_PAR)
    assert is_mix_correct(witness) and not is_proof_net(witness)
    assert is_mix_correct(parse_structure(TENSOR_OF_PARS))
    assert not is_mix_correct(parse_structure(TENSOR_AXIOM))
    disjoint = parse_structure("ax 1 2\nax 3 4")
    assert is_mix_correct(disjoint) and not is_proof_net(disjoint)


def test_net_graphs_are_trees(theta1):
    for s in switchings(theta1):
        g = dr_graph(theta1, s)
        assert len(g.nodes) == len(g.edges) + 1
        assert g.is_connected() and g.is_acyclic()


def test_diagnose_cycle():
    ok, s, cycle, comps = diagnose(parse_structure(TENSOR_AXIOM))
    assert not ok and cycle is not None
    assert set(cycle) == {1, 2, 3}


def test_diagnose_disconnected():
    ok, s, cycle, comps = diagnose(parse_structure(DOUBLE_PAR))
    assert not ok and cycle is None
    assert len(comps) > 1


def test_sequentialize_leaf():
    tree = sequentialize(parse_structure("ax 1 2"))
    assert tree == IdLeaf(IdLink(1, 2))


def test_sequentialize_cross(cross):
    tree = sequentialize(cross)
    assert tree == ParStep(
        ParLink(3, 2, 6),
        TensorSplit(TensorLink(1, 4, 5), IdLeaf(IdLink(1, 2)), IdLeaf(IdLink(3, 4))),
    )


def test_sequentialize_failure():
    assert sequentialize(parse_structure(TENSOR_AXIOM)) is None
    assert sequentialize(parse_structure(DOUBLE_PAR)) is None


def test_sequentialize_uses_every_link(theta1):
    tree = sequentialize(theta1)

    def links_of(t):
        if isinstance(t, IdLeaf):
            return [t.link]
        if isinstance(t, ParStep):
            return [t.link] + links_of(t.subtree)
        return [t.link] + links_of(t.left) + links_of(t.right)

    assert sorted(links_of(tree), key=repr) == sorted(theta1.links, key=repr)
