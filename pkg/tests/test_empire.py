import itertools

import pytest

from mllnets.core import PAR, TENSOR, ProofStructure, parse_structure
from mllnets.empire import (
    EmpireStrategy,
    empire,
    find_splitting_tensor,
    principal_switching,
    tensor_order,
)
from mllnets.errors import (
    HasParConclusionError,
    NotAProofNetError,
    NoTensorConclusionError,
    UnknownIndexError,
)
from mllnets.switching import LEFT, dr_graph, is_proof_net

from conftest import TENSOR_AXIOM, TENSOR_OF_PARS


def test_empire_examples(theta1):
    assert empire(theta1, 1).members == {1, 2}
    assert empire(theta1, 5).members == {1, 2, 3, 4, 5, 6}
    assert empire(theta1, 6).members == empire(theta1, 5).members
    assert empire(theta1, 7).members == theta1.indices


def test_strategies_agree(theta1, cross, theta_big1):
    for pn in (theta1, cross, theta_big1):
        for i in sorted(pn.indices):
            brute = empire(pn, i).members
            sat = empire(pn, i, EmpireStrategy.SATURATION).members
            assert brute == sat, i


def test_empire_is_a_sub_proof_net(theta1):
    for i in sorted(theta1.indices):
        e = empire(theta1, i)
        assert i in e.members
        sub = e.as_structure()
        assert is_proof_net(sub)
        assert i in sub.conclusions
        assert e.conclusions == sub.conclusions


def test_empire_maximality(theta1):
    # no sub-proof-net with conclusion 1 strictly contains e(1)
    e1 = empire(theta1, 1).members
    for k in range(1, len(theta1.links) + 1):
        for subset in itertools.combinations(theta1.links, k):
            try:
                sub = ProofStructure(subset)
            except Exception:
                continue
            if 1 in sub.conclusions and is_proof_net(sub):
                assert not (e1 < sub.indices)


def test_disjointness_when_mutually_outside(theta1):
    emps = {i: empire(theta1, i).members for i in theta1.indices}
    for a, b in itertools.combinations(sorted(theta1.indices), 2):
        if b not in emps[a] and a not in emps[b]:
            assert not (emps[a] & emps[b])


def test_empire_errors(theta1):
    with pytest.raises(NotAProofNetError):
        empire(parse_structure(TENSOR_AXIOM), 1)
    with pytest.raises(UnknownIndexError):
        empire(theta1, 42)


def test_principal_switching(theta1):
    b = theta1.link_of(6)
    c = theta1.link_of(7)

    s = principal_switching(theta1, 1)
    assert s.selected_premise(b) == 3  # the premise outside e(1)
    assert s.selected_premise(c) == 5  # free choice, canonical Left

    s5 = principal_switching(theta1, 5)
    assert s5.selected_premise(c) == 5  # 5 is itself a par premise

    # the defining property: the cut component at a equals the empire
    from mllnets.empire import _component_at

    for a in sorted(theta1.indices):
        s = principal_switching(theta1, a)
        assert _component_at(theta1, s, a) == empire(theta1, a).members


def test_tensor_order(theta_big1):
    single = parse_structure(TENSOR_OF_PARS)
    assert tensor_order(single) == frozenset()

    order = tensor_order(theta_big1)
    root = theta_big1.link_of(15)
    inner = [theta_big1.link_of(5), theta_big1.link_of(12)]
    for l in inner:
        assert (l, root) in order
    for l1, l2 in order:
        assert l1 != l2  # irreflexive
    for (a, b), (c, d) in itertools.product(order, repeat=2):
        if b == c:
            assert (a, d) in order  # transitive


def test_find_splitting_tensor():
    pn = parse_structure("ax 1 2\nax 3 4\ntensor 2 3 5")
    link, left, right = find_splitting_tensor(pn)
    assert link.conclusion == 5
    assert left.members == {1, 2} and right.members == {3, 4}
    assert left.members | right.members | {5} == pn.indices

    pn2 = parse_structure(TENSOR_OF_PARS)
    link2, l2, r2 = find_splitting_tensor(pn2)
    assert link2.conclusion == 7
    assert l2.members == {1, 2, 5} and r2.members == {3, 4, 6}


def test_find_splitting_tensor_errors(theta1):
    with pytest.raises(NoTensorConclusionError):
        find_splitting_tensor(parse_structure("ax 1 2"))
    with pytest.raises(HasParConclusionError):
        find_splitting_tensor(theta1)
