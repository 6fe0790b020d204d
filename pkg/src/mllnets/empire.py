"""Empires, principal switchings, and the splitting tensor.

The empire of a formula occurrence ``a`` in a proof net is the largest
sub-proof-net having ``a`` as a conclusion.  Semantically it is the
intersection, over all switchings, of the connected component at ``a``
after cutting the edge below ``a`` (BruteForce).  The Saturation strategy
computes the same set by closure rules and is checked against BruteForce
by the test suite rather than trusted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import PAR, TENSOR, IdLink, ParLink, ProofStructure, TensorLink
from .errors import NotAProofNetError, UnknownIndexError
from .switching import (
    LEFT,
    RIGHT,
    DRSwitching,
    dr_graph,
    is_proof_net,
    switchings,
)


class EmpireStrategy(enum.Enum):
    BRUTE_FORCE = "brute"
    SATURATION = "sat"


@dataclass(frozen=True)
class Empire:
    root: int
    members: frozenset[int]
    member_links: tuple

    @property
    def conclusions(self) -> frozenset[int]:
        premised = {i for l in self.member_links for i in l.premises}
        return self.members - premised

    def as_structure(self) -> ProofStructure:
        return ProofStructure(self.member_links)


def _require_net(pn: ProofStructure):
    if not is_proof_net(pn):
        raise NotAProofNetError("empires are only defined on proof nets")


def _component_at(pn: ProofStructure, s: DRSwitching, a: int) -> frozenset[int]:
    """fml of the switched graph cut below ``a``: delete the edge from ``a``
    to the conclusion of the link it is a premise of, when that edge is
    present, and take the component of ``a``."""
    g = dr_graph(pn, s)
    edges = set(g.edges)
    below = pn.link_below(a)
    if below is not None:
        if isinstance(below, TensorLink):
            edges.discard(frozenset((a, below.conclusion)))
        elif isinstance(below, ParLink) and s.selected_premise(below) == a:
            edges.discard(frozenset((a, below.conclusion)))
    adj = {v: [] for v in g.nodes}
    for e in edges:
        u, v = tuple(e)
        adj[u].append(v)
        adj[v].append(u)
    seen = {a}
    stack = [a]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def _brute_force_members(pn: ProofStructure, a: int) -> frozenset[int]:
    members = None
    for s in switchings(pn):
        comp = _component_at(pn, s, a)
        members = comp if members is None else members & comp
    return members


def _saturation_members(pn: ProofStructure, a: int) -> frozenset[int]:
    members = {a}
    changed = True
    while changed:
        changed = False
        for link in pn.links:
            if isinstance(link, IdLink):
                hits = members & {link.pos, link.neg}
                if hits and not {link.pos, link.neg} <= members:
                    members.update((link.pos, link.neg))
                    changed = True
                continue
            concl, left, right = link.conclusion, link.left, link.right
            # everything hereditarily above a member is a member
            if concl in members and not {left, right} <= members:
                members.update((left, right))
                changed = True
            if isinstance(link, TensorLink):
                # a tensor with one premise strictly inside pulls in the rest
                for prem, other in ((left, right), (right, left)):
                    if prem in members and prem != a and concl not in members:
                        members.update((other, concl))
                        changed = True
            else:
                # a par needs both premises strictly inside
                if (
                    left in members
                    and right in members
                    and a not in (left, right)
                    and concl not in members
                ):
                    members.add(concl)
                    changed = True
    return frozenset(members)


def _member_links(pn: ProofStructure, members: frozenset[int]):
    return tuple(
        link
        for link in pn.links
        if set(link.conclusions) <= members and set(link.premises) <= members
    )


def empire(
    pn: ProofStructure,
    a: int,
    strategy: EmpireStrategy = EmpireStrategy.BRUTE_FORCE,
) -> Empire:
    _require_net(pn)
    if a not in pn.indices:
        raise UnknownIndexError(f"no formula occurrence with index {a}")
    if strategy is EmpireStrategy.BRUTE_FORCE:
        members = _brute_force_members(pn, a)
    else:
        members = _saturation_members(pn, a)
    return Empire(root=a, members=members, member_links=_member_links(pn, members))


def principal_switching(pn: ProofStructure, a: int) -> DRSwitching:
    """A switching whose cut component at ``a`` is exactly the empire.

    Selects ``a`` itself in any par-link it is a premise of, the outside
    premise in boundary par-links (one premise in the empire, one out),
    and Left wherever free.
    """
    _require_net(pn)
    if a not in pn.indices:
        raise UnknownIndexError(f"no formula occurrence with index {a}")
    members = _brute_force_members(pn, a)
    choices = []
    for link in pn.links_of_kind(PAR):
        if a in (link.left, link.right):
            side = LEFT if link.left == a else RIGHT
        elif link.left in members and link.right not in members:
            side = RIGHT
        elif link.right in members and link.left not in members:
            side = LEFT
        else:
            side = LEFT
        choices.append((link, side))
    return DRSwitching(tuple(choices))


def tensor_order(pn: ProofStructure) -> frozenset[tuple[TensorLink, TensorLink]]:
    """Pairs (L, L') with e(conclusion of L) contained in a premise empire
    of L'; a strict partial order on the tensor-links of a proof net."""
    _require_net(pn)
    tensors = pn.links_of_kind(TENSOR)
    emp = {i: _brute_force_members(pn, i) for l in tensors for i in (l.left, l.right, l.conclusion)}
    pairs = set()
    for l1 in tensors:
        for l2 in tensors:
            if l1 is l2:
                continue
            e1 = emp[l1.conclusion]
            if e1 <= emp[l2.left] or e1 <= emp[l2.right]:
                pairs.add((l1, l2))
    return frozenset(pairs)


def find_splitting_tensor(pn: ProofStructure):
    """A conclusion tensor-link whose premise empires partition the rest.

    Returns ``(link, left_empire, right_empire)``.  Requires a proof net
    with no par-formula conclusion and at least one tensor conclusion.
    """
    from .errors import HasParConclusionError, NoTensorConclusionError

    _require_net(pn)
    for i in pn.conclusions:
        link = pn.link_of(i)
        if isinstance(link, ParLink):
            raise HasParConclusionError(
                f"conclusion {i} is a par-formula; strip it before splitting"
            )
    candidates = [
        pn.link_of(i) for i in sorted(pn.conclusions) if isinstance(pn.link_of(i), TensorLink)
    ]
    if not candidates:
        raise NoTensorConclusionError("structure has no tensor conclusion")
    order = tensor_order(pn)
    below = {l1 for (l1, l2) in order if l2 in candidates}
    maximal = [l for l in candidates if l not in below]
    for link in maximal:
        left = empire(pn, link.left)
        right = empire(pn, link.right)
        if (
            not (left.members & right.members)
            and left.members | right.members | {link.conclusion} == pn.indices
        ):
            return link, left, right
    raise NotAProofNetError("no splitting tensor found")  # unreachable on nets
