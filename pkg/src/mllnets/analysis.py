"""Executable checks of the main theorems over desk-scale family sweeps.

The exchange characterization: flipping one tensor-link t and one par-link
q of a proof net yields another proof net exactly when the premises of q
conclude the premise empires of t (in either pairing).  Between any two
proof nets of one family there is a path of proof nets whose hops are
single tensor/par exchanges, so any family with two or more distinct nets
has distance exactly 2.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .core import PAR, TENSOR, IdLink, MultLink, ParLink, ProofStructure, TensorLink, link_counts
from .empire import empire
from .errors import (
    LinkKindMismatchError,
    MLLError,
    NotAProofNetError,
    NotSameFamilyError,
    UnknownLinkError,
)
from .family import (
    DEFAULT_ISO_LIMIT,
    FamilySkeleton,
    count_proof_nets,
    distance,
    equals,
    family_distance,
    family_members,
    is_ps_connected,
    isomorphisms,
    net_equivalence_classes,
    same_family,
    single_flips,
    tpex,
)
from .switching import is_proof_net, sequentialize


def theorem1_condition(pn: ProofStructure, t: TensorLink, q: ParLink) -> bool:
    """True iff flipping t and q together preserves proof-net-hood.

    Checks that the par premises conclude the two premise empires of the
    tensor, in one of the two pairings.
    """
    if not is_proof_net(pn):
        raise NotAProofNetError("the exchange condition is defined on proof nets")
    if t not in pn.links or q not in pn.links:
        raise UnknownLinkError("link not in structure")
    if not isinstance(t, TensorLink):
        raise LinkKindMismatchError(f"not a tensor-link: {t}")
    if not isinstance(q, ParLink):
        raise LinkKindMismatchError(f"not a par-link: {q}")
    left_concl = empire(pn, t.left).conclusions
    right_concl = empire(pn, t.right).conclusions
    c, d = q.left, q.right
    return (c in left_concl and d in right_concl) or (
        d in left_concl and c in right_concl
    )


@dataclass(frozen=True)
class ExchangePath:
    """A sequence of proof nets; consecutive nets differ by one exchange."""

    steps: tuple[ProofStructure, ...]

    @property
    def hops(self) -> int:
        return len(self.steps) - 1


def _greedy_step(current: ProofStructure, target: ProofStructure, d: int):
    for t in current.links_of_kind(TENSOR):
        for q in current.links_of_kind(PAR):
            cand = tpex(current, [t], [q])
            if is_proof_net(cand) and distance(cand, target) == d - 2:
                return cand
    return None


def _bfs_path(start: ProofStructure, target: ProofStructure):
    """Breadth-first search over net members reachable by exchanges."""

    def key(ps):
        return tuple(l.kind for l in ps.links)

    seen = {key(start)}
    queue = deque([(start, [start])])
    while queue:
        current, path = queue.popleft()
        if equals(current, target):
            return path
        for t in current.links_of_kind(TENSOR):
            for q in current.links_of_kind(PAR):
                cand = tpex(current, [t], [q])
                k = key(cand)
                if k in seen or not is_proof_net(cand):
                    continue
                seen.add(k)
                queue.append((cand, path + [cand]))
    return None


def exchange_path(pn1: ProofStructure, pn2: ProofStructure) -> ExchangePath:
    """A path of proof nets from pn1 to pn2, one exchange per hop.

    Greedy: at distance 2m pick any exchange that stays a net and reduces
    the distance; falls back to breadth-first search over the family's net
    members.
    """
    if not (is_proof_net(pn1) and is_proof_net(pn2)):
        raise NotAProofNetError("exchange paths connect proof nets")
    if not same_family(pn1, pn2):
        raise NotSameFamilyError("structures do not belong to the same PS-family")
    steps = [pn1]
    current = pn1
    d = distance(current, pn2)
    while d > 0:
        nxt = _greedy_step(current, pn2, d)
        if nxt is None:
            tail = _bfs_path(current, pn2)
            if tail is None:
                # unreachable: net members of a family are exchange-connected
                raise MLLError("no exchange path found")
            return ExchangePath(tuple(steps[:-1] + tail))
        steps.append(nxt)
        current = nxt
        d -= 2
    return ExchangePath(tuple(steps))


def verify_error_detection(sk: FamilySkeleton, iso_limit=DEFAULT_ISO_LIMIT) -> bool:
    """Every pair of non-equal proof-net members is at distance >= 2."""
    reps = [c[0] for c in net_equivalence_classes(sk, iso_limit)]
    return all(
        distance(a, b, iso_limit) >= 2 for a, b in itertools.combinations(reps, 2)
    )


@dataclass(frozen=True)
class FamilyReport:
    member_count: int
    net_count_raw: int
    net_count_up_to_equality: int
    ps_connected: bool
    family_distance: int | None
    checks_passed: tuple[tuple[str, bool], ...]

    @property
    def all_passed(self) -> bool:
        return all(ok for _, ok in self.checks_passed)

    def as_dict(self):
        return {
            "memberCount": self.member_count,
            "netCountRaw": self.net_count_raw,
            "netCountUpToEquality": self.net_count_up_to_equality,
            "psConnected": self.ps_connected,
            "familyDistance": self.family_distance,
            "checksPassed": dict(self.checks_passed),
        }


def verify_family(sk: FamilySkeleton, iso_limit=DEFAULT_ISO_LIMIT) -> FamilyReport:
    members = family_members(sk)
    nets = [m for m in members if is_proof_net(m)]
    raw, up_to_eq = count_proof_nets(sk, iso_limit)
    connected = is_ps_connected(sk)
    fdist = family_distance(sk, iso_limit)

    checks = {}
    checks["link_count_identities"] = all(
        (c := link_counts(n)).conclusions + c.par == c.id + 1 and c.id - c.tensor == 1
        for n in nets
    )
    checks["single_flip_never_net"] = all(
        not is_proof_net(flip) for n in nets for flip in single_flips(n)
    )
    checks["sequentialization_agreement"] = all(
        (sequentialize(m) is not None) == is_proof_net(m) for m in members
    )
    checks["exchange_condition"] = all(
        theorem1_condition(n, t, q) == is_proof_net(tpex(n, [t], [q]))
        for n in nets
        for t in n.links_of_kind(TENSOR)
        for q in n.links_of_kind(PAR)
    )
    checks["nets_iff_ps_connected"] = (raw >= 1) == connected
    checks["family_distance_two"] = up_to_eq < 2 or fdist == 2
    checks["error_detection"] = verify_error_detection(sk, iso_limit)

    return FamilyReport(
        member_count=len(members),
        net_count_raw=raw,
        net_count_up_to_equality=up_to_eq,
        ps_connected=connected,
        family_distance=fdist,
        checks_passed=tuple(sorted(checks.items())),
    )


# ---------------------------------------------------------------------------
# Exhaustive skeleton sweeps


def _wirings(num_axioms: int, num_mult: int):
    """All skeleton link lists with the given axiom and mult counts."""
    axioms = tuple(IdLink(2 * i + 1, 2 * i + 2) for i in range(num_axioms))
    start = 2 * num_axioms + 1

    def rec(links, available, next_index, remaining):
        if remaining == 0:
            yield tuple(links)
            return
        for l in available:
            for r in available:
                if l == r:
                    continue
                rest = [x for x in available if x not in (l, r)]
                yield from rec(
                    links + [MultLink(l, r, next_index)],
                    rest + [next_index],
                    next_index + 1,
                    remaining - 1,
                )

    yield from rec(list(axioms), list(range(1, start)), start, num_mult)


def skeletons_isomorphic(sk1: FamilySkeleton, sk2: FamilySkeleton) -> bool:
    return bool(isomorphisms(sk1.graph(), sk2.graph(), find_one=True))


def _canonical_key(links, num_axioms):
    """A relabeling-invariant key for a skeleton link list.

    Any isomorphism of skeleton graphs maps axiom links to axiom links
    preserving the p side and mult links to mult links preserving L/R, so
    it is determined by a permutation of the axioms together with a forced
    renumbering of the mults.  The key is the minimum, over all axiom
    permutations, of the mult wiring relabeled by a deterministic greedy
    order (smallest relabeled premise pair first).
    """
    axioms = links[:num_axioms]
    mults = links[num_axioms:]
    best = None
    for perm in itertools.permutations(range(num_axioms)):
        relabel = {}
        for new_pos, old_pos in enumerate(perm):
            relabel[axioms[old_pos].pos] = 2 * new_pos + 1
            relabel[axioms[old_pos].neg] = 2 * new_pos + 2
        pending = list(mults)
        nxt = 2 * num_axioms + 1
        key = []
        while pending:
            ready = [
                (relabel[l.left], relabel[l.right], l)
                for l in pending
                if l.left in relabel and l.right in relabel
            ]
            left, right, link = min(ready, key=lambda t: t[:2])
            relabel[link.conclusion] = nxt
            nxt += 1
            key.append((left, right))
            pending.remove(link)
        key = tuple(key)
        if best is None or key < best:
            best = key
    return num_axioms, best


def enumerate_skeletons(max_axioms: int, max_mult: int):
    """All skeletons with the given bounds, deduplicated up to isomorphism
    of their induced (unlabeled-vertex) digraphs.  Deterministic order."""
    seen = set()
    result = []
    for a in range(1, max_axioms + 1):
        for m in range(0, max_mult + 1):
            for links in _wirings(a, m):
                key = _canonical_key(links, a)
                if key in seen:
                    continue
                seen.add(key)
                result.append(FamilySkeleton(links))
    return result


def find_families_with_net_count(m: int, max_links: int, max_axioms: int | None = None):
    """Skeletons (up to isomorphism) with at most ``max_links`` mult links
    whose proof-net count up to equality is exactly ``m``.

    Axioms default to ``max_links + 1``, the largest count for which a net
    can still exist within the bound.
    """
    if max_axioms is None:
        max_axioms = max_links + 1
    return [
        sk
        for sk in enumerate_skeletons(max_axioms, max_links)
        if count_proof_nets(sk)[1] == m
    ]
