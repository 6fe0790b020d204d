"""DR-switchings, DR-graphs, the correctness criterion, sequentialization.

A switching picks one premise of every par-link.  The induced undirected
graph has the formula occurrences as nodes; an ID-link contributes one edge
between its conclusions, a tensor-link an edge from each premise to its
conclusion, and a par-link a single edge from the selected premise to its
conclusion.  A structure is a proof net iff every switching yields a graph
that is acyclic and connected.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import ID, PAR, TENSOR, IdLink, ParLink, ProofStructure, TensorLink
from .errors import SwitchingMismatchError

LEFT, RIGHT = "L", "R"


@dataclass(frozen=True)
class DRSwitching:
    """A Left/Right choice for every par-link of one structure."""

    choices: tuple[tuple[ParLink, str], ...]

    def selected_premise(self, link: ParLink) -> int:
        side = dict(self.choices)[link]
        return link.left if side == LEFT else link.right

    def as_dict(self):
        return dict(self.choices)


@dataclass(frozen=True)
class DRGraph:
    nodes: frozenset[int]
    edges: frozenset[frozenset[int]]

    def adjacency(self):
        adj = {v: [] for v in self.nodes}
        for e in self.edges:
            u, v = sorted(e)
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def components(self):
        adj = self.adjacency()
        seen = set()
        comps = []
        for start in sorted(self.nodes):
            if start in seen:
                continue
            stack, comp = [start], set()
            seen.add(start)
            while stack:
                u = stack.pop()
                comp.add(u)
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_acyclic(self) -> bool:
        # a simple undirected graph is a forest iff |E| = |V| - #components
        return len(self.edges) == len(self.nodes) - len(self.components())

    def find_cycle(self):
        """Some cycle as a vertex list, or None."""
        adj = self.adjacency()
        seen = set()
        for start in sorted(self.nodes):
            if start in seen:
                continue
            parent = {start: None}
            stack = [(start, None)]
            seen.add(start)
            while stack:
                u, pu = stack.pop()
                for w in sorted(adj[u]):
                    if w == pu:
                        pu = None  # consume the edge back to the parent once
                        continue
                    if w in parent:
                        # close the cycle through the two tree paths
                        path_u = []
                        x = u
                        while x is not None:
                            path_u.append(x)
                            x = parent[x]
                        path_w = []
                        x = w
                        while x is not None:
                            path_w.append(x)
                            x = parent[x]
                        common = set(path_u) & set(path_w)
                        cu = [x for x in path_u if x not in common]
                        cw = [x for x in path_w if x not in common]
                        meet = next(x for x in path_u if x in common)
                        return cu + [meet] + cw[::-1]
                    parent[w] = u
                    stack.append((w, u))
        return None


def switchings(ps: ProofStructure):
    """All 2^(#par) switchings; par-links in file order, Left before Right."""
    pars = ps.links_of_kind(PAR)
    result = []
    for sides in itertools.product((LEFT, RIGHT), repeat=len(pars)):
        result.append(DRSwitching(tuple(zip(pars, sides))))
    return result


def dr_graph(ps: ProofStructure, s: DRSwitching) -> DRGraph:
    if frozenset(link for link, _ in s.choices) != frozenset(ps.links_of_kind(PAR)):
        raise SwitchingMismatchError("switching does not match the structure's par-links")
    edges = set()
    for link in ps.links:
        if link.kind == ID:
            edges.add(frozenset((link.pos, link.neg)))
        elif link.kind == TENSOR:
            edges.add(frozenset((link.left, link.conclusion)))
            edges.add(frozenset((link.right, link.conclusion)))
        else:
            edges.add(frozenset((s.selected_premise(link), link.conclusion)))
    return DRGraph(nodes=ps.indices, edges=frozenset(edges))


def is_proof_net(ps: ProofStructure) -> bool:
    """Every DR-graph acyclic and connected (early exit on first failure)."""
    return diagnose(ps)[0]


def is_mix_correct(ps: ProofStructure) -> bool:
    """Acyclicity of every DR-graph; connectedness is not required."""
    return all(dr_graph(ps, s).is_acyclic() for s in switchings(ps))


def diagnose(ps: ProofStructure):
    """(ok, failing switching or None, cycle or None, components or None)."""
    for s in switchings(ps):
        g = dr_graph(ps, s)
        cycle = g.find_cycle()
        if cycle is not None:
            return False, s, cycle, None
        comps = g.components()
        if len(comps) > 1:
            return False, s, None, comps
    return True, None, None, None


# ---------------------------------------------------------------------------
# Sequentialization


class DerivationTree:
    __slots__ = ()


@dataclass(frozen=True)
class IdLeaf(DerivationTree):
    link: IdLink


@dataclass(frozen=True)
class ParStep(DerivationTree):
    link: ParLink
    subtree: DerivationTree


@dataclass(frozen=True)
class TensorSplit(DerivationTree):
    link: TensorLink
    left: DerivationTree
    right: DerivationTree


def _link_components(links):
    """Partition links into components of the share-an-index relation."""
    index_owner = {}
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for link in links:
        parent[link] = link
        for i in (*link.conclusions, *link.premises):
            if i in index_owner:
                ra, rb = find(index_owner[i]), find(link)
                if ra != rb:
                    parent[ra] = rb
            else:
                index_owner[i] = link
    groups = {}
    for link in links:
        groups.setdefault(find(link), []).append(link)
    return list(groups.values())


@lru_cache(maxsize=None)
def _sequentialize(links: frozenset):
    file_order = sorted(links, key=lambda l: min(l.conclusions))
    premised = {i for l in links for i in l.premises}

    if len(links) == 1:
        (link,) = links
        return IdLeaf(link) if isinstance(link, IdLink) else None

    # strip conclusion par-links, in ascending conclusion-index order
    for link in file_order:
        if isinstance(link, ParLink) and link.conclusion not in premised:
            sub = _sequentialize(links - {link})
            return None if sub is None else ParStep(link, sub)

    # split on a conclusion tensor-link: the remaining links must divide
    # into two proof structures, one containing each premise
    for link in file_order:
        if isinstance(link, TensorLink) and link.conclusion not in premised:
            rest = links - {link}
            comps = _link_components(rest)
            left_part, right_part, free = set(), set(), []
            ok = True
            for comp in comps:
                indices = {i for l in comp for i in (*l.conclusions, *l.premises)}
                has_l, has_r = link.left in indices, link.right in indices
                if has_l and has_r:
                    ok = False
                    break
                if has_l:
                    left_part.update(comp)
                elif has_r:
                    right_part.update(comp)
                else:
                    free.append(comp)
            if not ok or not left_part or not right_part:
                continue
            # a component not touching either premise may join either side
            for assignment in itertools.product((0, 1), repeat=len(free)):
                l_side = set(left_part)
                r_side = set(right_part)
                for comp, side in zip(free, assignment):
                    (l_side if side == 0 else r_side).update(comp)
                left_tree = _sequentialize(frozenset(l_side))
                if left_tree is None:
                    continue
                right_tree = _sequentialize(frozenset(r_side))
                if right_tree is None:
                    continue
                return TensorSplit(link, left_tree, right_tree)
    return None


def sequentialize(ps: ProofStructure) -> DerivationTree | None:
    """A derivation witness iff the structure is sequentializable.

    Implements the recursive definition directly: leaves are ID-links,
    conclusion par-links are stripped first, and conclusion tensor-links
    split the remaining links into two sequentializable structures.  The
    split search is exhaustive, so the result is independent of the
    switching-based criterion and can be tested against it.
    """
    return _sequentialize(frozenset(ps.links))
