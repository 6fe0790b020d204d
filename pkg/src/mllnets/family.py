"""PS-families: induced digraphs, isomorphisms, the metric, and skeletons.

Every structure induces a directed graph whose vertices are the occurrence
indices and whose edges carry labels L/R/ID (ID-edges run from the p side
to the p^ side).  Two structures belong to the same family when these
graphs are isomorphic with edge labels only; they are equal when the
isomorphism also preserves the strip labels {p, p^, tensor, par} on
vertices.  The family metric is the minimum number of strip-label
disagreements over all unlabeled isomorphisms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    ID,
    MULT,
    PAR,
    TENSOR,
    IdLink,
    MultLink,
    MultiplicativeLink,
    ParFormula,
    ParLink,
    PosLiteral,
    ProofStructure,
    TensorFormula,
    TensorLink,
    _check_wiring,
    parse_links,
)
from .errors import (
    IsoLimitExceededError,
    LinkKindMismatchError,
    NotSameFamilyError,
    UnknownLinkError,
)
from .switching import dr_graph, is_proof_net, switchings

DEFAULT_ISO_LIMIT = 10**6

LABEL_P, LABEL_NEG_P, LABEL_TENSOR, LABEL_PAR = "p", "p^", "tensor", "par"


def strip_label(formula) -> str:
    """Collapse a formula to one of {p, p^, tensor, par}."""
    if isinstance(formula, PosLiteral):
        return LABEL_P
    if isinstance(formula, TensorFormula):
        return LABEL_TENSOR
    if isinstance(formula, ParFormula):
        return LABEL_PAR
    return LABEL_NEG_P


@dataclass(frozen=True)
class LabelledDigraph:
    vertices: frozenset[int]
    edges: tuple[tuple[int, int, str], ...]  # (src, tgt, label)
    vertex_labels: tuple[tuple[int, str], ...] | None = None

    def edge_map(self) -> dict[tuple[int, int], str]:
        # at most one edge per (src, tgt) pair in induced graphs
        return {(s, t): l for (s, t, l) in self.edges}

    def labels(self) -> dict[int, str] | None:
        return None if self.vertex_labels is None else dict(self.vertex_labels)


def _graph_from_links(links, vertex_labels=None) -> LabelledDigraph:
    vertices = set()
    edges = []
    for link in links:
        vertices.update(link.conclusions)
        vertices.update(link.premises)
        if isinstance(link, IdLink):
            edges.append((link.pos, link.neg, "ID"))
        else:
            edges.append((link.left, link.conclusion, "L"))
            edges.append((link.right, link.conclusion, "R"))
    return LabelledDigraph(
        vertices=frozenset(vertices),
        edges=tuple(edges),
        vertex_labels=vertex_labels,
    )


def induced_graph(ps: ProofStructure, with_vertex_labels: bool = False) -> LabelledDigraph:
    labels = None
    if with_vertex_labels:
        labels = tuple(sorted((i, strip_label(f)) for i, f in ps.formulas.items()))
    return _graph_from_links(ps.links, labels)


@dataclass(frozen=True)
class GraphIso:
    vertex_map: tuple[tuple[int, int], ...]
    edge_map: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    def vmap(self) -> dict[int, int]:
        return dict(self.vertex_map)

    @property
    def is_identity(self) -> bool:
        return all(a == b for a, b in self.vertex_map)


def _degree_signature(g: LabelledDigraph):
    sig = {v: [] for v in g.vertices}
    for s, t, l in g.edges:
        sig[s].append(("out", l))
        sig[t].append(("in", l))
    return {v: tuple(sorted(pairs)) for v, pairs in sig.items()}


def _match_order(g: LabelledDigraph):
    """Vertices of g ordered sinks-first, then by adjacency, for pruning."""
    adj = {v: set() for v in g.vertices}
    out_deg = {v: 0 for v in g.vertices}
    for s, t, _ in g.edges:
        adj[s].add(t)
        adj[t].add(s)
        out_deg[s] += 1
    sinks = sorted(v for v in g.vertices if out_deg[v] == 0)
    order = []
    placed = set()
    frontier = list(sinks)
    remaining = set(g.vertices)
    while remaining:
        candidates = sorted(v for v in remaining if any(u in placed for u in adj[v]))
        nxt = None
        if frontier:
            nxt = frontier.pop(0)
        elif candidates:
            nxt = candidates[0]
        else:
            nxt = min(remaining)
        if nxt in placed:
            continue
        order.append(nxt)
        placed.add(nxt)
        remaining.discard(nxt)
    return order


def isomorphisms(
    g1: LabelledDigraph,
    g2: LabelledDigraph,
    iso_limit: int = DEFAULT_ISO_LIMIT,
    find_one: bool = False,
):
    """All isomorphisms g1 -> g2, in deterministic order.

    Vertex labels are respected iff both graphs carry them.  Raises
    IsoLimitExceededError once more than ``iso_limit`` partial states have
    been expanded.
    """
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return []
    use_labels = g1.vertex_labels is not None and g2.vertex_labels is not None
    lab1 = g1.labels() if use_labels else None
    lab2 = g2.labels() if use_labels else None
    sig1, sig2 = _degree_signature(g1), _degree_signature(g2)
    e1, e2 = g1.edge_map(), g2.edge_map()
    if sorted(e1.values()) != sorted(e2.values()):
        return []

    order = _match_order(g1)
    verts2 = sorted(g2.vertices)
    results = []
    mapping: dict[int, int] = {}
    used: set[int] = set()
    states = 0

    def compatible(v1, v2):
        if sig1[v1] != sig2[v2]:
            return False
        if use_labels and lab1[v1] != lab2[v2]:
            return False
        for u1, u2 in mapping.items():
            if e1.get((v1, u1)) != e2.get((v2, u2)):
                return False
            if e1.get((u1, v1)) != e2.get((u2, v2)):
                return False
        return True

    def backtrack(pos):
        nonlocal states
        if pos == len(order):
            vmap = tuple(sorted(mapping.items()))
            emap = tuple(
                ((s, t), (mapping[s], mapping[t])) for (s, t, _) in g1.edges
            )
            results.append(GraphIso(vertex_map=vmap, edge_map=emap))
            return find_one
        v1 = order[pos]
        for v2 in verts2:
            if v2 in used:
                continue
            states += 1
            if states > iso_limit:
                raise IsoLimitExceededError(
                    f"isomorphism search exceeded {iso_limit} states"
                )
            if not compatible(v1, v2):
                continue
            mapping[v1] = v2
            used.add(v2)
            if backtrack(pos + 1):
                return True
            del mapping[v1]
            used.discard(v2)
        return False

    backtrack(0)
    return results


def same_family(ps1: ProofStructure, ps2: ProofStructure, iso_limit=DEFAULT_ISO_LIMIT) -> bool:
    return bool(
        isomorphisms(induced_graph(ps1), induced_graph(ps2), iso_limit, find_one=True)
    )


def equals(ps1: ProofStructure, ps2: ProofStructure, iso_limit=DEFAULT_ISO_LIMIT) -> bool:
    return bool(
        isomorphisms(
            induced_graph(ps1, True), induced_graph(ps2, True), iso_limit, find_one=True
        )
    )


def distance(ps1: ProofStructure, ps2: ProofStructure, iso_limit=DEFAULT_ISO_LIMIT) -> int:
    """Minimum number of strip-label disagreements over all unlabeled
    isomorphisms between the induced graphs."""
    isos = isomorphisms(induced_graph(ps1), induced_graph(ps2), iso_limit)
    if not isos:
        raise NotSameFamilyError("structures do not belong to the same PS-family")
    lab1 = {i: strip_label(f) for i, f in ps1.formulas.items()}
    lab2 = {i: strip_label(f) for i, f in ps2.formulas.items()}
    best = None
    for iso in isos:
        mismatches = sum(1 for v1, v2 in iso.vertex_map if lab1[v1] != lab2[v2])
        best = mismatches if best is None else min(best, mismatches)
    return best


def tpex(ps: ProofStructure, tensors, pars) -> ProofStructure:
    """Simultaneously turn the listed tensor-links into par-links and the
    listed par-links into tensor-links."""
    tensors, pars = list(tensors), list(pars)
    link_set = set(ps.links)
    for link in tensors:
        if link not in link_set:
            raise UnknownLinkError(f"link not in structure: {link}")
        if not isinstance(link, TensorLink):
            raise LinkKindMismatchError(f"not a tensor-link: {link}")
    for link in pars:
        if link not in link_set:
            raise UnknownLinkError(f"link not in structure: {link}")
        if not isinstance(link, ParLink):
            raise LinkKindMismatchError(f"not a par-link: {link}")
    flip_t, flip_p = set(tensors), set(pars)
    new_links = []
    for link in ps.links:
        if link in flip_t:
            new_links.append(ParLink(link.left, link.right, link.conclusion))
        elif link in flip_p:
            new_links.append(TensorLink(link.left, link.right, link.conclusion))
        else:
            new_links.append(link)
    return ProofStructure(tuple(new_links))


def single_flips(pn: ProofStructure):
    """All one-link flips (one tensor to par, or one par to tensor)."""
    for link in pn.links:
        if isinstance(link, TensorLink):
            yield tpex(pn, [link], [])
        elif isinstance(link, ParLink):
            yield tpex(pn, [], [link])


# ---------------------------------------------------------------------------
# Family skeletons


@dataclass(frozen=True)
class FamilySkeleton:
    """A structure whose multiplicative links are all unassigned."""

    links: tuple

    def __post_init__(self):
        for link in self.links:
            if isinstance(link, MultiplicativeLink) and not isinstance(link, MultLink):
                raise LinkKindMismatchError(
                    "skeleton links must be 'ax' or 'mult'; use skeleton_of() "
                    "to forget an assignment"
                )
        _check_wiring(self.links)

    @property
    def mult_links(self) -> tuple[MultLink, ...]:
        return tuple(l for l in self.links if isinstance(l, MultLink))

    @property
    def member_count(self) -> int:
        return 2 ** len(self.mult_links)

    def graph(self) -> LabelledDigraph:
        return _graph_from_links(self.links)


def skeleton_of(ps: ProofStructure) -> FamilySkeleton:
    links = tuple(
        MultLink(l.left, l.right, l.conclusion) if isinstance(l, MultiplicativeLink) else l
        for l in ps.links
    )
    return FamilySkeleton(links)


def parse_skeleton(text: str) -> FamilySkeleton:
    """Parse a skeleton file; tensor/par lines are read as unassigned."""
    links, lines = parse_links(text)
    _check_wiring(links, lines)
    return skeleton_of_links(links)


def skeleton_of_links(links) -> FamilySkeleton:
    normalized = tuple(
        MultLink(l.left, l.right, l.conclusion) if isinstance(l, MultiplicativeLink) else l
        for l in links
    )
    return FamilySkeleton(normalized)


def family_members(sk: FamilySkeleton):
    """All 2^m assignments; mult links in file order, tensor before par."""
    mults = sk.mult_links
    members = []
    for kinds in itertools.product((TENSOR, PAR), repeat=len(mults)):
        assign = dict(zip(mults, kinds))
        links = []
        for link in sk.links:
            if isinstance(link, MultLink):
                cls = TensorLink if assign[link] == TENSOR else ParLink
                links.append(cls(link.left, link.right, link.conclusion))
            else:
                links.append(link)
        members.append(ProofStructure(tuple(links)))
    return members


def proof_net_members(sk: FamilySkeleton):
    return [m for m in family_members(sk) if is_proof_net(m)]


def net_equivalence_classes(sk: FamilySkeleton, iso_limit=DEFAULT_ISO_LIMIT):
    """Group the proof-net members of a skeleton under structure equality."""
    classes: list[list[ProofStructure]] = []
    for net in proof_net_members(sk):
        for cls in classes:
            if equals(net, cls[0], iso_limit):
                cls.append(net)
                break
        else:
            classes.append([net])
    return classes


def count_proof_nets(sk: FamilySkeleton, iso_limit=DEFAULT_ISO_LIMIT):
    """(raw assignment count, count up to structure equality)."""
    classes = net_equivalence_classes(sk, iso_limit)
    return sum(len(c) for c in classes), len(classes)


def is_ps_connected(sk: FamilySkeleton) -> bool:
    """Connectivity of the unique DR-graph of the all-tensor member."""
    all_tensor = family_members(sk)[0]
    (s,) = switchings(all_tensor)
    return dr_graph(all_tensor, s).is_connected()


def family_distance(sk: FamilySkeleton, iso_limit=DEFAULT_ISO_LIMIT):
    """Minimum distance between non-equal proof-net members, or None."""
    reps = [c[0] for c in net_equivalence_classes(sk, iso_limit)]
    if len(reps) < 2:
        return None
    return min(
        distance(a, b, iso_limit) for a, b in itertools.combinations(reps, 2)
    )


def strip_automorphisms(pn: ProofStructure, iso_limit=DEFAULT_ISO_LIMIT):
    g = induced_graph(pn, with_vertex_labels=True)
    return isomorphisms(g, g, iso_limit)
