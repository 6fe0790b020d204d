"""Formulas, links, indexed proof structures, parsing and link statistics.

A proof structure is a finite set of indexed formula occurrences wired by
ID-, tensor- and par-links such that every occurrence is the conclusion of
exactly one link and the premise of at most one.  Formulas are built over a
single propositional variable ``p``; they are never written in structure
files but inferred bottom-up from the link wiring, which determines them
uniquely.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DanglingPremiseError,
    DuplicateIndexError,
    MultipleConclusionsError,
    PremiseReuseError,
    StructureSyntaxError,
    UnknownIndexError,
)

# ---------------------------------------------------------------------------
# Formulas


class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class PosLiteral(Formula):
    def __str__(self):
        return "p"


@dataclass(frozen=True)
class NegLiteral(Formula):
    def __str__(self):
        return "p^"


@dataclass(frozen=True)
class TensorFormula(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return f"({self.left} * {self.right})"


@dataclass(frozen=True)
class ParFormula(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return f"({self.left} | {self.right})"


POS = PosLiteral()
NEG = NegLiteral()


def negate(f: Formula) -> Formula:
    """De Morgan dual of a formula; an involution."""
    if isinstance(f, PosLiteral):
        return NEG
    if isinstance(f, NegLiteral):
        return POS
    if isinstance(f, TensorFormula):
        return ParFormula(negate(f.left), negate(f.right))
    if isinstance(f, ParFormula):
        return TensorFormula(negate(f.left), negate(f.right))
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Links

ID, TENSOR, PAR, MULT = "id", "tensor", "par", "mult"


@dataclass(frozen=True)
class IdLink:
    """Axiom link; ``pos`` carries p, ``neg`` carries p^."""

    pos: int
    neg: int

    kind = ID

    @property
    def conclusions(self):
        return (self.pos, self.neg)

    premises = ()


@dataclass(frozen=True)
class MultiplicativeLink:
    left: int
    right: int
    conclusion: int

    @property
    def conclusions(self):
        return (self.conclusion,)

    @property
    def premises(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class TensorLink(MultiplicativeLink):
    kind = TENSOR


@dataclass(frozen=True)
class ParLink(MultiplicativeLink):
    kind = PAR


@dataclass(frozen=True)
class MultLink(MultiplicativeLink):
    """Unassigned multiplicative link; only legal inside family skeletons."""

    kind = MULT


Link = IdLink | TensorLink | ParLink | MultLink

_COMBINE = {TENSOR: TensorFormula, PAR: ParFormula}


# ---------------------------------------------------------------------------
# Structures


def _check_wiring(links, lines=None):
    """Shared well-formedness checks for structures and skeletons.

    ``lines`` optionally maps link position to a source line number for
    error reporting.  Returns the set of conclusion indices (indices that
    are a premise of no link).
    """

    def lineno(pos):
        return None if lines is None else lines[pos]

    if not links:
        raise StructureSyntaxError("a structure must contain at least one link")

    introduced: dict[int, int] = {}
    for pos, link in enumerate(links):
        for i in link.conclusions:
            if i in introduced:
                raise MultipleConclusionsError(
                    f"index {i} is a conclusion of more than one link",
                    lineno(pos),
                )
            introduced[i] = pos
        if isinstance(link, MultiplicativeLink) and link.left == link.right:
            raise PremiseReuseError(
                f"index {link.left} used as both premises of one link",
                lineno(pos),
            )

    used: dict[int, int] = {}
    for pos, link in enumerate(links):
        for i in link.premises:
            if i not in introduced:
                raise DanglingPremiseError(
                    f"premise index {i} is never introduced", lineno(pos)
                )
            if i in used:
                raise PremiseReuseError(
                    f"index {i} is a premise of more than one link", lineno(pos)
                )
            used[i] = pos

    return frozenset(introduced) - frozenset(used)


def _infer_formulas(links):
    formulas: dict[int, Formula] = {}
    pending = list(links)
    while pending:
        progressed = False
        remaining = []
        for link in pending:
            if isinstance(link, IdLink):
                formulas[link.pos] = POS
                formulas[link.neg] = NEG
                progressed = True
            elif link.left in formulas and link.right in formulas:
                formulas[link.conclusion] = _COMBINE[link.kind](
                    formulas[link.left], formulas[link.right]
                )
                progressed = True
            else:
                remaining.append(link)
        pending = remaining
        if pending and not progressed:
            # unreachable for well-wired links: premises are always
            # introduced by earlier-resolvable links
            raise StructureSyntaxError("cyclic link wiring")
    return formulas


@dataclass(frozen=True)
class ProofStructure:
    """An indexed MLL proof structure.  Immutable; hashable by its links."""

    links: tuple[Link, ...]

    def __post_init__(self):
        for link in self.links:
            if isinstance(link, MultLink):
                raise StructureSyntaxError(
                    "unassigned 'mult' links are only allowed in family skeletons"
                )
        conclusions = _check_wiring(self.links)
        object.__setattr__(self, "_conclusions", conclusions)
        object.__setattr__(self, "_formulas", _infer_formulas(self.links))

    @property
    def conclusions(self) -> frozenset[int]:
        return self._conclusions

    @property
    def formulas(self) -> dict[int, Formula]:
        return dict(self._formulas)

    @property
    def indices(self) -> frozenset[int]:
        return frozenset(self._formulas)

    def formula_of(self, i: int) -> Formula:
        try:
            return self._formulas[i]
        except KeyError:
            raise UnknownIndexError(f"no formula occurrence with index {i}") from None

    def link_of(self, i: int) -> Link:
        """The unique link whose conclusion is ``i``."""
        for link in self.links:
            if i in link.conclusions:
                return link
        raise UnknownIndexError(f"no formula occurrence with index {i}")

    def link_below(self, i: int) -> Link | None:
        """The link (if any) that has ``i`` as a premise."""
        for link in self.links:
            if i in link.premises:
                return link
        return None

    def links_of_kind(self, kind) -> tuple[Link, ...]:
        return tuple(link for link in self.links if link.kind == kind)


@dataclass(frozen=True)
class LinkCounts:
    id: int
    tensor: int
    par: int
    conclusions: int


def link_counts(ps: ProofStructure) -> LinkCounts:
    """Tally links and conclusions.

    For every proof net the identities ``conclusions + par == id + 1`` and
    ``id - tensor == 1`` hold; on arbitrary structures they may fail.
    """
    return LinkCounts(
        id=sum(1 for l in ps.links if l.kind == ID),
        tensor=sum(1 for l in ps.links if l.kind == TENSOR),
        par=sum(1 for l in ps.links if l.kind == PAR),
        conclusions=len(ps.conclusions),
    )


def formula_of(ps: ProofStructure, i: int) -> Formula:
    return ps.formula_of(i)


# ---------------------------------------------------------------------------
# Structure file format
#
#   ax <i> <j>            ID-link; i carries p, j carries p^
#   tensor <i> <j> <k>    tensor-link, premises i j, conclusion k
#   par <i> <j> <k>       par-link
#   mult <i> <j> <k>      unassigned multiplicative link (skeletons only)
#
# '#' starts a comment; blank lines are ignored.

_ARITY = {"ax": 2, "tensor": 3, "par": 3, "mult": 3}
_LINK_CLASS = {"tensor": TensorLink, "par": ParLink, "mult": MultLink}


def parse_links(text: str):
    """Parse the link lines of a structure file.

    Returns ``(links, lines)`` where ``lines[i]`` is the source line of
    ``links[i]``.  Performs syntax checks only; wiring checks are done by
    the callers.
    """
    links = []
    lines = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        keyword, args = parts[0], parts[1:]
        if keyword not in _ARITY:
            raise StructureSyntaxError(f"unknown link keyword {keyword!r}", no)
        if len(args) != _ARITY[keyword]:
            raise StructureSyntaxError(
                f"{keyword!r} expects {_ARITY[keyword]} indices, got {len(args)}", no
            )
        try:
            idx = [int(a) for a in args]
        except ValueError:
            raise StructureSyntaxError(f"indices must be integers: {line!r}", no)
        if any(i <= 0 for i in idx):
            raise StructureSyntaxError("indices must be positive", no)
        if keyword == "ax":
            links.append(IdLink(*idx))
        else:
            links.append(_LINK_CLASS[keyword](*idx))
        lines.append(no)
    if not links:
        raise StructureSyntaxError("a structure must contain at least one link")
    return links, lines


def parse_structure(text: str) -> ProofStructure:
    """Parse and validate a concrete proof structure (no ``mult`` lines)."""
    links, lines = parse_links(text)
    for pos, link in enumerate(links):
        if isinstance(link, MultLink):
            raise StructureSyntaxError(
                "'mult' links are only allowed in family skeletons", lines[pos]
            )
    _check_wiring(links, lines)
    return ProofStructure(tuple(links))


def render(ps: ProofStructure) -> str:
    """Render a structure in the file format; parse(render(ps)) == ps."""
    out = []
    for link in ps.links:
        if isinstance(link, IdLink):
            out.append(f"ax {link.pos} {link.neg}")
        else:
            out.append(f"{link.kind} {link.left} {link.right} {link.conclusion}")
    return "\n".join(out) + "\n"
