"""Chambers of labeled points on a circle, the dual complex for 4 points,
and the line that covers it.

A chamber is a cyclic arrangement of the labels 1..n up to rotation and
reflection.  Two chambers are adjacent when one arises from the other by
swapping two cyclically neighboring labels (a single collision wall).  For
n = 4 there are three chambers and the dual complex is a 3-cycle; its
universal cover is a line whose vertices carry a chamber name and a winding
index k.

Chamber names: anchor the largest label, read the remaining labels around
the circle in both directions, and keep the lexicographically smaller
string.  For n = 4 this yields the names 213, 123, 132.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .words import DegreeMismatchError


@dataclass(frozen=True, order=True)
class Chamber:
    """Canonical representative of a cyclic arrangement of 1..n."""

    order: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.order)

    @property
    def name(self) -> str:
        rest = _rotate_to_front(self.order, self.degree)[1:]
        forward = "".join(str(x) for x in rest)
        backward = "".join(str(x) for x in reversed(rest))
        return min(forward, backward)

    def __str__(self) -> str:
        return f"[{self.name}]"


def _rotate_to_front(seq: tuple[int, ...], anchor: int) -> tuple[int, ...]:
    i = seq.index(anchor)
    return seq[i:] + seq[:i]


def _dihedral_images(seq: tuple[int, ...]):
    for s in (seq, tuple(reversed(seq))):
        for i in range(len(s)):
            yield s[i:] + s[:i]


def canonical_chamber(seq) -> Chamber:
    """Chamber of a label sequence; representative is the lex-min dihedral image."""
    seq = tuple(seq)
    n = len(seq)
    if n < 3:
        raise ValueError(f"need at least 3 labels, got {n}")
    if sorted(seq) != list(range(1, n + 1)):
        raise ValueError(f"{seq} is not an arrangement of 1..{n}")
    return Chamber(min(_dihedral_images(seq)))


@lru_cache(maxsize=None)
def enumerate_chambers(n: int) -> tuple[Chamber, ...]:
    """All chambers for n labels, sorted; there are (n-1)!/2 of them."""
    found = {canonical_chamber(p) for p in permutations(range(1, n + 1))}
    return tuple(sorted(found))


def chamber_adjacent(c1: Chamber, c2: Chamber) -> bool:
    """Whether one chamber turns into the other by one adjacent-label swap."""
    if c1.degree != c2.degree:
        raise DegreeMismatchError("cannot compare chambers of different degrees")
    if c1 == c2:
        return False
    n = c1.degree
    seq = c1.order
    for i in range(n):
        j = (i + 1) % n
        swapped = list(seq)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        if canonical_chamber(swapped) == c2:
            return True
    return False


@dataclass(frozen=True)
class DualComplex:
    """Chambers as vertices, collision walls as edges."""

    vertices: tuple[Chamber, ...]
    edges: tuple[tuple[Chamber, Chamber], ...]

    def degree_of(self, c: Chamber) -> int:
        return sum(c in e for e in self.edges)


def build_dual_complex() -> DualComplex:
    """The wall complex for 4 labels: a 3-cycle on its three chambers."""
    chambers = enumerate_chambers(4)
    edges = tuple(
        (a, b)
        for i, a in enumerate(chambers)
        for b in chambers[i + 1 :]
        if chamber_adjacent(a, b)
    )
    return DualComplex(chambers, edges)


COVER_LABELS = ("213", "123", "132")


@dataclass(frozen=True)
class CoverVertex:
    """A chamber name plus the winding index of one lift."""

    label: str
    k: int

    def __post_init__(self) -> None:
        if self.label not in COVER_LABELS:
            raise ValueError(f"label must be one of {COVER_LABELS}, got {self.label!r}")

    def __str__(self) -> str:
        return f"[{self.label}]_{self.k}"


@dataclass(frozen=True)
class DeckElement:
    """The j-th power of the deck generator; shifts winding indices by j."""

    j: int

    def then(self, other: DeckElement) -> DeckElement:
        return DeckElement(self.j + other.j)


def cover_window(K: int) -> list[CoverVertex]:
    """Cover vertices for k in [-K, K] in line order: [213]_k, [123]_k, [132]_k."""
    if K < 0:
        raise ValueError(f"window size must be nonnegative, got {K}")
    return [
        CoverVertex(label, k) for k in range(-K, K + 1) for label in COVER_LABELS
    ]


def deck_act(d: DeckElement, v: CoverVertex) -> CoverVertex:
    return CoverVertex(v.label, v.k + d.j)


@lru_cache(maxsize=None)
def _chamber_by_name(name: str) -> Chamber:
    for c in enumerate_chambers(4):
        if c.name == name:
            return c
    raise ValueError(f"no 4-label chamber named {name!r}")


def covering_map(v: CoverVertex) -> Chamber:
    """Forget the winding index."""
    return _chamber_by_name(v.label)
