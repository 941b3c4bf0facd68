"""The pure-subgroup action on the dihedral part, the vertex bijection with
the cover line, and the window verifiers tying them together.

The pure subgroup is infinite cyclic, generated by the cube of (s12 s13).
Acting by its k-th power sends the element with alternating index m to the
one with index m + 3k (left multiplication, followed by a right s13 factor
whenever the raw product picks one up).  The cover line maps onto the group
by [213]_k -> 3k+1, [123]_k -> 3k, [132]_k -> 3k-1, and this intertwines
the deck shift with the action above.

Verifiers return a ``Report`` rather than raising: failures are data.  A
deliberately wrong variant of the cover map is included as a negative
control so the verifiers themselves can be shown to catch errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable

from .confspace import COVER_LABELS, CoverVertex, DeckElement, deck_act
from .degree3 import (
    AFFINE_IDENTITY,
    CanonicalForm,
    canonicalize,
    evaluate_word,
    in_dihedral_subgroup,
    mul,
    pure_element,
    to_word,
)
from .words import Word, all_generators, relation_instances


class OutsideSubgroupError(ValueError):
    """Operand outside the subgroup the operation is defined on."""


@dataclass(frozen=True)
class PureElement:
    """The k-th power of the pure generator (s12 s13)^3."""

    k: int

    @classmethod
    def from_canonical(cls, c: CanonicalForm) -> PureElement:
        if c.m % 3 != 0 or c != pure_element(c.m // 3):
            raise ValueError(f"{c} is not a power of the pure generator")
        return cls(c.m // 3)

    def to_canonical(self) -> CanonicalForm:
        return pure_element(self.k)

    def then(self, other: PureElement) -> PureElement:
        return PureElement(self.k + other.k)


def pure_action(g: PureElement, h: CanonicalForm) -> CanonicalForm:
    """Act on an eps=0 element; the result has index h.m + 3k and eps=0."""
    if not in_dihedral_subgroup(h):
        raise OutsideSubgroupError(f"{h} has a trailing s13; the action is not defined there")
    out = mul(g.to_canonical(), h)
    if out.eps:
        out = mul(out, CanonicalForm(0, 1))
    return out


_LABEL_OFFSET = {"213": 1, "123": 0, "132": -1}


def cover_to_group(v: CoverVertex) -> CanonicalForm:
    """Vertex bijection from the cover line onto the eps=0 elements."""
    return CanonicalForm(3 * v.k + _LABEL_OFFSET[v.label], 0)


def cover_to_group_perturbed(v: CoverVertex) -> CanonicalForm:
    """Negative control: wrong image for [213] at odd k."""
    if v.label == "213" and v.k % 2:
        return CanonicalForm(3 * v.k + 2, 0)
    return cover_to_group(v)


def group_to_cover(c: CanonicalForm) -> CoverVertex:
    """Inverse of cover_to_group."""
    if not in_dihedral_subgroup(c):
        raise OutsideSubgroupError(f"{c} has a trailing s13; no cover vertex maps to it")
    r = c.m % 3
    if r == 1:
        return CoverVertex("213", (c.m - 1) // 3)
    if r == 0:
        return CoverVertex("123", c.m // 3)
    return CoverVertex("132", (c.m + 1) // 3)


@dataclass(frozen=True)
class Report:
    """Outcome of a verification sweep; failures are kept as rendered lines."""

    total: int
    failures: tuple[str, ...] = ()

    def ok(self) -> bool:
        return not self.failures

    def merged(self, other: Report) -> Report:
        return Report(self.total + other.total, self.failures + other.failures)

    def render(self) -> str:
        if self.ok():
            tail = f"OK {self.total} cases"
        else:
            tail = f"FAIL {len(self.failures)}/{self.total}"
        return "\n".join((*self.failures, tail))


CoverMap = Callable[[CoverVertex], CanonicalForm]


def check_equivariance(
    j_range: Iterable[int],
    k_range: Iterable[int],
    phi: CoverMap = cover_to_group,
) -> Report:
    """Deck shift then phi must equal phi then the pure action."""
    total = 0
    failures = []
    ks = list(k_range)
    for j in j_range:
        g = PureElement(j)
        d = DeckElement(j)
        for k in ks:
            for label in COVER_LABELS:
                v = CoverVertex(label, k)
                lhs = phi(deck_act(d, v))
                rhs = pure_action(g, phi(v))
                total += 1
                if lhs != rhs:
                    failures.append(f"FAIL j={j} v={v} lhs={lhs} rhs={rhs}")
    return Report(total, tuple(failures))


def verify_action_axioms(k_range: Iterable[int], m_range: Iterable[int]) -> Report:
    """Identity and compatibility axioms of the pure action."""
    total = 0
    failures = []
    ks = list(k_range)
    ms = list(m_range)
    e = PureElement(0)
    for m in ms:
        h = CanonicalForm(m, 0)
        got = pure_action(e, h)
        total += 1
        if got != h:
            failures.append(f"FAIL identity m={m} got={got}")
    for k1, k2 in product(ks, ks):
        g1, g2 = PureElement(k1), PureElement(k2)
        g12 = PureElement.from_canonical(mul(g1.to_canonical(), g2.to_canonical()))
        for m in ms:
            h = CanonicalForm(m, 0)
            lhs = pure_action(g12, h)
            rhs = pure_action(g1, pure_action(g2, h))
            total += 1
            if lhs != rhs:
                failures.append(f"FAIL k1={k1} k2={k2} m={m} lhs={lhs} rhs={rhs}")
    return Report(total, tuple(failures))


def check_shift_law(k_range: Iterable[int], m_range: Iterable[int]) -> Report:
    """Acting by the k-th pure power adds 3k to the alternating index."""
    total = 0
    failures = []
    for k in k_range:
        g = PureElement(k)
        for m in m_range:
            out = pure_action(g, CanonicalForm(m, 0))
            total += 1
            if out != CanonicalForm(m + 3 * k, 0):
                failures.append(f"FAIL k={k} m={m} got={out}")
                continue
            if m >= 0 and k >= 0:
                # Word length grows by exactly 3k on this quadrant.
                total += 1
                if len(to_word(out)) != m + 3 * k:
                    failures.append(f"FAIL k={k} m={m} length={len(to_word(out))}")
    return Report(total, tuple(failures))


def deck_from_pure(g: PureElement) -> DeckElement:
    """The isomorphism from the pure subgroup onto the deck group."""
    return DeckElement(g.k)


def pure_from_deck(d: DeckElement) -> PureElement:
    return PureElement(d.j)


def check_isomorphism(k_range: Iterable[int]) -> Report:
    """deck_from_pure is a homomorphism and pure_from_deck inverts it."""
    total = 0
    failures = []
    ks = list(k_range)
    for k in ks:
        g = PureElement(k)
        d = DeckElement(k)
        total += 2
        if pure_from_deck(deck_from_pure(g)) != g:
            failures.append(f"FAIL round trip k={k} via deck")
        if deck_from_pure(pure_from_deck(d)) != d:
            failures.append(f"FAIL round trip j={k} via pure")
    for k1, k2 in product(ks, ks):
        g1, g2 = PureElement(k1), PureElement(k2)
        g12 = PureElement.from_canonical(mul(g1.to_canonical(), g2.to_canonical()))
        lhs = deck_from_pure(g12)
        rhs = deck_from_pure(g1).then(deck_from_pure(g2))
        total += 1
        if lhs != rhs:
            failures.append(f"FAIL k1={k1} k2={k2} lhs=j{lhs.j} rhs=j{rhs.j}")
    return Report(total, tuple(failures))


def _words_up_to(max_len: int) -> Iterable[Word]:
    gens = all_generators(3)
    for length in range(max_len + 1):
        for letters in product(gens, repeat=length):
            yield Word(3, letters)


def check_oracle(max_len: int = 8) -> Report:
    """Canonical forms and the affine model induce the same word partition,
    and every relator evaluates to the identity map."""
    total = 0
    failures = []
    canon_to_affine = {}
    affine_to_canon = {}
    for w in _words_up_to(max_len):
        c = canonicalize(w)
        a = evaluate_word(w)
        total += 1
        if canon_to_affine.setdefault(c, a) != a:
            failures.append(f"FAIL word={w} canon={c} affine={a} expected={canon_to_affine[c]}")
        elif affine_to_canon.setdefault(a, c) != c:
            failures.append(f"FAIL word={w} affine={a} canon={c} expected={affine_to_canon[a]}")
    for family, lhs, rhs in relation_instances(3):
        relator = Word(3, lhs.letters + tuple(reversed(rhs.letters)))
        total += 1
        if evaluate_word(relator) != AFFINE_IDENTITY:
            failures.append(f"FAIL {family} relator {lhs} = {rhs} not respected")
    return Report(total, tuple(failures))
