"""Exact arithmetic for the degree-3 group in canonical coordinates.

Every degree-3 element is an alternating word over {s12, s23} followed by at
most one s13.  We store it as a pair (m, eps):

* m is the signed alternating index: |m| is the length of the {s12, s23}
  part, with m > 0 when it starts with s12 and m < 0 when it starts with
  s23 (m = 0 for the empty part);
* eps in {0, 1} marks a single trailing s13.

Distinct pairs are distinct group elements, and the word length of the
element is |m| + eps.  The subgroup generated by s12 and s23 alone is
exactly {(m, 0)}.

Pushing an s13 leftward past the alternating part swaps s12 and s23
(s13 s12 = s23 s13 and s13 s23 = s12 s13), which is what makes the
single-trailing-s13 form reachable from any word.

An independent cross-check lives in ``AffineMap``: the degree-3 group is
faithfully modeled by integer maps x -> sign*x + shift with s12: x -> -x,
s13: x -> 1 - x, s23: x -> 2 - x.  The model is derived separately from the
coordinate arithmetic so the two can audit each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import DegreeMismatchError, Generator, Word


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Coordinates (m, eps) of a degree-3 element."""

    m: int
    eps: int = 0

    def __post_init__(self) -> None:
        if self.eps not in (0, 1):
            raise ValueError(f"eps must be 0 or 1, got {self.eps}")

    def __str__(self) -> str:
        return f"(m={self.m}, eps={self.eps})"

    def word_length(self) -> int:
        return abs(self.m) + self.eps


IDENTITY = CanonicalForm(0, 0)

_S12 = Generator(1, 2, 3)
_S23 = Generator(2, 3, 3)
_S13 = Generator(1, 3, 3)


def _append_alt(m: int, is_first_kind: bool) -> int:
    """Index after appending s12 (is_first_kind) or s23 to the alternating part."""
    if m == 0:
        return 1 if is_first_kind else -1
    # Last letter is s12 iff (m > 0 and m odd) or (m < 0 and |m| even).
    last_is_first = (m % 2 == 1) if m > 0 else (m % 2 == 0)
    step = 1 if m > 0 else -1
    if is_first_kind == last_is_first:
        return m - step
    return m + step


def canonicalize(w: Word) -> CanonicalForm:
    """Unique (m, eps) coordinates of a degree-3 word."""
    if w.degree != 3:
        raise DegreeMismatchError(f"canonical form is degree-3 only, got degree {w.degree}")
    m = 0
    eps = 0
    for g in w.letters:
        if g == _S13:
            eps ^= 1
            continue
        is_first_kind = g == _S12
        if eps:
            is_first_kind = not is_first_kind
        m = _append_alt(m, is_first_kind)
    return CanonicalForm(m, eps)


def from_index(m: int) -> CanonicalForm:
    """The element with alternating index m and no trailing s13."""
    return CanonicalForm(m, 0)


def to_word(c: CanonicalForm) -> Word:
    """The length-(|m| + eps) word encoded by c."""
    first, second = (_S12, _S23) if c.m > 0 else (_S23, _S12)
    letters = [first if i % 2 == 0 else second for i in range(abs(c.m))]
    if c.eps:
        letters.append(_S13)
    return Word(3, tuple(letters))


def _alt_to_affine(m: int) -> tuple[int, int]:
    """(sign, shift) of the alternating word with index m."""
    if m % 2 == 0:
        return 1, m
    return -1, 1 - m


def _affine_to_alt(sign: int, shift: int) -> int:
    if sign == 1:
        return shift
    return 1 - shift


def _alt_concat(m1: int, m2: int) -> int:
    """Index of the concatenation of two alternating parts."""
    s1, t1 = _alt_to_affine(m1)
    s2, t2 = _alt_to_affine(m2)
    return _affine_to_alt(s1 * s2, s2 * t1 + t2)


def mul(c1: CanonicalForm, c2: CanonicalForm) -> CanonicalForm:
    """Product in coordinates; equals canonicalize(to_word(c1) to_word(c2))."""
    # A trailing s13 on c1 conjugates c2's alternating part (s12 <-> s23
    # swap, i.e. index negation) while the s13 itself moves to the tail.
    m2 = -c2.m if c1.eps else c2.m
    return CanonicalForm(_alt_concat(c1.m, m2), c1.eps ^ c2.eps)


def inv(c: CanonicalForm) -> CanonicalForm:
    """Group inverse in coordinates."""
    # Reversing an alternating word fixes odd indices and negates even ones;
    # a trailing s13 additionally conjugates, negating the index again.
    m = c.m if c.m % 2 else -c.m
    if c.eps:
        m = -m
    return CanonicalForm(m, c.eps)


def in_dihedral_subgroup(c: CanonicalForm) -> bool:
    """Whether c lies in the subgroup generated by s12 and s23."""
    return c.eps == 0


def pure_element(k: int) -> CanonicalForm:
    """Canonical form of the k-th power of (s12 s13)^3."""
    return CanonicalForm(3 * k, k % 2)


@dataclass(frozen=True)
class AffineMap:
    """The integer map x -> sign*x + shift; independent equality oracle."""

    sign: int
    shift: int

    def __post_init__(self) -> None:
        if self.sign not in (-1, 1):
            raise ValueError(f"sign must be +-1, got {self.sign}")

    def __call__(self, x: int) -> int:
        return self.sign * x + self.shift

    def then(self, other: AffineMap) -> AffineMap:
        """This map applied first, then ``other``."""
        return AffineMap(self.sign * other.sign, other.sign * self.shift + other.shift)

    def __str__(self) -> str:
        return f"(sign={self.sign:+d}, shift={self.shift})"


AFFINE_IDENTITY = AffineMap(1, 0)

_AFFINE_OF_GENERATOR = {
    _S12: AffineMap(-1, 0),
    _S13: AffineMap(-1, 1),
    _S23: AffineMap(-1, 2),
}


def affine_model(g: Generator) -> AffineMap:
    """Image of a degree-3 generator in the affine model."""
    if g.n != 3:
        raise DegreeMismatchError(f"affine model is degree-3 only, got degree {g.n}")
    return _AFFINE_OF_GENERATOR[g]


def evaluate_word(w: Word) -> AffineMap:
    """Image of a degree-3 word in the affine model, leftmost letter first."""
    if w.degree != 3:
        raise DegreeMismatchError(f"affine model is degree-3 only, got degree {w.degree}")
    acc = AFFINE_IDENTITY
    for g in w.letters:
        acc = acc.then(_AFFINE_OF_GENERATOR[g])
    return acc
