"""Permutations of {1..n} and the projection from words onto them.

Composition is leftmost-first throughout: in a product the left factor acts
on positions before the right factor does.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import DegreeMismatchError, Word


@dataclass(frozen=True)
class Permutation:
    """One-line notation: images[i - 1] is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: Permutation) -> Permutation:
        """This permutation followed by ``other``."""
        if self.n != other.n:
            raise DegreeMismatchError("cannot compose permutations of different sizes")
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def inverse(self) -> Permutation:
        out = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            out[v - 1] = i
        return Permutation(tuple(out))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.images) + "]"


def interval_reversal(p: int, q: int, n: int) -> Permutation:
    """The permutation i -> p + q - i on [p, q], identity elsewhere."""
    if not 1 <= p < q <= n:
        raise ValueError(f"need 1 <= p < q <= n, got p={p}, q={q}, n={n}")
    images = [p + q - i if p <= i <= q else i for i in range(1, n + 1)]
    return Permutation(tuple(images))


def project(w: Word) -> Permutation:
    """Image of a word under the projection onto permutations."""
    acc = Permutation.identity(w.degree)
    for g in w.letters:
        acc = acc.then(interval_reversal(g.p, g.q, w.degree))
    return acc


def is_pure(w: Word) -> bool:
    """Whether the word projects to the identity permutation."""
    return project(w).is_identity()
