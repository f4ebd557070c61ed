"""Free-group words, braid words, and the Artin action.

Conventions
-----------
Free-group letters are signed indices: ``k`` means the generator
``x_k`` and ``-k`` its inverse.  Braid letters likewise: ``i`` means
the Artin generator ``s_i`` (a counterclockwise half-twist of strands
``i`` and ``i+1``) and ``-i`` its inverse.

A positive ``s_i`` acts on generators by

    x_i     -> x_{i+1}
    x_{i+1} -> x_{i+1} x_i x_{i+1}^-1

fixing the others; a negative letter applies the inverse substitution.
Letters of a braid word act left to right, so concatenation satisfies

    artin_action(a * b, w) == artin_action(b, artin_action(a, w)).

With this convention the descending product x_n ... x_2 x_1 is fixed
by every braid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatchError, MalformedWordError

__all__ = [
    "FreeWord",
    "BraidWord",
    "Permutation",
    "GBase",
    "free_reduce",
    "artin_action",
    "braid_equal",
    "braid_permutation",
    "exponent_sum",
]


def _reduced(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word in the generators x_1 .. x_rank.

    Reduction happens on construction, so two words are equal as group
    elements iff their letter tuples are equal.
    """

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise MalformedWordError("rank must be positive, got %r" % (self.rank,))
        letters = tuple(self.letters)
        for a in letters:
            if not isinstance(a, int) or a == 0 or abs(a) > self.rank:
                raise MalformedWordError(
                    "letter %r out of range for rank %d" % (a, self.rank)
                )
        object.__setattr__(self, "letters", _reduced(letters))

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank, ())

    @classmethod
    def generator(cls, rank: int, k: int) -> "FreeWord":
        return cls(rank, (k,))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if self.rank != other.rank:
            raise DimensionMismatchError(
                "cannot multiply words of rank %d and %d" % (self.rank, other.rank)
            )
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple(-a for a in reversed(self.letters)))

    def conjugate(self, by: "FreeWord") -> "FreeWord":
        """by * self * by^-1."""
        return by * self * by.inverse()

    @property
    def is_identity(self) -> bool:
        return not self.letters


@dataclass(frozen=True)
class BraidWord:
    """Word in the Artin generators s_1 .. s_{strands-1}.

    No normalization is applied: distinct letter sequences may
    represent the same braid.  Use braid_equal for semantic equality.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise MalformedWordError(
                "strand count must be positive, got %r" % (self.strands,)
            )
        letters = tuple(self.letters)
        for a in letters:
            if not isinstance(a, int) or a == 0 or abs(a) >= self.strands:
                raise MalformedWordError(
                    "letter %r out of range for %d strands" % (a, self.strands)
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise DimensionMismatchError(
                "cannot concatenate braids on %d and %d strands"
                % (self.strands, other.strands)
            )
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, n: int) -> "BraidWord":
        if n >= 0:
            return BraidWord(self.strands, self.letters * n)
        return self.inverse() ** (-n)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-a for a in reversed(self.letters)))


@dataclass(frozen=True)
class Permutation:
    """Bijection on 1..n, stored as the tuple of images of 1, 2, ..., n."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise MalformedWordError("not a bijection on 1..%d: %r" % (n, images))
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Left-to-right composition: (p * q)(k) == q(p(k))."""
        if len(self) != len(other):
            raise DimensionMismatchError(
                "cannot compose permutations of sizes %d and %d"
                % (len(self), len(other))
            )
        return Permutation(tuple(other(self(k)) for k in range(1, len(self) + 1)))

    def inverse(self) -> "Permutation":
        images = [0] * len(self.images)
        for k, v in enumerate(self.images, start=1):
            images[v - 1] = k
        return Permutation(tuple(images))

    @property
    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))


@dataclass(frozen=True)
class GBase:
    """Ordered free basis of meridian loops for a punctured disk.

    The standard base consists of the one-letter words x_1, ..., x_n,
    listed in the strand order of the basepoint fiber.
    """

    rank: int
    loops: tuple[FreeWord, ...]

    def __post_init__(self) -> None:
        loops = tuple(self.loops)
        if len(loops) != self.rank:
            raise DimensionMismatchError(
                "expected %d loops, got %d" % (self.rank, len(loops))
            )
        for w in loops:
            if w.rank != self.rank:
                raise DimensionMismatchError(
                    "loop rank %d does not match base rank %d" % (w.rank, self.rank)
                )
        object.__setattr__(self, "loops", loops)

    @classmethod
    def standard(cls, rank: int) -> "GBase":
        return cls(rank, tuple(FreeWord.generator(rank, k) for k in range(1, rank + 1)))


def free_reduce(w: FreeWord) -> FreeWord:
    """Freely reduced representative of w (a no-op: words stay reduced)."""
    return w


# Substitution table for one positive braid letter s_i, keyed by the
# free letter's offset from i.  Inverse letters use the mirror table.
def _apply_letter(letters: Sequence[int], i: int, positive: bool) -> tuple[int, ...]:
    out: list[int] = []

    def push(a: int) -> None:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)

    for a in letters:
        k = abs(a)
        if positive:
            if k == i:
                rep = (i + 1,) if a > 0 else (-(i + 1),)
            elif k == i + 1:
                rep = (i + 1, i, -(i + 1)) if a > 0 else (i + 1, -i, -(i + 1))
            else:
                rep = (a,)
        else:
            if k == i + 1:
                rep = (i,) if a > 0 else (-i,)
            elif k == i:
                rep = (-i, i + 1, i) if a > 0 else (-i, -(i + 1), i)
            else:
                rep = (a,)
        for b in rep:
            push(b)
    return tuple(out)


def artin_action(b: BraidWord, w: FreeWord) -> FreeWord:
    """Image of w under the automorphism induced by the braid b.

    See the module docstring for the substitution convention and the
    composition order (letters of b act left to right).
    """
    if b.strands != w.rank:
        raise DimensionMismatchError(
            "braid on %d strands cannot act on rank-%d word" % (b.strands, w.rank)
        )
    letters = w.letters
    for a in b.letters:
        letters = _apply_letter(letters, abs(a), a > 0)
    return FreeWord(w.rank, letters)


def braid_equal(a: BraidWord, b: BraidWord) -> bool:
    """Decide equality in the braid group via the (faithful) Artin action."""
    if a.strands != b.strands:
        raise DimensionMismatchError(
            "cannot compare braids on %d and %d strands" % (a.strands, b.strands)
        )
    n = a.strands
    for k in range(1, n + 1):
        x = FreeWord.generator(n, k)
        if artin_action(a, x) != artin_action(b, x):
            return False
    return True


def braid_permutation(b: BraidWord) -> Permutation:
    """Underlying symmetric-group image: s_i maps to the transposition (i, i+1)."""
    perm = Permutation.identity(b.strands)
    for a in b.letters:
        i = abs(a)
        perm = perm * Permutation.transposition(b.strands, i, i + 1)
    return perm


def exponent_sum(b: BraidWord) -> int:
    """Sum of letter signs; an invariant of braid equality."""
    return sum(1 if a > 0 else -1 for a in b.letters)
