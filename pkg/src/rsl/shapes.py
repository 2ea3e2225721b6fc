"""Composition shapes, block contents and rank sets.

A shape (n), for the full symmetric group, makes every block content a bare
size.  A general shape lam = (lam_1 >= ... >= lam_k) partitions the ground
multiset {1^lam_1, ..., k^lam_k}; block contents are then count vectors of
length k.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

Content = tuple  # count vector, one entry per letter


class MalformedChainError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Shape:
    """Weakly decreasing positive parts; quotient group is the Young subgroup."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("shape needs at least one part")
        if any(p <= 0 for p in parts):
            raise ValueError("shape parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("shape parts must be weakly decreasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def root_content(self) -> Content:
        return tuple(self.parts)

    def is_full(self) -> bool:
        return len(self.parts) == 1

    def letter_of(self, element: int) -> int:
        """0-based letter index of ground element (1-based)."""
        if not 1 <= element <= self.n:
            raise ValueError(f"element {element} out of range 1..{self.n}")
        acc = 0
        for i, p in enumerate(self.parts):
            acc += p
            if element <= acc:
                return i
        raise AssertionError

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def as_shape(shape) -> Shape:
    if isinstance(shape, Shape):
        return shape
    if isinstance(shape, int):
        return Shape((shape,))
    return Shape(tuple(shape))


def full_shape(n: int) -> Shape:
    return Shape((n,))


def hook_shape(n: int) -> Shape:
    """The (n-1,1) shape used for the S_{n-1} x S_1 quotient."""
    if n < 2:
        raise ValueError("hook shape needs n >= 2")
    return Shape((n - 1, 1))


def content_size(c: Content) -> int:
    return sum(c)


def content_word(c: Content) -> tuple:
    """Letters of the block in increasing order (0-based letters)."""
    out = []
    for letter, count in enumerate(c):
        out.extend([letter] * count)
    return tuple(out)


def add_contents(a: Content, b: Content) -> Content:
    return tuple(x + y for x, y in zip(a, b))


def sub_contents(a: Content, b: Content) -> Content:
    out = tuple(x - y for x, y in zip(a, b))
    if any(x < 0 for x in out):
        raise ValueError("content subtraction went negative")
    return out


def unit_contents(c: Content) -> list:
    """The singleton contents of a block, one per element, letters ascending."""
    k = len(c)
    out = []
    for letter, count in enumerate(c):
        unit = tuple(1 if i == letter else 0 for i in range(k))
        out.extend([unit] * count)
    return out


def sub_contents_iter(c: Content) -> Iterator[Content]:
    """All nonzero proper sub-contents of c."""
    ranges = [range(x + 1) for x in c]
    for combo in itertools.product(*ranges):
        if any(combo) and combo != c:
            yield combo


def bipartitions(c: Content) -> Iterator[tuple]:
    """Unordered splits of a block content into two nonempty parts.

    Each pair is emitted once, with the lexicographically smaller part first.
    """
    for a in sub_contents_iter(c):
        b = sub_contents(c, a)
        if a <= b:
            yield (a, b)


def multiset_partitions(c: Content, num_parts: int) -> Iterator[tuple]:
    """Partitions of content c into exactly num_parts nonempty parts.

    Parts are emitted as a weakly decreasing tuple (no permuted duplicates).
    """
    size = content_size(c)
    if num_parts < 1 or num_parts > size:
        return

    def rec(remaining: Content, parts_left: int, max_part: Content):
        rem_size = content_size(remaining)
        if parts_left == 1:
            if remaining <= max_part and rem_size >= 1:
                yield (remaining,)
            return
        for part in sub_contents_iter(remaining):
            if part > max_part:
                continue
            # each later part has size >= 1
            if rem_size - content_size(part) < parts_left - 1:
                continue
            for rest in rec(sub_contents(remaining, part), parts_left - 1, part):
                yield (part,) + rest

    yield from rec(c, num_parts, c)


@dataclass(frozen=True, slots=True)
class RankSet:
    """A set of proper ranks of the partition lattice on n elements.

    Ranks live in [1, n-2].  ``dual=False`` means ranks of the lattice itself
    (rank = n - number of blocks); ``dual=True`` means coranks.
    """

    n: int
    ranks: frozenset
    dual: bool = False

    def __post_init__(self):
        object.__setattr__(self, "ranks", frozenset(int(r) for r in self.ranks))
        if self.n < 2:
            raise ValueError("need n >= 2")
        bad = [r for r in self.ranks if not 1 <= r <= self.n - 2]
        if bad:
            raise ValueError(f"ranks {sorted(bad)} outside [1, {self.n - 2}]")

    @classmethod
    def primal(cls, n: int, ranks: Iterable) -> "RankSet":
        return cls(n, frozenset(ranks), dual=False)

    @classmethod
    def of_dual(cls, n: int, ranks: Iterable) -> "RankSet":
        return cls(n, frozenset(ranks), dual=True)

    def sorted(self) -> tuple:
        return tuple(sorted(self.ranks))

    def dualize(self) -> "RankSet":
        return RankSet(self.n, frozenset(self.n - 1 - r for r in self.ranks), not self.dual)

    def as_primal(self) -> "RankSet":
        return self.dualize() if self.dual else self

    def as_dual(self) -> "RankSet":
        return self if self.dual else self.dualize()

    def __contains__(self, r) -> bool:
        return r in self.ranks

    def __len__(self) -> int:
        return len(self.ranks)

    def __iter__(self):
        return iter(self.sorted())

    def __str__(self):
        basis = "*" if self.dual else ""
        return "{" + ",".join(str(r) for r in self.sorted()) + "}" + basis


def dualize(s: RankSet) -> RankSet:
    """Swap between rank sets of the lattice and its order dual."""
    return s.dualize()
