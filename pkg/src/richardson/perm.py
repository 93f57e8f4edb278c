"""Symmetric group core.

Permutations are stored in one-line notation with 1-based values, and
composition follows ``(u * v)(k) = u(v(k))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        imgs = tuple(int(a) for a in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {list(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        """The adjacent transposition s_i = (i, i+1)."""
        return transposition(i, i + 1, n)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for k, a in enumerate(self.images, start=1):
            inv[a - 1] = k
        return Permutation(tuple(inv))

    def length(self) -> int:
        return length(self)

    def apply_set(self, subset: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self(k) for k in subset))

    def is_identity(self) -> bool:
        return all(a == k for k, a in enumerate(self.images, start=1))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


@dataclass(frozen=True, order=True)
class Reflection:
    k: int
    l: int

    def __post_init__(self) -> None:
        if not self.k < self.l:
            raise ValueError(f"reflection needs k < l, got ({self.k},{self.l})")

    def as_permutation(self, n: int) -> Permutation:
        return transposition(self.k, self.l, n)


def transposition(k: int, l: int, n: int) -> Permutation:
    imgs = list(range(1, n + 1))
    imgs[k - 1], imgs[l - 1] = l, k
    return Permutation(tuple(imgs))


def _check_same(u: Permutation, v: Permutation) -> None:
    if u.n != v.n:
        raise ValueError(f"size mismatch: S_{u.n} vs S_{v.n}")


def compose(u: Permutation, v: Permutation) -> Permutation:
    _check_same(u, v)
    return Permutation(tuple(u.images[a - 1] for a in v.images))


def length(w: Permutation) -> int:
    imgs = w.images
    return sum(1 for a in range(len(imgs)) for b in range(a + 1, len(imgs)) if imgs[a] > imgs[b])


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Dominance criterion on the sorted initial segments."""
    _check_same(u, w)
    for k in range(1, u.n):
        a = sorted(u.images[:k])
        b = sorted(w.images[:k])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def all_reflections(n: int) -> list[Reflection]:
    return [Reflection(k, l) for k in range(1, n + 1) for l in range(k + 1, n + 1)]


def covering_reflections(w: Permutation, direction: str) -> set[Reflection]:
    if direction not in ("up", "down"):
        raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
    step = 1 if direction == "up" else -1
    lw = length(w)
    return {
        t for t in all_reflections(w.n) if length(compose(w, t.as_permutation(w.n))) == lw + step
    }


def reduced_word(w: Permutation) -> list[int]:
    """A reduced word [i_1, ..., i_l] with w = s_{i_1} * ... * s_{i_l}.

    Greedy: peel off the smallest right descent each time.
    """
    word: list[int] = []
    imgs = list(w.images)
    while True:
        for i in range(len(imgs) - 1):
            if imgs[i] > imgs[i + 1]:
                imgs[i], imgs[i + 1] = imgs[i + 1], imgs[i]
                word.append(i + 1)
                break
        else:
            break
    return word[::-1]


def from_word(word: Sequence[int], n: int) -> Permutation:
    w = Permutation.identity(n)
    for i in word:
        w = compose(w, Permutation.simple(i, n))
    return w


def is_reduced(word: Sequence[int], n: int) -> bool:
    return length(from_word(word, n)) == len(word)


def all_reduced_words(w: Permutation) -> list[list[int]]:
    return [list(x) for x in _all_reduced_words(w.images)]


@lru_cache(maxsize=None)
def _all_reduced_words(imgs: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    out: list[tuple[int, ...]] = []
    for i in range(len(imgs) - 1):
        if imgs[i] > imgs[i + 1]:
            nxt = list(imgs)
            nxt[i], nxt[i + 1] = nxt[i + 1], nxt[i]
            for word in _all_reduced_words(tuple(nxt)):
                out.append(word + (i + 1,))
    return tuple(out) if out else ((),)


def symmetric_group(n: int) -> Iterator[Permutation]:
    for imgs in permutations(range(1, n + 1)):
        yield Permutation(imgs)


def _check_subset(I: Sequence[int], n: int) -> tuple[int, ...]:
    I = tuple(I)
    if list(I) != sorted(set(I)) or (I and (I[0] < 1 or I[-1] > n)):
        raise ValueError(f"malformed subset {list(I)} of [{n}]")
    return I


def min_rep_for_subset(I: Sequence[int], n: int) -> Permutation:
    """The minimal coset representative w with w({1..d}) = I."""
    I = _check_subset(I, n)
    rest = [a for a in range(1, n + 1) if a not in I]
    return Permutation(I + tuple(rest))


def _increasing(seq: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(seq, seq[1:]))


def is_min_coset_rep(w: Permutation, side: str, d: int) -> bool:
    if side == "PW":
        w = w.inverse()
    elif side != "WP":
        raise ValueError(f"side must be 'WP' or 'PW', got {side!r}")
    return _increasing(w.images[:d]) and _increasing(w.images[d:])
