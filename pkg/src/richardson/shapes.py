"""Index combinatorics for pairs of d-subsets of [n].

A pair (I, J) with I <= J indexes an open Richardson variety in Gr(d, n).
The Weyl sets below are subsets of S_d.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from .perm import (
    Permutation,
    compose,
    from_word,
    is_min_coset_rep,
    is_reduced,
    length,
    min_rep_for_subset,
    symmetric_group,
    transposition,
)


@dataclass(frozen=True)
class Shape:
    n: int
    I: tuple[int, ...]
    J: tuple[int, ...]

    def __post_init__(self) -> None:
        I, J = tuple(int(a) for a in self.I), tuple(int(a) for a in self.J)
        object.__setattr__(self, "I", I)
        object.__setattr__(self, "J", J)
        if len(I) != len(J):
            raise ValueError(f"I and J differ in size: {list(I)} vs {list(J)}")
        for name, S in (("I", I), ("J", J)):
            if any(a >= b for a, b in zip(S, S[1:])):
                raise ValueError(f"{name} must be strictly increasing: {list(S)}")
            if S and (S[0] < 1 or S[-1] > self.n):
                raise ValueError(f"{name} must lie in [1, {self.n}]: {list(S)}")

    @property
    def d(self) -> int:
        return len(self.I)

    def leq(self) -> bool:
        return leq(self.I, self.J)

    def __str__(self) -> str:
        fmt = lambda S: "{" + ",".join(map(str, S)) + "}"
        return f"({fmt(self.I)},{fmt(self.J)}) in Gr({self.d},{self.n})"


def leq(I: Sequence[int], J: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(I, J))


def ell(I: Sequence[int]) -> int:
    return sum(a - k for k, a in enumerate(I, start=1))


def subsets(n: int, d: int) -> list[tuple[int, ...]]:
    return list(combinations(range(1, n + 1), d))


def comparable_pairs(n: int, d: int) -> Iterator[Shape]:
    """All shapes (I, J) in Gr(d, n) with I <= J, in lexicographic order."""
    subs = subsets(n, d)
    for I in subs:
        for J in subs:
            if leq(I, J):
                yield Shape(n, I, J)


def wle_set(sh: Shape) -> set[Permutation]:
    I, J = sh.I, sh.J
    return {w for w in symmetric_group(sh.d) if all(I[w(k) - 1] <= J[k - 1] for k in range(1, sh.d + 1))}


def forced_matchings(sh: Shape) -> list[tuple[int, int]]:
    """Pairs (k, k') with i_k = j_{k'}; a strong matching needs w(k') = k."""
    pos = {j: kp for kp, j in enumerate(sh.J, start=1)}
    return [(k, pos[i]) for k, i in enumerate(sh.I, start=1) if i in pos]


def weq_set(sh: Shape) -> set[Permutation]:
    forced = forced_matchings(sh)
    return {w for w in wle_set(sh) if all(w(kp) == k for k, kp in forced)}


def _swap(S: Sequence[int], l: int) -> tuple[int, ...]:
    """Apply the simple transposition (l, l+1) to a subset."""
    return tuple(sorted(l + 1 if a == l else l if a == l + 1 else a for a in S))


def descent_letter(J: Sequence[int]) -> int | None:
    """Smallest l with l+1 in J and l not in J, or None when J = {1..d}."""
    Js = set(J)
    for l in range(1, max(J, default=0)):
        if l + 1 in Js and l not in Js:
            return l
    return None


def weq_recursive(sh: Shape) -> set[Permutation]:
    return {Permutation(w) for w in _weq_rec(sh.I, sh.J)}


@lru_cache(maxsize=None)
def _weq_rec(I: tuple[int, ...], J: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    d = len(I)
    if not leq(I, J):
        return frozenset()
    if I == J:
        return frozenset({tuple(range(1, d + 1))})
    l = descent_letter(J)
    if l is None:
        raise ValueError(f"no descent letter for J={list(J)} although I != J")
    sJ = _swap(J, l)
    lo, hi = l in I, l + 1 in I
    if hi and not lo:
        return _weq_rec(_swap(I, l), sJ)
    if lo and hi:
        a = I.index(l) + 1
        flip = transposition(a, a + 1, d)
        return frozenset(compose(flip, Permutation(w)).images for w in _weq_rec(I, sJ))
    if not lo and not hi:
        return _weq_rec(I, sJ)
    return _weq_rec(I, sJ) | _weq_rec(_swap(I, l), sJ)


def restrict_to_disjoint(sh: Shape, w: Permutation) -> Permutation:
    """Drop the forced matchings of w and relabel, landing in S_{d'}."""
    forced = forced_matchings(sh)
    rows = {k for k, _ in forced}
    cols = {kp for _, kp in forced}
    keep_cols = [kp for kp in range(1, sh.d + 1) if kp not in cols]
    keep_rows = [k for k in range(1, sh.d + 1) if k not in rows]
    relabel = {k: idx for idx, k in enumerate(keep_rows, start=1)}
    return Permutation(tuple(relabel[w(kp)] for kp in keep_cols))


def strip_common(sh: Shape) -> Shape:
    """The shape (I - J, J - I) with the common columns deleted and relabeled."""
    common = set(sh.I) & set(sh.J)
    relabel = {a: a - sum(1 for c in common if c < a) for a in range(1, sh.n + 1) if a not in common}
    return Shape(
        sh.n - len(common),
        tuple(relabel[a] for a in sh.I if a not in common),
        tuple(relabel[a] for a in sh.J if a not in common),
    )


# Distinguished subexpressions.  Elements of W^P are minimal representatives of
# left cosets w W_P, identified with d-subsets through w -> w({1..d}).


@dataclass(frozen=True)
class DistSubexpression:
    word: tuple[int, ...]
    choices: tuple[bool, ...]
    n1: int
    n2: int
    m: int

    @property
    def data(self) -> tuple[int, int, int]:
        return (self.n1, self.n2, self.m)

    def labels(self) -> list[str]:
        return [f"s{i}" if c else "e" for i, c in zip(self.word, self.choices)]


def _simple(i: int, n: int) -> Permutation:
    return transposition(i, i + 1, n)


def _check_inputs(x: Permutation, word: Sequence[int], d: int) -> None:
    if not is_reduced(word, x.n):
        raise ValueError(f"word {list(word)} is not reduced")
    for name, z in (("x", x), ("y", from_word(word, x.n))):
        if not is_min_coset_rep(z, "WP", d):
            raise ValueError(f"{name}={z} is not a minimal coset representative for d={d}")


def dist_direct(x: Permutation, word: Sequence[int], d: int) -> list[DistSubexpression]:
    """All 2^l subexpressions filtered by the parabolic and jump conditions."""
    _check_inputs(x, word, d)
    n = x.n
    word = tuple(word)
    out = []
    for choices in product((False, True), repeat=len(word)):
        gamma = Permutation.identity(n)
        n1 = n2 = m = 0
        ok = True
        # positions are listed leftmost first, so the product is built from the right
        for i, chosen in zip(reversed(word), reversed(choices)):
            s = _simple(i, n)
            moved = compose(s, gamma)
            jump = length(moved) < length(gamma)
            if jump and not chosen:
                ok = False
                break
            if chosen:
                if jump:
                    m += 1
                gamma = moved
                if not is_min_coset_rep(gamma, "WP", d):
                    ok = False
                    break
            elif is_min_coset_rep(moved, "WP", d):
                n1 += 1
            else:
                n2 += 1
        if ok and gamma == x:
            out.append(DistSubexpression(word, choices, n1, n2, m))
    return sorted(out, key=lambda g: g.choices)


def dist_set(x: Permutation, word: Sequence[int], d: int) -> list[DistSubexpression]:
    """Recursive computation, peeling off the leftmost letter of the word."""
    _check_inputs(x, word, d)
    word = tuple(word)
    out = [DistSubexpression(word, ch, *data) for ch, data in _dist_rec(x.images, word, d)]
    return sorted(out, key=lambda g: g.choices)


@lru_cache(maxsize=None)
def _dist_rec(
    x: tuple[int, ...], word: tuple[int, ...], d: int
) -> tuple[tuple[tuple[bool, ...], tuple[int, int, int]], ...]:
    n = len(x)
    xp = Permutation(x)
    if not word:
        return (((), (0, 0, 0)),) if xp.is_identity() else ()
    s, rest = word[0], word[1:]
    sx = compose(_simple(s, n), xp)
    out = []
    if length(sx) < length(xp):
        for ch, (a, b, c) in _dist_rec(sx.images, rest, d):
            out.append(((True,) + ch, (a, b, c)))
    elif not is_min_coset_rep(sx, "WP", d):
        for ch, (a, b, c) in _dist_rec(x, rest, d):
            out.append(((False,) + ch, (a, b + 1, c)))
    else:
        for ch, (a, b, c) in _dist_rec(x, rest, d):
            out.append(((False,) + ch, (a + 1, b, c)))
        for ch, (a, b, c) in _dist_rec(sx.images, rest, d):
            out.append(((True,) + ch, (a, b, c + 1)))
    return tuple(out)


def deodhar_cell_size(g: DistSubexpression) -> tuple[int, int]:
    """(Gm exponent, A1 exponent) of the cell attached to g."""
    return (g.n1, g.m + g.n2)


def canonical_word(J: Sequence[int]) -> tuple[int, ...]:
    """Reduced word of min_rep(J), leftmost letter chosen as in weq_recursive."""
    word = []
    J = tuple(J)
    while (l := descent_letter(J)) is not None:
        word.append(l)
        J = _swap(J, l)
    return tuple(word)


def comparison_bijection(sh: Shape) -> dict[DistSubexpression, Permutation]:
    """Match dist(min_rep(I), [min_rep(J)]) with weq_set(I, J).

    Both recursions are run along the same letters, so every branch of one
    corresponds to exactly one branch of the other.
    """
    d, n = sh.d, sh.n
    word = canonical_word(sh.J)
    x = min_rep_for_subset(sh.I, n)
    pairs = _lockstep(sh.I, sh.J, d)
    by_choices = {g.choices: g for g in dist_set(x, word, d)}
    if len(by_choices) != len(pairs) or set(by_choices) != {ch for ch, _ in pairs}:
        raise RuntimeError(f"recursion mismatch for {sh}")
    out = {by_choices[ch]: Permutation(w) for ch, w in pairs}
    if set(out.values()) != weq_set(sh) or len(set(out.values())) != len(out):
        raise RuntimeError(f"lockstep walk does not produce weq_set for {sh}")
    return out


def _lockstep(I: tuple[int, ...], J: tuple[int, ...], d: int) -> list[tuple[tuple[bool, ...], tuple[int, ...]]]:
    l = descent_letter(J)
    if l is None:
        return [((), tuple(range(1, d + 1)))] if I == J else []
    sJ = _swap(J, l)
    lo, hi = l in I, l + 1 in I
    if hi and not lo:
        return [((True,) + ch, w) for ch, w in _lockstep(_swap(I, l), sJ, d)]
    if lo and hi:
        a = I.index(l) + 1
        flip = transposition(a, a + 1, d)
        return [((False,) + ch, compose(flip, Permutation(w)).images) for ch, w in _lockstep(I, sJ, d)]
    if not lo and not hi:
        return [((False,) + ch, w) for ch, w in _lockstep(I, sJ, d)]
    return [((False,) + ch, w) for ch, w in _lockstep(I, sJ, d)] + [
        ((True,) + ch, w) for ch, w in _lockstep(_swap(I, l), sJ, d)
    ]
