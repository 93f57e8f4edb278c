"""Independent brute-force oracles shared by the tests."""

from itertools import product

from richardson.perm import Permutation, from_word, reduced_word


def subword_products(w: Permutation) -> set[Permutation]:
    word = reduced_word(w)
    out = set()
    for mask in product((0, 1), repeat=len(word)):
        out.add(from_word([i for i, b in zip(word, mask) if b], w.n))
    return out


def inversions(w: Permutation) -> int:
    imgs = w.images
    return sum(1 for a in range(len(imgs)) for b in range(len(imgs)) if a < b and imgs[a] > imgs[b])


def P(*imgs: int) -> Permutation:
    return Permutation(tuple(imgs))
