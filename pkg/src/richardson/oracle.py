"""Brute-force point counts of open Richardson varieties over prime fields.

Points are enumerated as normal-form matrices: X restricted to the columns I
is the identity and X[k, l] = 0 for l < i_k.  Such an X lies in R(I, J) when
A = X restricted to J is invertible and A^{-1} X vanishes right of each j_k.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from .perm import Permutation, compose
from .shapes import Shape, weq_set, wle_set

PRIMES = (2, 3, 5, 7)
MAX_DIGITS = 20

Matrix = list[list[int]]


@dataclass(frozen=True)
class Fp:
    p: int
    value: int

    def __post_init__(self) -> None:
        if self.p not in PRIMES:
            raise ValueError(f"unsupported prime {self.p}")
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other: "Fp | int") -> int:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError("mixing fields")
            return other.value
        return other

    def __add__(self, other: "Fp | int") -> "Fp":
        return Fp(self.p, self.value + self._coerce(other))

    def __sub__(self, other: "Fp | int") -> "Fp":
        return Fp(self.p, self.value - self._coerce(other))

    def __mul__(self, other: "Fp | int") -> "Fp":
        return Fp(self.p, self.value * self._coerce(other))

    def __neg__(self) -> "Fp":
        return Fp(self.p, -self.value)

    def inverse(self) -> "Fp":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return Fp(self.p, pow(self.value, -1, self.p))

    def __truediv__(self, other: "Fp | int") -> "Fp":
        return self * Fp(self.p, self._coerce(other)).inverse()


def inverse_mod(A: Matrix, p: int) -> Matrix | None:
    """Inverse of a square matrix over F_p, or None when singular."""
    d = len(A)
    M = [list(row) + [int(r == c) for c in range(d)] for r, row in enumerate(A)]
    for col in range(d):
        piv = next((r for r in range(col, d) if M[r][col] % p), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        inv = pow(M[col][col], -1, p)
        M[col] = [a * inv % p for a in M[col]]
        for r in range(d):
            if r != col and M[r][col] % p:
                f = M[r][col]
                M[r] = [(a - f * b) % p for a, b in zip(M[r], M[col])]
    return [row[d:] for row in M]


def rank_mod(A: Matrix, p: int) -> int:
    M = [[a % p for a in row] for row in A]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], -1, p)
        for r in range(rank + 1, len(M)):
            if M[r][c]:
                f = M[r][c] * inv
                M[r] = [(a - f * b) % p for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def bruhat_cell_of(A: Matrix, p: int) -> Permutation:
    """The w with A in B w B, B upper triangular; P_w has its entries at (w(k), k).

    Uses r(i, j) = rank of rows i..d, columns 1..j.  Column j of P_w adds a
    pivot exactly to the bottom blocks starting at rows i <= w(j).
    """
    d = len(A)
    if rank_mod(A, p) != d:
        raise ValueError("matrix is singular")

    def r(i: int, j: int) -> int:
        if j == 0 or i > d:
            return 0
        return rank_mod([row[:j] for row in A[i - 1 :]], p)

    images = []
    for j in range(1, d + 1):
        images.append(max(i for i in range(1, d + 1) if r(i, j) - r(i, j - 1) == 1))
    return Permutation(tuple(images))


def permutation_matrix(w: Permutation) -> Matrix:
    d = w.n
    M = [[0] * d for _ in range(d)]
    for k in range(1, d + 1):
        M[w(k) - 1][k - 1] = 1
    return M


def matmul(A: Matrix, B: Matrix, p: int) -> Matrix:
    return [[sum(a * b for a, b in zip(row, col)) % p for col in zip(*B)] for row in A]


def opposite_cell_of(A: Matrix, p: int) -> Permutation:
    """The w with A in B w B^-, B^- lower triangular."""
    d = len(A)
    w0 = Permutation.longest(d)
    flipped = [list(reversed(row)) for row in A]
    return compose(bruhat_cell_of(flipped, p), w0)


def _free_entries(sh: Shape, n: int) -> list[tuple[int, int]]:
    Is = set(sh.I)
    return [(k, l) for k in range(sh.d) for l in range(sh.I[k], n) if (l + 1) not in Is]


def _points(sh: Shape, p: int, clamp: bool = True):
    """Yield (X, A) for every F_p point, with A = X restricted to the columns J."""
    if p not in PRIMES:
        raise ValueError(f"p must be one of {PRIMES}, got {p}")
    if not sh.leq():
        return
    d = sh.d
    n = max(sh.I[-1], sh.J[-1]) if (clamp and d) else sh.n
    free = _free_entries(sh, n)
    if len(free) > MAX_DIGITS:
        raise ValueError(f"search space too large: {len(free)} free entries over F_{p}")
    J0 = [j - 1 for j in sh.J]
    base = [[0] * n for _ in range(d)]
    for k, i in enumerate(sh.I):
        base[k][i - 1] = 1
    for vals in product(range(p), repeat=len(free)):
        X = [row[:] for row in base]
        for (k, l), v in zip(free, vals):
            X[k][l] = v
        A = [[X[k][j] for j in J0] for k in range(d)]
        Ainv = inverse_mod(A, p)
        if Ainv is None:
            continue
        Y = matmul(Ainv, X, p)
        if all(Y[k][l] == 0 for k in range(d) for l in range(sh.J[k], n)):
            yield X, A


def count_points(sh: Shape, p: int, clamp: bool = True) -> int:
    if not sh.leq():
        return 0
    return sum(1 for _ in _points(sh, p, clamp))


def count_by_stratum(sh: Shape, p: int, clamp: bool = True) -> dict[Permutation, int]:
    """Tally points by the Bruhat cell of the base change matrix."""
    if not sh.leq():
        return {}
    tally = Counter(bruhat_cell_of(A, p) for _, A in _points(sh, p, clamp))
    allowed = weq_set(sh)
    stray = set(tally) - allowed
    if stray:
        raise RuntimeError(f"points of {sh} land in cells {sorted(map(str, stray))} outside weq_set")
    return dict(tally)


def count_by_gauss_stratum(sh: Shape, p: int) -> dict[Permutation, int]:
    """Tally points by the opposite Bruhat cell of the base change matrix."""
    if not sh.leq():
        return {}
    tally = Counter(opposite_cell_of(A, p) for _, A in _points(sh, p))
    stray = set(tally) - wle_set(sh)
    if stray:
        raise RuntimeError(f"points of {sh} land in cells {sorted(map(str, stray))} outside wle_set")
    return dict(tally)


def stratum_count(alpha: int, beta: int, p: int) -> int:
    return (p - 1) ** alpha * p**beta


def random_upper(d: int, p: int, rng) -> Matrix:
    M = [[0] * d for _ in range(d)]
    for r in range(d):
        M[r][r] = rng.randrange(1, p)
        for c in range(r + 1, d):
            M[r][c] = rng.randrange(p)
    return M

