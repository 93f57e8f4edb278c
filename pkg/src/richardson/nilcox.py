"""Exterior nil-Coxeter dg-algebra and its subquotient complexes.

Basis symbols are delta_w y_S with w in S_d and S an ascending subset of
{1..d}.  The dual basis is partial_w = delta_{w0 w}.  Products follow
delta_w delta_v = delta_{wv} when lengths add (else 0) and
Y delta_w = delta_w w^{-1}(Y), where w(y_i) = y_{w(i)}.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .laurent import BiLaurent
from .perm import Permutation, compose, covering_reflections, length, symmetric_group, bruhat_leq
from .shapes import Shape, weq_set
from .strata import disjointify, model_shift

Key = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class NilCoxTerm:
    w: Permutation
    yset: tuple[int, ...]
    coeff: int = 1


def sort_wedge(idx: Sequence[int]) -> tuple[int, tuple[int, ...]] | None:
    """Sign and ascending form of y_{idx[0]} ^ y_{idx[1]} ^ ..., or None if it vanishes."""
    if len(set(idx)) != len(idx):
        return None
    inv = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    return (-1 if inv % 2 else 1), tuple(sorted(idx))


@dataclass(frozen=True)
class NilCoxElement:
    d: int
    terms: tuple[tuple[Key, int], ...] = ()
    basis: str = "delta"

    def __post_init__(self) -> None:
        if self.basis not in ("delta", "partial"):
            raise ValueError(f"basis must be 'delta' or 'partial', got {self.basis!r}")
        merged: dict[Key, int] = defaultdict(int)
        for (w, S), c in self.terms:
            if len(w) != self.d:
                raise ValueError(f"rank mismatch: permutation of size {len(w)} in d={self.d}")
            merged[(tuple(w), tuple(S))] += c
        canon = tuple(sorted(((k, c) for k, c in merged.items() if c), key=lambda kc: _key_order(kc[0])))
        object.__setattr__(self, "terms", canon)

    @classmethod
    def from_dict(cls, d: int, data: Mapping[Key, int], basis: str = "delta") -> "NilCoxElement":
        return cls(d, tuple(data.items()), basis)

    def as_dict(self) -> dict[Key, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def to_delta(self) -> "NilCoxElement":
        return self if self.basis == "delta" else to_dual_basis(self)

    def __add__(self, other: "NilCoxElement") -> "NilCoxElement":
        _same(self, other)
        b = other if other.basis == self.basis else to_dual_basis(other)
        return NilCoxElement(self.d, self.terms + b.terms, self.basis)

    def __neg__(self) -> "NilCoxElement":
        return NilCoxElement(self.d, tuple((k, -c) for k, c in self.terms), self.basis)

    def __sub__(self, other: "NilCoxElement") -> "NilCoxElement":
        return self + (-other)

    def __mul__(self, other: "NilCoxElement | int") -> "NilCoxElement":
        if isinstance(other, int):
            return NilCoxElement(self.d, tuple((k, c * other) for k, c in self.terms), self.basis)
        return nc_mul(self, other)

    def __rmul__(self, other: int) -> "NilCoxElement":
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NilCoxElement):
            return NotImplemented
        if self.d != other.d:
            return False
        return self.to_delta().terms == other.to_delta().terms

    def __hash__(self) -> int:
        return hash((self.d, self.to_delta().terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        sym = "δ̃" if self.basis == "delta" else "∂"
        parts = []
        for (w, S), c in self.terms:
            mono = f"{sym}_[{','.join(map(str, w))}]"
            if S:
                mono += " y_{" + "<".join(map(str, S)) + "}"
            mag = "" if abs(c) == 1 else f"{abs(c)} "
            if not parts:
                parts.append(("-" if c < 0 else "") + mag + mono)
            else:
                parts.append(("- " if c < 0 else "+ ") + mag + mono)
        return " ".join(parts)

    def to_json(self) -> list[dict]:
        return [{"w": list(w), "y": list(S), "c": c, "basis": self.basis} for (w, S), c in self.terms]


def _key_order(k: Key) -> tuple:
    w, S = k
    return (length(Permutation(w)), w, len(S), S)


def _same(a: NilCoxElement, b: NilCoxElement) -> None:
    if a.d != b.d:
        raise ValueError(f"rank mismatch: d={a.d} vs d={b.d}")


def delta(w: Permutation, yset: Iterable[int] = (), coeff: int = 1) -> NilCoxElement:
    return NilCoxElement(w.n, (((w.images, tuple(sorted(yset))), coeff),))


def partial(w: Permutation, yset: Iterable[int] = (), coeff: int = 1) -> NilCoxElement:
    return NilCoxElement(w.n, (((w.images, tuple(sorted(yset))), coeff),), "partial")


def y(i: int, d: int) -> NilCoxElement:
    return delta(Permutation.identity(d), (i,))


def coroot(k: int, l: int, d: int) -> NilCoxElement:
    """y_k - y_l as an element of the algebra."""
    e = Permutation.identity(d)
    return delta(e, (k,)) - delta(e, (l,))


def to_dual_basis(a: NilCoxElement) -> NilCoxElement:
    """Relabel w -> w0 w and toggle between the delta and partial presentations."""
    w0 = Permutation.longest(a.d)
    flipped = "partial" if a.basis == "delta" else "delta"
    return NilCoxElement(
        a.d, tuple(((compose(w0, Permutation(w)).images, S), c) for (w, S), c in a.terms), flipped
    )


def nc_mul(a: NilCoxElement, b: NilCoxElement) -> NilCoxElement:
    _same(a, b)
    a, b = a.to_delta(), b.to_delta()
    out: dict[Key, int] = defaultdict(int)
    for (w1, S1), c1 in a.terms:
        u = Permutation(w1)
        for (w2, S2), c2 in b.terms:
            v = Permutation(w2)
            uv = compose(u, v)
            if length(uv) != length(u) + length(v):
                continue
            vinv = v.inverse()
            res = sort_wedge([vinv(i) for i in S1] + list(S2))
            if res is None:
                continue
            sign, S = res
            out[(uv.images, S)] += sign * c1 * c2
    return NilCoxElement.from_dict(a.d, out)


def _wedge_left(k: int, S: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
    return sort_wedge((k,) + S)


def nc_differential(a: NilCoxElement) -> NilCoxElement:
    """d(delta_w Y) = sum over t with l(wt) = l(w) - 1 of delta_{wt} (y_k - y_l) ^ Y."""
    basis = a.basis
    a = a.to_delta()
    out: dict[Key, int] = defaultdict(int)
    for (w, S), c in a.terms:
        wp = Permutation(w)
        for t in covering_reflections(wp, "down"):
            wt = compose(wp, t.as_permutation(a.d)).images
            for idx, sgn in ((t.k, 1), (t.l, -1)):
                res = _wedge_left(idx, S)
                if res is not None:
                    out[(wt, res[1])] += sgn * res[0] * c
    res = NilCoxElement.from_dict(a.d, out)
    return res if basis == "delta" else to_dual_basis(res)


def bidegree(term: NilCoxTerm, basis: str, shift: int = 0) -> tuple[int, int]:
    """(cohomological degree, weight) of a basis symbol."""
    d = term.w.n
    k = len(term.yset)
    if basis == "partial":
        top = length(term.w) + d * (d + 1) // 2
    elif basis == "delta":
        top = d * d - length(term.w)
    else:
        raise ValueError(f"basis must be 'delta' or 'partial', got {basis!r}")
    return (2 * top - k + 2 * shift, top - k + shift)


# Subquotient complexes.


def is_interval_closed(elements: Iterable[Permutation], d: int) -> bool:
    S = set(elements)
    if not S:
        return True
    group = list(symmetric_group(d))
    for w2 in group:
        if w2 in S:
            continue
        below = any(bruhat_leq(w1, w2) for w1 in S)
        above = any(bruhat_leq(w2, w3) for w3 in S)
        if below and above:
            return False
    return True


@dataclass(frozen=True)
class GradedComplex:
    """A subquotient complex in the partial basis, split by (degree, weight)."""

    d: int
    support: tuple[Permutation, ...]
    basis: tuple[Key, ...]
    shift: int
    differential: Mapping[Key, Mapping[Key, int]] = field(repr=False)

    def unshifted_bidegree(self, key: Key) -> tuple[int, int]:
        return bidegree(NilCoxTerm(Permutation(key[0]), key[1]), "partial", 0)

    def bidegree(self, key: Key) -> tuple[int, int]:
        return bidegree(NilCoxTerm(Permutation(key[0]), key[1]), "partial", self.shift)

    def graded_pieces(self) -> dict[tuple[int, int], list[Key]]:
        out: dict[tuple[int, int], list[Key]] = defaultdict(list)
        for key in self.basis:
            out[self.bidegree(key)].append(key)
        return dict(out)

    def block(self, p: int, q: int) -> list[list[int]]:
        """Matrix of the differential from bidegree (p, q) to (p + 1, q)."""
        pieces = self.graded_pieces()
        src = pieces.get((p, q), [])
        dst = pieces.get((p + 1, q), [])
        row = {k: i for i, k in enumerate(dst)}
        M = [[0] * len(src) for _ in dst]
        for j, key in enumerate(src):
            for tgt, c in self.differential[key].items():
                if tgt not in row:
                    raise RuntimeError(f"differential leaves its weight block at {key} -> {tgt}")
                M[row[tgt]][j] = c
        return M

    def apply(self, vec: Mapping[Key, int]) -> dict[Key, int]:
        out: dict[Key, int] = defaultdict(int)
        for key, c in vec.items():
            for tgt, c2 in self.differential[key].items():
                out[tgt] += c * c2
        return {k: v for k, v in out.items() if v}


def _all_subsets(d: int) -> list[tuple[int, ...]]:
    return [S for k in range(d + 1) for S in combinations(range(1, d + 1), k)]


def build_complex(support: Iterable[Permutation], d: int, shift: int = 0) -> GradedComplex:
    supp = sorted(set(support), key=lambda w: (length(w), w.images))
    if any(w.n != d for w in supp):
        raise ValueError(f"support must lie in S_{d}")
    if not is_interval_closed(supp, d):
        raise ValueError("support is not interval-closed in the Bruhat order")
    inside = {w.images for w in supp}
    basis = tuple((w.images, S) for w in supp for S in _all_subsets(d))
    diff: dict[Key, dict[Key, int]] = {}
    for key in basis:
        image = nc_differential(partial(Permutation(key[0]), key[1]))
        diff[key] = {k: c for k, c in image.terms if k[0] in inside}
    return GradedComplex(d, tuple(supp), basis, shift, diff)


# Exact linear algebra over Z.


def bareiss_rank(M: Sequence[Sequence[int]]) -> int:
    """Rank by fraction-free Gaussian elimination."""
    A = [list(row) for row in M]
    if not A or not A[0]:
        return 0
    rows, cols = len(A), len(A[0])
    rank, prev = 0, 1
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        pv = A[rank][c]
        for r in range(rank + 1, rows):
            f = A[r][c]
            A[r] = [(pv * A[r][j] - f * A[rank][j]) // prev for j in range(cols)]
        prev = pv
        rank += 1
        if rank == rows:
            break
    return rank


def kernel_basis(M: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Integer kernel vectors from the reduced echelon form, one per free column."""
    A = [[Fraction(x) for x in row] for row in M]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pv = A[r][c]
        A[r] = [x / pv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    out = []
    for free in (c for c in range(ncols) if c not in pivots):
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -A[i][free]
        out.append(_primitive(vec))
    return out


def _primitive(vec: Sequence[Fraction]) -> list[int]:
    from math import gcd, lcm

    den = 1
    for x in vec:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints] if g else ints
    lead = next((x for x in ints if x), 1)
    return [-x for x in ints] if lead < 0 else ints


def _cols(M: list[list[int]], ncols: int) -> list[list[int]]:
    return [[M[r][c] for r in range(len(M))] for c in range(ncols)]


def cohomology_dims(c: GradedComplex) -> dict[tuple[int, int], int]:
    pieces = c.graded_pieces()
    out = {}
    for (p, q), keys in pieces.items():
        rank_out = bareiss_rank(c.block(p, q)) if (p + 1, q) in pieces else 0
        rank_in = bareiss_rank(c.block(p - 1, q)) if (p - 1, q) in pieces else 0
        dim = len(keys) - rank_out - rank_in
        if dim:
            out[(p, q)] = dim
    return dict(sorted(out.items()))


def cohomology_classes(c: GradedComplex) -> dict[tuple[int, int], list[NilCoxElement]]:
    """Representative cocycles (partial basis), one per class, chosen greedily."""
    pieces = c.graded_pieces()
    out: dict[tuple[int, int], list[NilCoxElement]] = {}
    for (p, q), keys in sorted(pieces.items()):
        n = len(keys)
        outgoing = c.block(p, q) if (p + 1, q) in pieces else []
        kernel = kernel_basis(outgoing, n) if outgoing else [[int(i == j) for i in range(n)] for j in range(n)]
        image = _cols(c.block(p - 1, q), len(pieces[(p - 1, q)])) if (p - 1, q) in pieces else []
        chosen: list[list[int]] = []
        base = bareiss_rank(image) if image else 0
        for vec in kernel:
            trial = image + chosen + [vec]
            if bareiss_rank(trial) > base + len(chosen):
                chosen.append(vec)
        if chosen:
            out[(p, q)] = [
                NilCoxElement(c.d, tuple((keys[i], x) for i, x in enumerate(vec) if x), "partial")
                for vec in chosen
            ]
    return out


def mixpol(c: GradedComplex) -> BiLaurent:
    """Sum of dim H^{p,q} q^q t^p."""
    return BiLaurent.from_dict({(q, p): n for (p, q), n in cohomology_dims(c).items()})


def e1_mixpol(c: GradedComplex) -> BiLaurent:
    """The same generating function for the chain groups themselves."""
    return BiLaurent.from_dict({(q, p): len(keys) for (p, q), keys in c.graded_pieces().items()})


def full_group_poincare(d: int) -> BiLaurent:
    """q^{d^2} t^{2d^2} prod_i (1 + q^{-i} t^{-(2i-1)})."""
    out = BiLaurent.monomial(d * d, 2 * d * d)
    for i in range(1, d + 1):
        out = out * (1 + BiLaurent.monomial(-i, -(2 * i - 1)))
    return out


def model(sh: Shape) -> GradedComplex:
    if not sh.leq():
        raise ValueError(f"shape is not comparable: {sh}")
    disjoint, _ = disjointify(sh)
    return build_complex(weq_set(disjoint), disjoint.d, model_shift(sh))


@lru_cache(maxsize=None)
def _model_mixpol(n: int, I: tuple[int, ...], J: tuple[int, ...]) -> BiLaurent:
    return mixpol(model(Shape(n, I, J)))


def model_mixpol(sh: Shape) -> BiLaurent:
    """Cached mixed Hodge polynomial of the model cohomology."""
    return _model_mixpol(sh.n, sh.I, sh.J)


def model_multiply(
    n: int,
    H: Sequence[int],
    I: Sequence[int],
    J: Sequence[int],
    a: NilCoxElement,
    b: NilCoxElement,
) -> NilCoxElement:
    """Product of a in the (H, I) piece with b in the (I, J) piece, projected to (H, J).

    Supports are tested in the partial labels.  The result is unshifted.
    """
    H, I, J = tuple(H), tuple(I), tuple(J)
    if set(H) & set(J):
        raise ValueError("H and J must be disjoint")
    left, right, target = Shape(n, H, I), Shape(n, I, J), Shape(n, H, J)
    for name, elem, sh in (("a", a, left), ("b", b, right)):
        allowed = {w.images for w in weq_set(sh)}
        labels = {w for (w, _), _ in to_dual_basis(elem.to_delta()).terms}
        if not labels <= allowed:
            raise ValueError(f"{name} is not supported on weq_set{sh}")
    keep = {w.images for w in weq_set(target)}
    prod = to_dual_basis(nc_mul(a, b))
    return NilCoxElement(prod.d, tuple((k, c) for k, c in prod.terms if k[0] in keep), "partial").to_delta()
