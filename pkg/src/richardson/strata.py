"""Stratum descriptors from closed formulas and reduction-rank bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .laurent import BiLaurent
from .perm import Permutation, length
from .shapes import Shape, ell, forced_matchings, restrict_to_disjoint, weq_set, wle_set


@dataclass(frozen=True)
class StratumDescriptor:
    """A piece of the decomposition isomorphic to Gm^alpha x A^beta."""

    w: Permutation
    alpha: int
    beta: int
    kind: str

    @property
    def dim(self) -> int:
        return self.alpha + self.beta


def _sorted(strata: list[StratumDescriptor]) -> list[StratumDescriptor]:
    return sorted(strata, key=lambda s: (length(s.w), s.w.images))


def gauss_strata(sh: Shape) -> list[StratumDescriptor]:
    if not sh.leq():
        return []
    I, J, d = sh.I, sh.J, sh.d
    total = ell(J) - ell(I)
    out = []
    for w in wle_set(sh):
        alpha = sum(1 for k in range(1, d + 1) if I[w(k) - 1] != J[k - 1])
        out.append(StratumDescriptor(w, alpha, total - alpha - length(w), "gauss"))
    return _sorted(out)


def deodhar_strata(sh: Shape) -> list[StratumDescriptor]:
    if not sh.leq():
        return []
    I, J, d = sh.I, sh.J, sh.d
    alpha = d - len(set(I) & set(J))
    total = ell(J) - ell(I)
    out = []
    for w in weq_set(sh):
        winv = w.inverse()
        pairs = sum(
            1
            for k in range(1, d + 1)
            for kp in range(1, d + 1)
            if I[k - 1] < J[kp - 1] < J[winv(k) - 1]
        )
        out.append(StratumDescriptor(w, alpha, total - alpha - pairs + length(w), "deodhar"))
    return _sorted(out)


def point_count_poly(strata: Sequence[StratumDescriptor]) -> BiLaurent:
    """Sum of (q t^2 + t)^alpha (q t^2)^beta over the strata."""
    gm = BiLaurent.monomial(1, 2) + BiLaurent.monomial(0, 1)
    a1 = BiLaurent.monomial(1, 2)
    total = BiLaurent()
    for s in strata:
        total = total + gm**s.alpha * a1**s.beta
    return total


def basechange_rank(sh: Shape) -> int:
    both = set(sh.I) | set(sh.J)
    return sum(
        1
        for i, j in zip(sh.I, sh.J)
        for l in range(i + 1, j)
        if l not in both
    )


def disjointify(sh: Shape, order: Sequence[int] | None = None) -> tuple[Shape, int]:
    """Remove the common columns one at a time, accumulating bundle ranks.

    ``order`` optionally lists the common values in the order of removal.
    """
    common = sorted(set(sh.I) & set(sh.J))
    if order is None:
        order = common
    elif sorted(order) != common:
        raise ValueError(f"removal order {list(order)} is not a permutation of {common}")
    n, I, J = sh.n, list(sh.I), list(sh.J)
    pending = list(order)
    rank = 0
    while pending:
        c = pending.pop(0)
        k, kp = I.index(c) + 1, J.index(c) + 1
        rank += k - kp
        shift = lambda a: a - 1 if a > c else a
        I = [shift(a) for a in I if a != c]
        J = [shift(a) for a in J if a != c]
        pending = [shift(a) for a in pending]
        n -= 1
    return Shape(n, tuple(I), tuple(J)), rank


def model_shift(sh: Shape) -> int:
    """Shift rho with H_c(R(I,J)) equal to the model cohomology moved by (2 rho, rho)."""
    if not sh.leq():
        raise ValueError(f"shape is not comparable: {sh}")
    dprime = sh.d - len(forced_matchings(sh))
    values = set()
    for s in deodhar_strata(sh):
        wp = restrict_to_disjoint(sh, s.w)
        values.add(s.alpha + s.beta - length(wp) - dprime * (dprime + 1) // 2)
    if len(values) != 1:
        raise RuntimeError(f"model shift is not constant on {sh}: {sorted(values)}")
    return values.pop()
