"""Lie-theoretic side: Ext recursions between parabolic Verma modules.

Labels are elements x of S_n whose inverse is a minimal left coset
representative for W_P = S_d x S_{n-d}.  Polynomials are in (v, t): t tracks
the Ext degree and v the internal grading.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .laurent import BiLaurent, Laurent, eval_first, eval_t, substitute
from .nilcox import model_mixpol
from .perm import Permutation, bruhat_leq, compose, is_min_coset_rep, length, min_rep_for_subset
from .shapes import Shape, subsets

VT = ("v", "t")
UT = ("u", "t")


@dataclass(frozen=True)
class PWElement:
    x: Permutation
    d: int

    def __post_init__(self) -> None:
        if not is_min_coset_rep(self.x, "PW", self.d):
            raise ValueError(f"{self.x} is not a minimal right coset representative for d={self.d}")

    @property
    def n(self) -> int:
        return self.x.n

    def __str__(self) -> str:
        return str(self.x)


def pw_elements(n: int, d: int) -> list[PWElement]:
    """All labels, sorted by length then one-line notation."""
    out = [PWElement(min_rep_for_subset(I, n).inverse(), d) for I in subsets(n, d)]
    return sorted(out, key=lambda e: (length(e.x), e.x.images))


def parabolic_longest(n: int, d: int) -> Permutation:
    return Permutation(tuple(range(d, 0, -1)) + tuple(range(n, d, -1)))


def psi(x: PWElement) -> tuple[int, ...]:
    """(w0 x^{-1} w_P)({1..d}) as a sorted subset."""
    return coset_rep(x).apply_set(range(1, x.d + 1))


def coset_rep(x: PWElement) -> Permutation:
    """w0 x^{-1} w_P, the minimal left coset representative sending {1..d} to psi(x)."""
    n, d = x.n, x.d
    return compose(compose(Permutation.longest(n), x.x.inverse()), parabolic_longest(n, d))


def psi_inverse(I: tuple[int, ...], n: int, d: int) -> PWElement:
    for e in pw_elements(n, d):
        if psi(e) == tuple(I):
            return e
    raise ValueError(f"no label maps to {I}")


def _is_pw(w: Permutation, d: int) -> bool:
    return is_min_coset_rep(w, "PW", d)


def right_descents(x: Permutation) -> list[int]:
    return [i for i in range(1, x.n) if x(i) > x(i + 1)]


def _times_s(x: Permutation, i: int) -> Permutation:
    imgs = list(x.images)
    imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
    return Permutation(tuple(imgs))


def _mono(a: int, b: int, c: int = 1) -> BiLaurent:
    return BiLaurent.monomial(a, b, c, VT)


def mixpol_lie(x: PWElement, y: PWElement, descent: int | None = None, rule: str = "min") -> BiLaurent:
    """Bigraded Ext polynomial between the Verma modules labelled x and y.

    ``descent`` fixes the right descent used at the top step; deeper steps use
    the smallest (rule "min") or largest (rule "max") right descent.
    """
    _check_pair(x, y)
    return BiLaurent.from_dict(dict(_lie(x.x.images, y.x.images, x.d, descent, rule, "corrected")), VT)


def mixpol_lie_uncorrected(x: PWElement, y: PWElement) -> BiLaurent:
    """The same recursion with the uncorrected last case applied throughout."""
    _check_pair(x, y)
    return BiLaurent.from_dict(dict(_lie(x.x.images, y.x.images, x.d, None, "min", "uncorrected")), VT)


def recursion_total_space(x: PWElement, y: PWElement, descent: int | None = None) -> BiLaurent:
    """(v^{-1} t + v) P(xs, y) + P(xs, ys) in the last recursion case.

    This is the bigraded size of the cone whose cohomology is P(x, y).  In the
    other cases there is no cone and P(x, y) itself is returned.
    """
    _check_pair(x, y)
    d = x.d
    xs_, ys_, s = _step(x.x, y.x, descent, "min")
    last_case = (
        s is not None
        and x.x != y.x
        and bruhat_leq(y.x, x.x)
        and length(ys_) > length(y.x)
        and _is_pw(ys_, d)
    )
    if not last_case:
        return mixpol_lie(x, y)
    p1 = mixpol_lie(PWElement(xs_, d), y)
    p2 = mixpol_lie(PWElement(xs_, d), PWElement(ys_, d))
    return (_mono(-1, 1) + _mono(1, 0)) * p1 + p2


def _check_pair(x: PWElement, y: PWElement) -> None:
    if (x.n, x.d) != (y.n, y.d):
        raise ValueError("labels live in different Grassmannians")


def _step(x: Permutation, y: Permutation, descent: int | None, rule: str):
    desc = right_descents(x)
    if not desc:
        return x, y, None
    if descent is None:
        s = desc[0] if rule == "min" else desc[-1]
    elif descent in desc:
        s = descent
    else:
        raise ValueError(f"s{descent} is not a right descent of {x}")
    return _times_s(x, s), _times_s(y, s), s


@lru_cache(maxsize=None)
def _lie(
    x: tuple[int, ...], y: tuple[int, ...], d: int, descent: int | None, rule: str, formula: str
) -> tuple[tuple[tuple[int, int], int], ...]:
    X, Y = Permutation(x), Permutation(y)
    if x == y:
        return (((0, 0), 1),)
    if not bruhat_leq(Y, X):
        return ()
    xs, ys, _ = _step(X, Y, descent, rule)
    rec = lambda a, b: BiLaurent(_lie(a.images, b.images, d, None, rule, formula), VT)
    if length(ys) < length(Y):
        if not _is_pw(ys, d):
            raise AssertionError(f"{ys} should be a label")
        out = rec(xs, ys)
    elif not _is_pw(ys, d):
        out = _mono(-1, 1) * rec(xs, Y)
    elif formula == "uncorrected" or not bruhat_leq(ys, xs):
        out = (_mono(-1, 1) + _mono(1, 0)) * rec(xs, Y) + rec(xs, ys)
    else:
        out = (_mono(-1, 1) - _mono(1, -1)) * rec(xs, Y) + rec(xs, ys)
    return out.terms


def shelton_dims(x: PWElement, y: PWElement) -> dict[int, int]:
    """Ext dimensions e(x, y)^r by the ungraded four-case recursion."""
    _check_pair(x, y)
    return dict(_shelton(x.x.images, y.x.images, x.d))


@lru_cache(maxsize=None)
def _shelton(x: tuple[int, ...], y: tuple[int, ...], d: int) -> tuple[tuple[int, int], ...]:
    X, Y = Permutation(x), Permutation(y)
    if x == y:
        return ((0, 1),)
    if not bruhat_leq(Y, X):
        return ()
    xs, ys, _ = _step(X, Y, None, "min")
    e_y = defaultdict(int, _shelton(xs.images, y, d))
    out: dict[int, int] = defaultdict(int)
    if length(ys) < length(Y):
        out.update(_shelton(xs.images, ys.images, d))
    elif not _is_pw(ys, d):
        for r, c in e_y.items():
            out[r + 1] += c
    elif not bruhat_leq(ys, xs):
        for r, c in e_y.items():
            out[r + 1] += c
            out[r] += c
    else:
        e_ys = dict(_shelton(xs.images, ys.images, d))
        degrees = set(e_ys) | {r + 1 for r in e_y} | {r - 1 for r in e_y}
        for r in degrees:
            out[r] = e_y[r - 1] - e_y[r + 1] + e_ys.get(r, 0)
            if out[r] < 0:
                raise AssertionError(f"negative Ext dimension at r={r} for ({X}, {Y})")
    return tuple(sorted((r, c) for r, c in out.items() if c))


def ext_profile(p: BiLaurent) -> dict[int, int]:
    """Coefficients of t^r after setting v = 1."""
    return {e: c for e, c in eval_first(p, 1).coeffs}


@dataclass(frozen=True)
class CrossCheck:
    ok: bool
    lie: BiLaurent
    geometric: BiLaurent
    shape: Shape


def crosscheck(x: PWElement, y: PWElement) -> CrossCheck:
    """Compare (u t)^L P(x, y)[v -> u^{-1}] with the model polynomial of R(psi x, psi y)[q -> u^2]."""
    _check_pair(x, y)
    sh = Shape(x.n, psi(x), psi(y))
    L = length(x.x) - length(y.x)
    lie = mixpol_lie(x, y)
    lhs = BiLaurent.monomial(L, L, 1, UT) * substitute(lie, {"v": BiLaurent.monomial(-1, 0, 1, UT)})
    if sh.leq():
        geom = model_mixpol(sh)
        rhs = substitute(geom, {"q": BiLaurent.monomial(2, 0, 1, UT)})
    else:
        rhs = BiLaurent(names=UT)
    return CrossCheck(lhs == rhs, lhs, rhs, sh)


@dataclass(frozen=True)
class GJReport:
    shape: Shape
    point_count: Laurent
    ext_profile: dict[int, int]
    euler_consistent: bool
    asymmetric: bool

    def as_dict(self) -> dict:
        return {
            "shape": {"n": self.shape.n, "I": list(self.shape.I), "J": list(self.shape.J)},
            "point_count": str(self.point_count),
            "ext_profile": {str(k): v for k, v in sorted(self.ext_profile.items())},
            "euler_consistent": self.euler_consistent,
            "asymmetric": self.asymmetric,
        }


def gj_report(x: PWElement, y: PWElement) -> GJReport:
    """Point-count specialization (t = -1) beside the Ext profile (v = 1).

    ``euler_consistent`` checks that both specializations agree at q = 1.
    ``asymmetric`` flags pairs where the point count hides Ext classes through
    cancellation: the total Ext dimension exceeds the sum of absolute values of
    the point-count coefficients.
    """
    _check_pair(x, y)
    sh = Shape(x.n, psi(x), psi(y))
    counts = eval_t(model_mixpol(sh), -1) if sh.leq() else Laurent()
    prof = ext_profile(mixpol_lie(x, y))
    L = length(x.x) - length(y.x)
    euler = (-1) ** L * sum(c * (-1) ** r for r, c in prof.items())
    seen = sum(abs(c) for _, c in counts.coeffs)
    return GJReport(sh, counts, prof, euler == counts(1), sum(prof.values()) != seen)
