"""Exact two-variable Laurent polynomials with integer coefficients."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

Exps = tuple[int, int]


@dataclass(frozen=True)
class BiLaurent:
    terms: tuple[tuple[Exps, int], ...] = ()
    names: tuple[str, str] = ("q", "t")

    def __post_init__(self) -> None:
        merged: dict[Exps, int] = defaultdict(int)
        for (a, b), c in self.terms:
            merged[(int(a), int(b))] += int(c)
        canon = tuple(sorted(((e, c) for e, c in merged.items() if c), reverse=True))
        object.__setattr__(self, "terms", canon)

    @classmethod
    def from_dict(cls, d: Mapping[Exps, int], names: tuple[str, str] = ("q", "t")) -> "BiLaurent":
        return cls(tuple(d.items()), names)

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1, names: tuple[str, str] = ("q", "t")) -> "BiLaurent":
        return cls((((a, b), c),), names)

    @classmethod
    def const(cls, c: int, names: tuple[str, str] = ("q", "t")) -> "BiLaurent":
        return cls((((0, 0), c),), names)

    def as_dict(self) -> dict[Exps, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, a: int, b: int) -> int:
        return self.as_dict().get((a, b), 0)

    def _lift(self, other: "Scalar") -> "BiLaurent":
        if isinstance(other, BiLaurent):
            if other.names != self.names and other.terms and self.terms:
                raise ValueError(f"variable mismatch {self.names} vs {other.names}")
            return other
        return BiLaurent.const(int(other), self.names)

    def __add__(self, other: "Scalar") -> "BiLaurent":
        o = self._lift(other)
        names = self.names if self.terms else o.names
        return BiLaurent(self.terms + o.terms, names)

    __radd__ = __add__

    def __neg__(self) -> "BiLaurent":
        return BiLaurent(tuple((e, -c) for e, c in self.terms), self.names)

    def __sub__(self, other: "Scalar") -> "BiLaurent":
        return self + (-self._lift(other))

    def __rsub__(self, other: "Scalar") -> "BiLaurent":
        return self._lift(other) - self

    def __mul__(self, other: "Scalar") -> "BiLaurent":
        o = self._lift(other)
        out: dict[Exps, int] = defaultdict(int)
        for (a1, b1), c1 in self.terms:
            for (a2, b2), c2 in o.terms:
                out[(a1 + a2, b1 + b2)] += c1 * c2
        names = self.names if self.terms else o.names
        return BiLaurent.from_dict(out, names)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiLaurent":
        if k < 0:
            if len(self.terms) != 1 or abs(self.terms[0][1]) != 1:
                raise ValueError("negative powers need a unit monomial")
            (a, b), c = self.terms[0]
            return BiLaurent.monomial(a * k, b * k, c ** (-k), self.names)
        out = BiLaurent.const(1, self.names)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BiLaurent.const(other, self.names)
        if not isinstance(other, BiLaurent):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.terms == other.terms and self.names == other.names

    def __hash__(self) -> int:
        return hash((self.terms, self.names))

    def __str__(self) -> str:
        return to_text(self)

    def to_json(self) -> list[list[int]]:
        return [[a, b, c] for (a, b), c in self.terms]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]], names: tuple[str, str] = ("q", "t")) -> "BiLaurent":
        return cls(tuple(((a, b), c) for a, b, c in data), names)


Scalar = Union[BiLaurent, int]


def _power(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


def to_text(p: BiLaurent) -> str:
    """Canonical form ``c q^a t^b + ...`` with exponents in descending lex order."""
    if not p.terms:
        return "0"
    parts: list[str] = []
    for (a, b), c in p.terms:
        mono = " ".join(x for x in (_power(p.names[0], a), _power(p.names[1], b)) if x)
        mag = abs(c)
        body = mono if mag == 1 and mono else (f"{mag} {mono}" if mono else str(mag))
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


@dataclass(frozen=True)
class Laurent:
    """Univariate Laurent polynomial, the result of specializing t."""

    coeffs: tuple[tuple[int, int], ...] = ()
    name: str = "q"

    def __post_init__(self) -> None:
        merged: dict[int, int] = defaultdict(int)
        for e, c in self.coeffs:
            merged[int(e)] += int(c)
        object.__setattr__(
            self, "coeffs", tuple(sorted(((e, c) for e, c in merged.items() if c), reverse=True))
        )

    def __call__(self, x: int) -> Union[int, "Fraction"]:
        from fractions import Fraction

        total = Fraction(0)
        for e, c in self.coeffs:
            total += c * Fraction(x) ** e
        return int(total) if total.denominator == 1 else total

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Laurent(((0, other),), self.name)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        return to_text(BiLaurent(tuple(((e, 0), c) for e, c in self.coeffs), (self.name, "_")))


def eval_t(p: BiLaurent, t0: int) -> Laurent:
    if t0 == 0 and any(b < 0 for (_, b), _ in p.terms):
        raise ZeroDivisionError("negative t-exponent at t = 0")
    out: dict[int, int] = defaultdict(int)
    for (a, b), c in p.terms:
        if b < 0:
            if t0 not in (1, -1):
                raise ValueError("non-unit t0 with negative t-exponents leaves Z")
            out[a] += c * t0 ** (-b)
        else:
            out[a] += c * t0**b
    return Laurent(tuple(out.items()), p.names[0])


def eval_first(p: BiLaurent, x0: int) -> Laurent:
    """Specialize the first variable, keeping the second."""
    swapped = BiLaurent(tuple(((b, a), c) for (a, b), c in p.terms), (p.names[1], p.names[0]))
    return eval_t(swapped, x0)


def substitute(p: BiLaurent, rule: Mapping[str, BiLaurent], names: tuple[str, str] | None = None) -> BiLaurent:
    """Rewrite each variable named in ``rule`` as a monomial in the new variables."""
    for var, mono in rule.items():
        if var not in p.names:
            raise ValueError(f"unknown variable {var!r}; have {p.names}")
        if len(mono.terms) != 1 or mono.terms[0][1] != 1:
            raise ValueError(f"rule for {var!r} is not a monomial: {mono}")
    if names is None:
        images = [rule[v] for v in p.names if v in rule]
        names = images[0].names if images else p.names
    targets = []
    for idx, var in enumerate(p.names):
        if var in rule:
            if rule[var].names != names:
                raise ValueError(f"rule for {var!r} uses {rule[var].names}, expected {names}")
            targets.append(rule[var].terms[0][0])
        else:
            if var != names[idx]:
                raise ValueError(f"variable {var!r} kept but target names are {names}")
            targets.append((1, 0) if idx == 0 else (0, 1))
    (x1, x2), (y1, y2) = targets
    return BiLaurent(tuple(((a * x1 + b * y1, a * x2 + b * y2), c) for (a, b), c in p.terms), names)
