"""Dimension polynomials and composition-factor vectors.

Dimensions are polynomials in ``v = q^a``, the size of the level-``a`` field.
A :class:`GrothClass` lives in the block of a fixed character and records the
multiplicity of each irreducible ``E(theta)_J``, ``J ⊆ I(theta)``.

Multiplicities for ``Delta(theta)_J`` are taken to be one on ``K ⊇ J``.  The
factor set is known and multiplicity one inside ``M(theta)`` bounds each
entry by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .characters import CharacterValue, ThetaContext
from .errors import InvalidSubset
from .subsets import fmt, is_subset, submasks
from .weyl_sets import y_set, z_set


class IntPoly:
    """Dense integer polynomial in ``v`` with no trailing zero coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls([0] * k + [c])

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> "IntPoly":
        out: list[int] = []
        for e in exps:
            if e >= len(out):
                out.extend([0] * (e + 1 - len(out)))
            out[e] += 1
        return cls(out)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(x + (b[k] if k < len(b) else 0) for k, x in enumerate(a))

    def __neg__(self):
        return IntPoly(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPoly(out)

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, v: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "IntPoly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*v^{k}" if c != 1 else f"v^{k}")
        return "IntPoly(" + " + ".join(terms) + ")"


def poly_sum(polys: Iterable[IntPoly]) -> IntPoly:
    acc = IntPoly()
    for p in polys:
        acc = acc + p
    return acc


class Kind(str, Enum):
    M = "M"
    E = "E"
    DELTA = "Delta"
    NABLA = "Nabla"
    PARA_M = "ParaM"


@dataclass(frozen=True)
class ModuleLabel:
    kind: Kind
    theta: CharacterValue
    subset: int = 0

    def render(self) -> str:
        if self.kind is Kind.M:
            return "M(theta)"
        if self.kind is Kind.PARA_M:
            return f"M(theta,{fmt(self.subset)})"
        return f"{self.kind.value}(theta)_{fmt(self.subset)}"


@dataclass(frozen=True)
class GrothClass:
    """Multiplicities indexed by submasks of ``itheta`` (increasing mask order)."""

    itheta: int
    entries: tuple[int, ...]

    @property
    def index(self) -> list[int]:
        return list(submasks(self.itheta))

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.index, self.entries))

    def __add__(self, other: "GrothClass") -> "GrothClass":
        if self.itheta != other.itheta:
            raise ValueError("classes from different blocks")
        return GrothClass(self.itheta, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def total(self) -> int:
        return sum(self.entries)


def _check(J: int, ctx: ThetaContext, name: str):
    if not is_subset(J, ctx.itheta):
        raise InvalidSubset(f"{name} = {fmt(J)} is not contained in I(theta) = {fmt(ctx.itheta)}")


def dim_M(ctx: ThetaContext) -> IntPoly:
    """Poincaré polynomial of W."""
    return IntPoly.from_exponents(ctx.W.lengths)


def dim_E(ctx: ThetaContext, J: int) -> IntPoly:
    """``sum over w in Z_J of v^{l(w_J w^{-1})}``."""
    _check(J, ctx, "J")
    W = ctx.W
    wJ = W.longest_element(J)
    return IntPoly.from_exponents(W.lengths[W.mul(wJ, W.inverse[w])] for w in z_set(J, ctx))


def dim_para_M(ctx: ThetaContext, K: int) -> IntPoly:
    """``sum over w in Y_K of v^{l(w)}``."""
    _check(K, ctx, "K")
    W = ctx.W
    return IntPoly.from_exponents(W.lengths[w] for w in y_set(K, W))


def comp_factors(label: ModuleLabel, itheta: int) -> GrothClass:
    """Composition-factor vector of a labelled module in its block."""
    S = label.subset
    if label.kind is not Kind.M and not is_subset(S, itheta):
        raise InvalidSubset(f"subset {fmt(S)} is not contained in I(theta) = {fmt(itheta)}")
    rest = itheta & ~S
    rule = {
        Kind.M: lambda J: True,
        Kind.E: lambda J: J == S,
        Kind.DELTA: lambda J: is_subset(S, J),
        Kind.NABLA: lambda J: is_subset(J, S),
        Kind.PARA_M: lambda J: is_subset(J, rest),
    }[label.kind]
    return GrothClass(itheta, tuple(int(rule(J)) for J in submasks(itheta)))


def dim_of_class(cls: GrothClass, ctx: ThetaContext) -> IntPoly:
    """Pair a class with the irreducible dimensions."""
    return poly_sum(IntPoly([c]) * dim_E(ctx, J) for J, c in cls.as_dict().items() if c)


def sum_identity(ctx: ThetaContext) -> bool:
    return poly_sum(dim_E(ctx, J) for J in submasks(ctx.itheta)) == dim_M(ctx)


def parabolic_identity(ctx: ThetaContext, K: int) -> bool:
    rest = ctx.itheta & ~K
    return dim_para_M(ctx, K) == poly_sum(dim_E(ctx, J) for J in submasks(rest))
