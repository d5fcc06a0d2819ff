"""Incidence algebras of Boolean lattices.

The algebra has basis ``e_{Y,Z}`` for ``Y ⊆ Z ⊆ X`` and multiplication
``e_{K,M} e_{L,J} = e_{K,J}`` if ``M = L`` and zero otherwise.  These are the
matrix units of upper triangular matrices with rows and columns indexed by
subsets, so ``e_{Y,Y} A`` is spanned by the ``e_{Y,Z}`` with ``Z ⊇ Y``.

Two-sided ideals generated by sums of the ``e_{Y,Y}`` are spanned by basis
pairs, and so are their quotients, which is what lets :func:`heredity_check`
work with sets of pairs instead of general subspaces.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

import sympy

from .characters import ThetaContext
from .errors import AlgebraMismatch, CapExceeded, InvalidSubset
from .subsets import compress, expand, fmt, is_subset, members, popcount, submasks, supermasks

MAX_N = 12

Pair = tuple[int, int]


class IncidenceAlgebra:
    """The algebra of upper triangular matrices over subsets of an ``n``-set."""

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("n must be nonnegative")
        if n > MAX_N:
            raise CapExceeded(f"n = {n} exceeds the basis cap (n <= {MAX_N})")
        self.n = n
        self.full = (1 << n) - 1
        self.basis: list[Pair] = [(Y, Z) for Z in range(self.full + 1) for Y in submasks(Z)]
        self.basis.sort()
        self.index = {b: k for k, b in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        return isinstance(other, IncidenceAlgebra) and other.n == self.n

    def __hash__(self):
        return hash(("incidence", self.n))

    def e(self, Y: int, Z: int, c=1) -> "AlgElement":
        if not is_subset(Y, Z) or not is_subset(Z, self.full):
            raise InvalidSubset(f"e_({fmt(Y)},{fmt(Z)}) is not a basis element")
        return AlgElement(self, {(Y, Z): Fraction(c)})

    def one(self) -> "AlgElement":
        return AlgElement(self, {(Y, Y): Fraction(1) for Y in range(self.full + 1)})

    def zero(self) -> "AlgElement":
        return AlgElement(self, {})

    def random_element(self, rng: random.Random, density: float = 0.5, spread: int = 5) -> "AlgElement":
        coeffs = {}
        for b in self.basis:
            if rng.random() < density:
                coeffs[b] = Fraction(rng.randint(-spread, spread), rng.randint(1, 3))
        return AlgElement(self, coeffs)

    def structure_constant(self, a: Pair, b: Pair) -> Pair | None:
        """Basis pair of ``e_a e_b`` or ``None`` when the product vanishes."""
        return (a[0], b[1]) if a[1] == b[0] else None

    def radical(self) -> list[Pair]:
        return [b for b in self.basis if b[0] != b[1]]

    def radical_powers(self) -> list[int]:
        """Dimensions of ``Rad^1, Rad^2, ...`` up to and including the first zero power."""
        rad = set(self.radical())
        dims = []
        cur = rad
        while True:
            dims.append(len(cur))
            if not cur:
                return dims
            cur = mono_product(cur, rad)

    def idempotent(self, Y: int) -> "AlgElement":
        return self.e(Y, Y)

    def cartan_matrix(self) -> list[list[int]]:
        """``dim e_Y A e_Z`` computed from products of basis elements."""
        N = self.full + 1
        out = [[0] * N for _ in range(N)]
        for b in self.basis:
            for Y in range(N):
                if self.structure_constant((Y, Y), b) != b:
                    continue
                for Z in range(N):
                    if self.structure_constant(b, (Z, Z)) == b:
                        out[Y][Z] += 1
        return out


@dataclass
class AlgElement:
    algebra: IncidenceAlgebra
    coeffs: dict[Pair, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {k: Fraction(v) for k, v in self.coeffs.items() if v != 0}

    def _same(self, other: "AlgElement"):
        if not isinstance(other, AlgElement) or other.algebra != self.algebra:
            raise AlgebraMismatch("elements belong to different algebras")

    def __add__(self, other: "AlgElement") -> "AlgElement":
        self._same(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return AlgElement(self.algebra, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "AlgElement":
        c = Fraction(c)
        return AlgElement(self.algebra, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other: "AlgElement") -> "AlgElement":
        self._same(other)
        by_start = defaultdict(list)
        for (L, J), v in other.coeffs.items():
            by_start[L].append((J, v))
        out: dict[Pair, Fraction] = {}
        for (K, M), u in self.coeffs.items():
            for J, v in by_start.get(M, ()):
                out[(K, J)] = out.get((K, J), 0) + u * v
        return AlgElement(self.algebra, out)

    def __eq__(self, other):
        return isinstance(other, AlgElement) and other.algebra == self.algebra and other.coeffs == self.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs


def build_incidence(n: int) -> IncidenceAlgebra:
    return IncidenceAlgebra(n)


def mono_product(S: Iterable[Pair], T: Iterable[Pair], killed: frozenset | set = frozenset()) -> set[Pair]:
    """Span of products of two monomial subspaces, as a set of basis pairs."""
    by_start = defaultdict(list)
    for L, J in T:
        by_start[L].append(J)
    out = set()
    for K, M in S:
        for J in by_start.get(M, ()):
            if (K, J) not in killed:
                out.add((K, J))
    return out


# projectives and the module of Hom(Delta_J, I_theta) -------------------------

@dataclass(frozen=True)
class ProjectiveModule:
    """The right ideal ``e_{Y,Y} A`` with basis ``e_{Y,Z}``, ``Z ⊇ Y``."""

    n: int
    top: int
    basis: tuple[Pair, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def multiplicities(self) -> dict[int, int]:
        """``[P(Y) : L(Z)] = dim e_Y A e_Z``."""
        out = {Z: 0 for Z in range(1 << self.n)}
        for _, Z in self.basis:
            out[Z] += 1
        return out


def projective(alg: IncidenceAlgebra, Y: int) -> ProjectiveModule:
    if not is_subset(Y, alg.full):
        raise InvalidSubset(f"{fmt(Y)} is not a subset of the ground set")
    e = (Y, Y)
    basis = tuple(b for b in alg.basis if alg.structure_constant(e, b) == b)
    return ProjectiveModule(alg.n, Y, basis)


class DeltaHomModule:
    """Left module with basis ``f_K`` (``K ⊇ J``) and the action
    ``e_{L,M} f_K = f_L`` if ``K = M`` and ``L ⊇ J``, else 0.
    """

    def __init__(self, alg: IncidenceAlgebra, J: int):
        self.alg, self.J = alg, J
        self.basis = list(supermasks(J, alg.full))

    def act(self, b: Pair, K: int) -> int | None:
        L, M = b
        return L if K == M and is_subset(self.J, L) else None

    def act_element(self, x: AlgElement, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for b, c in x.coeffs.items():
            for K, v in vec.items():
                L = self.act(b, K)
                if L is not None:
                    out[L] = out.get(L, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def module_axioms_hold(self) -> bool:
        """``a(b f) = (ab) f`` on all basis triples and ``1 f = f``."""
        alg = self.alg
        for K in self.basis:
            if self.act_element(alg.one(), {K: Fraction(1)}) != {K: Fraction(1)}:
                return False
            for a in alg.basis:
                for b in alg.basis:
                    inner = self.act(b, K)
                    lhs = self.act(a, inner) if inner is not None else None
                    ab = alg.structure_constant(a, b)
                    rhs = self.act(ab, K) if ab is not None else None
                    if lhs != rhs:
                        return False
        return True

    def dual_matches_projective(self) -> bool:
        """The dual right module is ``e_J A`` under ``f~_K -> e_{J,K}``.

        The right action on the dual basis is ``(f~_K . a)(f_{K'}) = f~_K(a f_{K'})``.
        """
        alg = self.alg
        for K in self.basis:
            for b in alg.basis:
                # dual action: coefficient of f~_{K'} in f~_K . b
                image = [Kp for Kp in self.basis if self.act(b, Kp) == K]
                lhs = image[0] if image else None
                prod = alg.structure_constant((self.J, K), b)
                rhs = prod[1] if prod is not None else None
                if len(image) > 1 or lhs != rhs:
                    return False
        return True


# A_theta ------------------------------------------------------------------------

class ThetaAlgebra:
    """Algebra with basis ``phi_{K ⊆ J}`` for ``K ⊆ J ⊆ I(theta)``.

    Multiplication is ``phi_{K⊆M} phi_{L⊆J} = phi_{K⊆J}`` when ``L = M``.
    Subsets are genuine masks in the index set of the root datum.
    """

    def __init__(self, itheta: int):
        self.itheta = itheta
        self.basis = sorted((K, J) for J in submasks(itheta) for K in submasks(J))

    def product(self, a: Pair, b: Pair) -> Pair | None:
        (K, M), (L, J) = a, b
        return (K, J) if L == M else None

    def to_incidence(self, a: Pair) -> Pair:
        return (compress(a[0], self.itheta), compress(a[1], self.itheta))

    def from_incidence(self, b: Pair) -> Pair:
        return (expand(b[0], self.itheta), expand(b[1], self.itheta))


@dataclass
class ThetaAlgebraReport:
    itheta: int
    n: int
    dim: int
    constants_match: bool
    bijective: bool


def build_A_theta(ctx: ThetaContext) -> tuple[ThetaAlgebra, IncidenceAlgebra, ThetaAlgebraReport]:
    """``A_theta`` together with the incidence algebra it maps onto, and a check report."""
    n = popcount(ctx.itheta)
    inc = IncidenceAlgebra(n)
    A = ThetaAlgebra(ctx.itheta)
    images = [A.to_incidence(b) for b in A.basis]
    bijective = sorted(images) == inc.basis and all(A.from_incidence(A.to_incidence(b)) == b for b in A.basis)
    ok = True
    for a in A.basis:
        for b in A.basis:
            p = A.product(a, b)
            q = inc.structure_constant(A.to_incidence(a), A.to_incidence(b))
            if (None if p is None else A.to_incidence(p)) != q:
                ok = False
    return A, inc, ThetaAlgebraReport(ctx.itheta, n, len(A.basis), ok, bijective)


def structure_table(basis: list[Pair], product) -> dict[tuple[int, int], int | None]:
    """Structure constants in terms of basis positions, for comparing algebras."""
    pos = {b: k for k, b in enumerate(basis)}
    table = {}
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            p = product(a, b)
            table[(i, j)] = None if p is None else pos[p]
    return table


# quasi-heredity ----------------------------------------------------------------------

@dataclass
class HeredityLayer:
    weight: int
    ideal_dim: int
    idempotent_ideal: bool
    corner_is_field: bool
    radical_sandwich_zero: bool
    projective: bool

    @property
    def passed(self) -> bool:
        return self.idempotent_ideal and self.corner_is_field and self.radical_sandwich_zero and self.projective

    def to_json(self) -> dict:
        return {
            "weight": members(self.weight),
            "idealDim": self.ideal_dim,
            "idempotentIdeal": self.idempotent_ideal,
            "cornerIsField": self.corner_is_field,
            "radicalSandwichZero": self.radical_sandwich_zero,
            "projective": self.projective,
            "pass": self.passed,
        }


def increasing_order(n: int) -> list[int]:
    """Weights ordered by increasing ``|J|`` (maximal weights first)."""
    return sorted(range(1 << n), key=lambda J: (popcount(J), J))


def heredity_check(alg: IncidenceAlgebra, order: list[int]) -> list[HeredityLayer]:
    """Check the chain ``A e_1 A ⊂ A (e_1 + e_2) A ⊂ ...`` layer by layer.

    In ``B = A / J_{t-1}`` with ``e`` the image of ``e_{Y,Y}`` for the ``t``-th weight ``Y``:

    * ``(BeB)^2 = BeB``;
    * ``eBe`` is the ground field, so ``e rad(B) e = 0``;
    * ``BeB rad(B) BeB = 0``;
    * ``BeB`` is projective as a left ``B``-module, tested through the
      multiplication map ``Be ⊗_{eBe} eB -> BeB`` being bijective.
    """
    if sorted(order) != list(range(alg.full + 1)):
        raise ValueError("order must list every subset exactly once")
    killed: set[Pair] = set()
    layers = []
    for Y in order:
        alive = [b for b in alg.basis if b not in killed]
        e = {(Y, Y)} - killed
        Be = mono_product(alive, e, killed)
        eB = mono_product(e, alive, killed)
        ideal = mono_product(Be, eB, killed)
        square = mono_product(ideal, ideal, killed)
        rad = [b for b in alive if b[0] != b[1]]
        corner = mono_product(eB, e, killed)
        sandwich = mono_product(mono_product(ideal, rad, killed), ideal, killed)
        # left B-module generated by e; Be ⊗ eB has dimension |Be| |eB| when eBe = k
        projective_ok = len(corner) == 1 and len(Be) * len(eB) == len(ideal)
        layers.append(
            HeredityLayer(
                weight=Y,
                ideal_dim=len(ideal),
                idempotent_ideal=square == ideal and bool(ideal),
                corner_is_field=corner == {(Y, Y)},
                radical_sandwich_zero=not sandwich,
                projective=projective_ok,
            )
        )
        killed |= ideal
    return layers


# reciprocity -------------------------------------------------------------------------

@dataclass
class ReciprocityReport:
    projective_table: list[list[int]]
    injective_table: list[list[int]]
    containment: list[list[int]]

    @property
    def passed(self) -> bool:
        N = len(self.containment)
        return all(
            self.projective_table[J][K] == self.injective_table[K][J] == self.containment[J][K]
            for J in range(N) for K in range(N)
        )


def reciprocity_check(alg: IncidenceAlgebra) -> ReciprocityReport:
    """``[P(J):L(K)]`` from ``A``, ``[I(K):L(J)]`` from the opposite algebra."""
    N = alg.full + 1

    def opp(a, b):
        return alg.structure_constant(b, a)

    P = [[0] * N for _ in range(N)]
    for J in range(N):
        for b in alg.basis:
            if alg.structure_constant((J, J), b) == b:
                # b lies in e_J A; its L-factor is read off by the right idempotent
                for K in range(N):
                    if alg.structure_constant(b, (K, K)) == b:
                        P[J][K] += 1
    # I(K) = D(e_K A^op): factors of e_K A^op counted by e_K ∘ A^op ∘ e_J
    I = [[0] * N for _ in range(N)]
    for K in range(N):
        for b in alg.basis:
            if opp((K, K), b) == b:
                for J in range(N):
                    if opp(b, (J, J)) == b:
                        I[K][J] += 1
    cont = [[int(is_subset(J, K)) for K in range(N)] for J in range(N)]
    return ReciprocityReport(P, I, cont)


def cartan_determinant(alg: IncidenceAlgebra) -> int:
    return int(sympy.Matrix(alg.cartan_matrix()).det())


# weight poset ------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightPoset:
    """Subsets of ``I(theta)`` with ``J1 <= J2`` iff ``J1 ⊇ J2``."""

    itheta: int

    @property
    def elements(self) -> list[int]:
        return list(submasks(self.itheta))

    def leq(self, a: int, b: int) -> bool:
        return is_subset(b, a)

    @property
    def maximum(self) -> int:
        return 0

    @property
    def minimum(self) -> int:
        return self.itheta

    def is_linear_extension(self, order: list[int]) -> bool:
        """True when every element precedes all elements below it (maximal first)."""
        pos = {J: k for k, J in enumerate(order)}
        if sorted(pos) != sorted(self.elements):
            return False
        return all(pos[a] <= pos[b] for a in self.elements for b in self.elements if self.leq(b, a))
