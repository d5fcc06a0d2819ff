"""Matrix representations of bound quivers over Q or a prime field.

A representation assigns a space ``k^{d_v}`` to each vertex and a
``d_t x d_s`` matrix to each arrow ``s -> t``.  Homomorphisms are tuples of
vertex matrices ``phi_v`` with ``phi_t f = g phi_s`` on every arrow.

Indecomposability is decided through the radical ``J`` of the endomorphism
ring ``E``:

* over Q, ``J`` is the kernel of the trace form ``(a, b) -> tr(ab)``;
* over F_p, ``J`` comes from the Cohen-Ivanyos-Wales refinement of the trace
  form using integer lifts and traces of ``p^i``-th powers.

The candidate is always checked to be a nilpotent ideal.  ``E`` is local
(the representation is indecomposable) when ``E/J`` is the ground field, or
more generally a field, certified by an element whose minimal polynomial
modulo ``J`` is irreducible of degree ``dim E/J``.  A "no" answer is always
backed by an explicit endomorphism whose minimal polynomial has two coprime
factors; it splits the representation into primary components.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import fields as fl
from .bound_quiver import BoundQuiver, hasse_quiver
from .errors import DecompositionFailed, FieldMismatch, ShapeMismatch
from .fields import Field, PrimeField, parse_field
from .subsets import is_subset, popcount

Arrow = tuple[int, int]


class Answer(str, Enum):
    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"


@dataclass
class QuiverRep:
    quiver: BoundQuiver
    field: Field
    dims: dict[int, int]
    maps: dict[Arrow, np.ndarray]

    def __post_init__(self):
        self.dims = {v: int(self.dims.get(v, 0)) for v in self.quiver.vertices}
        fixed = {}
        for a in self.quiver.arrows:
            shape = (self.dims[a[1]], self.dims[a[0]])
            m = self.maps.get(a)
            if m is None:
                fixed[a] = self.field.zeros(shape)
                continue
            if isinstance(m, np.ndarray) and m.dtype == self.field.zeros(0).dtype:
                m = self.field.reduce(m)
            else:
                m = self.field.array(m)
            if m.size == 0 and shape[0] * shape[1] == 0:
                m = self.field.zeros(shape)
            if m.shape != shape:
                raise ShapeMismatch(f"arrow {a[0]}->{a[1]} needs a {shape[0]}x{shape[1]} matrix, got {m.shape}")
            fixed[a] = m
        extra = set(self.maps) - set(self.quiver.arrows)
        if extra:
            raise ShapeMismatch(f"maps given for non-arrows {sorted(extra)}")
        self.maps = fixed

    # basic data --------------------------------------------------------------
    @property
    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.quiver.vertices)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_map(self, path: Sequence[int]) -> np.ndarray:
        F = self.field
        M = F.eye(self.dims[path[0]])
        for s, t in zip(path, path[1:]):
            M = fl.matmul(self.maps[(s, t)], M, F)
        return M

    def check_relations(self) -> bool:
        for w1, w2 in self.quiver.relations:
            if not np.array_equal(self.path_map(w1), self.path_map(w2)):
                return False
        return True

    def direct_sum(self, other: "QuiverRep") -> "QuiverRep":
        self.field.check_same(other.field)
        F = self.field
        dims = {v: self.dims[v] + other.dims[v] for v in self.quiver.vertices}
        maps = {}
        for a in self.quiver.arrows:
            A, B = self.maps[a], other.maps[a]
            M = F.zeros((A.shape[0] + B.shape[0], A.shape[1] + B.shape[1]))
            M[: A.shape[0], : A.shape[1]] = A
            M[A.shape[0]:, A.shape[1]:] = B
            maps[a] = M
        return QuiverRep(self.quiver, F, dims, maps)

    def restrict(self, sub: BoundQuiver) -> "QuiverRep":
        return QuiverRep(sub, self.field, {v: self.dims[v] for v in sub.vertices}, {a: self.maps[a] for a in sub.arrows})

    def change_field(self, F: Field) -> "QuiverRep":
        """Reinterpret integer entries in another field (e.g. lift F_2 data to Q)."""
        maps = {a: F.array([[self.field.to_int(x) for x in row] for row in m]) if m.size else F.zeros(m.shape)
                for a, m in self.maps.items()}
        return QuiverRep(self.quiver, F, dict(self.dims), maps)

    def transform(self, bases: Mapping[int, np.ndarray]) -> "QuiverRep":
        """Representation obtained by base change ``g_v`` at each vertex: ``f -> g_t f g_s^{-1}``."""
        F = self.field
        maps = {}
        for (s, t), m in self.maps.items():
            inv = fl.inverse(bases[s], F)
            maps[(s, t)] = fl.matmul(fl.matmul(bases[t], m, F), inv, F)
        return QuiverRep(self.quiver, F, dict(self.dims), maps)

    # serialisation -------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "n": self.quiver.n,
            "field": self.field.tag,
            "dims": {str(v): self.dims[v] for v in self.quiver.vertices},
            "maps": {
                f"{s}->{t}": [[_json_scalar(x) for x in row] for row in self.maps[(s, t)]]
                for s, t in self.quiver.arrows
                if self.dims[s] and self.dims[t]
            },
        }

    @classmethod
    def from_json(cls, data: dict, quiver: BoundQuiver | None = None) -> "QuiverRep":
        F = parse_field(data["field"])
        quiver = quiver or hasse_quiver(int(data["n"]))
        dims = {int(k): int(v) for k, v in data["dims"].items()}
        maps = {}
        for key, rows in data.get("maps", {}).items():
            s, t = (int(x) for x in key.split("->"))
            maps[(s, t)] = F.array(rows) if rows else F.zeros((dims.get(t, 0), dims.get(s, 0)))
        return cls(quiver, F, dims, maps)

    def key(self) -> tuple:
        """Exact matrix data; equal keys mean equal representations."""
        return (self.dim_vector, tuple(tuple(int(x) if self.field.p else x for x in self.maps[a].reshape(-1)) for a in self.quiver.arrows))


def _json_scalar(x):
    if hasattr(x, "denominator") and x.denominator != 1:
        return str(x)
    return int(x)


def load_rep(path: str) -> QuiverRep:
    with open(path) as fh:
        return QuiverRep.from_json(json.load(fh))


# standard modules ------------------------------------------------------------------

def zero_rep(quiver: BoundQuiver, F: Field) -> QuiverRep:
    return QuiverRep(quiver, F, {}, {})


def thin_rep(quiver: BoundQuiver, F: Field, support: Iterable[int]) -> QuiverRep:
    """Dimension one on ``support``, identity on arrows inside it."""
    sup = set(support)
    dims = {v: int(v in sup) for v in quiver.vertices}
    maps = {a: F.eye(1) for a in quiver.arrows if a[0] in sup and a[1] in sup}
    return QuiverRep(quiver, F, dims, maps)


def simple_rep(quiver: BoundQuiver, F: Field, v: int) -> QuiverRep:
    return thin_rep(quiver, F, [v])


def interval_rep(n: int, F: Field, low: int, high: int) -> QuiverRep:
    """Thin module supported on ``[low, high]`` in the Boolean lattice."""
    Q = hasse_quiver(n)
    return thin_rep(Q, F, [v for v in Q.vertices if is_subset(low, v) and is_subset(v, high)])


def projective_rep(n: int, F: Field, Y: int) -> QuiverRep:
    """``e_{Y,Y} A``: one basis vector per ``Z ⊇ Y``."""
    return interval_rep(n, F, Y, (1 << n) - 1)


def injective_rep(n: int, F: Field, Y: int) -> QuiverRep:
    return interval_rep(n, F, 0, Y)


def regular_rep(n: int, F: Field) -> QuiverRep:
    out = zero_rep(hasse_quiver(n), F)
    for Y in range(1 << n):
        out = out.direct_sum(projective_rep(n, F, Y))
    return out


# Hom spaces --------------------------------------------------------------------------

@dataclass
class HomSpace:
    source: QuiverRep
    target: QuiverRep
    basis: list[dict[int, np.ndarray]]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combine(self, coeffs: Sequence) -> dict[int, np.ndarray]:
        F = self.source.field
        out = {v: F.zeros((self.target.dims[v], self.source.dims[v])) for v in self.source.quiver.vertices}
        for c, b in zip(coeffs, self.basis):
            if c:
                for v in out:
                    out[v] = F.reduce(out[v] + b[v] * c)
        return out


def _layout(r1: QuiverRep, r2: QuiverRep):
    offsets = {}
    pos = 0
    for v in r1.quiver.vertices:
        offsets[v] = pos
        pos += r2.dims[v] * r1.dims[v]
    return offsets, pos


def _kron(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return (A[:, None, :, None] * B[None, :, None, :]).reshape(A.shape[0] * B.shape[0], A.shape[1] * B.shape[1])


def hom(r1: QuiverRep, r2: QuiverRep) -> HomSpace:
    """Basis of ``Hom(r1, r2)`` from the intertwining equations (row-major unknowns)."""
    if r1.field != r2.field:
        raise FieldMismatch(f"cannot compare representations over {r1.field.tag} and {r2.field.tag}")
    F = r1.field
    offsets, N = _layout(r1, r2)
    blocks = []
    for a in r1.quiver.arrows:
        s, t = a
        d1s, d1t, d2s, d2t = r1.dims[s], r1.dims[t], r2.dims[s], r2.dims[t]
        if d1s == 0 or d2t == 0:
            continue
        eq = F.zeros((d2t * d1s, N))
        if d1t:
            # phi_t f  ->  kron(I, f^T) vec(phi_t)
            eq[:, offsets[t]: offsets[t] + d2t * d1t] = _kron(F.eye(d2t), r1.maps[a].T)
        if d2s:
            # g phi_s  ->  kron(g, I) vec(phi_s)
            eq[:, offsets[s]: offsets[s] + d2s * d1s] = F.reduce(eq[:, offsets[s]: offsets[s] + d2s * d1s] - _kron(r2.maps[a], F.eye(d1s)))
        blocks.append(eq)
    if N == 0:
        return HomSpace(r1, r2, [])
    A = np.vstack(blocks) if blocks else F.zeros((0, N))
    null = fl.nullspace(A, F)
    basis = []
    for row in null:
        basis.append({v: row[offsets[v]: offsets[v] + r2.dims[v] * r1.dims[v]].reshape(r2.dims[v], r1.dims[v])
                      for v in r1.quiver.vertices})
    return HomSpace(r1, r2, basis)


def hom_dim(r1: QuiverRep, r2: QuiverRep) -> int:
    return hom(r1, r2).dim


# endomorphism algebra -------------------------------------------------------------------

class EndAlgebra:
    """``End(V)`` with elements stored as flat vectors (vertex blocks, row-major)."""

    def __init__(self, rep: QuiverRep):
        self.rep = rep
        self.F = rep.field
        self.verts = [v for v in rep.quiver.vertices if rep.dims[v]]
        H = hom(rep, rep)
        self.dim = H.dim
        self.basis_maps = H.basis
        self.basis = np.vstack([self.flatten(b) for b in H.basis]) if H.basis else self.F.zeros((0, 0))
        if self.dim:
            R, piv = fl.rref(self.basis, self.F)
            self._piv = piv
            self._coord = fl.inverse(self.basis[:, piv], self.F)

    def flatten(self, blocks: Mapping[int, np.ndarray]) -> np.ndarray:
        parts = [blocks[v].reshape(-1) for v in self.verts]
        return np.concatenate(parts) if parts else self.F.zeros(0)

    def unflatten(self, vec: np.ndarray) -> dict[int, np.ndarray]:
        out, pos = {}, 0
        for v in self.verts:
            d = self.rep.dims[v]
            out[v] = vec[pos: pos + d * d].reshape(d, d)
            pos += d * d
        return out

    def identity(self) -> np.ndarray:
        return self.flatten({v: self.F.eye(self.rep.dims[v]) for v in self.verts})

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        X, Y = self.unflatten(x), self.unflatten(y)
        return self.flatten({v: fl.matmul(X[v], Y[v], self.F) for v in self.verts})

    def coords(self, x: np.ndarray) -> np.ndarray:
        return fl.matmul(x[self._piv].reshape(1, -1), self._coord, self.F).reshape(-1)

    def element(self, coeffs: Sequence) -> np.ndarray:
        return fl.matmul(self.F.array(coeffs).reshape(1, -1) if not isinstance(coeffs, np.ndarray) else coeffs.reshape(1, -1), self.basis, self.F).reshape(-1)

    def block_matrix(self, x: np.ndarray) -> np.ndarray:
        X = self.unflatten(x)
        D = sum(self.rep.dims[v] for v in self.verts)
        M = self.F.zeros((D, D))
        pos = 0
        for v in self.verts:
            d = self.rep.dims[v]
            M[pos: pos + d, pos: pos + d] = X[v]
            pos += d
        return M

    def trace(self, x: np.ndarray) -> object:
        X = self.unflatten(x)
        t = sum((X[v].trace() for v in self.verts), self.F.scalar(0))
        return self.F.reduce(t) if self.F.p else t

    def random(self, rng: np.random.Generator) -> np.ndarray:
        return self.element(self.F.random(self.dim, rng))


def _span_rows(rows: list[np.ndarray], F: Field, width: int) -> np.ndarray:
    if not rows:
        return F.zeros((0, width))
    return fl.row_space(np.vstack(rows), F)


def _radical_q(E: EndAlgebra) -> np.ndarray:
    F = E.F
    k = E.dim
    T = F.zeros((k, k))
    for i in range(k):
        for j in range(k):
            T[i, j] = E.trace(E.mul(E.basis[i], E.basis[j]))
    null = fl.nullspace(T, F)
    return fl.matmul(null, E.basis, F) if len(null) else F.zeros((0, E.basis.shape[1]))


def _int_trace_power(E: EndAlgebra, x: np.ndarray, e: int, mod: int) -> int:
    """``Tr(x~^e) mod mod`` for the integer lift ``x~`` of ``x`` (entries in [0, p))."""
    X = E.unflatten(x)
    total = 0
    for v in E.verts:
        A = X[v].astype(object)
        R = np.array(np.eye(A.shape[0], dtype=int), dtype=object)
        base, k = A % mod, e
        while k:
            if k & 1:
                R = (R @ base) % mod
            base = (base @ base) % mod
            k >>= 1
        total += int(R.trace())
    return total % mod


def _radical_fp(E: EndAlgebra) -> np.ndarray:
    F = E.F
    p = F.p
    D = sum(E.rep.dims[v] for v in E.verts)
    top = int(math.floor(math.log(D, p) + 1e-9)) if D >= 1 else 0
    current = E.basis.copy()
    for i in range(top + 1):
        if len(current) == 0:
            break
        pe, mod = p**i, p ** (i + 1)
        G = F.zeros((len(current), E.dim))
        for r, a in enumerate(current):
            for c, b in enumerate(E.basis):
                G[r, c] = (_int_trace_power(E, E.mul(a, b), pe, mod) // pe) % p
        null = fl.nullspace(G.T.copy(), F)
        current = fl.matmul(null, current, F) if len(null) else F.zeros((0, E.basis.shape[1]))
    return current


def _is_nilpotent_ideal(E: EndAlgebra, J: np.ndarray) -> bool:
    F = E.F
    width = E.basis.shape[1]
    if len(J) == 0:
        return True
    Jspan = fl.row_space(J, F)
    for a in Jspan:
        for b in E.basis:
            for prod in (E.mul(a, b), E.mul(b, a)):
                if fl.rank(np.vstack([Jspan, prod.reshape(1, -1)]), F) > len(Jspan):
                    return False
    power = Jspan
    for _ in range(sum(E.rep.dims.values()) + 1):
        rows = [E.mul(a, b) for a in power for b in Jspan]
        power = _span_rows([r for r in rows if np.any(r != 0)], F, width)
        if len(power) == 0:
            return True
    return False


def _brute_force_local(E: EndAlgebra) -> bool:
    """Finite field only: local iff non-units are closed under addition."""
    F = E.F
    nonunits = []
    for coeffs in product(range(F.p), repeat=E.dim):
        x = E.element(np.array(coeffs, dtype=np.int64))
        if not fl.is_invertible(E.block_matrix(x), F):
            nonunits.append(x)
    S = {tuple(x) for x in nonunits}
    return all(tuple(F.reduce(a + b)) in S for a in nonunits for b in nonunits)


@dataclass
class IndecResult:
    answer: Answer
    end_dim: int
    radical_dim: int | None
    method: str
    splitter: np.ndarray | None = field(default=None, repr=False)
    radical: np.ndarray | None = field(default=None, repr=False)
    end: "EndAlgebra | None" = field(default=None, repr=False)


def _split_poly(E: EndAlgebra, x: np.ndarray):
    """Coprime primary factors of the minimal polynomial of ``x``, if there are at least two."""
    mp = fl.min_poly(E.block_matrix(x), E.F)
    facs = fl.factor_poly(mp, E.F)
    return facs if len(facs) >= 2 else None


def _quotient_min_poly_degree(E: EndAlgebra, J: np.ndarray, x: np.ndarray):
    """Minimal polynomial of ``x`` in ``E / J``."""
    F = E.F
    width = E.basis.shape[1]
    Jrows = list(J)
    powers = [E.identity()]
    while True:
        nxt = E.mul(powers[-1], x)
        base = np.vstack(powers + Jrows) if Jrows or powers else F.zeros((0, width))
        c = fl.solve_in_span(base, nxt, F)
        if c is not None:
            lead = [F.scalar(F.reduce(-ci)) for ci in c[: len(powers)]]
            return lead + [F.scalar(1)]
        powers.append(nxt)


def is_indecomposable(rep: QuiverRep, seed: int = 0, tries: int = 24) -> IndecResult:
    E = EndAlgebra(rep)
    res = _decide(E, seed, tries)
    res.end = E
    return res


def _decide(E: EndAlgebra, seed: int, tries: int) -> IndecResult:
    F = E.F
    if E.dim == 0:
        return IndecResult(Answer.NO, 0, 0, "zero representation")
    rng = np.random.default_rng(seed)
    # cheap split attempts on basis elements first
    for b in E.basis:
        facs = _split_poly(E, b)
        if facs:
            return IndecResult(Answer.NO, E.dim, None, "split", splitter=b)
    J = _radical_q(E) if F.p is None else _radical_fp(E)
    method = "trace form" if F.p is None else "trace form with p-power refinement"
    if not _is_nilpotent_ideal(E, J):
        if F.p is not None and F.p ** E.dim <= 4096:
            local = _brute_force_local(E)
            return IndecResult(Answer.YES if local else Answer.NO, E.dim, None, "brute force")
        J = F.zeros((0, E.basis.shape[1]))
        method = "no radical"
    rdim = len(fl.row_space(J, F)) if len(J) else 0
    quot = E.dim - rdim
    if quot == 1:
        return IndecResult(Answer.YES, E.dim, rdim, method, radical=J)
    for _ in range(tries):
        x = E.random(rng)
        facs = _split_poly(E, x)
        if facs:
            return IndecResult(Answer.NO, E.dim, rdim, "split", splitter=x, radical=J)
        mp = _quotient_min_poly_degree(E, J, x)
        if len(mp) - 1 == quot and fl.is_irreducible(mp, F):
            return IndecResult(Answer.YES, E.dim, rdim, method + ", quotient field", radical=J)
    return IndecResult(Answer.INCONCLUSIVE, E.dim, rdim, method)


# splitting -----------------------------------------------------------------------

def subrep(rep: QuiverRep, bases: Mapping[int, np.ndarray]) -> QuiverRep:
    """Subrepresentation spanned by the columns of ``bases[v]`` (assumed invariant)."""
    F = rep.field
    dims = {v: bases[v].shape[1] for v in rep.quiver.vertices}
    maps = {}
    for a in rep.quiver.arrows:
        s, t = a
        if dims[s] == 0 or dims[t] == 0:
            continue
        img = fl.matmul(rep.maps[a], bases[s], F)
        maps[a] = _solve_columns(bases[t], img, F)
    return QuiverRep(rep.quiver, F, dims, maps)


def _solve_columns(K: np.ndarray, B: np.ndarray, F: Field) -> np.ndarray:
    """``X`` with ``K X = B`` for ``K`` of full column rank."""
    k = K.shape[1]
    R, piv = fl.rref(np.hstack([K, B]), F)
    if piv[:k] != list(range(k)) or any(c >= k for c in piv):
        raise DecompositionFailed("subspace is not invariant under an arrow")
    return R[:k, k:]


def _kernel_columns(M: np.ndarray, F: Field) -> np.ndarray:
    null = fl.nullspace(M, F)
    return null.T.copy() if len(null) else F.zeros((M.shape[1], 0))


def split_by(rep: QuiverRep, E: EndAlgebra, x: np.ndarray) -> list[QuiverRep]:
    """Primary decomposition of ``rep`` with respect to the endomorphism ``x``."""
    F = rep.field
    facs = fl.factor_poly(fl.min_poly(E.block_matrix(x), F), F)
    X = E.unflatten(x)
    parts = []
    for f, e in facs:
        g = fl.poly_pow(f, e, F)
        bases = {}
        for v in rep.quiver.vertices:
            d = rep.dims[v]
            if d == 0:
                bases[v] = F.zeros((0, 0))
                continue
            bases[v] = _kernel_columns(fl.poly_at(g, X[v], F), F)
        parts.append(subrep(rep, bases))
    if sum(p.total_dim for p in parts) != rep.total_dim:
        raise DecompositionFailed("primary components do not fill the representation")
    return parts


def decompose(rep: QuiverRep, seed: int = 0) -> list[QuiverRep]:
    """Indecomposable summands (as matrices in adapted bases), deterministic given ``seed``."""
    if rep.is_zero():
        return []
    out = []
    stack = [rep]
    k = 0
    while stack:
        r = stack.pop()
        res = is_indecomposable(r, seed=seed + k)
        k += 1
        if res.answer is Answer.YES:
            out.append(r)
        elif res.answer is Answer.NO:
            if res.splitter is None:
                raise DecompositionFailed("endomorphism ring is not local but no splitting element was found")
            stack.extend(p for p in split_by(r, res.end, res.splitter) if not p.is_zero())
        else:
            raise DecompositionFailed(f"could not decide indecomposability of a summand of dimension vector {r.dim_vector}")
    out.sort(key=lambda r: (r.dim_vector, r.key()))
    return out


# isomorphism -------------------------------------------------------------------------

def _hom_element_invertible(H: HomSpace, coeffs) -> bool:
    F = H.source.field
    phi = H.combine(coeffs)
    return all(fl.is_invertible(phi[v], F) for v in phi if H.source.dims[v])


def is_isomorphic(r1: QuiverRep, r2: QuiverRep, seed: int = 0, tries: int = 32) -> bool:
    """Exact isomorphism test.

    Filters by dimension vector and Hom dimensions, then looks for an
    invertible intertwiner.  When no random one turns up, indecomposable
    inputs are settled exactly: ``r1 ≅ r2`` iff some product ``g f`` of basis
    elements of ``Hom(r1, r2)`` and ``Hom(r2, r1)`` lies outside the radical
    of ``End(r1)``.  Other inputs are compared summand by summand.
    """
    if r1.field != r2.field:
        raise FieldMismatch("representations over different fields")
    if r1.dim_vector != r2.dim_vector:
        return False
    if r1.is_zero():
        return True
    H12, H21 = hom(r1, r2), hom(r2, r1)
    e1, e2 = hom_dim(r1, r1), hom_dim(r2, r2)
    if not (H12.dim == H21.dim == e1 == e2):
        return False
    F = r1.field
    rng = np.random.default_rng(seed)
    for b in range(H12.dim):
        coeffs = [0] * H12.dim
        coeffs[b] = 1
        if _hom_element_invertible(H12, coeffs):
            return True
    for _ in range(tries):
        if _hom_element_invertible(H12, list(F.random(H12.dim, rng))):
            return True
    res = is_indecomposable(r1, seed=seed)
    if res.answer is Answer.YES:
        E = res.end
        J = res.radical if res.radical is not None else F.zeros((0, E.basis.shape[1]))
        Jspan = fl.row_space(J, F) if len(J) else J
        for f in H12.basis:
            for g in H21.basis:
                gf = E.flatten({v: fl.matmul(g[v], f[v], F) for v in E.verts})
                stacked = np.vstack([Jspan, gf.reshape(1, -1)]) if len(Jspan) else gf.reshape(1, -1)
                if fl.rank(stacked, F) > len(Jspan):
                    return True
        return False
    if res.answer is Answer.NO:
        return same_summands(decompose(r1, seed), decompose(r2, seed), seed)
    raise DecompositionFailed("isomorphism test could not decide")


def same_summands(a: list[QuiverRep], b: list[QuiverRep], seed: int = 0) -> bool:
    """Multiset equality of indecomposables up to isomorphism."""
    if len(a) != len(b):
        return False
    remaining = list(b)
    for x in a:
        for k, y in enumerate(remaining):
            if is_isomorphic(x, y, seed):
                del remaining[k]
                break
        else:
            return False
    return True


def iso_classes(reps: Iterable[QuiverRep], seed: int = 0) -> list[tuple[QuiverRep, int]]:
    """Group indecomposables into isomorphism classes, keeping first representatives."""
    classes: list[list] = []
    for r in reps:
        for c in classes:
            if c[0].dim_vector == r.dim_vector and is_isomorphic(c[0], r, seed):
                c[1] += 1
                break
        else:
            classes.append([r, 1])
    return [(c[0], c[1]) for c in classes]


# random representations ----------------------------------------------------------------

def random_rep(quiver: BoundQuiver, dims: Mapping[int, int], F: Field, rng: np.random.Generator) -> QuiverRep:
    """Random representation satisfying all (length-two) relations.

    Vertices are processed in topological order; the maps into a vertex are
    chosen uniformly from the solution space of the relation equations that end
    there, given the maps already fixed.
    """
    for w1, w2 in quiver.relations:
        if len(w1) != 3 or len(w2) != 3:
            raise ValueError("random_rep supports relations between paths of length two")
    dims = {v: int(dims.get(v, 0)) for v in quiver.vertices}
    maps: dict[Arrow, np.ndarray] = {}
    for v in quiver.topological_order():
        ins = quiver.arrows_into(v)
        if not ins or dims[v] == 0:
            continue
        offsets, pos = {}, 0
        for a in ins:
            offsets[a] = pos
            pos += dims[v] * dims[a[0]]
        if pos == 0:
            continue
        eqs = []
        for w1, w2 in quiver.relations:
            if w1[-1] != v:
                continue
            src = w1[0]
            if dims[src] == 0:
                continue
            # f_{u v} f_{src u} - f_{u' v} f_{src u'} = 0, linear in the maps into v
            eq = F.zeros((dims[v] * dims[src], pos))
            for w, sign in ((w1, 1), (w2, -1)):
                a_in, a_out = (w[0], w[1]), (w[1], w[2])
                first = maps.get(a_in)
                if first is None or dims[w[1]] == 0:
                    continue
                blk = np.kron(F.eye(dims[v]), first.T)
                sl = slice(offsets[a_out], offsets[a_out] + dims[v] * dims[w[1]])
                eq[:, sl] = F.reduce(eq[:, sl] + blk * sign)
            eqs.append(eq)
        if eqs:
            null = fl.nullspace(np.vstack(eqs), F)
            coeffs = F.random(len(null), rng)
            sol = fl.matmul(coeffs.reshape(1, -1), null, F).reshape(-1) if len(null) else F.zeros(pos)
        else:
            sol = F.random(pos, rng)
        for a in ins:
            d = dims[a[0]]
            if d:
                maps[a] = sol[offsets[a]: offsets[a] + dims[v] * d].reshape(dims[v], d)
    return QuiverRep(quiver, F, dims, maps)


def random_dims(quiver: BoundQuiver, bound: int, rng: np.random.Generator) -> dict[int, int]:
    return {v: int(rng.integers(0, bound + 1)) for v in quiver.vertices}


def all_map_tuples(quiver: BoundQuiver, dims: Mapping[int, int], F: PrimeField, gauge: bool = True):
    """Every tuple of arrow matrices with the given dimensions.

    With ``gauge`` the first arrow with nonzero ends is fixed to rank normal
    form ``[[I_r, 0], [0, 0]]``; every representation is isomorphic to one of these.
    """
    arrows = [a for a in quiver.arrows if dims[a[0]] and dims[a[1]]]
    choices = []
    for k, a in enumerate(arrows):
        rows, cols = dims[a[1]], dims[a[0]]
        if gauge and k == 0:
            options = []
            for r in range(min(rows, cols) + 1):
                M = F.zeros((rows, cols))
                for i in range(r):
                    M[i, i] = 1
                options.append(M)
            choices.append(options)
        else:
            choices.append(None)
    sizes = [dims[a[1]] * dims[a[0]] for a in arrows]
    free = [k for k in range(len(arrows)) if choices[k] is None]
    fixed = [k for k in range(len(arrows)) if choices[k] is not None]
    fixed_opts = [choices[k] for k in fixed]
    for fixed_pick in product(*fixed_opts) if fixed_opts else [()]:
        for flat in product(range(F.p), repeat=sum(sizes[k] for k in free)):
            maps = {}
            pos = 0
            for k in free:
                a = arrows[k]
                maps[a] = np.array(flat[pos: pos + sizes[k]], dtype=np.int64).reshape(dims[a[1]], dims[a[0]])
                pos += sizes[k]
            for k, M in zip(fixed, fixed_pick):
                maps[arrows[k]] = M
            yield maps


def count_map_tuples(quiver: BoundQuiver, dims: Mapping[int, int], p: int, gauge: bool = True) -> int:
    arrows = [a for a in quiver.arrows if dims[a[0]] and dims[a[1]]]
    total = 1
    for k, a in enumerate(arrows):
        rows, cols = dims[a[1]], dims[a[0]]
        total *= (min(rows, cols) + 1) if gauge and k == 0 else p ** (rows * cols)
    return total


def support_connected(rep: QuiverRep) -> bool:
    """The support of an indecomposable is connected in the underlying graph."""
    sup = [v for v in rep.quiver.vertices if rep.dims[v]]
    if not sup:
        return False
    seen = {sup[0]}
    stack = [sup[0]]
    adj = {v: set() for v in sup}
    for s, t in rep.quiver.arrows:
        if s in adj and t in adj:
            adj[s].add(t)
            adj[t].add(s)
    while stack:
        v = stack.pop()
        for u in adj[v] - seen:
            seen.add(u)
            stack.append(u)
    return len(seen) == len(sup)


def popcount_order(n: int) -> list[int]:
    return sorted(range(1 << n), key=lambda m: (popcount(m), m))
