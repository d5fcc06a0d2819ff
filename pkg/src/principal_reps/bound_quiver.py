"""Bound quivers, in particular the Hasse quiver of the Boolean lattice.

Vertices are subset masks.  Arrows are pairs ``(s, t)``; the Hasse quiver has
one arrow ``alpha_{Y,Z}`` per cover ``Y ⊂ Z``, ``|Z \\ Y| = 1``.  A path is a
vertex sequence ``(v_0, ..., v_k)`` with an arrow between consecutive entries;
its product convention matches the incidence algebra, so the path ``Y -> ... -> Z``
corresponds to ``e_{Y,Z}``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import CapExceeded, InvalidPath
from .subsets import fmt, is_subset, popcount

MAX_N = 12

Arrow = tuple[int, int]
Path = tuple[int, ...]

# the usual figure of the n = 3 quiver numbers the vertices 1..8 in this mask order
FIGURE_ORDER_N3 = (0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111)


@dataclass(frozen=True)
class BoundQuiver:
    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[tuple[Path, Path], ...]
    n: int | None = None

    def __post_init__(self):
        vs = set(self.vertices)
        for s, t in self.arrows:
            if s not in vs or t not in vs:
                raise ValueError(f"arrow {s}->{t} leaves the vertex set")
        for w1, w2 in self.relations:
            for w in (w1, w2):
                self.check_path(w)
            if (w1[0], w1[-1]) != (w2[0], w2[-1]):
                raise ValueError("relation paths must share endpoints")

    def check_path(self, path: Sequence[int]) -> Path:
        path = tuple(path)
        if not path:
            raise InvalidPath("empty path")
        if path[0] not in self._vertex_set:
            raise InvalidPath(f"vertex {path[0]} is not in the quiver")
        for s, t in zip(path, path[1:]):
            if (s, t) not in self._arrow_set:
                raise InvalidPath(f"no arrow {fmt(s)} -> {fmt(t)}")
        return path

    @property
    def _arrow_set(self):
        cached = self.__dict__.get("_arrows_cache")
        if cached is None:
            cached = frozenset(self.arrows)
            object.__setattr__(self, "_arrows_cache", cached)
        return cached

    @property
    def _vertex_set(self):
        cached = self.__dict__.get("_vertices_cache")
        if cached is None:
            cached = frozenset(self.vertices)
            object.__setattr__(self, "_vertices_cache", cached)
        return cached

    def arrows_into(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a[1] == v]

    def arrows_from(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a[0] == v]

    def topological_order(self) -> list[int]:
        indeg = {v: 0 for v in self.vertices}
        for _, t in self.arrows:
            indeg[t] += 1
        ready = deque(sorted(v for v, d in indeg.items() if d == 0))
        out = []
        while ready:
            v = ready.popleft()
            out.append(v)
            for _, t in self.arrows_from(v):
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
        if len(out) != len(self.vertices):
            raise ValueError("quiver has an oriented cycle")
        return out

    def relation_count(self, i: int, j: int) -> int:
        """``r_ij``: number of minimal relations from ``i`` to ``j``."""
        return sum(1 for w1, _ in self.relations if w1[0] == i and w1[-1] == j)

    def full_subquiver(self, keep: Iterable[int]) -> "BoundQuiver":
        keep = tuple(v for v in self.vertices if v in set(keep))
        ks = set(keep)
        arrows = tuple(a for a in self.arrows if a[0] in ks and a[1] in ks)
        rels = tuple(r for r in self.relations if set(r[0]) <= ks and set(r[1]) <= ks)
        return BoundQuiver(keep, arrows, rels, None)


def hasse_quiver(n: int) -> BoundQuiver:
    """Quiver of the incidence algebra of an ``n``-set, bound by all parallelograms."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_N:
        raise CapExceeded(f"n = {n} exceeds the quiver cap (n <= {MAX_N})")
    verts = tuple(range(1 << n))
    arrows = tuple(sorted((Y, Y | 1 << i) for Y in verts for i in range(n) if not Y >> i & 1))
    rels = []
    for Y in verts:
        free = [i for i in range(n) if not Y >> i & 1]
        for i, j in combinations(free, 2):
            Z = Y | 1 << i | 1 << j
            rels.append(((Y, Y | 1 << i, Z), (Y, Y | 1 << j, Z)))
    return BoundQuiver(verts, arrows, tuple(rels), n)


def arrow_label(a: Arrow) -> str:
    return f"alpha_{fmt(a[0])},{fmt(a[1])}"


def path_normal_form(path: Sequence[int], quiver: BoundQuiver) -> tuple[int, int]:
    """Basis symbol ``(Y, Z)`` of a path from ``i_Y`` to ``i_Z`` modulo the relations.

    Raises:
        InvalidPath: ``path`` is not a path in ``quiver``.
    """
    p = quiver.check_path(path)
    return (p[0], p[-1])


def paths_between(quiver: BoundQuiver, s: int, t: int) -> list[Path]:
    out = []
    stack = [(s,)]
    while stack:
        p = stack.pop()
        if p[-1] == t:
            out.append(p)
            continue
        for _, u in quiver.arrows_from(p[-1]):
            stack.append(p + (u,))
    return sorted(out)


def relation_closure(path: Sequence[int], quiver: BoundQuiver) -> set[Path]:
    """All paths reachable from ``path`` by rewriting one relation side into the other."""
    start = quiver.check_path(path)
    rewrites = []
    for w1, w2 in quiver.relations:
        rewrites.append((w1, w2))
        rewrites.append((w2, w1))
    seen = {start}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for a, b in rewrites:
            k = len(a)
            for pos in range(len(p) - k + 1):
                if p[pos:pos + k] == a:
                    q = p[:pos] + b + p[pos + k:]
                    if q not in seen:
                        seen.add(q)
                        queue.append(q)
    return seen


def quotient_dimension(quiver: BoundQuiver) -> int:
    """Number of classes of paths under the relation closure (dim of kQ/I for commutativity relations)."""
    total = 0
    for s in quiver.vertices:
        for t in quiver.vertices:
            remaining = set(paths_between(quiver, s, t))
            while remaining:
                p = min(remaining)
                remaining -= relation_closure(p, quiver)
                total += 1
    return total


# Tits form ------------------------------------------------------------------------

@dataclass(frozen=True)
class TitsForm:
    """Integral quadratic form stored as integer coefficients.

    ``diag[i]`` multiplies ``x_i^2``; ``cross[(i, j)]`` (``i < j`` in vertex
    position) multiplies ``x_i x_j``.
    """

    vertices: tuple[int, ...]
    diag: tuple[int, ...]
    cross: tuple[tuple[tuple[int, int], int], ...]

    def __call__(self, x: Sequence[int]) -> int:
        if len(x) != len(self.vertices):
            raise ValueError(f"expected {len(self.vertices)} coordinates")
        val = sum(d * xi * xi for d, xi in zip(self.diag, x))
        for (i, j), c in self.cross:
            val += c * x[i] * x[j]
        return val

    def matrix(self) -> list[list[Fraction]]:
        """Symmetric rational Gram matrix with ``q(x) = x^T G x``."""
        N = len(self.vertices)
        G = [[Fraction(0)] * N for _ in range(N)]
        for i, d in enumerate(self.diag):
            G[i][i] = Fraction(d)
        for (i, j), c in self.cross:
            G[i][j] += Fraction(c, 2)
            G[j][i] += Fraction(c, 2)
        return G

    def doubled_matrix(self) -> list[list[int]]:
        """Integer matrix ``2G``."""
        return [[int(2 * g) for g in row] for row in self.matrix()]


def tits_form_of(quiver: BoundQuiver) -> TitsForm:
    pos = {v: k for k, v in enumerate(quiver.vertices)}
    cross: dict[tuple[int, int], int] = {}

    def bump(a, b, c):
        key = (min(pos[a], pos[b]), max(pos[a], pos[b]))
        cross[key] = cross.get(key, 0) + c

    for s, t in quiver.arrows:
        bump(s, t, -1)
    for w1, _ in quiver.relations:
        bump(w1[0], w1[-1], 1)
    return TitsForm(tuple(quiver.vertices), (1,) * len(quiver.vertices), tuple(sorted((k, v) for k, v in cross.items() if v)))


def tits_form(n: int) -> TitsForm:
    return tits_form_of(hasse_quiver(n))


def cardinality_profile(n: int, profile: Sequence[int]) -> list[int]:
    """Vector with ``x_Y = profile[|Y|]``."""
    return [profile[popcount(Y)] for Y in range(1 << n)]


# DOT ----------------------------------------------------------------------------

def emit_dot(quiver: BoundQuiver, name: str | None = None) -> str:
    name = name or (f"A{quiver.n}" if quiver.n is not None else "Q")
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for v in sorted(quiver.vertices):
        lines.append(f'  v{v} [label="{fmt(v)}"];')
    for s, t in sorted(quiver.arrows):
        lines.append(f'  v{s} -> v{t} [label="{arrow_label((s, t))}"];')
    for w1, w2 in quiver.relations:
        a = " ".join(fmt(v) for v in w1)
        b = " ".join(fmt(v) for v in w2)
        lines.append(f"  // relation: {a} = {b}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def figure_vertex_labels_n3() -> dict[int, int]:
    """Mask -> 1..8 numbering used in the standard picture of the cube."""
    return {m: k + 1 for k, m in enumerate(FIGURE_ORDER_N3)}


def interval_count(n: int, length: int) -> int:
    """Number of pairs ``Y ⊆ Z`` with ``|Z \\ Y| = length``."""
    return comb(n, length) * 2 ** (n - length)


def is_cover(Y: int, Z: int) -> bool:
    return is_subset(Y, Z) and popcount(Z & ~Y) == 1

