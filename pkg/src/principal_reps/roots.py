"""Cartan matrices, root data and a fully enumerated Weyl group.

Conventions
-----------
Simple indices are ``0..n-1``.  ``C[i][j] = <alpha_j, alpha_i^vee>``, so the
simple reflection ``s_i`` acts on the root lattice by
``s_i(alpha_j) = alpha_j - C[i][j] alpha_i``.  A Weyl group element is stored
canonically as the tuple of images of the simple roots, written in the basis of
simple roots.  Composition is ordinary composition of linear maps, so
``(u v)(x) = u(v(x))``.

Elements are handed around as integer indices into a :class:`WeylGroup`; the
identity is always index 0.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from .errors import CapExceeded
from .subsets import is_subset, mask_of, members

DEFAULT_ELEMENT_CAP = 10**6


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("Cartan matrix must be square")
            if row[i] != 2:
                raise ValueError(f"diagonal entry C[{i}][{i}] must be 2")
            for j, x in enumerate(row):
                if i == j:
                    continue
                if x > 0:
                    raise ValueError(f"off-diagonal entry C[{i}][{j}] = {x} is positive")
                if (x == 0) != (rows[j][i] == 0):
                    raise ValueError(f"C[{i}][{j}] and C[{j}][{i}] must vanish together")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def preset(cls, name: str) -> "CartanMatrix":
        """Cartan matrix of a finite type, e.g. ``"A2"``, ``"B3"``, ``"D4"``, ``"G2"``."""
        name = name.strip().upper().replace("_", "")
        kind, rank = name[0], name[1:]
        if not rank.isdigit():
            raise ValueError(f"unknown Cartan preset {name!r}")
        n = int(rank)
        if kind == "A" and n >= 0:
            m = _chain(n)
        elif kind == "B" and n >= 2:
            m = _chain(n)
            m[n - 1][n - 2] = -2
        elif kind == "C" and n >= 2:
            m = _chain(n)
            m[n - 2][n - 1] = -2
        elif kind == "D" and n >= 3:
            m = _chain(n)
            m[n - 2][n - 1] = m[n - 1][n - 2] = 0
            m[n - 3][n - 1] = m[n - 1][n - 3] = -1
        elif kind == "G" and n == 2:
            m = [[2, -1], [-3, 2]]
        elif kind == "F" and n == 4:
            m = _chain(4)
            m[2][1] = -2
        else:
            raise ValueError(f"unknown Cartan preset {name!r}")
        return cls(tuple(tuple(r) for r in m), name=name)


def _chain(n: int) -> list[list[int]]:
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2
        if i + 1 < n:
            m[i][i + 1] = m[i + 1][i] = -1
    return m


@dataclass(frozen=True)
class RootDatum:
    """Simple roots ``a_i`` and coroots ``b_i`` in a lattice ``Z^d``.

    The pairing must realise the Cartan matrix: ``dot(a_j, b_i) == C[i][j]``.
    """

    cartan: CartanMatrix
    simple_roots: tuple[tuple[int, ...], ...]
    simple_coroots: tuple[tuple[int, ...], ...]
    kind: str = "custom"

    def __post_init__(self):
        n = self.cartan.n
        roots = tuple(tuple(int(x) for x in r) for r in self.simple_roots)
        coroots = tuple(tuple(int(x) for x in r) for r in self.simple_coroots)
        object.__setattr__(self, "simple_roots", roots)
        object.__setattr__(self, "simple_coroots", coroots)
        if len(roots) != n or len(coroots) != n:
            raise ValueError("need one simple root and one simple coroot per index")
        d = len(roots[0]) if n else 0
        if any(len(v) != d for v in roots + coroots):
            raise ValueError("roots and coroots must share the lattice rank")
        for i in range(n):
            for j in range(n):
                if _dot(roots[j], coroots[i]) != self.cartan[i, j]:
                    raise ValueError(
                        f"pairing <a_{j}, b_{i}> = {_dot(roots[j], coroots[i])} "
                        f"does not match C[{i}][{j}] = {self.cartan[i, j]}"
                    )

    @property
    def rank(self) -> int:
        """Rank ``d`` of the character lattice."""
        return len(self.simple_roots[0]) if self.simple_roots else 0

    @classmethod
    def simply_connected(cls, cartan: CartanMatrix) -> "RootDatum":
        # lattice = weight lattice, basis = fundamental weights
        n = cartan.n
        roots = tuple(tuple(cartan[i, j] for i in range(n)) for j in range(n))
        coroots = tuple(tuple(int(i == k) for k in range(n)) for i in range(n))
        return cls(cartan, roots, coroots, kind="simply_connected")

    @classmethod
    def adjoint(cls, cartan: CartanMatrix) -> "RootDatum":
        # lattice = root lattice, basis = simple roots
        n = cartan.n
        roots = tuple(tuple(int(j == k) for k in range(n)) for j in range(n))
        coroots = tuple(tuple(cartan[i, k] for k in range(n)) for i in range(n))
        return cls(cartan, roots, coroots, kind="adjoint")


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


@dataclass
class WeylGroup:
    """Immutable table of a finite Weyl group.

    Built by breadth-first search from the identity under right multiplication
    by simple reflections, which makes BFS depth equal to Coxeter length.
    """

    cartan: CartanMatrix
    datum: RootDatum
    forms: list[tuple[tuple[int, ...], ...]]
    lengths: list[int]
    words: list[tuple[int, ...]]
    right: list[tuple[int, ...]]
    left: list[tuple[int, ...]]
    rdesc: list[int] = field(init=False)
    ldesc: list[int] = field(init=False)
    inverse: list[int] = field(init=False)

    def __post_init__(self):
        self.index = {f: k for k, f in enumerate(self.forms)}
        n = self.cartan.n
        L = self.lengths
        self.rdesc = [mask_of(i for i in range(n) if L[self.right[w][i]] < L[w]) for w in range(len(L))]
        self.ldesc = [mask_of(i for i in range(n) if L[self.left[w][i]] < L[w]) for w in range(len(L))]
        self.inverse = [self.from_word(reversed(wd)) for wd in self.words]

    # basic data -----------------------------------------------------------
    @property
    def n(self) -> int:
        return self.cartan.n

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def order(self) -> int:
        return len(self.forms)

    def __len__(self) -> int:
        return len(self.forms)

    def __iter__(self):
        return iter(range(len(self.forms)))

    identity = 0

    def from_word(self, word: Iterable[int]) -> int:
        w = 0
        for i in word:
            w = self.right[w][i]
        return w

    def mul(self, u: int, v: int) -> int:
        w = u
        for i in self.words[v]:
            w = self.right[w][i]
        return w

    def length(self, w: int) -> int:
        return self.lengths[w]

    def right_descents(self, w: int) -> int:
        """Mask of ``i`` with ``l(w s_i) < l(w)``."""
        return self.rdesc[w]

    def left_descents(self, w: int) -> int:
        return self.ldesc[w]

    @cached_property
    def longest(self) -> int:
        return max(range(self.order), key=self.lengths.__getitem__)

    def poincare_coefficients(self) -> list[int]:
        out = [0] * (max(self.lengths) + 1)
        for l in self.lengths:
            out[l] += 1
        return out

    # parabolic data --------------------------------------------------------
    def parabolic(self, J: int) -> list[int]:
        """Elements of the standard parabolic subgroup ``W_J``."""
        return self._parabolic(J)

    def _parabolic(self, J: int) -> list[int]:
        cache = self.__dict__.setdefault("_parabolic_cache", {})
        if J not in cache:
            gens = members(J)
            seen = {0}
            queue = deque([0])
            while queue:
                w = queue.popleft()
                for i in gens:
                    u = self.right[w][i]
                    if u not in seen:
                        seen.add(u)
                        queue.append(u)
            cache[J] = sorted(seen)
        return cache[J]

    def longest_element(self, J: int) -> int:
        """``w_J``: the unique element of maximal length in ``W_J``."""
        return max(self._parabolic(J), key=self.lengths.__getitem__)

    def min_coset_reps(self, J: int) -> list[int]:
        """``X_J``: minimal-length representatives of the cosets ``x W_J``."""
        return [w for w in self if self.rdesc[w] & J == 0]

    def coset_factor(self, w: int, J: int) -> tuple[int, int]:
        """Return ``(x, y)`` with ``w = x y``, ``x`` in ``X_J`` and ``y`` in ``W_J``."""
        x = w
        while self.rdesc[x] & J:
            i = members(self.rdesc[x] & J)[0]
            x = self.right[x][i]
        y = self.mul(self.inverse[x], w)
        return x, y

    def in_parabolic(self, w: int, J: int) -> bool:
        return w in set(self._parabolic(J))

    # display ------------------------------------------------------------------
    def word(self, w: int) -> list[int]:
        return list(self.words[w])

    def describe(self, w: int) -> dict:
        return {
            "word": list(self.words[w]),
            "length": self.lengths[w],
            "rdesc": members(self.rdesc[w]),
            "ldesc": members(self.ldesc[w]),
        }


def _reflect_right(form, i, C):
    # (w s_i)(alpha_j) = w(alpha_j) - C[i][j] w(alpha_i)
    wi = form[i]
    return tuple(
        tuple(x - C[i][j] * y for x, y in zip(form[j], wi)) if C[i][j] else form[j]
        for j in range(len(form))
    )


def _reflect_left(form, i, C):
    # s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, with <alpha_k, alpha_i^vee> = C[i][k]
    n = len(form)
    out = []
    for beta in form:
        c = sum(beta[k] * C[i][k] for k in range(n))
        if c:
            beta = tuple(b - c * (k == i) for k, b in enumerate(beta))
        out.append(beta)
    return tuple(out)


def build_weyl_group(
    cartan: CartanMatrix,
    datum: RootDatum | None = None,
    cap: int = DEFAULT_ELEMENT_CAP,
) -> WeylGroup:
    """Enumerate the Weyl group of ``cartan``.

    Raises:
        CapExceeded: more than ``cap`` elements were produced, which happens
            for non-finite types.
    """
    if datum is None:
        datum = RootDatum.simply_connected(cartan)
    if datum.cartan != cartan:
        raise ValueError("root datum was built for a different Cartan matrix")
    n = cartan.n
    C = cartan.entries
    ident = tuple(tuple(int(j == k) for k in range(n)) for j in range(n))
    forms = [ident]
    index = {ident: 0}
    lengths = [0]
    words: list[tuple[int, ...]] = [()]
    queue = deque([0])
    while queue:
        w = queue.popleft()
        for i in range(n):
            f = _reflect_right(forms[w], i, C)
            if f not in index:
                if len(forms) >= cap:
                    raise CapExceeded(f"Weyl group enumeration passed the cap of {cap} elements")
                index[f] = len(forms)
                forms.append(f)
                lengths.append(lengths[w] + 1)
                words.append(words[w] + (i,))
                queue.append(index[f])
    right = [tuple(index[_reflect_right(f, i, C)] for i in range(n)) for f in forms]
    left = [tuple(index[_reflect_left(f, i, C)] for i in range(n)) for f in forms]
    return WeylGroup(cartan, datum, forms, lengths, words, right, left)


def load_cartan(spec: str) -> tuple[CartanMatrix, RootDatum]:
    """Resolve a CLI ``--cartan`` argument: a preset name or a JSON file.

    The file holds either a bare matrix or an object with key ``cartan`` and
    optional ``roots``/``coroots`` (a custom realisation) or ``datum`` set to
    ``"simply_connected"`` or ``"adjoint"``.
    """
    path = Path(spec)
    if path.suffix == ".json" or path.exists():
        raw = json.loads(path.read_text())
        if isinstance(raw, list):
            raw = {"cartan": raw}
        cartan = CartanMatrix(tuple(tuple(r) for r in raw["cartan"]), name=path.stem)
        if "roots" in raw:
            datum = RootDatum(cartan, raw["roots"], raw["coroots"])
        elif raw.get("datum") == "adjoint":
            datum = RootDatum.adjoint(cartan)
        else:
            datum = RootDatum.simply_connected(cartan)
        return cartan, datum
    cartan = CartanMatrix.preset(spec)
    return cartan, RootDatum.simply_connected(cartan)


def is_parabolic_subset(J: int, full: int) -> bool:
    return is_subset(J, full)
