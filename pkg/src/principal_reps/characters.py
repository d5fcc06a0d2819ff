"""Characters of a split torus at a finite level, with the Weyl action.

A character of ``T(F_{q^a})`` is a coordinate vector ``c`` over the lattice
basis of the root datum, read modulo ``m = q^a - 1``.

Action convention (documented here only): ``s_i`` sends ``c`` to
``c - <c, b_i> a_i``, and ``theta^w`` is obtained by applying the letters of
any reduced word of ``w`` from left to right.  This is a right action,
``(theta^w)^{w'} = theta^{w w'}``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import sympy

from .errors import IncomparableCharacters
from .roots import RootDatum, WeylGroup
from .subsets import mask_of


def validate_prime_power(q: int) -> int:
    if q < 2 or len(sympy.factorint(q)) != 1:
        raise ValueError(f"q = {q} is not a prime power")
    return q


@dataclass(frozen=True)
class CharacterValue:
    q: int
    level: int
    coords: tuple[int, ...]

    def __post_init__(self):
        validate_prime_power(self.q)
        if self.level < 1:
            raise ValueError("level must be at least 1")
        m = self.q**self.level - 1
        object.__setattr__(self, "coords", tuple(int(c) % m for c in self.coords))

    @property
    def modulus(self) -> int:
        return self.q**self.level - 1

    @classmethod
    def trivial(cls, q: int, level: int, d: int) -> "CharacterValue":
        return cls(q, level, (0,) * d)

    def is_trivial(self) -> bool:
        return not any(self.coords)

    def same_level(self, other: "CharacterValue") -> None:
        if (self.q, self.level) != (other.q, other.level):
            raise IncomparableCharacters(
                f"characters at levels q={self.q}, a={self.level} and "
                f"q={other.q}, a={other.level} cannot be compared"
            )

    def matches(self, other: "CharacterValue") -> bool:
        """Exact equality, refusing to compare across levels."""
        self.same_level(other)
        return self.coords == other.coords

    def with_coords(self, coords) -> "CharacterValue":
        return CharacterValue(self.q, self.level, tuple(coords))

    def to_json(self) -> dict:
        return {"q": self.q, "level": self.level, "coords": list(self.coords)}


def all_characters(q: int, level: int, d: int):
    """Every character of the level-``a`` torus of lattice rank ``d``."""
    m = q**level - 1
    for k in range(m**d):
        c = []
        for _ in range(d):
            k, r = divmod(k, m)
            c.append(r)
        yield CharacterValue(q, level, tuple(c))


def i_theta(theta: CharacterValue, datum: RootDatum) -> int:
    """Mask of ``i`` with ``<c, b_i> = 0`` modulo ``m``."""
    if len(theta.coords) != datum.rank:
        raise ValueError(f"character has {len(theta.coords)} coordinates, lattice rank is {datum.rank}")
    m = theta.modulus
    return mask_of(
        i for i, b in enumerate(datum.simple_coroots)
        if sum(x * y for x, y in zip(theta.coords, b)) % m == 0
    )


def reflect(theta: CharacterValue, i: int, datum: RootDatum) -> CharacterValue:
    b, a = datum.simple_coroots[i], datum.simple_roots[i]
    p = sum(x * y for x, y in zip(theta.coords, b))
    return theta.with_coords(x - p * y for x, y in zip(theta.coords, a))


class LatticeAction:
    """Integer matrices ``M_w`` with ``theta^w = c M_w`` (row vectors), for all ``w``."""

    def __init__(self, W: WeylGroup):
        self.W = W
        datum = W.datum
        d = datum.rank
        # S_i as row-vector map: c -> c - (c . b_i) a_i
        self.simple = [
            tuple(
                tuple(int(r == k) - datum.simple_coroots[i][r] * datum.simple_roots[i][k] for k in range(d))
                for r in range(d)
            )
            for i in range(W.n)
        ]
        ident = tuple(tuple(int(r == k) for k in range(d)) for r in range(d))
        mats: list = [None] * W.order
        mats[0] = ident
        queue = deque([0])
        while queue:
            w = queue.popleft()
            for i in range(W.n):
                u = W.right[w][i]
                if mats[u] is None:
                    mats[u] = _matmul(mats[w], self.simple[i])
                    queue.append(u)
        self.matrices = mats

    def act(self, w: int, theta: CharacterValue) -> CharacterValue:
        M = self.matrices[w]
        c = theta.coords
        d = len(c)
        return theta.with_coords(sum(c[r] * M[r][k] for r in range(d)) for k in range(d))


def _matmul(A, B):
    return tuple(
        tuple(sum(A[r][t] * B[t][k] for t in range(len(B))) for k in range(len(B[0])))
        for r in range(len(A))
    )


def _lattice_action(W: WeylGroup) -> LatticeAction:
    cached = W.__dict__.get("_lattice_action")
    if cached is None:
        cached = W.__dict__["_lattice_action"] = LatticeAction(W)
    return cached


def w_action(w: int, theta: CharacterValue, W: WeylGroup) -> CharacterValue:
    """``theta^w``; a right action, ``(theta^w)^{w'} = theta^{w w'}``."""
    return _lattice_action(W).act(w, theta)


def orbit_and_stabilizer(theta: CharacterValue, W: WeylGroup) -> tuple[list[CharacterValue], int]:
    """Orbit of ``theta`` (closure under simple reflections) and ``|W_theta|``."""
    datum = W.datum
    seen = {theta.coords: theta}
    queue = deque([theta])
    while queue:
        t = queue.popleft()
        for i in range(W.n):
            u = reflect(t, i, datum)
            if u.coords not in seen:
                seen[u.coords] = u
                queue.append(u)
    stab = sum(1 for w in W if w_action(w, theta, W).coords == theta.coords)
    return sorted(seen.values(), key=lambda t: t.coords), stab


@dataclass(frozen=True)
class ThetaContext:
    """A character bundled with its Weyl table and cached ``I(theta)``."""

    theta: CharacterValue
    W: WeylGroup

    def __post_init__(self):
        if len(self.theta.coords) != self.W.datum.rank:
            raise ValueError(
                f"character has {len(self.theta.coords)} coordinates, "
                f"lattice rank is {self.W.datum.rank}"
            )

    @cached_property
    def itheta(self) -> int:
        return i_theta(self.theta, self.W.datum)

    @cached_property
    def stab_order(self) -> int:
        return orbit_and_stabilizer(self.theta, self.W)[1]

    def act(self, w: int) -> CharacterValue:
        return w_action(w, self.theta, self.W)

    def i_of(self, lam: CharacterValue) -> int:
        self.theta.same_level(lam)
        return i_theta(lam, self.W.datum)
