"""Exact linear algebra over a prime field or the rationals.

Matrices are numpy arrays: ``int64`` reduced mod ``p`` for small prime
fields, ``object`` arrays of :class:`fractions.Fraction` for Q.  Polynomial
factorisation is delegated to sympy.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np
import sympy

from .errors import FieldMismatch

_SMALL_PRIME = 1 << 20


class Field:
    tag: str
    p: int | None

    def __eq__(self, other):
        return isinstance(other, Field) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return f"Field({self.tag})"

    def check_same(self, other: "Field"):
        if self != other:
            raise FieldMismatch(f"field {self.tag} does not match {other.tag}")


class PrimeField(Field):
    def __init__(self, p: int):
        if not sympy.isprime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.tag = f"Fp:{p}"
        self.dtype = np.int64 if p < _SMALL_PRIME else object

    def array(self, data) -> np.ndarray:
        a = np.array(data, dtype=object if self.dtype is object else np.int64)
        return a % self.p

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=self.dtype)

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=self.dtype) if self.dtype is not object else np.array(np.eye(n, dtype=int), dtype=object)

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return a % self.p

    def inv(self, x) -> int:
        return pow(int(x), -1, self.p)

    def scalar(self, x) -> int:
        if isinstance(x, Fraction):
            return int(x.numerator) * pow(int(x.denominator), -1, self.p) % self.p
        return int(x) % self.p

    def random(self, shape, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, self.p, size=shape).astype(self.dtype)

    def to_int(self, x) -> int:
        return int(x)

    def elements(self):
        return range(self.p)

    @property
    def size(self):
        return self.p


class Rationals(Field):
    def __init__(self):
        self.p = None
        self.tag = "Q"

    def array(self, data) -> np.ndarray:
        src = np.array(data, dtype=object)
        out = np.empty(src.shape, dtype=object)
        for idx, x in np.ndenumerate(src):
            out[idx] = Fraction(x)
        return out

    def zeros(self, shape) -> np.ndarray:
        return self.array(np.zeros(shape, dtype=int))

    def eye(self, n: int) -> np.ndarray:
        return self.array(np.eye(n, dtype=int))

    def reduce(self, a):
        return a

    def inv(self, x) -> Fraction:
        return 1 / Fraction(x)

    def scalar(self, x) -> Fraction:
        return Fraction(x)

    def random(self, shape, rng: np.random.Generator) -> np.ndarray:
        return self.array(rng.integers(-2, 3, size=shape))

    def to_int(self, x) -> int:
        x = Fraction(x)
        if x.denominator != 1:
            raise ValueError(f"{x} is not an integer")
        return int(x)

    @property
    def size(self):
        return None


QQ = Rationals()


def parse_field(tag: str) -> Field:
    tag = tag.strip()
    if tag.upper() == "Q":
        return QQ
    if tag.lower().startswith("fp:"):
        return PrimeField(int(tag[3:]))
    raise ValueError(f"unknown field {tag!r}; expected 'Q' or 'Fp:<p>'")


def matmul(A: np.ndarray, B: np.ndarray, F: Field) -> np.ndarray:
    if A.shape[1] == 0:
        return F.zeros((A.shape[0], B.shape[1]))
    return F.reduce(A @ B)


_SMALL = 200


def _rref_small(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    # list arithmetic beats numpy call overhead on tiny matrices
    R = A.tolist()
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        k = next((i for i in range(r, rows) if R[i][c]), None)
        if k is None:
            continue
        R[r], R[k] = R[k], R[r]
        inv = pow(R[r][c], -1, p)
        if inv != 1:
            R[r] = [x * inv % p for x in R[r]]
        pr = R[r]
        for i in range(rows):
            f = R[i][c]
            if i != r and f:
                R[i] = [(a - f * b) % p for a, b in zip(R[i], pr)]
        pivots.append(c)
        r += 1
    return np.array(R, dtype=np.int64).reshape(rows, cols), pivots


def rref(A: np.ndarray, F: Field) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    if F.p is not None and A.size <= _SMALL:
        return _rref_small(A, F.p)
    R = A.copy()
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = F.reduce(R[r] * F.inv(R[r, c]))
        col = R[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if len(hit):
            R[hit] = F.reduce(R[hit] - np.outer(col[hit], R[r]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A: np.ndarray, F: Field) -> int:
    if A.size == 0:
        return 0
    return len(rref(A, F)[1])


def nullspace(A: np.ndarray, F: Field) -> np.ndarray:
    """Basis of ``{x : A x = 0}`` as the rows of the returned matrix."""
    rows, cols = A.shape
    if rows == 0:
        return F.eye(cols)
    R, pivots = rref(A, F)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = F.zeros((len(free), cols))
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = F.reduce(-R[r, f])
    return basis


def row_space(A: np.ndarray, F: Field) -> np.ndarray:
    """Independent rows spanning the row space of ``A``."""
    if A.shape[0] == 0:
        return A
    R, piv = rref(A, F)
    return R[: len(piv)]


def inverse(A: np.ndarray, F: Field) -> np.ndarray | None:
    """Inverse of a square matrix, or ``None`` if it is singular."""
    n = A.shape[0]
    if n == 0:
        return A.copy()
    R, piv = rref(np.hstack([A, F.eye(n)]), F)
    if piv[:n] != list(range(n)):
        return None
    return R[:, n:]


def is_invertible(A: np.ndarray, F: Field) -> bool:
    return A.shape[0] == A.shape[1] and rank(A, F) == A.shape[0]


def solve_in_span(basis: np.ndarray, v: np.ndarray, F: Field) -> np.ndarray | None:
    """Coefficients ``c`` with ``c @ basis == v``, or ``None``."""
    k = basis.shape[0]
    aug = np.vstack([basis, v.reshape(1, -1)]).T
    R, piv = rref(aug, F)
    if k in piv:
        return None
    c = F.zeros(k)
    for r, pc in enumerate(piv):
        c[pc] = R[r, k]
    return c


# polynomials: coefficient lists, lowest degree first -------------------------

def min_poly(M: np.ndarray, F: Field) -> list:
    """Monic minimal polynomial of a square matrix (Krylov on matrix powers)."""
    n = M.shape[0]
    if n == 0:
        return [F.scalar(1)]
    powers = [F.eye(n).reshape(-1)]
    cur = F.eye(n)
    while True:
        cur = matmul(cur, M, F)
        basis = np.vstack(powers)
        c = solve_in_span(basis, cur.reshape(-1), F)
        if c is not None:
            return [F.scalar(F.reduce(-x)) for x in c] + [F.scalar(1)]
        powers.append(cur.reshape(-1))


def poly_at(coeffs: Sequence, M: np.ndarray, F: Field) -> np.ndarray:
    n = M.shape[0]
    acc = F.zeros((n, n))
    for c in reversed(coeffs):
        acc = F.reduce(matmul(acc, M, F) + F.eye(n) * c)
    return acc


_X = sympy.Symbol("x")


def _to_sympy(coeffs: Sequence, F: Field) -> sympy.Poly:
    expr = list(reversed([sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) if F.p is None else int(c) for c in coeffs]))
    if F.p is None:
        return sympy.Poly(expr, _X, domain=sympy.QQ)
    return sympy.Poly(expr, _X, modulus=F.p)


def _from_sympy(poly: sympy.Poly, F: Field) -> list:
    cs = list(reversed(poly.all_coeffs()))
    if F.p is None:
        return [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in cs]
    return [int(c) % F.p for c in cs]


def factor_poly(coeffs: Sequence, F: Field) -> list[tuple[list, int]]:
    """Monic irreducible factors with multiplicity."""
    key = tuple(Fraction(c) if F.p is None else int(c) % F.p for c in coeffs)
    return [(list(f), e) for f, e in _factor_cached(key, F.tag)]


@lru_cache(maxsize=4096)
def _factor_cached(key: tuple, tag: str) -> tuple:
    F = parse_field(tag)
    coeffs = list(key)
    P = _to_sympy(coeffs, F)
    _, facs = P.factor_list()
    out = []
    for f, e in facs:
        f = f.monic()
        out.append((_from_sympy(f, F), e))
    out.sort(key=lambda fe: (len(fe[0]), [int(x) if F.p else float(x) for x in fe[0]]))
    return tuple((tuple(f), e) for f, e in out)


def poly_pow(coeffs: Sequence, e: int, F: Field) -> list:
    P = _to_sympy(coeffs, F) ** e
    return _from_sympy(P, F)


def is_irreducible(coeffs: Sequence, F: Field) -> bool:
    facs = factor_poly(coeffs, F)
    return len(facs) == 1 and facs[0][1] == 1
