"""Box searches for negative values of a Tits form, and the n = 3 rewrite.

The box ``[0, B]^N`` is scanned exhaustively.  Coordinates are split into a
prefix block and a suffix block; all suffix values and the prefix/suffix
cross terms are evaluated as one integer matrix product per prefix chunk.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from .bound_quiver import FIGURE_ORDER_N3, TitsForm, cardinality_profile, tits_form
from .errors import BudgetExceeded

DEFAULT_BUDGET = 10**9
_CHUNK_CELLS = 1 << 22


@dataclass
class SearchResult:
    n: int
    bound: int
    evaluated: int
    violations: list[tuple[int, ...]]
    violation_count: int
    minimum: int
    argmin: tuple[int, ...]
    complete: bool = True
    next_cursor: int | None = None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "bound": self.bound,
            "boxRestricted": True,
            "evaluated": self.evaluated,
            "complete": self.complete,
            "nextCursor": self.next_cursor,
            "minimum": self.minimum,
            "argmin": list(self.argmin),
            "violationCount": self.violation_count,
            "violations": [list(v) for v in self.violations],
        }


def _grid(k: int, bound: int) -> np.ndarray:
    """All vectors in ``[0, bound]^k`` in lexicographic order."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    axes = np.meshgrid(*[np.arange(bound + 1, dtype=np.int64)] * k, indexing="ij")
    return np.stack([a.reshape(-1) for a in axes], axis=1)


def _quad(G: np.ndarray, X: np.ndarray) -> np.ndarray:
    """Row-wise ``x^T G x`` (``G`` = doubled Gram matrix) divided by 2."""
    return np.einsum("ij,jk,ik->i", X, G, X) // 2


class _Scanner:
    def __init__(self, form: TitsForm, bound: int):
        G = np.array(form.doubled_matrix(), dtype=np.int64)
        N = G.shape[0]
        self.N, self.bound = N, bound
        self.k = N // 2
        k = self.k
        self.prefixes = _grid(k, bound)
        self.suffixes = _grid(N - k, bound)
        self.q_suffix = _quad(G[k:, k:], self.suffixes)
        self.G_pp = G[:k, :k]
        # x^T (2G) x / 2 splits as prefix part + suffix part + x_p^T (2G)_{ps} x_s
        self.cross = G[:k, k:] @ self.suffixes.T  # (k, S)
        self.q_prefix = _quad(self.G_pp, self.prefixes)

    @property
    def n_prefixes(self) -> int:
        return len(self.prefixes)

    def scan(self, start: int, stop: int, keep: int | None):
        S = len(self.suffixes)
        rows = max(1, _CHUNK_CELLS // max(S, 1))
        found: list[tuple[int, ...]] = []
        count = 0
        best = None
        best_x = None
        for a in range(start, stop, rows):
            b = min(stop, a + rows)
            P = self.prefixes[a:b]
            vals = self.q_prefix[a:b, None] + P @ self.cross + self.q_suffix[None, :]
            neg = np.argwhere(vals < 0)
            count += len(neg)
            if keep is None or len(found) < keep:
                for r, c in neg[: None if keep is None else keep - len(found)]:
                    found.append(tuple(int(x) for x in np.concatenate([P[r], self.suffixes[c]])))
            r, c = np.unravel_index(int(np.argmin(vals)), vals.shape)
            v = int(vals[r, c])
            if best is None or v < best:
                best = v
                best_x = tuple(int(x) for x in np.concatenate([P[r], self.suffixes[c]]))
        return found, count, best, best_x


def _worker(args):
    form, bound, start, stop, keep = args
    return _Scanner(form, bound).scan(start, stop, keep)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("WORKERS", "1")))
    except ValueError:
        return 1


def weak_positivity_search(
    n: int,
    bound: int,
    budget: int = DEFAULT_BUDGET,
    resume: int = 0,
    keep: int | None = None,
    workers: int | None = None,
) -> SearchResult:
    """All ``x`` in ``[0, bound]^{2^n}`` with ``q_n(x) < 0``.

    Args:
        n: size of the ground set.
        bound: box side ``B``.
        budget: maximal number of evaluations in this call.
        resume: prefix cursor returned by an earlier interrupted scan.
        keep: store at most this many violations (all are counted).
        workers: process count, default from the ``WORKERS`` environment variable.

    Raises:
        BudgetExceeded: the remaining box exceeds ``budget``; the partial scan is attached.
    """
    form = tits_form(n)
    scanner = _Scanner(form, bound)
    S = len(scanner.suffixes)
    stop = scanner.n_prefixes
    allowed = max(0, budget // S)
    truncated = resume + allowed < stop
    end = min(stop, resume + allowed)
    workers = workers or _workers()
    if workers > 1 and end - resume > workers:
        cuts = np.linspace(resume, end, workers + 1).astype(int)
        jobs = [(form, bound, int(cuts[i]), int(cuts[i + 1]), keep) for i in range(workers)]
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_worker, jobs))
    else:
        parts = [scanner.scan(resume, end, keep)]
    found: list[tuple[int, ...]] = []
    count, best, best_x = 0, None, ()
    for f, c, b, bx in parts:
        if b is None:
            continue
        for v in f:
            if keep is None or len(found) < keep:
                found.append(v)
        count += c
        if best is None or b < best:
            best, best_x = b, bx
    evaluated = (end - resume) * S
    result = SearchResult(n, bound, evaluated, sorted(found), count, best if best is not None else 0, best_x,
                          complete=not truncated and resume == 0, next_cursor=end if truncated else None)
    if truncated:
        raise BudgetExceeded(
            f"box [0,{bound}]^{scanner.N} needs {stop * S} evaluations, budget {budget}",
            violations=result.violations, cursor=end, evaluated=evaluated,
        )
    return result


def witness_profile(n: int = 4) -> tuple[list[int], int]:
    """Vector ``x_Y = min(|Y|, n - |Y|)`` and its form value; ``(0,1,2,1,0)`` for ``n = 4``."""
    x = cardinality_profile(n, [min(k, n - k) for k in range(n + 1)])
    return x, tits_form(n)(x)


# the n = 3 rewrite -------------------------------------------------------------------

def _figure_coords(x_masks) -> list[int]:
    """Reorder a mask-indexed vector into the 1..8 vertex numbering."""
    return [x_masks[m] for m in FIGURE_ORDER_N3]


def q3_expanded(x: list[int]) -> int:
    """The n = 3 form written out in the 1..8 numbering (x[0] = x_1)."""
    x1, x2, x3, x4, x5, x6, x7, x8 = x
    return (
        x1**2 + x2**2 + x3**2 + x4**2 + x5**2 + x6**2 + x7**2 + x8**2
        + x1 * x5 + x1 * x6 + x1 * x7 + x2 * x8 + x3 * x8 + x4 * x8
        - x1 * x2 - x1 * x3 - x1 * x4 - x2 * x5 - x2 * x6
        - x3 * x5 - x3 * x7 - x4 * x6 - x4 * x7 - x5 * x8 - x6 * x8 - x7 * x8
    )


def substituted(xx: int, z: int, ys: list[int]) -> Fraction:
    """``x^2 + 2xz + 2z^2 - x(y_1+...+y_6)/2 + (y_1^2+...+y_6^2)/2``."""
    return Fraction(xx * xx + 2 * xx * z + 2 * z * z) - Fraction(xx * sum(ys), 2) + Fraction(sum(y * y for y in ys), 2)


def substitute(x: list[int]) -> tuple[int, int, list[int]]:
    """New variables from coordinates ``x_1..x_8``."""
    x1, x2, x3, x4, x5, x6, x7, x8 = x
    z = x8
    return x1 - z, z, [x2 - x5, x2 - x6, x3 - x5, x3 - x7, x4 - x6, x4 - x7]


def unconstrained_negative_witness() -> dict:
    """A point where the rewritten expression is negative.

    The rewritten expression treats ``x, z, y_i`` as free integers; it takes
    negative values, so it only certifies nonnegativity together with the
    coupling to the original coordinates.
    """
    xx, z, ys = 4, -1, [2] * 6
    value = substituted(xx, z, ys)
    # realised by original coordinates (x_1..x_8) = (3, 2, 2, 2, 0, 0, 0, -1)
    orig = [xx + z, 2, 2, 2, 0, 0, 0, z]
    return {
        "x": xx, "z": z, "y": ys, "value": str(value),
        "originalCoordinates": orig, "originalValue": q3_expanded(orig),
        "nonnegativeOriginalCoordinates": all(c >= 0 for c in orig),
    }


@dataclass
class SubstitutionReport:
    samples: int
    max_discrepancy: Fraction
    mask_form_agrees: bool
    min_q_nonneg_sample: int | None
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "samples": self.samples,
            "maxAbsDiscrepancy": str(self.max_discrepancy),
            "maskFormAgrees": self.mask_form_agrees,
            "minQOverNonnegativeSamples": self.min_q_nonneg_sample,
            "unconstrainedClaim": "fails",
            "unconstrainedWitness": self.witness,
            "note": "rewrite agrees with q_3; nonnegativity is certified only through the box search",
        }


def substitution_report(samples: int = 10_000, seed: int = 0, lo: int = -10, hi: int = 10) -> SubstitutionReport:
    rng = random.Random(seed)
    q = tits_form(3)
    worst = Fraction(0)
    agrees = True
    min_nonneg = None
    for _ in range(samples):
        masks = [rng.randint(lo, hi) for _ in range(8)]
        x = _figure_coords(masks)
        a = Fraction(q(masks))
        if q3_expanded(x) != a:
            agrees = False
        b = substituted(*substitute(x))
        worst = max(worst, abs(a - b))
        if min(masks) >= 0 and (min_nonneg is None or a < min_nonneg):
            min_nonneg = int(a)
    return SubstitutionReport(samples, worst, agrees, min_nonneg, unconstrained_negative_witness())


def brute_force_min(form: TitsForm, bound: int) -> tuple[int, int]:
    """Plain Python scan of the box: ``(minimum, number of negative points)``.  Slow; for tests."""
    best, neg = None, 0
    for x in product(range(bound + 1), repeat=len(form.vertices)):
        v = form(x)
        neg += v < 0
        best = v if best is None or v < best else best
    return best, neg
