"""Derived subsets of W, the summand labels of X_theta, and the involution Xi.

Everything is computed by filtering the enumerated group.  The coset
representatives used by :func:`xi` are the minimal-length ones, which makes
the factorisation ``w = x y`` unique.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .characters import CharacterValue, ThetaContext, i_theta, w_action
from .errors import InvalidSubset
from .roots import WeylGroup
from .subsets import fmt, is_subset


@dataclass(frozen=True)
class SummandLabel:
    character: CharacterValue
    parabolic_set: int

    def key(self):
        return (self.character.coords, self.parabolic_set)


def y_set(K: int, W: WeylGroup) -> list[int]:
    """Elements with no right descent in ``K``."""
    return [w for w in W if W.rdesc[w] & K == 0]


def z_set(J: int, ctx: ThetaContext) -> list[int]:
    """``{w in X_J : R(w w_J) ⊆ J ∪ (I \\ I(theta))}``.

    Raises:
        InvalidSubset: ``J`` is not contained in ``I(theta)``.
    """
    W, it = ctx.W, ctx.itheta
    if not is_subset(J, it):
        raise InvalidSubset(f"J = {fmt(J)} is not contained in I(theta) = {fmt(it)}")
    allowed = J | (W.full & ~it)
    wJ = W.longest_element(J)
    return [w for w in W.min_coset_reps(J) if is_subset(W.rdesc[W.mul(w, wJ)], allowed)]


def j_w_theta(w: int, theta: CharacterValue, W: WeylGroup) -> int:
    """``R(w) ∩ I(theta^w)``."""
    return W.rdesc[w] & i_theta(w_action(w, theta, W), W.datum)


def x_theta_summands(theta: CharacterValue, W: WeylGroup) -> list[SummandLabel]:
    """One label ``(theta^w, J_{w,theta})`` per element of W, in element order."""
    out = []
    for w in W:
        t = w_action(w, theta, W)
        out.append(SummandLabel(t, W.rdesc[w] & i_theta(t, W.datum)))
    return out


def summand_multiplicities(theta: CharacterValue, W: WeylGroup) -> Counter:
    return Counter(lab.key() for lab in x_theta_summands(theta, W))


def omega(theta: CharacterValue, lam: CharacterValue, J: int, W: WeylGroup) -> list[int]:
    """``{w : theta^w = lam, J ⊆ R(w) ⊆ J ∪ (I \\ I(lam))}``."""
    theta.same_level(lam)
    il = i_theta(lam, W.datum)
    if not is_subset(J, il):
        raise InvalidSubset(f"J = {fmt(J)} is not contained in I(lambda) = {fmt(il)}")
    upper = J | (W.full & ~il)
    return [
        w for w in W
        if is_subset(J, W.rdesc[w])
        and is_subset(W.rdesc[w], upper)
        and w_action(w, theta, W).coords == lam.coords
    ]


def xi(w: int, lam: CharacterValue, W: WeylGroup) -> int:
    """``x w_K y`` where ``K = I(lam)`` and ``w = x y`` with ``x`` in ``X_K``."""
    K = i_theta(lam, W.datum)
    x, y = W.coset_factor(w, K)
    return W.mul(W.mul(x, W.longest_element(K)), y)


def hom_count(theta: CharacterValue, lam: CharacterValue, J: int, W: WeylGroup) -> int:
    """``#{w : theta^w = lam and J_{w,theta} = I(lam) \\ J}``."""
    il = i_theta(lam, W.datum)
    target = il & ~J
    return sum(
        1 for w in W
        if w_action(w, theta, W).coords == lam.coords and W.rdesc[w] & il == target
    )
