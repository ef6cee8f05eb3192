"""Left/right translation sets and their closure characterizations.

Composite maps are written in the postfix order used everywhere in this
package: ``R_a R_b`` means apply ``R_a`` first.  In array form a
permutation ``p`` is the image vector, so ``p`` then ``q`` is ``q[p]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import LoopTable, Perm, Side, left_translation, right_translation
from .errors import DegreeMismatch, HypothesisNotMet
from .props import is_lc, is_rc


class PermSet:
    """An immutable set of permutations of one degree, compared by image."""

    def __init__(self, n: int, members: Iterable[Perm]):
        members = frozenset(members)
        for p in members:
            if p.n != n:
                raise DegreeMismatch(f"member {p!r} does not have degree {n}")
        self.n = n
        self.members = members

    def __contains__(self, p):
        return p in self.members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __eq__(self, other):
        return isinstance(other, PermSet) and self.n == other.n and self.members == other.members

    def __hash__(self):
        return hash((self.n, self.members))

    def __repr__(self):
        return f"PermSet(n={self.n}, size={len(self)})"


def pi_lambda(L: LoopTable) -> PermSet:
    return PermSet(L.n, (left_translation(L, x) for x in range(L.n)))


def pi_rho(L: LoopTable) -> PermSet:
    return PermSet(L.n, (right_translation(L, x) for x in range(L.n)))


def is_representation(S: PermSet) -> bool:
    """Check the three axioms: identity, sharp transitivity, fixed-point freeness."""
    n = S.n
    if not len(S):
        return False
    if Perm.identity(n) not in S:
        return False
    members = list(S)
    for x in range(n):
        hits = [0] * n
        for p in members:
            hits[p[x]] += 1
        if any(h != 1 for h in hits):
            return False
    for a in members:
        for b in members:
            if a != b and any(v == u for v, u in zip(a.img, b.img)):
                # a b^-1 fixes x exactly when x a = x b
                return False
    return True


# -- closure predicates ---------------------------------------------------------
#
# For each predicate the array expression builds ``lhs[y, z, x]`` and
# ``rhs[y, z, x]``: the two maps being compared, evaluated at ``x``.

def _yzx(n):
    idx = np.arange(n)
    return idx[:, None, None], idx[None, :, None], idx[None, None, :]


def _lemma_0_1_arrays(L, side):
    T = L.table
    y, z, x = _yzx(L.n)
    sq = np.diagonal(T)
    if side is Side.LEFT:
        # R_{y^2} R_z  vs  R_{y.yz}
        return T[T[x, sq[y]], z], T[x, T[y, T[y, z]]]
    # L_{y^2} L_z  vs  L_{zy.y}
    return T[z, T[sq[y], x]], T[T[T[z, y], y], x]


def _lemma_0_2_arrays(L, side):
    T = L.table
    x, z, y = _yzx(L.n)
    if side is Side.LEFT:
        # R_z L_x^2  vs  L_x^2 R_z, evaluated at y
        return T[x, T[x, T[y, z]]], T[T[x, T[x, y]], z]
    # L_z R_x^2  vs  R_x^2 L_z
    return T[T[T[z, y], x], x], T[z, T[T[y, x], x]]


def _theorem_0_3_arrays(L, side):
    # A map p lies in Pi_lambda iff p = L_{0p}; likewise for Pi_rho.
    T = L.table
    y, x, z = _yzx(L.n)
    if side is Side.LEFT:
        # L_y^2 L_x at z, against L_w with w = x.(y.y)
        return T[x, T[y, T[y, z]]], T[T[x, T[y, y]], z]
    # R_y^2 R_x at z, against R_w with w = (y.y).x
    return T[T[T[z, y], y], x], T[z, T[T[y, y], x]]


def _theorem_0_4_arrays(L, side, membership):
    T = L.table
    y, z, x = _yzx(L.n)
    sq = np.diagonal(T)
    if side is Side.LEFT:
        lhs = T[T[x, z], sq[y]]  # R_z R_{y^2}
        if membership:
            return lhs, T[x, T[z, sq[y]]]  # R_{z.y^2}
        return lhs, T[x, T[y, T[y, z]]]  # R_{y.yz}
    lhs = T[sq[y], T[z, x]]  # L_z L_{y^2}
    if membership:
        return lhs, T[T[sq[y], z], x]  # L_{y^2.z}
    return lhs, T[T[T[z, y], y], x]  # L_{zy.y}


def _holds(arrays):
    lhs, rhs = arrays
    return bool(np.array_equal(np.broadcast_to(lhs, np.broadcast(lhs, rhs).shape), rhs))


def lemma_0_1_closure(L: LoopTable, side=Side.LEFT) -> bool:
    """Left: ``R_{y^2} R_z = R_{y.yz}`` for all y, z.  Right: ``L_{y^2} L_z = L_{zy.y}``."""
    return _holds(_lemma_0_1_arrays(L, Side.parse(side)))


def lemma_0_2_commutation(L: LoopTable, side=Side.LEFT) -> bool:
    """Left: ``L_x^2`` commutes with every ``R_z``.  Right: ``R_x^2`` with every ``L_z``."""
    return _holds(_lemma_0_2_arrays(L, Side.parse(side)))


def theorem_0_3_closure(L: LoopTable, side=Side.LEFT) -> bool:
    """Left: ``L_y^2 L_x`` is a left translation for all x, y.  Right: dual."""
    return _holds(_theorem_0_3_arrays(L, Side.parse(side)))


@dataclass(frozen=True)
class ClosureResult:
    holds: bool
    hypothesis_met: bool = True

    def __bool__(self):
        return self.holds


def theorem_0_4_closure(L: LoopTable, side=Side.LEFT, *, force=False, membership=False) -> ClosureResult:
    """Closure test characterizing centrum square LC (RC) loops.

    Left: ``R_z R_{y^2} = R_{y.yz}`` for all y, z; Right:
    ``L_z L_{y^2} = L_{zy.y}``.  With ``membership=True`` the weaker test
    "``R_z R_{y^2}`` is some right translation" is used instead; that form
    holds in every group, centrum square or not.

    The LC (RC) hypothesis is enforced unless ``force`` is set, in which
    case the result records that it was not met.
    """
    side = Side.parse(side)
    met = is_lc(L) if side is Side.LEFT else is_rc(L)
    if not met and not force:
        raise HypothesisNotMet(f"table is not an {'LC' if side is Side.LEFT else 'RC'}-loop")
    return ClosureResult(_holds(_theorem_0_4_arrays(L, side, membership)), met)


def corollary_0_5_check(L: LoopTable, side=Side.LEFT) -> bool:
    """Both closure conditions: ``R_z R_{y^2} = R_{y.yz}`` and ``R_{y^2} R_z = R_{y.yz}`` (dual on the right)."""
    side = Side.parse(side)
    return _holds(_theorem_0_4_arrays(L, side, False)) and _holds(_lemma_0_1_arrays(L, side))
