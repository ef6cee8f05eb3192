"""Autotopisms, mu-regular bijections and the special triples built from translations.

Triples compose componentwise in the package-wide postfix order.
Symbols are taken literally: ``L_y^2`` is ``L_y`` applied twice, ``L_{y^2}``
is the translation by the element ``y.y``; likewise ``R_y^2`` and
``R_{y^2}``.  ``J U J`` means apply ``J``, then ``U``, then ``J``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, NamedTuple

import numpy as np

from .core import (
    LoopTable,
    Perm,
    Side,
    all_perms,
    first_failure,
    perm_orders,
    j_map,
    left_translation,
    right_translation,
)
from .errors import DegreeMismatch, IndexOutOfRange, OrderTooLarge

AUT_CAP = 8
BRUTE_FORCE_CAP = 4


@dataclass(frozen=True, order=True)
class Triple:
    U: Perm
    V: Perm
    W: Perm

    def __post_init__(self):
        if not (self.U.n == self.V.n == self.W.n):
            raise DegreeMismatch("triple components must share one degree")

    @classmethod
    def identity(cls, n: int) -> "Triple":
        e = Perm.identity(n)
        return cls(e, e, e)

    @property
    def n(self) -> int:
        return self.U.n

    def __mul__(self, other: "Triple") -> "Triple":
        return Triple(self.U * other.U, self.V * other.V, self.W * other.W)

    def inverse(self) -> "Triple":
        return Triple(self.U.inverse(), self.V.inverse(), self.W.inverse())

    def order(self) -> int:
        return math.lcm(self.U.order(), self.V.order(), self.W.order())

    def key(self) -> tuple:
        return self.U.img + self.V.img + self.W.img

    def __str__(self):
        return f"{self.U} {self.V} {self.W}"


def _check_degree(L, *perms):
    for p in perms:
        if p.n != L.n:
            raise DegreeMismatch(f"degree {p.n} does not match order {L.n}")


def autotopism_witness(L: LoopTable, t: Triple):
    """First pair ``(x, y)`` with ``xU.yV != (x.y)W``, or ``None``."""
    _check_degree(L, t.U, t.V, t.W)
    T = L.table
    U, V, W = t.U.as_array(), t.V.as_array(), t.W.as_array()
    return first_failure(T[U[:, None], V[None, :]] == W[T])


def is_autotopism(L: LoopTable, t: Triple) -> bool:
    return autotopism_witness(L, t) is None


# -- subgroup test ---------------------------------------------------------------

def is_closed_set(keys: set, compose, identity) -> bool:
    """True when the finite set ``keys`` is a group under ``compose``.

    Builds the subgroup generated by a greedily chosen subset of ``keys``
    until it covers ``keys``.  A product outside ``keys`` means the set is
    not closed; a finite set closed under products is a subgroup.
    """
    if identity not in keys:
        return False
    closure = {identity}
    gens = []
    for s in sorted(keys):
        if s in closure:
            continue
        gens.append(s)
        closure = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    c = compose(a, g)
                    if c not in keys:
                        return False
                    if c not in closure:
                        closure.add(c)
                        nxt.append(c)
            frontier = nxt
    return closure == keys


def _compose_keys(n, k):
    # keys concatenate k image tuples of degree n; compose blockwise
    def compose(a, b):
        return tuple(b[blk * n + a[blk * n + i]] for blk in range(k) for i in range(n))

    return compose


def is_group_of_triples(triples: Iterable[Triple]) -> bool:
    triples = list(triples)
    if not triples:
        return False
    n = triples[0].n
    keys = {t.key() for t in triples}
    ident = tuple(range(n)) * 3
    return is_closed_set(keys, _compose_keys(n, 3), ident)


def is_group_of_perms(perms: Iterable[Perm]) -> bool:
    perms = list(perms)
    if not perms:
        return False
    n = perms[0].n
    return is_closed_set({p.img for p in perms}, _compose_keys(n, 1), tuple(range(n)))


# -- AUT -----------------------------------------------------------------------

def _cap(L, cap):
    if L.n > cap:
        raise OrderTooLarge(f"order {L.n} exceeds the cap {cap} for this search")


def _staged(T, U, V, W, start=0):
    """Keep candidates with ``xU.yV = (x.y)W`` for all x, y, checking row x at a time."""
    n = T.shape[0]
    for x in range(start, n):
        if not len(U):
            break
        ok = (T[U[:, x][:, None], V] == W[:, T[x]]).all(axis=1)
        U, V, W = U[ok], V[ok], W[ok]
    return U, V, W


def _aut_arrays(L: LoopTable):
    """All autotopisms as three ``(m, n)`` arrays, sorted by (U, V)."""
    T, n = L.table, L.n
    P = all_perms(n)
    m = len(P)
    # y = e gives xW = xU.(eV); x = e gives yV = (eU) \ yW.
    U = np.repeat(P, n, axis=0)
    c = np.tile(np.arange(n), m)
    W = T[U, c[:, None]]
    V = L.ldiv[U[:, 0][:, None], W]
    # row e holds by construction of V
    U, V, W = _staged(T, U, V, W, start=1)
    order = np.lexsort(np.concatenate([U, V], axis=1).T[::-1])
    return U[order], V[order], W[order]


def autotopism_group(L: LoopTable, cap: int = AUT_CAP, verify: bool | None = None) -> list[Triple]:
    """The full autotopism group, sorted lexicographically by ``U`` then ``V``.

    ``verify`` re-checks closure of the result; by default it runs when
    the group has at most 5000 elements.
    """
    _cap(L, cap)
    U, V, W = _aut_arrays(L)
    out = [Triple(Perm(u, check=False), Perm(v, check=False), Perm(w, check=False)) for u, v, w in zip(U, V, W)]
    if verify is None:
        verify = len(out) <= 5000
    if verify and not is_group_of_triples(out):
        raise AssertionError("autotopism search returned a set that is not a group")
    return out


def autotopism_group_bruteforce(L: LoopTable) -> list[Triple]:
    """Reference search over every (U, V, W); only for order <= 4."""
    _cap(L, BRUTE_FORCE_CAP)
    perms = [Perm(p, check=False) for p in all_perms(L.n)]
    rows = L.rows
    out = []
    for U, V, W in product(perms, repeat=3):
        u, v, w = U.img, V.img, W.img
        if all(rows[u[x]][v[y]] == w[rows[x][y]] for x in range(L.n) for y in range(L.n)):
            out.append(Triple(U, V, W))
    return sorted(out)


@lru_cache(maxsize=None)
def aut_signature(L: LoopTable) -> tuple:
    """``(|AUT|, sorted element orders)``, an isomorphism invariant of AUT."""
    U, V, W = _aut_arrays(L)
    orders = np.lcm.reduce([perm_orders(U), perm_orders(V), perm_orders(W)])
    return len(orders), tuple(sorted(orders.tolist()))


def sigma_set(L: LoopTable, cap: int = AUT_CAP) -> set[Perm]:
    """Autotopic bijections: first components of AUT."""
    _cap(L, cap)
    U, _, _ = _aut_arrays(L)
    return {Perm(u, check=False) for u in U}


# -- mu-regular bijections -------------------------------------------------------

class MuRegularEntry(NamedTuple):
    u: Perm
    adjoint: Perm


def is_mu_regular_pair(L: LoopTable, u: Perm, v: Perm) -> bool:
    """``xU.y = x.yV`` for all ``x, y``."""
    _check_degree(L, u, v)
    T = L.table
    U, V = u.as_array(), v.as_array()
    return bool((T[U[:, None], np.arange(L.n)[None, :]] == T[np.arange(L.n)[:, None], V[None, :]]).all())


def _mu_arrays(L):
    T, n = L.table, L.n
    P = all_perms(n)
    # x = e pins the adjoint: yV = (eU).y
    V = T[P[:, 0]]
    idx = np.arange(n)
    for x in range(1, n):
        if not len(P):
            break
        ok = T[P[:, x][:, None], idx[None, :]] == T[x][V]
        ok = ok.all(axis=1)
        P, V = P[ok], V[ok]
    return P, V


def mu_regular_set(L: LoopTable, cap: int = AUT_CAP, verify: bool = True) -> list[MuRegularEntry]:
    _cap(L, cap)
    U, V = _mu_arrays(L)
    out = [MuRegularEntry(Perm(u, check=False), Perm(v, check=False)) for u, v in zip(U, V)]
    if verify and not is_group_of_perms(e.u for e in out):
        raise AssertionError("mu-regular bijections do not form a group")
    return out


@lru_cache(maxsize=None)
def phi_signature(L: LoopTable) -> tuple:
    """Sizes and element-order multisets of the mu-regular set and of its adjoints."""
    U, V = _mu_arrays(L)
    ou = tuple(sorted(perm_orders(U).tolist()))
    ov = tuple(sorted(perm_orders(V).tolist()))
    return len(ou), ou, ov


# -- the named triples -----------------------------------------------------------

def _sq_elem(L, y):
    return L.rows[y][y]


def _elements(L, *xs):
    for x in xs:
        if not 0 <= x < L.n:
            raise IndexOutOfRange(f"element {x} is outside 0..{L.n - 1}")


def thm_1_1_triple(L: LoopTable, y: int, side=Side.LEFT) -> Triple:
    """Left: ``(R_{y^2}, L_y^-2, I)``.  Right: ``(R_y^2, L_{y^2}^-1, I)``."""
    _elements(L, y)
    I = Perm.identity(L.n)
    Ly, Ry = left_translation(L, y), right_translation(L, y)
    if Side.parse(side) is Side.LEFT:
        return Triple(right_translation(L, _sq_elem(L, y)), (Ly * Ly).inverse(), I)
    return Triple(Ry * Ry, left_translation(L, _sq_elem(L, y)).inverse(), I)


def cor_1_2_triple(L: LoopTable, x: int, y: int, side=Side.LEFT) -> Triple:
    """Left: ``(R_{y^2} L_x^2, L_y^-2, L_x^2)``.  Right: ``(R_y^2, L_{y^2}^-1 R_x^2, R_x^2)``."""
    _elements(L, x, y)
    base = thm_1_1_triple(L, y, side)
    I = Perm.identity(L.n)
    if Side.parse(side) is Side.LEFT:
        Lx = left_translation(L, x)
        return base * Triple(Lx * Lx, I, Lx * Lx)
    Rx = right_translation(L, x)
    return base * Triple(I, Rx * Rx, Rx * Rx)


def exp4_condition_triples(L: LoopTable, z: int) -> tuple[Triple, Triple]:
    """``(I, L_z^2, J L_z^2 J)`` and ``(R_z^2, I, J R_z^2 J)``."""
    _elements(L, z)
    J = j_map(L)
    I = Perm.identity(L.n)
    Lz2 = left_translation(L, z) ** 2
    Rz2 = right_translation(L, z) ** 2
    return Triple(I, Lz2, J * Lz2 * J), Triple(Rz2, I, J * Rz2 * J)


def exp4_conditions(L: LoopTable) -> tuple[bool, bool]:
    """Whether each of the two exponent-4 triples is an autotopism for every ``z``."""
    first = second = True
    for z in range(L.n):
        a, b = exp4_condition_triples(L, z)
        first = first and is_autotopism(L, a)
        second = second and is_autotopism(L, b)
    return first, second


def transform_rho(L: LoopTable, t: Triple) -> Triple:
    """``(V, U, JWJ)``."""
    J = j_map(L)
    return Triple(t.V, t.U, J * t.W * J)


def transform_mu(L: LoopTable, t: Triple) -> Triple:
    """``(W, JVJ, U)``."""
    J = j_map(L)
    return Triple(t.W, J * t.V * J, t.U)


def transform_lambda(L: LoopTable, t: Triple) -> Triple:
    """``(JUJ, W, V)``."""
    J = j_map(L)
    return Triple(J * t.U * J, t.W, t.V)


def right_inner_map(L: LoopTable, x: int, y: int) -> Perm:
    """``R(x, y) = R_x R_y R_{xy}^-1``."""
    _elements(L, x, y)
    return right_translation(L, x) * right_translation(L, y) * right_translation(L, L.rows[x][y]).inverse()


def right_inner_maps_trivial(L: LoopTable) -> bool:
    """True when every ``R(x, y)`` is the identity (equivalently, ``L`` is a group)."""
    T = L.table
    idx = np.arange(L.n)
    w, x, y = idx[:, None, None], idx[None, :, None], idx[None, None, :]
    # w R(x,y) = w  iff  (wx)y = w(xy)
    return bool((T[T[w, x], y] == T[w, T[x, y]]).all())
