"""Identity checkers, nuclei, centrum and center.

Every checker is a universal scan over all variable assignments.  A failed
check carries the lexicographically first falsifying assignment, in the
variable order given by ``VARIABLES``.
"""
from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np

from .core import LoopTable, first_failure, power
from .errors import UnknownProperty


class Check(NamedTuple):
    name: str
    holds: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


def _grid(n, arity):
    idx = np.arange(n)
    shape = [1] * arity
    out = []
    for axis in range(arity):
        s = list(shape)
        s[axis] = n
        out.append(idx.reshape(s))
    return out


# Each entry maps a name to (arity, f(T, *vars) -> (lhs, rhs)).
# Variables come in the order x, y, z.
def _sq(T, x):
    return T[x, x]


IDENTITIES: dict[str, tuple[int, Callable]] = {
    # (xx)(yz) = (x(xy))z
    "lc": (3, lambda T, x, y, z: (T[_sq(T, x), T[y, z]], T[T[x, T[x, y]], z])),
    # (zy)(xx) = z((yx)x)
    "rc": (3, lambda T, x, y, z: (T[T[z, y], _sq(T, x)], T[z, T[T[y, x], x]])),
    # x(y(yz)) = ((xy)y)z
    "c": (3, lambda T, x, y, z: (T[x, T[y, T[y, z]]], T[T[T[x, y], y], z])),
    # x(y.yz) = (x.yy)z
    "lc1": (3, lambda T, x, y, z: (T[x, T[y, T[y, z]]], T[T[x, _sq(T, y)], z])),
    # x(x.yz) = (x.xy)z
    "lc2": (3, lambda T, x, y, z: (T[x, T[x, T[y, z]]], T[T[x, T[x, y]], z])),
    # (zy.y)x = z(yy.x)
    "rc1": (3, lambda T, x, y, z: (T[T[T[z, y], y], x], T[z, T[_sq(T, y), x]])),
    # (zy.x)x = z(yx.x)
    "rc2": (3, lambda T, x, y, z: (T[T[T[z, y], x], x], T[z, T[T[y, x], x]])),
    "assoc": (3, lambda T, x, y, z: (T[T[x, y], z], T[x, T[y, z]])),
    # x.xy = x^2 y
    "lalt": (2, lambda T, x, y: (T[x, T[x, y]], T[_sq(T, x), y])),
    # yx.x = y x^2
    "ralt": (2, lambda T, x, y: (T[T[y, x], x], T[y, _sq(T, x)])),
    # x(yx) = (xy)x
    "flex": (2, lambda T, x, y: (T[x, T[y, x]], T[T[x, y], x])),
    # (xy)^2 = (yx)^2
    "squares-commute": (2, lambda T, x, y: (_sq(T, T[x, y]), _sq(T, T[y, x]))),
}

VARIABLES = "xyz"


def check_identity(L: LoopTable, name: str) -> Check:
    try:
        arity, f = IDENTITIES[name]
    except KeyError:
        raise UnknownProperty(f"unknown identity {name!r}") from None
    T = L.table
    lhs, rhs = f(T, *_grid(L.n, arity))
    return Check(name, *_verdict(lhs == rhs))


def _verdict(mask):
    w = first_failure(mask)
    return w is None, w


def is_lc(L: LoopTable) -> bool:
    return check_identity(L, "lc").holds


def is_rc(L: LoopTable) -> bool:
    return check_identity(L, "rc").holds


def is_c(L: LoopTable) -> bool:
    return check_identity(L, "c").holds


def is_lc_variant(L: LoopTable, form: int) -> bool:
    if form not in (1, 2):
        raise ValueError("form must be 1 or 2")
    return check_identity(L, f"lc{form}").holds


def is_rc_variant(L: LoopTable, form: int) -> bool:
    if form not in (1, 2):
        raise ValueError("form must be 1 or 2")
    return check_identity(L, f"rc{form}").holds


def is_group(L: LoopTable) -> bool:
    return check_identity(L, "assoc").holds


def is_left_alternative(L: LoopTable) -> bool:
    return check_identity(L, "lalt").holds


def is_right_alternative(L: LoopTable) -> bool:
    return check_identity(L, "ralt").holds


def is_flexible(L: LoopTable) -> bool:
    return check_identity(L, "flex").holds


def squares_commute_check(L: LoopTable) -> bool:
    return check_identity(L, "squares-commute").holds


def _cube_check(L):
    n = L.n
    cubes = np.array([power(L, x, 3) for x in range(n)])
    x, y = _grid(n, 2)
    T = L.table
    return Check("cube-antiautomorphism", *_verdict(cubes[T[x, y]] == T[cubes[y], cubes[x]]))


def cube_antiautomorphism_check(L: LoopTable) -> bool:
    """``(xy)^3 = y^3 x^3`` for all ``x, y``."""
    return _cube_check(L).holds


def _lip_check(L):
    T = L.table
    lam = L.rdiv[0]
    x, y = _grid(L.n, 2)
    return Check("lip", *_verdict(T[lam[x], T[x, y]] == y))


def _rip_check(L):
    T = L.table
    rho = L.ldiv[:, 0]
    x, y = _grid(L.n, 2)
    return Check("rip", *_verdict(T[T[y, x], rho[x]] == y))


def is_lip(L: LoopTable) -> bool:
    return _lip_check(L).holds


def is_rip(L: LoopTable) -> bool:
    return _rip_check(L).holds


def is_ip(L: LoopTable) -> bool:
    return is_lip(L) and is_rip(L)


# -- nuclei -------------------------------------------------------------------

def _members(mask: np.ndarray) -> list[int]:
    return [int(a) for a in np.flatnonzero(mask)]


def _left_nucleus_mask(L):
    T = L.table
    a, x, y = _grid(L.n, 3)
    return (T[T[a, x], y] == T[a, T[x, y]]).all(axis=(1, 2))


def _right_nucleus_mask(L):
    T = L.table
    a, x, y = _grid(L.n, 3)
    return (T[y, T[x, a]] == T[T[y, x], a]).all(axis=(1, 2))


def _middle_nucleus_mask(L):
    T = L.table
    a, x, y = _grid(L.n, 3)
    return (T[T[y, a], x] == T[y, T[a, x]]).all(axis=(1, 2))


def _centrum_mask(L):
    T = L.table
    return (T == T.T).all(axis=1)


def _nucleus_mask(L):
    return _left_nucleus_mask(L) & _right_nucleus_mask(L) & _middle_nucleus_mask(L)


def nucleus_left(L: LoopTable) -> list[int]:
    return _members(_left_nucleus_mask(L))


def nucleus_right(L: LoopTable) -> list[int]:
    return _members(_right_nucleus_mask(L))


def nucleus_middle(L: LoopTable) -> list[int]:
    return _members(_middle_nucleus_mask(L))


def nucleus(L: LoopTable) -> list[int]:
    return _members(_nucleus_mask(L))


def centrum(L: LoopTable) -> list[int]:
    return _members(_centrum_mask(L))


def center(L: LoopTable) -> list[int]:
    return _members(_nucleus_mask(L) & _centrum_mask(L))


def _squares_in(L, mask, name):
    sq = np.diagonal(L.table)
    ok = mask[sq]
    return Check(name, *_verdict(ok))


def _centrum_square_check(L):
    T = L.table
    sq = np.diagonal(T)
    x, y = _grid(L.n, 2)
    return Check("centrum-square", *_verdict(T[sq[x], y] == T[y, sq[x]]))


def is_centrum_square(L: LoopTable) -> bool:
    return _centrum_square_check(L).holds


def is_central_square(L: LoopTable) -> bool:
    return _squares_in(L, _nucleus_mask(L) & _centrum_mask(L), "central-square").holds


def is_nuclear_square(L: LoopTable) -> bool:
    return _squares_in(L, _nucleus_mask(L), "nuclear-square").holds


# -- reports ------------------------------------------------------------------

def _identity_checker(name):
    return lambda L: check_identity(L, name)


PROPERTIES: dict[str, Callable[[LoopTable], Check]] = {
    "lc": _identity_checker("lc"),
    "rc": _identity_checker("rc"),
    "c": _identity_checker("c"),
    "lalt": _identity_checker("lalt"),
    "ralt": _identity_checker("ralt"),
    "flex": _identity_checker("flex"),
    "lip": _lip_check,
    "rip": _rip_check,
    "ip": lambda L: _ip_check(L),
    "centrum-square": _centrum_square_check,
    "central-square": lambda L: _squares_in(L, _nucleus_mask(L) & _centrum_mask(L), "central-square"),
    "nuclear-square": lambda L: _squares_in(L, _nucleus_mask(L), "nuclear-square"),
    "group": lambda L: check_identity(L, "assoc")._replace(name="group"),
}


def _ip_check(L):
    for c in (_lip_check(L), _rip_check(L)):
        if not c.holds:
            return Check("ip", False, c.witness)
    return Check("ip", True)


def check_property(L: LoopTable, name: str) -> Check:
    try:
        checker = PROPERTIES[name]
    except KeyError:
        raise UnknownProperty(f"unknown property {name!r}; known: {', '.join(PROPERTIES)}") from None
    return checker(L)


def property_report(L: LoopTable, names=None) -> dict[str, Check]:
    names = list(PROPERTIES) if names is None else list(names)
    return {name: check_property(L, name) for name in names}
