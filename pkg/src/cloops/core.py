"""Cayley tables, permutations and the elementary loop operations.

Conventions used throughout the package:

* Elements are the integers ``0..n-1`` and ``0`` is always the identity.
* Maps act on the right, as in the loop literature: ``x U`` is the image of
  ``x`` under ``U``, and a product ``U * V`` means "apply ``U`` first, then
  ``V``".  So ``R_a * R_b`` sends ``x`` to ``(x.a).b``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache, reduce
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadEntry,
    DegreeMismatch,
    IndexOutOfRange,
    NoIdentity,
    NotABijection,
    NotLatin,
    NoTwoSidedInverse,
    OrderTooLarge,
    ParseError,
)

MAX_ORDER = 16


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    @classmethod
    def parse(cls, value) -> "Side":
        if isinstance(value, Side):
            return value
        return cls(str(value).lower())


class Perm:
    """A bijection of ``{0..n-1}`` stored as its image tuple."""

    __slots__ = ("img",)

    def __init__(self, img: Iterable[int], check: bool = True):
        img = tuple(int(i) for i in img)
        if check and sorted(img) != list(range(len(img))):
            raise NotABijection(f"{list(img)} is not a permutation of 0..{len(img) - 1}")
        object.__setattr__(self, "img", img)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n), check=False)

    @classmethod
    def from_spec(cls, spec: str, n: int | None = None) -> "Perm":
        """Parse a comma separated image list such as ``"2,3,0,1"``."""
        try:
            img = [int(tok) for tok in spec.split(",")]
        except ValueError as exc:
            raise NotABijection(f"bad permutation spec {spec!r}") from exc
        if n is not None and len(img) != n:
            raise DegreeMismatch(f"permutation {spec!r} has degree {len(img)}, expected {n}")
        return cls(img)

    @property
    def n(self) -> int:
        return len(self.img)

    def __len__(self):
        return len(self.img)

    def __getitem__(self, x):
        return self.img[x]

    def __call__(self, x):
        return self.img[x]

    def __iter__(self):
        return iter(self.img)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.img == other.img

    def __lt__(self, other):
        return self.img < other.img

    def __hash__(self):
        return hash(self.img)

    def __repr__(self):
        return f"Perm({list(self.img)})"

    def __str__(self):
        return ",".join(map(str, self.img))

    def __mul__(self, other: "Perm") -> "Perm":
        if not isinstance(other, Perm):
            return NotImplemented
        if other.n != self.n:
            raise DegreeMismatch(f"cannot compose degrees {self.n} and {other.n}")
        o = other.img
        return Perm((o[i] for i in self.img), check=False)

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(self.n)
        for _ in range(k):
            result = result * self
        return result

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for i, j in enumerate(self.img):
            inv[j] = i
        return Perm(inv, check=False)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.img))

    def order(self) -> int:
        seen = [False] * self.n
        lengths = []
        for start in range(self.n):
            if seen[start]:
                continue
            k, i = 0, start
            while not seen[i]:
                seen[i] = True
                i = self.img[i]
                k += 1
            lengths.append(k)
        return reduce(math.lcm, lengths, 1)

    def as_array(self) -> np.ndarray:
        return np.array(self.img, dtype=np.intp)


@lru_cache(maxsize=None)
def all_perms(n: int) -> np.ndarray:
    """Every permutation of ``range(n)`` in lexicographic order, one per row."""
    if n == 0:
        out = np.zeros((1, 0), dtype=np.intp)
    else:
        out = np.array(list(permutations(range(n))), dtype=np.intp)
    out.flags.writeable = False
    return out


def perm_orders(P: np.ndarray) -> np.ndarray:
    """Orders of a batch of permutations given as rows of ``P``."""
    m, n = P.shape
    ident = np.arange(n)
    orders = np.zeros(m, dtype=np.intp)
    cur = P.copy()
    k = 1
    while (orders == 0).any():
        done = (orders == 0) & (cur == ident).all(axis=1)
        orders[done] = k
        cur = np.take_along_axis(P, cur, axis=1)
        k += 1
    return orders


@dataclass(frozen=True)
class LoopTable:
    """A validated Cayley table of a finite loop with identity ``0``.

    Build instances with :func:`validate_table` or :func:`parse_table`.
    """

    n: int
    rows: tuple
    label: str = field(default="", compare=False)

    @cached_property
    def table(self) -> np.ndarray:
        t = np.array(self.rows, dtype=np.intp).reshape(self.n, self.n)
        t.flags.writeable = False
        return t

    @cached_property
    def ldiv(self) -> np.ndarray:
        """``ldiv[x, z]`` is the unique ``y`` with ``x.y = z``."""
        d = np.argsort(self.table, axis=1)
        d.flags.writeable = False
        return d

    @cached_property
    def rdiv(self) -> np.ndarray:
        """``rdiv[z, y]`` is the unique ``x`` with ``x.y = z``."""
        d = np.argsort(self.table, axis=0)
        d.flags.writeable = False
        return d

    def mul(self, x: int, y: int) -> int:
        return self.rows[x][y]

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"<LoopTable n={self.n}{tag}>"

    def with_label(self, label: str) -> "LoopTable":
        return LoopTable(self.n, self.rows, label)


def validate_table(raw, label: str = "") -> LoopTable:
    arr = np.asarray(raw)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise BadEntry(f"table must be a non-empty square array, got shape {arr.shape}")
    n = arr.shape[0]
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    if not np.issubdtype(arr.dtype, np.integer):
        if not all(float(v).is_integer() for v in arr.flat):
            raise BadEntry("table entries must be integers")
        arr = arr.astype(np.intp)
    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        i, j = bad[0]
        raise BadEntry(f"entry ({i},{j}) = {arr[i, j]} is outside 0..{n - 1}")
    full = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(arr[i]), full):
            raise NotLatin(f"row {i} repeats an element", row=i)
    for j in range(n):
        if not np.array_equal(np.sort(arr[:, j]), full):
            raise NotLatin(f"column {j} repeats an element", col=j)
    if not (np.array_equal(arr[0], full) and np.array_equal(arr[:, 0], full)):
        raise NoIdentity("row 0 and column 0 must be the identity map")
    rows = tuple(tuple(int(v) for v in row) for row in arr)
    return LoopTable(n, rows, label)


def from_rows(rows: Sequence[Sequence[int]], label: str = "") -> LoopTable:
    return validate_table(rows, label)


def _trusted(arr: np.ndarray, label: str = "") -> LoopTable:
    """Wrap an array already known to be a loop table, skipping validation."""
    return LoopTable(arr.shape[0], tuple(map(tuple, arr.tolist())), label)


# -- Cayley text format ---------------------------------------------------

def parse_table(text: str, label: str = "") -> LoopTable:
    """Parse the Cayley text format.

    ``#`` lines are comments, the first other line holds ``n`` and the next
    ``n`` lines hold the rows.  Blank lines are skipped.
    """
    lines = [
        (num, line.strip())
        for num, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("no order line found", line=1)
    num, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"expected the order, got {head!r}", line=num) from None
    if n < 1:
        raise ParseError(f"order must be positive, got {n}", line=num)
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    body = lines[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (body[-1][0] + 1 if body else num + 1)
        raise ParseError(f"expected {n} rows, found {len(body)}", line=where)
    rows = []
    for num, line in body:
        toks = line.split()
        if len(toks) != n:
            raise ParseError(f"row has {len(toks)} entries, expected {n}", line=num)
        try:
            rows.append([int(t) for t in toks])
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", line=num) from None
    return validate_table(rows, label)


def format_rows(n: int, rows, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(str(n))
    out.extend(" ".join(str(v) for v in row) for row in rows)
    return "\n".join(out) + "\n"


def format_table(L: LoopTable, comments: Iterable[str] = ()) -> str:
    return format_rows(L.n, L.rows, comments)


def load_table(path) -> LoopTable:
    from pathlib import Path

    path = Path(path)
    return parse_table(path.read_text(encoding="ascii"), label=path.stem)


# -- translations, inverses, powers ------------------------------------------

def _check_element(L: LoopTable, *xs: int) -> None:
    for x in xs:
        if not 0 <= x < L.n:
            raise IndexOutOfRange(f"element {x} is outside 0..{L.n - 1}")


def left_translation(L: LoopTable, x: int) -> Perm:
    """``L_x`` with ``y L_x = x.y``."""
    _check_element(L, x)
    return Perm(L.rows[x], check=False)


def right_translation(L: LoopTable, x: int) -> Perm:
    """``R_x`` with ``y R_x = y.x``."""
    _check_element(L, x)
    return Perm((row[x] for row in L.rows), check=False)


def left_inverse(L: LoopTable, x: int) -> int:
    _check_element(L, x)
    return int(L.rdiv[0, x])


def right_inverse(L: LoopTable, x: int) -> int:
    _check_element(L, x)
    return int(L.ldiv[x, 0])


def has_two_sided_inverses(L: LoopTable) -> bool:
    return bool(np.array_equal(L.rdiv[0], L.ldiv[:, 0]))


def j_map(L: LoopTable) -> Perm:
    """The inversion map ``J: x -> x^-1``; needs two-sided inverses."""
    lam, rho = L.rdiv[0], L.ldiv[:, 0]
    bad = np.flatnonzero(lam != rho)
    if len(bad):
        raise NoTwoSidedInverse(int(bad[0]))
    return Perm(lam, check=False)


def power(L: LoopTable, x: int, k: int) -> int:
    """``x^k`` built as ``x.(x^(k-1))``."""
    _check_element(L, x)
    if k < 0:
        raise ValueError("negative powers are taken as J applied to a positive power")
    row = L.rows[x]
    y = 0
    for _ in range(k):
        y = row[y]
    return y


def power_right(L: LoopTable, x: int, k: int) -> int:
    """``x^k`` built as ``(x^(k-1)).x``; used to cross-check :func:`power`."""
    _check_element(L, x)
    if k < 0:
        raise ValueError("k must be non-negative")
    y = 0
    for _ in range(k):
        y = L.rows[y][x]
    return y


def element_order(L: LoopTable, x: int) -> int:
    k, y = 1, power(L, x, 1)
    while y != 0:
        y = L.rows[x][y]
        k += 1
    return k


def exponent(L: LoopTable, bound: int | None = None) -> int | None:
    """Least ``k >= 1`` with ``x^k = e`` for every ``x``.

    ``x^k = e L_x^k`` so each element's powers cycle back to ``e``, and the
    exponent is the lcm of the element orders.  Returns ``None`` when that
    exceeds ``bound``.
    """
    k = reduce(math.lcm, (element_order(L, x) for x in range(L.n)), 1)
    if bound is not None and k > bound:
        return None
    return k


def exponent_agrees(L: LoopTable) -> bool:
    """True when the right-nested powers also vanish at the exponent."""
    k = exponent(L)
    return all(power_right(L, x, k) == 0 for x in range(L.n))


def divides_four(k: int | None) -> bool:
    return k is not None and 4 % k == 0


def first_failure(mask: np.ndarray):
    """Index tuple of the first ``False`` in row-major order, or ``None``."""
    bad = np.argwhere(~mask)
    if len(bad) == 0:
        return None
    return tuple(int(i) for i in bad[0])


def named_loops() -> dict[str, LoopTable]:
    """A few standard tables used by examples and tests."""
    def cyclic(n):
        return validate_table([[(i + j) % n for j in range(n)] for i in range(n)], f"Z{n}")

    klein = validate_table([[i ^ j for j in range(4)] for i in range(4)], "Z2xZ2")
    # S3 as permutations of three points, identity first
    elems = sorted(permutations(range(3)))
    index = {p: i for i, p in enumerate(elems)}
    s3 = validate_table(
        [[index[tuple(q[i] for i in p)] for q in elems] for p in elems], "S3"
    )
    out = {f"Z{n}": cyclic(n) for n in range(1, 7)}
    out["Z2xZ2"] = klein
    out["S3"] = s3
    return out
