"""Isotopes, normalization back to loops, and isotopy-invariance checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

from .autotopy import Triple, aut_signature, phi_signature
from .core import LoopTable, Perm, Side, _trusted, format_rows, left_translation, right_translation
from .errors import DegreeMismatch, IndexOutOfRange, OrderTooLarge
from .props import is_c, is_central_square, is_lc, is_left_alternative, is_rc, is_right_alternative
from .reports import TheoremReport

ISOMORPHISM_CAP = 6


@dataclass(frozen=True)
class QuasigroupTable:
    """A Latin square that need not have an identity element."""

    n: int
    rows: tuple
    origin: str = field(default="", compare=False)

    @property
    def table(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.intp).reshape(self.n, self.n)

    @classmethod
    def from_loop(cls, L: LoopTable) -> "QuasigroupTable":
        return cls(L.n, L.rows, L.label)

    def identity_element(self) -> int | None:
        T = self.table
        full = np.arange(self.n)
        for u in range(self.n):
            if np.array_equal(T[u], full) and np.array_equal(T[:, u], full):
                return u
        return None

    def is_latin(self) -> bool:
        T = self.table
        full = np.arange(self.n)
        return bool((np.sort(T, axis=1) == full).all() and (np.sort(T, axis=0) == full[:, None]).all())

    def text(self) -> str:
        return format_rows(self.n, self.rows)


def isotope(L: LoopTable, t: Triple) -> QuasigroupTable:
    """The table of ``a o b = ((a U^-1).(b V^-1)) W``, so ``xU o yV = (x.y)W``."""
    if t.n != L.n:
        raise DegreeMismatch(f"triple degree {t.n} does not match order {L.n}")
    T = L.table
    Ui, Vi = t.U.inverse().as_array(), t.V.inverse().as_array()
    W = t.W.as_array()
    Q = W[T[Ui[:, None], Vi[None, :]]]
    q = QuasigroupTable(L.n, tuple(map(tuple, Q.tolist())), f"isotope of {L.label or 'L'} by ({t})")
    assert q.is_latin()
    return q


def principal_isotope(L: LoopTable, a: int, b: int) -> QuasigroupTable:
    """``x o y = (x R_a^-1).(y L_b^-1)``; its identity element is ``b.a``."""
    for v in (a, b):
        if not 0 <= v < L.n:
            raise IndexOutOfRange(f"element {v} is outside 0..{L.n - 1}")
    t = Triple(right_translation(L, a), left_translation(L, b), Perm.identity(L.n))
    q = isotope(L, t)
    q = QuasigroupTable(q.n, q.rows, f"principal isotope of {L.label or 'L'} with a={a}, b={b}")
    assert q.identity_element() == L.rows[b][a]
    return q


def normalize_to_loop(Q: QuasigroupTable) -> LoopTable | None:
    """Relabel by swapping ``0`` with the identity element; ``None`` without one."""
    u = Q.identity_element()
    if u is None:
        return None
    s = list(range(Q.n))
    s[0], s[u] = s[u], s[0]
    s = np.array(s)
    T = Q.table
    # new[s x, s y] = s(old[x, y]); s is an involution
    new = s[T[s[:, None], s[None, :]]]
    return _trusted(new, Q.origin)


def find_isomorphism(A: LoopTable, B: LoopTable) -> Perm | None:
    """A bijection ``f`` with ``f(x.y) = f(x).f(y)``, by exhaustive search."""
    if A.n != B.n:
        return None
    n = A.n
    if n > ISOMORPHISM_CAP:
        raise OrderTooLarge(f"isomorphism search is capped at order {ISOMORPHISM_CAP}")
    ta, tb = A.table, B.table
    for rest in permutations(range(1, n)):
        f = np.array((0,) + rest)
        # f(1.y) = f(1).f(y) first, then the full table
        if n > 1 and not np.array_equal(f[ta[1]], tb[f[1], f]):
            continue
        if np.array_equal(f[ta], tb[f[:, None], f[None, :]]):
            return Perm(f, check=False)
    return None


def aut_invariance_check(L: LoopTable, a: int, b: int) -> bool:
    """Compare AUT of ``L`` and of its principal isotope by size and order multiset."""
    H = normalize_to_loop(principal_isotope(L, a, b))
    return aut_signature(L) == aut_signature(H)


def phi_invariance_check(L: LoopTable, a: int, b: int) -> bool:
    """Same comparison for the mu-regular bijections and their adjoints."""
    H = normalize_to_loop(principal_isotope(L, a, b))
    return phi_signature(L) == phi_signature(H)


# -- the isotopy theorems ---------------------------------------------------------

def is_isotopism(G: LoopTable, H: LoopTable, t: Triple):
    """First ``(x, y)`` with ``xU o yV != (x.y)W`` (``o`` is H's product), else ``None``."""
    if not (G.n == H.n == t.n):
        raise DegreeMismatch("tables and triple must share one order")
    U, V, W = t.U.as_array(), t.V.as_array(), t.W.as_array()
    mask = H.table[U[:, None], V[None, :]] == W[G.table]
    bad = np.argwhere(~mask)
    return None if len(bad) == 0 else (int(bad[0][0]), int(bad[0][1]))


def _isotopy_harness(theorem, G, H, t, side, g_hypotheses):
    side = Side.parse(side)
    if not (G.n == H.n == t.n):
        raise DegreeMismatch("tables and triple must share one order")
    shape_ok = t.V == t.W if side is Side.LEFT else t.U == t.W
    hyps = {"shape": shape_ok}
    hyps["isotopism"] = shape_ok and is_isotopism(G, H, t) is None
    hyps.update((name, pred(G)) for name, pred in g_hypotheses)
    hyps["H alternative"] = is_left_alternative(H) and is_right_alternative(H)
    hyps["H central square"] = is_central_square(H)
    met = all(hyps.values())
    concl = is_c(H)
    if not met:
        verdict = "vacuous"
    elif concl:
        verdict = "holds"
    else:
        verdict = "violated"
    failed = [k for k, v in hyps.items() if not v]
    return TheoremReport(
        theorem,
        verdict,
        (1, int(met), int(met and concl)),
        witness=(H, str(t)) if verdict == "violated" else None,
        notes=[f"side={side.value}"] + ([f"unmet: {', '.join(failed)}"] if failed else []),
    )


def thm_1_5_harness(G: LoopTable, H: LoopTable, t: Triple, side=Side.LEFT) -> TheoremReport:
    """Check one instance: G central square LC (RC), H alternative central
    square, ``t`` of shape (A, B, B) ((A, B, A)) an isotopism G -> H; then
    H should be a C-loop."""
    side = Side.parse(side)
    base = ("G LC", is_lc) if side is Side.LEFT else ("G RC", is_rc)
    return _isotopy_harness("T1.5", G, H, t, side, [base, ("G central square", is_central_square)])


def cor_1_6_harness(G: LoopTable, H: LoopTable, t: Triple, side=Side.LEFT) -> TheoremReport:
    """Left: G a left alternative RC-loop with shape (A, B, B).
    Right: G a right alternative LC-loop with shape (A, B, A)."""
    side = Side.parse(side)
    if side is Side.LEFT:
        hyps = [("G RC", is_rc), ("G left alternative", is_left_alternative)]
    else:
        hyps = [("G LC", is_lc), ("G right alternative", is_right_alternative)]
    hyps.append(("G central square", is_central_square))
    return _isotopy_harness("C1.6", G, H, t, side, hyps)


def shaped_isotopes(G: LoopTable, side=Side.LEFT):
    """Yield ``(t, H)`` for the loop isotopes reached by shaped triples.

    Left: ``(I, R_c^-1, R_c^-1)`` gives ``x o y = (x.(y.c))/c``, a loop with
    identity ``0``; every (A, B, B) loop isotope is isomorphic to one of
    these.  Right: ``(L_c^-1, I, L_c^-1)``.
    """
    side = Side.parse(side)
    I = Perm.identity(G.n)
    for c in range(G.n):
        if side is Side.LEFT:
            B = right_translation(G, c).inverse()
            t = Triple(I, B, B)
        else:
            A = left_translation(G, c).inverse()
            t = Triple(A, I, A)
        H = normalize_to_loop(isotope(G, t))
        yield t, H
