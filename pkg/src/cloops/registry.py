"""Machine-checkable statements of the results on central loops.

Each registered result is a list of cases.  A case states, per table, a
hypothesis and a conclusion (or a list of such instances).  ``verify``
sweeps every loop of order ``1..n_max`` once and evaluates all requested
cases on that shared pass.

Verdicts per case:

* ``iff``: split into a forward and a backward sub-report.
* ``implication``: ``violated`` if some instance has the hypothesis but not
  the conclusion, ``vacuous`` if the hypothesis never holds.
* ``negative-existence``: the case searches for an instance exhibiting the
  claimed non-membership; ``holds`` with that instance as witness, or
  ``refutation-not-found`` when the sweep finds none.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable

from . import props as P
from .autotopy import (
    Triple,
    autotopism_group,
    cor_1_2_triple,
    exp4_conditions,
    is_autotopism,
    is_group_of_perms,
    is_mu_regular_pair,
    mu_regular_set,
    right_inner_maps_trivial,
    sigma_set,
    thm_1_1_triple,
    transform_lambda,
    transform_mu,
    transform_rho,
)
from .core import (
    LoopTable,
    Perm,
    Side,
    divides_four,
    exponent,
    has_two_sided_inverses,
    left_translation,
    right_translation,
)
from .enumeration import ENUMERATION_CAP, enumerate_loops
from .errors import OrderTooLarge, UnknownTheorem
from .isotopy import aut_invariance_check, cor_1_6_harness, phi_invariance_check, shaped_isotopes, thm_1_5_harness
from .representation import (
    corollary_0_5_check,
    is_representation,
    lemma_0_1_closure,
    lemma_0_2_commutation,
    pi_lambda,
    pi_rho,
    theorem_0_3_closure,
    theorem_0_4_closure,
)
from .reports import TheoremReport

LEFT, RIGHT = Side.LEFT, Side.RIGHT


class Facts:
    """Lazily computed predicates of one table, shared across cases."""

    def __init__(self, L: LoopTable):
        self.L = L

    @cached_property
    def lc(self):
        return P.is_lc(self.L)

    @cached_property
    def rc(self):
        return P.is_rc(self.L)

    @cached_property
    def c(self):
        return P.is_c(self.L)

    @cached_property
    def lalt(self):
        return P.is_left_alternative(self.L)

    @cached_property
    def ralt(self):
        return P.is_right_alternative(self.L)

    @cached_property
    def centrum_square(self):
        return P.is_centrum_square(self.L)

    @cached_property
    def central_square(self):
        return P.is_central_square(self.L)

    @cached_property
    def two_sided(self):
        return has_two_sided_inverses(self.L)

    @cached_property
    def exp4(self):
        """(condition 1 for all z, condition 2 for all z); needs inverses."""
        if not self.two_sided:
            return False, False
        return exp4_conditions(self.L)

    @cached_property
    def exponent(self):
        return exponent(self.L)

    @cached_property
    def aut(self):
        return autotopism_group(self.L)

    @cached_property
    def aut_keys(self):
        return {t.key() for t in self.aut}

    def in_aut(self, t: Triple) -> bool:
        return t.key() in self.aut_keys


@dataclass
class Instance:
    hypothesis: bool
    conclusion: bool
    detail: object = None


@dataclass
class Case:
    name: str
    kind: str
    hypothesis: Callable[[Facts], bool] | None = None
    conclusion: Callable[[Facts], bool] | None = None
    given: Callable[[Facts], bool] | None = None
    instances: Callable[[Facts], Iterable[Instance]] | None = None
    detail: Callable[[Facts], object] | None = None

    def evaluate(self, f: Facts) -> list[Instance]:
        if self.given is not None and not self.given(f):
            return []
        if self.instances is not None:
            return list(self.instances(f))
        h = bool(self.hypothesis(f))
        # implications only need the conclusion where the hypothesis holds
        c = bool(self.conclusion(f)) if h or self.kind == "iff" else False
        return [Instance(h, c)]


@dataclass
class TheoremSpec:
    id: str
    kind: str
    statement: str
    cases: list[Case] = field(default_factory=list)
    max_order: int = ENUMERATION_CAP


# -- helpers for predicates ----------------------------------------------------

def _all_y(f, make):
    return all(is_autotopism(f.L, make(y)) for y in range(f.L.n))


def _t11(side):
    return lambda f: _all_y(f, lambda y: thm_1_1_triple(f.L, y, side))


def _c12(side):
    def conclusion(f):
        L, n = f.L, f.L.n
        I = Perm.identity(n)
        for x in range(n):
            if side is LEFT:
                Lx2 = left_translation(L, x) ** 2
                part = Triple(Lx2, I, Lx2)
            else:
                Rx2 = right_translation(L, x) ** 2
                part = Triple(I, Rx2, Rx2)
            if not is_autotopism(L, part):
                return False
            for y in range(n):
                if not is_autotopism(L, cor_1_2_triple(L, x, y, side)):
                    return False
        return True

    return conclusion


def _l14(kind):
    def conclusion(f):
        L = f.L
        for y in range(L.n):
            Ly, Ry = left_translation(L, y), right_translation(L, y)
            y2 = L.rows[y][y]
            if kind == "lc":
                u, v = right_translation(L, y2), Ly * Ly
            elif kind == "rc":
                u, v = Ry * Ry, left_translation(L, y2)
            else:
                u, v = Ry * Ry, Ly * Ly
            if not is_mu_regular_pair(L, u, v):
                return False
        return True

    return conclusion


def _harness_instances(harness, side):
    def instances(f):
        for t, H in shaped_isotopes(f.L, side):
            rep = harness(f.L, H, t, side)
            detail = f"t=({t}) H={';'.join(','.join(map(str, r)) for r in H.rows)}"
            yield Instance(rep.counts[1] == 1, rep.counts[2] == 1, detail)

    return instances


def _c_loop_harness_given(side, base):
    # Cheap prefilter: the harness hypotheses on G.
    return lambda f: getattr(f, base) and f.central_square


def _aut_transforms(f):
    for A in f.aut:
        if not (f.in_aut(transform_mu(f.L, A)) and f.in_aut(transform_lambda(f.L, A))):
            return False
    return True


def _rho_witness(f):
    for A in f.aut:
        if not f.in_aut(transform_rho(f.L, A)):
            yield Instance(True, True, f"A=({A}) has A_rho=({transform_rho(f.L, A)}) outside AUT")
            return


def _isotope_pairs(check):
    def instances(f):
        n = f.L.n
        for a in range(n):
            for b in range(n):
                yield Instance(True, check(f.L, a, b), f"a={a},b={b}")

    return instances


def _phi_subgroup(f):
    entries = mu_regular_set(f.L, verify=False)
    us = [e.u for e in entries]
    return is_group_of_perms(us) and set(us) <= sigma_set(f.L)


def _exp4_both(f):
    return f.c and f.exp4[0] and f.exp4[1]


def _corollary_1_9(f):
    L = f.L
    return P.is_flexible(L) and P.squares_commute_check(L) and P.cube_antiautomorphism_check(L)


# -- the registry ----------------------------------------------------------------

def _iff(name, lhs, rhs, given=None):
    return Case(name, "iff", lhs, rhs, given=given)


def _imp(name, hyp, concl, **kw):
    return Case(name, "implication", hyp, concl, **kw)


THEOREMS: dict[str, TheoremSpec] = {}


def _register(spec: TheoremSpec):
    if spec.id in THEOREMS:
        raise ValueError(f"duplicate theorem id {spec.id}")
    THEOREMS[spec.id] = spec


_register(TheoremSpec("D1.1", "implication", "left and right translation sets satisfy the representation axioms", [
    _imp("translations", lambda f: True,
         lambda f: is_representation(pi_lambda(f.L)) and is_representation(pi_rho(f.L))),
]))
_register(TheoremSpec("L0.1", "iff", "LC (RC) iff R_{y^2}R_z = R_{y.yz} (L_{y^2}L_z = L_{zy.y})", [
    _iff("left", lambda f: f.lc, lambda f: lemma_0_1_closure(f.L, LEFT)),
    _iff("right", lambda f: f.rc, lambda f: lemma_0_1_closure(f.L, RIGHT)),
]))
_register(TheoremSpec("L0.2", "iff", "LC (RC) iff L_x^2 (R_x^2) commutes with every R_z (L_z)", [
    _iff("left", lambda f: f.lc, lambda f: lemma_0_2_commutation(f.L, LEFT)),
    _iff("right", lambda f: f.rc, lambda f: lemma_0_2_commutation(f.L, RIGHT)),
]))
_register(TheoremSpec("T0.3", "iff", "LC (RC) iff a^2 b stays in the left (right) translations", [
    _iff("left", lambda f: f.lc, lambda f: theorem_0_3_closure(f.L, LEFT)),
    _iff("right", lambda f: f.rc, lambda f: theorem_0_3_closure(f.L, RIGHT)),
]))
_register(TheoremSpec("T0.4", "iff", "an LC (RC) loop is centrum square iff R_z R_{y^2} = R_{y.yz} (dual)", [
    _iff("left", lambda f: f.centrum_square, lambda f: theorem_0_4_closure(f.L, LEFT).holds, given=lambda f: f.lc),
    _iff("right", lambda f: f.centrum_square, lambda f: theorem_0_4_closure(f.L, RIGHT).holds, given=lambda f: f.rc),
]))
_register(TheoremSpec("C0.5", "iff", "centrum square LC (RC) iff both closure conditions", [
    _iff("left", lambda f: f.lc and f.centrum_square, lambda f: corollary_0_5_check(f.L, LEFT)),
    _iff("right", lambda f: f.rc and f.centrum_square, lambda f: corollary_0_5_check(f.L, RIGHT)),
]))
_register(TheoremSpec("T1.1", "iff", "LC (RC) iff (R_{y^2}, L_y^-2, I) ((R_y^2, L_{y^2}^-1, I)) is an autotopism for all y", [
    _iff("left", lambda f: f.lc, _t11(LEFT)),
    _iff("right", lambda f: f.rc, _t11(RIGHT)),
]))
_register(TheoremSpec("C1.2", "implication", "in an LC (RC) loop the composite triples are autotopisms", [
    _imp("left", lambda f: f.lc, _c12(LEFT)),
    _imp("right", lambda f: f.rc, _c12(RIGHT)),
]))
_register(TheoremSpec("T1.3", "iff", "C iff right alternative LC iff left alternative RC", [
    _iff("left", lambda f: f.c, lambda f: f.lc and f.ralt),
    _iff("right", lambda f: f.c, lambda f: f.rc and f.lalt),
]))
_register(TheoremSpec("L1.4", "iff", "LC (RC, C) iff the squared translations are mu-regular with the stated adjoints", [
    _iff("lc", lambda f: f.lc, _l14("lc")),
    _iff("rc", lambda f: f.rc, _l14("rc")),
    _iff("c", lambda f: f.c, _l14("c")),
]))
_register(TheoremSpec("T1.5", "implication", "shaped isotopes of central square LC (RC) loops that are alternative central square are C-loops", [
    Case("left", "implication", given=_c_loop_harness_given(LEFT, "lc"), instances=_harness_instances(thm_1_5_harness, LEFT)),
    Case("right", "implication", given=_c_loop_harness_given(RIGHT, "rc"), instances=_harness_instances(thm_1_5_harness, RIGHT)),
]))
_register(TheoremSpec("C1.6", "implication", "the same for left alternative RC (right alternative LC) loops", [
    Case("left", "implication", given=lambda f: f.rc and f.lalt and f.central_square,
         instances=_harness_instances(cor_1_6_harness, LEFT)),
    Case("right", "implication", given=lambda f: f.lc and f.ralt and f.central_square,
         instances=_harness_instances(cor_1_6_harness, RIGHT)),
]))
_register(TheoremSpec("T5.exp4", "implication", "a C-loop meeting either exponent-4 condition has exponent dividing 4", [
    _imp("condition-1", lambda f: f.c and f.exp4[0], lambda f: divides_four(f.exponent)),
    _imp("condition-2", lambda f: f.c and f.exp4[1], lambda f: divides_four(f.exponent)),
]))
_register(TheoremSpec("T5.csq", "implication", "a C-loop meeting both conditions is central square of exponent dividing 4", [
    _imp("both-conditions", _exp4_both, lambda f: f.central_square and divides_four(f.exponent)),
    _imp("nuclear-square", lambda f: f.c, lambda f: P.is_nuclear_square(f.L)),
]))
_register(TheoremSpec("T1.8", "negative-existence", "A_mu and A_lambda stay in AUT of a C-loop; A_rho need not", [
    _imp("mu-lambda", lambda f: f.c, _aut_transforms),
    Case("rho", "negative-existence", given=lambda f: f.c, instances=_rho_witness),
]))
_register(TheoremSpec("C1.9", "implication", "under both conditions a C-loop is flexible, (xy)^2=(yx)^2, and cubing is an anti-automorphism", [
    _imp("both-conditions", _exp4_both, _corollary_1_9),
]))
_register(TheoremSpec("T1.10", "implication", "a central square C-loop of exponent dividing 4 is a group", [
    _imp("right-inner-maps", lambda f: f.c and f.central_square and divides_four(f.exponent),
         lambda f: right_inner_maps_trivial(f.L)),
]))
_register(TheoremSpec("C1.11", "implication", "a C-loop meeting both conditions is a group", [
    _imp("both-conditions", _exp4_both, lambda f: right_inner_maps_trivial(f.L)),
]))
_register(TheoremSpec("T2.1", "implication", "principal isotopes have matching AUT (size and order multiset)", [
    Case("principal-isotopes", "implication", instances=_isotope_pairs(aut_invariance_check)),
]))
_register(TheoremSpec("T2.2", "implication", "mu-regular bijections form a subgroup of the autotopic bijections", [
    _imp("subgroup", lambda f: True, _phi_subgroup),
]))
_register(TheoremSpec("C2.3", "implication", "principal isotopes have matching mu-regular sets and adjoints", [
    Case("principal-isotopes", "implication", instances=_isotope_pairs(phi_invariance_check)),
]))


# -- evaluation ------------------------------------------------------------------

class _Tally:
    def __init__(self, kind):
        self.kind = kind
        self.hyp = self.concl = 0
        self.witness = None

    def add(self, L, inst, swap=False):
        h, c = (inst.conclusion, inst.hypothesis) if swap else (inst.hypothesis, inst.conclusion)
        self.hyp += h
        self.concl += h and c
        if self.kind == "negative-existence":
            if h and c and self.witness is None:
                self.witness = (L, inst.detail)
        elif h and not c and self.witness is None:
            self.witness = (L, inst.detail if inst.detail is not None else "hypothesis holds, conclusion fails")

    def report(self, name, swept):
        if self.kind == "negative-existence":
            verdict = "holds" if self.witness else "refutation-not-found"
        elif self.witness is not None:
            verdict = "violated"
        elif self.hyp == 0:
            verdict = "vacuous"
        else:
            verdict = "holds"
        return TheoremReport(name, verdict, (swept, self.hyp, self.concl), witness=self.witness)


def _aggregate(theorem_id, parts, swept, any_hyp, any_concl, notes):
    verdicts = [p.verdict for p in parts]
    if "violated" in verdicts:
        verdict = "violated"
    elif "holds" in verdicts:
        verdict = "holds"
    elif "refutation-not-found" in verdicts:
        verdict = "refutation-not-found"
    else:
        verdict = "vacuous"
    witness = next((p.witness for p in parts if p.verdict == "violated"), None)
    return TheoremReport(theorem_id, verdict, (swept, any_hyp, any_concl), witness=witness, parts=parts, notes=notes)


# cases whose report notes which exponents occurred under the hypothesis
_EXPONENT_CASES = {
    ("T1.10", "right-inner-maps"),
    ("T5.exp4", "condition-1"),
    ("T5.exp4", "condition-2"),
    ("T5.csq", "both-conditions"),
}


def _check_n_max(n_max):
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if n_max > ENUMERATION_CAP:
        raise OrderTooLarge(f"n_max {n_max} exceeds the enumeration cap {ENUMERATION_CAP}")


def verify_many(ids: Iterable[str], n_max: int, tables: Iterable[LoopTable] | None = None) -> list[TheoremReport]:
    """Evaluate several results on one shared sweep.

    ``tables`` replaces the enumerated corpus (for checking a supplied table).
    """
    specs = []
    for tid in ids:
        if tid not in THEOREMS:
            raise UnknownTheorem(f"unknown theorem id {tid!r}; known: {', '.join(THEOREMS)}")
        specs.append(THEOREMS[tid])
    if tables is None:
        _check_n_max(n_max)
        tables = (L for n in range(1, n_max + 1) for L in enumerate_loops(n))
    tallies = {}
    per_table = {}
    for spec in specs:
        per_table[spec.id] = [0, 0]
        for case in spec.cases:
            if case.kind == "iff":
                tallies[spec.id, case.name, "forward"] = _Tally("implication")
                tallies[spec.id, case.name, "backward"] = _Tally("implication")
            else:
                tallies[spec.id, case.name, None] = _Tally(case.kind)
    exponents: dict[str, set] = {spec.id: set() for spec in specs}
    swept = 0
    for L in tables:
        swept += 1
        f = Facts(L)
        for spec in specs:
            any_h = any_c = False
            for case in spec.cases:
                for inst in case.evaluate(f):
                    if case.kind == "iff":
                        tallies[spec.id, case.name, "forward"].add(L, inst)
                        tallies[spec.id, case.name, "backward"].add(L, inst, swap=True)
                    else:
                        tallies[spec.id, case.name, None].add(L, inst)
                    any_h |= bool(inst.hypothesis)
                    any_c |= bool(inst.hypothesis and inst.conclusion)
                    if inst.hypothesis and (spec.id, case.name) in _EXPONENT_CASES:
                        exponents[spec.id].add(f.exponent)
            per_table[spec.id][0] += any_h
            per_table[spec.id][1] += any_c
    reports = []
    for spec in specs:
        parts = []
        for case in spec.cases:
            if case.kind == "iff":
                for direction in ("forward", "backward"):
                    parts.append(tallies[spec.id, case.name, direction].report(f"{spec.id}[{case.name}]:{direction}", swept))
            else:
                parts.append(tallies[spec.id, case.name, None].report(f"{spec.id}[{case.name}]", swept))
        notes = []
        if exponents[spec.id]:
            notes.append("exponents under hypothesis: " + ",".join(map(str, sorted(exponents[spec.id]))))
        reports.append(_aggregate(spec.id, parts, swept, *per_table[spec.id], notes))
    return reports


def verify(theorem_id: str, n_max: int) -> TheoremReport:
    return verify_many([theorem_id], n_max)[0]


def verify_all(n_max: int) -> list[TheoremReport]:
    return verify_many(list(THEOREMS), n_max)


def theorem_ids() -> list[str]:
    return list(THEOREMS)


def any_violated(reports: Iterable[TheoremReport]) -> bool:
    return any(r.verdict == "violated" for r in reports)
