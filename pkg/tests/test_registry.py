from pathlib import Path

import pytest

from cloops.core import from_rows
from cloops.errors import OrderTooLarge, UnknownTheorem
from cloops.props import is_c
from cloops.registry import (
    THEOREMS,
    Case,
    TheoremSpec,
    Facts,
    any_violated,
    theorem_ids,
    verify,
    verify_all,
    verify_many,
)
from cloops.reports import TheoremReport

MANIFEST = Path(__file__).parent / "data" / "theorem_manifest.txt"


def test_registry_matches_manifest():
    want = [line.strip() for line in MANIFEST.read_text().splitlines() if line.strip()]
    assert theorem_ids() == want


def test_l02_order5():
    rep = verify("L0.2", 5)
    assert rep.verdict == "holds"
    assert rep.counts[0] == 63
    # one forward and one backward sub-report per side
    assert [p.id for p in rep.parts] == [
        "L0.2[left]:forward", "L0.2[left]:backward", "L0.2[right]:forward", "L0.2[right]:backward",
    ]


def test_t22_order4():
    assert verify("T2.2", 4).verdict == "holds"


def test_t110_order6():
    rep = verify("T1.10", 6)
    assert rep.verdict == "holds"
    assert rep.counts[0] == 9471
    assert any(n.startswith("exponents under hypothesis") for n in rep.notes)


@pytest.mark.parametrize("n_max", [1, 4])
def test_verify_all_small(n_max):
    reports = verify_all(n_max)
    assert [r.id for r in reports] == theorem_ids()
    assert all(r.verdict in ("holds", "vacuous", "refutation-not-found") for r in reports)
    assert not any_violated(reports)


def test_order1_universal_results_hold():
    for r in verify_all(1):
        if THEOREMS[r.id].kind != "negative-existence":
            assert r.verdict in ("holds", "vacuous")


def test_verify_all_order5():
    reports = verify_all(5)
    assert not any_violated(reports)
    by_id = {r.id: r for r in reports}
    # the rho transform leaves AUT already in a small group
    assert by_id["T1.8"].parts[1].verdict == "holds"
    assert by_id["T1.8"].parts[1].witness is not None


def test_deterministic():
    a = [r.to_records() for r in verify_many(["T0.4", "T1.1", "C2.3"], 4)]
    b = [r.to_records() for r in verify_many(["T0.4", "T1.1", "C2.3"], 4)]
    assert a == b


def test_errors():
    with pytest.raises(UnknownTheorem):
        verify("X9.9", 3)
    with pytest.raises(OrderTooLarge):
        verify("L0.1", 7)
    with pytest.raises(ValueError):
        verify("L0.1", 0)


def test_violation_is_reported_and_reproducible(monkeypatch):
    # a deliberately false statement: every C-loop of order <= 3 is trivial
    bogus = TheoremSpec("X0.0", "implication", "false on purpose", [
        Case("all", "implication", lambda f: is_c(f.L), lambda f: f.L.n == 1),
    ])
    monkeypatch.setitem(THEOREMS, "X0.0", bogus)
    rep = verify("X0.0", 3)
    assert rep.verdict == "violated"
    L = rep.witness_table()
    assert L is not None and L.n == 2
    case = bogus.cases[0]
    f = Facts(L)
    assert case.hypothesis(f) and not case.conclusion(f)
    text = rep.to_text()
    assert "witness" in text and "0 1" in text
    rec = rep.to_records()[0]
    assert "verdict=violated" in rec and "witness_table=2;0,1;1,0" in rec


def test_supplied_tables():
    L = from_rows([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    rep = verify_many(["T1.3"], 3, tables=[L])[0]
    assert rep.counts == (1, 1, 1)


def test_report_validation():
    with pytest.raises(ValueError):
        TheoremReport("x", "maybe")
    r = TheoremReport("x", "vacuous", (3, 0, 0), notes=["a b"])
    assert r.ok and r.to_records() == ["id=x verdict=vacuous swept=3 hypothesis=0 conclusion=0 notes=a_b"]


@pytest.mark.slow
def test_verify_all_order6():
    reports = verify_all(6)
    assert not any_violated(reports)
    assert all(r.counts[0] == 9471 for r in reports)
