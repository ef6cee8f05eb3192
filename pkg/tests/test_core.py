import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cloops.core import (
    LoopTable,
    Perm,
    exponent,
    exponent_agrees,
    format_table,
    has_two_sided_inverses,
    j_map,
    left_inverse,
    left_translation,
    load_table,
    parse_table,
    power,
    power_right,
    right_inverse,
    right_translation,
    validate_table,
)
from cloops.errors import (
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
from cloops.props import is_group

from helpers import FIXTURES, loops_up_to

SMALL = loops_up_to(5)


def test_validate_z2():
    L = validate_table([[0, 1], [1, 0]])
    assert L.n == 2 and L.rows == ((0, 1), (1, 0))


def test_validate_constant_column():
    with pytest.raises(NotLatin) as exc:
        validate_table([[0, 1], [0, 1]])
    assert exc.value.col == 0


def test_validate_no_identity():
    with pytest.raises(NoIdentity):
        validate_table([[1, 0], [0, 1]])


@pytest.mark.parametrize(
    "raw, err",
    [
        ([[0, 1], [1, 2]], BadEntry),
        ([[0, 1], [1, -1]], BadEntry),
        ([[0, 1, 2], [1, 2, 0]], BadEntry),
        ([[0.0, 1.5], [1.0, 0.0]], BadEntry),
        (np.zeros((17, 17), dtype=int), OrderTooLarge),
    ],
)
def test_validate_rejects(raw, err):
    with pytest.raises(err):
        validate_table(raw)


def test_tables_are_immutable(named):
    L = named["Z4"]
    with pytest.raises(ValueError):
        L.table[1, 1] = 0
    with pytest.raises(Exception):
        L.n = 3


@pytest.mark.parametrize(
    "name, x, img",
    [("Z3", 1, [1, 2, 0]), ("Z4", 2, [2, 3, 0, 1]), ("Z4", 0, [0, 1, 2, 3]), ("S3", 0, list(range(6)))],
)
def test_left_translation(named, name, x, img):
    assert list(left_translation(named[name], x)) == img


@pytest.mark.parametrize("L", SMALL, ids=lambda L: L.label)
def test_translations_match_table(L):
    for x in range(L.n):
        lx, rx = left_translation(L, x), right_translation(L, x)
        assert (lx * lx.inverse()).is_identity() and (rx.inverse() * rx).is_identity()
        for y in range(L.n):
            assert lx[y] == right_translation(L, y)[x] == L.rows[x][y]
        assert L.rows[left_inverse(L, x)][x] == 0
        assert L.rows[x][right_inverse(L, x)] == 0


def test_translation_range(named):
    with pytest.raises(IndexOutOfRange):
        left_translation(named["Z3"], 3)


def test_inverses(named):
    Z4, K = named["Z4"], named["Z2xZ2"]
    assert left_inverse(Z4, 1) == right_inverse(Z4, 1) == 3
    assert left_inverse(Z4, 0) == 0
    assert all(left_inverse(K, x) == x for x in range(4))
    assert list(j_map(Z4)) == [0, 3, 2, 1]
    assert j_map(K).is_identity()


def test_j_map_without_two_sided_inverses():
    # oracle: scan order 5 for a loop where x^lambda != x^rho
    L = next(L for L in loops_up_to(5) if any(left_inverse(L, x) != right_inverse(L, x) for x in range(L.n)))
    assert L.n == 5
    assert not has_two_sided_inverses(L)
    with pytest.raises(NoTwoSidedInverse):
        j_map(L)


@pytest.mark.parametrize("L", [L for L in SMALL if has_two_sided_inverses(L)], ids=lambda L: L.label)
def test_j_is_involution(L):
    assert (j_map(L) ** 2).is_identity()


@pytest.mark.parametrize("x, k, want", [(1, 4, 0), (3, 2, 2), (1, 0, 0), (2, 1, 2)])
def test_power_z4(named, x, k, want):
    assert power(named["Z4"], x, k) == want


@pytest.mark.parametrize("L", SMALL, ids=lambda L: L.label)
def test_power_one_and_exponent(L):
    k = exponent(L)
    for x in range(L.n):
        assert power(L, x, 1) == x
        assert power(L, x, k) == 0
    if is_group(L):
        for x in range(L.n):
            for j in range(2 * L.n + 1):
                assert power(L, x, j) == power_right(L, x, j)
        assert exponent_agrees(L)


@pytest.mark.parametrize("name, k", [("Z4", 4), ("Z2xZ2", 2), ("Z1", 1), ("Z6", 6), ("S3", 6)])
def test_exponent(named, name, k):
    assert exponent(named[name]) == k


def test_exponent_bound(named):
    assert exponent(named["Z6"], bound=4) is None
    assert exponent(named["Z4"], bound=4) == 4


def test_perm_basics():
    p = Perm.from_spec("1,2,0")
    q = Perm.from_spec("0,2,1")
    # p then q
    assert list(p * q) == [2, 1, 0]
    assert p.order() == 3 and (p ** 3).is_identity()
    assert (p ** -1) == p.inverse()
    assert str(p) == "1,2,0"
    with pytest.raises(NotABijection):
        Perm.from_spec("0,0,1")
    with pytest.raises(NotABijection):
        Perm.from_spec("0,a")
    with pytest.raises(DegreeMismatch):
        Perm.from_spec("0,1", 3)
    with pytest.raises(DegreeMismatch):
        p * Perm.identity(2)


@given(st.permutations(range(6)), st.permutations(range(6)), st.permutations(range(6)))
def test_perm_group_laws(a, b, c):
    a, b, c = Perm(a), Perm(b), Perm(c)
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()
    assert (a * b).inverse() == b.inverse() * a.inverse()
    for x in range(6):
        assert (a * b)[x] == b[a[x]]


def test_parse_comments_and_blanks():
    text = "# Z2\n\n2\n0 1   \n# mid comment\n1 0\n"
    assert parse_table(text).rows == ((0, 1), (1, 0))


@pytest.mark.parametrize(
    "name, err, line",
    [
        ("bad_row_length.txt", ParseError, 4),
        ("bad_token.txt", ParseError, 3),
        ("bad_row_count.txt", ParseError, 4),
        ("bad_not_latin.txt", NotLatin, None),
        ("bad_no_identity.txt", NoIdentity, None),
        ("bad_entry.txt", BadEntry, None),
    ],
)
def test_malformed_fixtures(name, err, line):
    with pytest.raises(err) as exc:
        load_table(FIXTURES / name)
    if line is not None:
        assert exc.value.line == line
        assert f"line {line}" in str(exc.value)


@pytest.mark.parametrize("text", ["", "# only a comment\n", "two\n0 1\n1 0\n", "0\n", "20\n"])
def test_parse_bad_header(text):
    with pytest.raises((ParseError, OrderTooLarge)):
        parse_table(text)


@pytest.mark.parametrize("L", SMALL, ids=lambda L: L.label)
def test_format_round_trip(L):
    text = format_table(L, ["a comment"])
    again = parse_table(text)
    assert again == L
    assert format_table(again, ["a comment"]) == text


@settings(max_examples=40)
@given(st.integers(1, 8), st.data())
def test_isotope_of_cyclic_is_valid(n, data):
    # relabeling Z_n by a bijection fixing 0 gives another valid loop
    rest = data.draw(st.permutations(range(1, n)))
    f = [0] + list(rest)
    finv = np.argsort(f)
    rows = [[f[(finv[i] + finv[j]) % n] for j in range(n)] for i in range(n)]
    L = validate_table(rows)
    assert isinstance(L, LoopTable) and exponent(L) == n
