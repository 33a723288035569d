import pytest
from hypothesis import given, strategies as st

from sigmafact.errors import DegreeMismatch, ParseError
from sigmafact.perm import Perm, compose, parse_perm, parse_perm_list


def perms(degree):
    return st.permutations(range(1, degree + 1)).map(Perm)


def test_involution_squares_to_identity():
    t = parse_perm("(1 2)")
    assert compose(t, t).is_identity()


def test_composition_convention():
    # (a*b)(x) = a(b(x)): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    a, b = parse_perm_list("(1 2); (2 3)")
    assert compose(a, b) == parse_perm("(1 2 3)")
    assert str(a * b) == "(1 2 3)"


def test_identity_is_neutral():
    a = parse_perm("(1 3 2)(4 5)")
    assert a * Perm.identity(5) == a == Perm.identity(5) * a


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(parse_perm("(1 2)"), parse_perm("(2 3)"))


@pytest.mark.parametrize("text, cycles", [
    ("()", "()"),
    ("(1 2 3)(4 5)", "(1 2 3)(4 5)"),
    ("(1,2,3)", "(1 2 3)"),
    ("(3 1 2)", "(1 2 3)"),
    ("(1)(2 3)", "(2 3)"),
])
def test_parse_and_print(text, cycles):
    assert str(parse_perm(text)) == cycles


def test_list_separators_lift_to_common_degree():
    ps = parse_perm_list("(1 2), (1 2 3 4)")
    assert [p.degree for p in ps] == [4, 4]
    assert parse_perm_list("(1 2); (1 2 3 4)") == ps


@pytest.mark.parametrize("text, column", [
    ("(1 2", 1),
    ("(1 x)", 4),
    ("(1 2 1)", 6),
    ("(0 1)", 2),
])
def test_parse_errors_carry_column(text, column):
    with pytest.raises(ParseError) as info:
        parse_perm(text)
    assert info.value.column == column
    assert f"column {column}" in str(info.value)


def test_parse_error_line_number():
    with pytest.raises(ParseError) as info:
        parse_perm_list("(1 2); (3 x)", line=7)
    assert info.value.line == 7


def test_degree_too_small():
    with pytest.raises(ParseError):
        parse_perm("(1 5)", degree=3)


@given(perms(7), perms(7), perms(7))
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms(7))
def test_inverse_and_order(a):
    assert (a * a.inverse()).is_identity()
    assert (a ** a.order()).is_identity()
    assert all(not (a ** k).is_identity() for k in range(1, a.order()))


@given(perms(8))
def test_cycle_string_roundtrip(a):
    assert parse_perm(str(a), 8) == a
