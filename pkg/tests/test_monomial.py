import pytest
from hypothesis import given, strategies as st

from cmcodim2.errors import MonomialParseError, PreconditionError, UsageError
from cmcodim2.monomial import (
    Monomial,
    VariableSet,
    divide_exact,
    format_monomial,
    gcd,
    is_coprime,
    lcm,
    parse,
)

X = VariableSet.standard(6)


def m(text):
    return X.parse(text)


def test_gcd_examples():
    assert gcd(m("x1*x2^2"), m("x2*x3")) == m("x2")
    assert gcd(m("x4*x5*x6"), X.unit()) == X.unit()
    assert gcd(m("x4*x5*x6"), m("x1*x5*x6")) == m("x5*x6")


def test_lcm_examples():
    assert lcm(m("x1"), m("x2")) == m("x1*x2")
    assert lcm(m("x1*x3^2"), m("x1*x3^2")) == m("x1*x3^2")
    assert lcm(m("x4*x5*x6"), m("x1*x5*x6")) == m("x1*x4*x5*x6")


def test_divide_exact_examples():
    assert divide_exact(m("x1^2*x2"), m("x1")) == m("x1*x2")
    assert divide_exact(m("x2*x3"), m("x2*x3")).is_unit()
    # u_21 of the worked example: the -x1 entry in the first row
    assert divide_exact(m("x1*x5*x6"), gcd(m("x1*x5*x6"), m("x4*x5*x6"))) == m("x1")


def test_divide_exact_rejects_non_divisor():
    with pytest.raises(PreconditionError):
        divide_exact(m("x1"), m("x2"))


def test_is_coprime_examples():
    assert is_coprime(m("x1"), m("x2"))
    assert not is_coprime(m("x1*x2"), m("x2*x3"))
    assert is_coprime(m("x4"), m("x1"))


def test_mixed_variable_sets_are_usage_errors():
    other = VariableSet(("a", "b"))
    for op in (gcd, lcm, divide_exact, is_coprime):
        with pytest.raises(UsageError):
            op(m("x1"), other.parse("a"))
    assert not issubclass(PreconditionError, UsageError)


def test_equal_variable_sets_interoperate():
    a = VariableSet(("x1", "x2")).parse("x1")
    b = VariableSet(("x1", "x2")).parse("x2")
    assert lcm(a, b) == VariableSet(("x1", "x2")).parse("x1*x2")


def test_parse_examples():
    assert m("x1^2*x3").as_dict() == {0: 2, 2: 1}
    assert m("1").is_unit()
    assert format_monomial(m("x3*x1^2")) == "x1^2*x3"
    assert format_monomial(m("x1*x1")) == "x1^2"


def test_parse_braced_names():
    vs = VariableSet(("x_{12}", "x_{1}"))
    assert str(vs.parse("x_{1}^3*x_{12}")) == "x_{12}*x_{1}^3"


@pytest.mark.parametrize(
    "text, pos",
    [("y1", 0), ("x1^0", 3), ("x1^a", 3), ("x1**x2", 3), ("x1 x2", 3), ("", 0)],
)
def test_parse_errors_report_position(text, pos):
    with pytest.raises(MonomialParseError) as info:
        parse(X, text)
    assert info.value.position == pos


def test_invariants_of_types():
    with pytest.raises(UsageError):
        VariableSet(("x", "x"))
    with pytest.raises(UsageError):
        Monomial(X, ((0, 0),))
    assert X.unit().exps == ()


def test_json_round_trip():
    u = m("x2^3*x5")
    assert u.to_json() == [["x2", 3], ["x5", 1]]
    assert Monomial.from_json(X, u.to_json()) == u


monomials = st.dictionaries(st.integers(0, 5), st.integers(1, 6), max_size=6).map(
    lambda d: Monomial.from_exponents(X, d)
)


@given(monomials, monomials)
def test_gcd_times_lcm_is_product(a, b):
    assert gcd(a, b) * lcm(a, b) == a * b


@given(monomials, monomials)
def test_divide_undoes_multiply(a, b):
    assert divide_exact(a * b, b) == a


@given(monomials)
def test_format_parse_round_trip(a):
    assert parse(X, format_monomial(a)) == a


@given(monomials, monomials)
def test_coprime_iff_unit_gcd(a, b):
    assert is_coprime(a, b) == gcd(a, b).is_unit()
