import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from modinv.errors import ParseError, SingularExpressionError
from modinv.scalars import (
    BinOp, ImagUnit, Int, Neg, Rational, Root, Sqrt, ToleranceConfig, eval_expr, format_expr,
    parse_expr, snap_to_integer,
)


def test_parse_sum_with_sqrt():
    assert parse_expr("1+sqrt(3)") == BinOp("+", Int(1), Sqrt(3))


def test_parse_is_whitespace_insensitive():
    assert parse_expr(" 1 +  sqrt( 3 ) ") == parse_expr("1+sqrt(3)")


def test_parse_root_and_rational():
    assert parse_expr("e(1,6)") == Root(1, 6)
    assert parse_expr("3/4") == Rational(3, 4)
    assert parse_expr("-i") == Neg(ImagUnit())


def test_unknown_atom_reports_offset():
    with pytest.raises(ParseError) as info:
        parse_expr("sqr(2)")
    assert info.value.offset == 0


@pytest.mark.parametrize("text", ["1+", "(1", "e(1)", "sqrt(-2)", "1 2", "e(1,0)", "", "1/0/"])
def test_syntax_errors(text):
    with pytest.raises(ParseError):
        parse_expr(text)


def test_eval_basic_values():
    with mpmath.workprec(192):
        assert abs(eval_expr(parse_expr("1+sqrt(3)")) - (1 + mpmath.sqrt(3))) < 1e-50
        assert abs(eval_expr(parse_expr("e(1,4)")) - 1j) < 1e-50
        s00 = eval_expr(parse_expr("1/(6+2*sqrt(3))"))
        assert abs(s00.real - mpmath.mpf("0.10566243270259355")) < 1e-16
        assert abs(1 / s00 - (6 + 2 * mpmath.sqrt(3))) < 1e-50


def test_eval_respects_precision():
    hi = eval_expr(parse_expr("sqrt(2)"), prec=384)
    assert hi.context.prec == 384
    lo = eval_expr(parse_expr("sqrt(2)"), prec=64)
    assert abs(hi - lo) < 2.0 ** -60


def test_division_by_zero_is_singular():
    with pytest.raises(SingularExpressionError):
        eval_expr(parse_expr("1/(1-1)"))


@pytest.mark.parametrize("q", [1, 2, 3, 7, 12, 1000, 10**6])
def test_roots_of_unity(q):
    z = eval_expr(Root(1, q))
    assert abs(z ** q - 1) < 1e-20


def test_snap():
    assert snap_to_integer(mpmath.mpc(2, 1e-30)) == 2
    assert snap_to_integer(mpmath.mpf(1.5)) is None
    assert snap_to_integer(mpmath.mpf(3) - mpmath.mpf(10) ** -25) == 3
    assert snap_to_integer(mpmath.mpf(-4)) == -4


@given(st.integers(min_value=-10**9, max_value=10**9))
def test_snap_integer_literals(k):
    assert snap_to_integer(eval_expr(parse_expr(str(k)))) == k


def test_tolerance_config_checks():
    with pytest.raises(ValueError):
        ToleranceConfig(snap_eps=1e-10, val_eps=1e-20)
    with pytest.raises(ValueError):
        ToleranceConfig(precision=32)
    assert ToleranceConfig().with_precision(384).precision == 384


def _exprs():
    atoms = st.one_of(
        st.integers(0, 50).map(Int),
        st.tuples(st.integers(0, 20), st.integers(1, 20)).map(lambda t: Rational(*t)),
        st.just(ImagUnit()),
        st.integers(0, 30).map(Sqrt),
        st.tuples(st.integers(-20, 20), st.integers(1, 24)).map(lambda t: Root(*t)),
    )
    return st.recursive(
        atoms,
        lambda sub: st.one_of(
            sub.map(Neg),
            st.tuples(st.sampled_from("+-*/"), sub, sub).map(lambda t: BinOp(*t)),
        ),
        max_leaves=8,
    )


@settings(max_examples=300, deadline=None)
@given(_exprs())
def test_print_parse_round_trip(x):
    text = format_expr(x)
    y = parse_expr(text)
    assert format_expr(y) == text
    # printing is canonical, so reparsing is a fixed point of the tree as well
    assert parse_expr(format_expr(y)) == y
