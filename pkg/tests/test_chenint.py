"""Iterated path integrals: truncated series calculus, group-like tests,
integral models with the axiom suite, and the graded pairing."""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from chenlie.chenint import (
    IntegralModel,
    PairingTable,
    TruncSeries,
    canonical_model,
    evaluate,
    is_grouplike,
    pair_graded,
    path_series,
    ts_exp,
    ts_inv,
    ts_log,
    ts_mul,
)
from chenlie.freegrp import GroupWord, commutator, gw_inv, gw_mul, magnus
from chenlie.liealg import expand, hall_basis
from chenlie.ncalg import (
    Alphabet,
    NcPoly,
    concat_mul,
    homogeneous_part,
    inner,
    scalar_add,
    scalar_mul,
    shuffle,
    var,
)

from conftest import XY, random_groupword, random_lie_poly, tree_to_gw

X = NcPoly.letter(XY, 0)
Y = NcPoly.letter(XY, 1)


# ------------------------------------------------------- truncated series

def test_truncseries_truncates_on_construction():
    s = TruncSeries(1, NcPoly.one(XY) + X + concat_mul(X, X))
    assert s.coeff(()) == 1 and s.coeff((0,)) == 1
    assert s.poly.max_degree() == 1
    assert TruncSeries.one(XY, 3).poly == NcPoly.one(XY)


def test_ts_mul_truncates_to_min_degree():
    a = TruncSeries(3, NcPoly.one(XY) + X)
    b = TruncSeries(2, NcPoly.one(XY) + Y)
    p = ts_mul(a, b)
    assert p.degree == 2
    assert p.notes == ("mixed truncation degrees 3, 2",)
    same = ts_mul(a, TruncSeries(3, NcPoly.one(XY)))
    assert same.notes == ()


def test_ts_exp_golden():
    s = ts_exp(TruncSeries(3, X))
    assert s.poly == (NcPoly.one(XY) + X
                      + concat_mul(X, X).scale(Fraction(1, 2))
                      + concat_mul(X, concat_mul(X, X)).scale(Fraction(1, 6)))


def test_ts_exp_requires_zero_constant():
    with pytest.raises(ValueError):
        ts_exp(TruncSeries(2, NcPoly.one(XY) + X))


def test_ts_log_requires_unit_constant():
    with pytest.raises(ValueError):
        ts_log(TruncSeries(2, X))


def test_ts_inv_requires_invertible_constant():
    with pytest.raises((ValueError, ZeroDivisionError)):
        ts_inv(TruncSeries(2, X))


def test_series_round_trips():
    for n in (1, 2, 4):
        p = TruncSeries(n, X + concat_mul(Y, X).scale(Fraction(2, 3)))
        assert ts_log(ts_exp(p)).poly == p.poly
        g = ts_exp(p)
        assert ts_mul(g, ts_inv(g)).poly == NcPoly.one(XY)
        assert ts_exp(ts_log(ts_mul(g, g))).poly == ts_mul(g, g).poly


# ------------------------------------------------------------- group-like

def test_is_grouplike_examples():
    assert is_grouplike(ts_exp(TruncSeries(4, X)))
    assert is_grouplike(TruncSeries.one(XY, 3))
    assert not is_grouplike(TruncSeries(2, NcPoly.one(XY) + concat_mul(X, Y)))
    assert not is_grouplike(TruncSeries(1, X))  # constant term 0, not 1
    # products of group-like series are group-like
    g = ts_mul(ts_exp(TruncSeries(3, X)), ts_exp(TruncSeries(3, Y)))
    assert is_grouplike(g)
    assert is_grouplike(ts_inv(g))


@settings(max_examples=10, deadline=None)
@given(st.randoms(use_true_random=False))
def test_magnus_series_is_grouplike(r):
    delta = random_groupword(r, XY, 5)
    assert is_grouplike(magnus(delta, 4))


def test_exp_of_lie_is_grouplike(rng):
    p = random_lie_poly(rng, XY, 2) + random_lie_poly(rng, XY, 3)
    assert is_grouplike(ts_exp(TruncSeries(4, p)))


# ---------------------------------------------------------------- models

def test_canonical_model_values():
    m = canonical_model(XY, 6)
    a = GroupWord.generator(XY, 0)
    for n in range(7):
        w = NcPoly.from_word(XY, (0,) * n)
        assert evaluate(m, a, w) == Fraction(1, factorial(n))
    assert evaluate(m, a, NcPoly.from_word(XY, (0,) * 6)) == Fraction(1, 720)
    # a form letter never traversed integrates to zero
    assert evaluate(m, a, Y) == 0


def test_model_validation():
    bad = TruncSeries(2, NcPoly.one(XY) + concat_mul(X, Y))
    with pytest.raises(ValueError):
        IntegralModel(XY, XY, 2, (bad, ts_exp(TruncSeries(2, Y))))
    with pytest.raises(ValueError):
        IntegralModel(XY, XY, 2, (ts_exp(TruncSeries(2, X)),))


def test_evaluate_unit_and_degree_guard():
    m = canonical_model(XY, 3)
    d = random_groupword(__import__("random").Random(5), XY, 4)
    assert evaluate(m, d, NcPoly.one(XY)) == 1
    with pytest.raises(ValueError):
        evaluate(m, d, NcPoly.from_word(XY, (0,) * 4))


def test_path_series_caches_inverses():
    m = canonical_model(XY, 3)
    a = GroupWord.generator(XY, 0)
    s = path_series(m, gw_mul(a, gw_inv(a)))
    assert s.poly == NcPoly.one(XY)


# --------------------------------------------------------------- axioms

def _random_grouplike_model(rng, degree=4):
    """Generator i |-> exp of a random Lie element (degree >= 1)."""
    series = []
    for _ in XY.letters:
        p = NcPoly.zero(XY)
        for k in range(1, degree + 1):
            p = p + random_lie_poly(rng, XY, k)
        series.append(ts_exp(TruncSeries(degree, p)))
    return IntegralModel(XY, XY, degree, tuple(series))


def test_axiom_concatenation(rng):
    """Integral over a product path splits as a prefix/suffix convolution."""
    m = _random_grouplike_model(rng)
    alpha = random_groupword(rng, XY, 4)
    beta = random_groupword(rng, XY, 4)
    for word in ((0, 1), (1, 0, 0), (0, 1, 1, 0)):
        lhs = evaluate(m, gw_mul(alpha, beta), NcPoly.from_word(XY, word))
        rhs = Fraction(0)
        for s in range(len(word) + 1):
            rhs = scalar_add(rhs, scalar_mul(
                evaluate(m, alpha, NcPoly.from_word(XY, word[:s])),
                evaluate(m, beta, NcPoly.from_word(XY, word[s:]))))
        assert lhs == rhs


def test_axiom_inverse_path(rng):
    """Reversing the path reverses the word, up to the sign (-1)^r."""
    m = _random_grouplike_model(rng)
    alpha = random_groupword(rng, XY, 5)
    for word in ((0,), (0, 1), (1, 1, 0), (0, 1, 0, 1)):
        lhs = evaluate(m, gw_inv(alpha), NcPoly.from_word(XY, word))
        rhs = evaluate(m, alpha, NcPoly.from_word(XY, word[::-1]))
        assert lhs == scalar_mul(rhs, (-1) ** len(word))


def test_axiom_shuffle_relations(rng):
    """Products of integrals over one path satisfy the shuffle relations."""
    m = _random_grouplike_model(rng)
    delta = random_groupword(rng, XY, 5)
    for u, v in (((0,), (1,)), ((0, 1), (1,)), ((0, 0), (1, 1))):
        pu, pv = NcPoly.from_word(XY, u), NcPoly.from_word(XY, v)
        lhs = scalar_mul(evaluate(m, delta, pu), evaluate(m, delta, pv))
        assert lhs == evaluate(m, delta, shuffle(pu, pv))


def test_commutator_kills_degree_one(rng):
    m = _random_grouplike_model(rng)
    c = commutator(random_groupword(rng, XY, 3), random_groupword(rng, XY, 3))
    assert evaluate(m, c, X) == 0
    assert evaluate(m, c, Y) == 0


def test_vanishing_below_lcs_degree():
    """A nested bracket realized as an iterated commutator integrates to
    zero against every form word shorter than its bracket depth."""
    from chenlie.parser import parse_lie
    tree = parse_lie("[x,[x,y]]")
    delta = tree_to_gw(tree, XY)
    m = canonical_model(XY, 4)
    for k in (1, 2):
        for w in XY.words(k):
            assert evaluate(m, delta, NcPoly.from_word(XY, w)) == 0


def test_evaluate_matches_graded_pairing():
    """For a commutator of depth k and a degree-k word, the canonical
    integral equals the pairing of the word with the leading Magnus term."""
    from chenlie.parser import parse_lie
    tree = parse_lie("[[x,y],y]")
    delta = tree_to_gw(tree, XY)
    m = canonical_model(XY, 3)
    table = PairingTable.identity(XY)
    for w in XY.words(3):
        direct = evaluate(m, delta, NcPoly.from_word(XY, w))
        graded = pair_graded(table, delta, w)
        assert direct == graded


# --------------------------------------------------------- graded pairing

def test_pair_graded_basics():
    table = PairingTable.identity(XY)
    a = GroupWord.generator(XY, 0)
    assert pair_graded(table, a, ()) == 1
    assert pair_graded(table, a, (0,)) == 1
    assert pair_graded(table, a, (1,)) == 0
    c = commutator(a, GroupWord.generator(XY, 1))
    assert pair_graded(table, c, (0, 1)) == 1
    assert pair_graded(table, c, (1, 0)) == -1
    with pytest.raises(ValueError):
        pair_graded(table, a, (0, 1))  # nonzero degree-1 part below length 2


def test_pair_graded_symbolic_determinant():
    """Pairing a commutator against a two-letter word through a fully
    symbolic table produces the 2x2 determinant of table entries."""
    paths = Alphabet(("a", "b"))
    forms = Alphabet(("f1", "f2"))
    table = PairingTable.symbolic(paths, forms)
    c = commutator(GroupWord.generator(paths, 0),
                   GroupWord.generator(paths, 1))
    got = pair_graded(table, c, (0, 1))
    v = {(p, f): var(f"v_{p}_{f}") for p in ("a", "b") for f in ("f1", "f2")}
    det = scalar_add(
        scalar_mul(v[("a", "f1")], v[("b", "f2")]),
        scalar_mul(scalar_mul(v[("a", "f2")], v[("b", "f1")]), -1))
    assert got == det
    # equal columns force antisymmetry to kill the pairing
    assert pair_graded(table, c, (0, 0)) == 0


def test_pair_graded_zero_leading_part_is_zero():
    table = PairingTable.identity(XY)
    a = GroupWord.generator(XY, 0)
    c = commutator(a, GroupWord.generator(XY, 1))
    # depth-2 commutator against a length-3 word: parts 1, 2 vanish only
    # through degree 2, so a length-3 word is out of reach
    with pytest.raises(ValueError):
        pair_graded(table, c, (0, 1, 0))
    # but the triple commutator has zero parts 1 and 2: length-3 words pair
    # phi-inverse of ((x,y),x) is [[x,y],x] = 2 xyx - yxx - xxy
    deep = commutator(c, a)
    assert pair_graded(table, deep, (0, 1, 0)) == 2
    assert pair_graded(table, deep, (1, 0, 0)) == -1
    assert pair_graded(table, deep, (1, 1, 1)) == 0


def test_pairing_matrix_nonsingular_small():
    """Hall expansions against their commutator realizations through the
    identity table give a nonsingular matrix (degree 3 spot check; the
    full window is covered by the acceptance tests)."""
    k = 3
    basis = hall_basis(XY, k)
    exps = basis.expansions()
    gws = [tree_to_gw(t, XY) for t in basis.elements]
    table = PairingTable.identity(XY)
    mat = []
    for d in gws:
        row = []
        for e in exps:
            val = Fraction(0)
            for w, c in e.items():
                val = scalar_add(val, scalar_mul(c, pair_graded(table, d, w)))
            row.append(val)
        mat.append(row)
    det = (mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0])
    assert det != 0
