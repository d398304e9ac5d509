"""Truncated tensor-series arithmetic and iterated-integral models.

An integral model assigns to each path generator a group-like truncated
series over a form alphabet; the pairing of that series against a word of
forms is the iterated integral of the word along the path.  The composition,
inversion, constant, and shuffle axioms then hold by construction:

  A1  integrating over the trivial path picks out the constant term, and
      the empty word integrates to 1 along every path;
  A2  integrals along a concatenated path split as a convolution over
      prefix/suffix factorizations;
  A3  reversing a path reverses the word and flips the sign per letter;
  A4  pointwise products of integrals satisfy the shuffle relations.

The canonical model sends each generator to the exponential of its own
letter, so a length-n power of the matching form integrates to 1/n! and any
word containing a foreign form integrates to 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .ncalg import (
    Alphabet,
    NcPoly,
    Scalar,
    Word,
    homogeneous_part,
    inner,
    is_zero_scalar,
    scalar_add,
    scalar_div,
    scalar_mul,
    shuffle_words,
    var,
)

__all__ = [
    "TruncSeries",
    "ts_mul",
    "ts_exp",
    "ts_log",
    "ts_inv",
    "is_grouplike",
    "IntegralModel",
    "canonical_model",
    "evaluate",
    "PairingTable",
    "pair_graded",
]


def _truncated(p: NcPoly, n: int) -> NcPoly:
    return NcPoly(p.alphabet, {w: c for w, c in p.terms.items() if len(w) <= n})


@dataclass(frozen=True)
class TruncSeries:
    """An NcPoly with all terms of degree <= degree; higher terms are
    silently dropped by every operation.  ``notes`` carries operation
    metadata (currently only mixed-truncation warnings)."""

    degree: int
    poly: NcPoly
    notes: tuple = field(default_factory=tuple, compare=False)

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("truncation degree must be >= 0")
        if self.poly.max_degree() > self.degree:
            object.__setattr__(self, "poly", _truncated(self.poly, self.degree))

    @classmethod
    def one(cls, alphabet: Alphabet, degree: int) -> "TruncSeries":
        return cls(degree, NcPoly.one(alphabet))

    def coeff(self, word) -> Scalar:
        return self.poly.coeff(word)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return ts_mul(self, other)
        return NotImplemented

    def __str__(self):
        return str(self.poly)

    __repr__ = __str__


def ts_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Concatenation product, truncated to the smaller degree."""
    n = min(a.degree, b.degree)
    notes = a.notes + b.notes
    if a.degree != b.degree:
        notes = notes + (f"mixed truncation degrees {a.degree}, {b.degree}",)
    a.poly._check_alphabet(b.poly)
    out: dict = {}
    for wa, ca in a.poly.terms.items():
        if len(wa) > n:
            continue
        for wb, cb in b.poly.terms.items():
            if len(wa) + len(wb) > n:
                continue
            w = wa + wb
            s = scalar_add(out.get(w, Fraction(0)), scalar_mul(ca, cb))
            if is_zero_scalar(s):
                out.pop(w, None)
            else:
                out[w] = s
    return TruncSeries(n, NcPoly(a.poly.alphabet, out), notes)


def _as_poly_and_degree(p, degree):
    if isinstance(p, TruncSeries):
        return p.poly, p.degree if degree is None else min(p.degree, degree)
    if degree is None:
        raise ValueError("a truncation degree is required for plain polynomials")
    return p, degree


def ts_exp(p, degree: int = None) -> TruncSeries:
    """exp of a series with zero constant term."""
    poly, n = _as_poly_and_degree(p, degree)
    if not is_zero_scalar(poly.coeff(())):
        raise ValueError("ts_exp needs a zero constant term")
    out = TruncSeries.one(poly.alphabet, n)
    power = out
    base = TruncSeries(n, poly)
    fact = 1
    for i in range(1, n + 1):
        power = ts_mul(power, base)
        if power.poly.is_zero():
            break
        fact *= i
        out = TruncSeries(n, out.poly + power.poly.scale(Fraction(1, fact)))
    return out


def ts_log(s, degree: int = None) -> TruncSeries:
    """log of a series with constant term 1."""
    poly, n = _as_poly_and_degree(s, degree)
    if poly.coeff(()) != 1:
        raise ValueError("ts_log needs constant term 1")
    u = TruncSeries(n, poly - NcPoly.one(poly.alphabet))
    out = NcPoly.zero(poly.alphabet)
    power = TruncSeries.one(poly.alphabet, n)
    sign = 1
    for i in range(1, n + 1):
        power = ts_mul(power, u)
        if power.poly.is_zero():
            break
        out = out + power.poly.scale(Fraction(sign, i))
        sign = -sign
    return TruncSeries(n, out)


def ts_inv(s, degree: int = None) -> TruncSeries:
    """Multiplicative inverse of a series with constant term 1, by the
    geometric series in (1 - s)."""
    poly, n = _as_poly_and_degree(s, degree)
    if poly.coeff(()) != 1:
        raise ValueError("ts_inv needs constant term 1")
    u = TruncSeries(n, NcPoly.one(poly.alphabet) - poly)
    out = NcPoly.one(poly.alphabet)
    power = TruncSeries.one(poly.alphabet, n)
    for _ in range(n):
        power = ts_mul(power, u)
        if power.poly.is_zero():
            break
        out = out + power.poly
    return TruncSeries(n, out)


def is_grouplike(s: TruncSeries) -> bool:
    """Shuffle relations: <s,u><s,v> = <s, u*v> for all nonempty word pairs
    with |u|+|v| <= degree.  Equivalently, ts_log(s) is a Lie series."""
    if s.poly.coeff(()) != 1:
        return False
    alphabet = s.poly.alphabet
    n = s.degree
    for r in range(1, n):
        for u in alphabet.words(r):
            cu = s.poly.coeff(u)
            for ls in range(1, n - r + 1):
                for v in alphabet.words(ls):
                    lhs = scalar_mul(cu, s.poly.coeff(v))
                    rhs = Fraction(0)
                    for w, mult in shuffle_words(u, v).items():
                        c = s.poly.terms.get(w)
                        if c is not None:
                            rhs = scalar_add(rhs, scalar_mul(c, mult))
                    if lhs != rhs:
                        return False
    return True


@dataclass(frozen=True)
class IntegralModel:
    """Group-like series per path generator; evaluation happens over the
    form alphabet."""

    paths: Alphabet
    forms: Alphabet
    degree: int
    series: tuple

    def __post_init__(self):
        if len(self.series) != len(self.paths):
            raise ValueError("one series per path generator is required")
        for s in self.series:
            if s.poly.alphabet != self.forms or s.degree != self.degree:
                raise ValueError("series must share the form alphabet and degree")
            if not is_grouplike(s):
                raise ValueError("generator series must be group-like")

    def generator_series(self, i: int) -> TruncSeries:
        return self.series[i]


def canonical_model(alphabet: Alphabet, degree: int) -> IntegralModel:
    """Each generator maps to the exponential of its own letter."""
    series = tuple(
        ts_exp(NcPoly.letter(alphabet, i), degree) for i in range(len(alphabet))
    )
    return IntegralModel(alphabet, alphabet, degree, series)


def path_series(model: IntegralModel, delta) -> TruncSeries:
    """The truncated series attached to a free-group word: the ordered
    product of generator series and their inverses."""
    if delta.alphabet != model.paths:
        raise ValueError("path word alphabet does not match the model")
    out = TruncSeries.one(model.forms, model.degree)
    inverses: dict = {}
    for i, e in delta.entries:
        if e == 1:
            f = model.series[i]
        else:
            f = inverses.get(i)
            if f is None:
                f = inverses[i] = ts_inv(model.series[i])
        out = ts_mul(out, f)
    return out


def evaluate(model: IntegralModel, delta, omega: NcPoly) -> Scalar:
    """The iterated integral of omega along delta: the pairing of the
    path's series against omega.  Linear in omega."""
    if omega.alphabet != model.forms:
        raise ValueError("form polynomial alphabet does not match the model")
    if omega.max_degree() > model.degree:
        raise ValueError(
            f"word degree {omega.max_degree()} exceeds truncation {model.degree}"
        )
    return inner(path_series(model, delta).poly, omega)


@dataclass(frozen=True)
class PairingTable:
    """Base integrals v[i][j] = integral of form j along generator i.
    Entries may be symbolic indeterminates."""

    paths: Alphabet
    forms: Alphabet
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != len(self.paths):
            raise ValueError("one row per path generator is required")
        for row in self.entries:
            if len(row) != len(self.forms):
                raise ValueError("one column per form is required")

    @classmethod
    def symbolic(cls, paths: Alphabet, forms: Alphabet, prefix: str = "v"):
        """Independent indeterminates v_<generator>_<form>."""
        entries = tuple(
            tuple(var(f"{prefix}_{p}_{f}") for f in forms.letters)
            for p in paths.letters
        )
        return cls(paths, forms, entries)

    @classmethod
    def identity(cls, alphabet: Alphabet):
        """v[i][j] = 1 if i == j else 0 (paths and forms share letters)."""
        m = len(alphabet)
        entries = tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(m))
            for i in range(m)
        )
        return cls(alphabet, alphabet, entries)


def pair_graded(table: PairingTable, delta, omega: Word) -> Scalar:
    """Leading-order iterated integral of a degree-k word of forms along a
    path whose class first appears in degree k: the lowest graded part of
    the path word, paired against the word through the base-integral table.

    The path word must have no nonzero graded part below k; its degree-k
    part may vanish (empty sum, result 0).
    """
    from . import freegrp  # deferred: freegrp builds on this module

    word = tuple(omega)
    k = len(word)
    if any(not 0 <= j < len(table.forms) for j in word):
        raise ValueError("form index out of range")
    if delta.alphabet != table.paths:
        raise ValueError("path word alphabet does not match the table")
    if k == 0:
        return Fraction(1)
    series = freegrp.magnus(delta, k)
    for j in range(1, k):
        if not homogeneous_part(series.poly, j).is_zero():
            raise ValueError(
                f"path word has a nonzero part in degree {j} < word length {k}"
            )
    lead = homogeneous_part(series.poly, k)
    total: Scalar = Fraction(0)
    for w, a in lead.items():
        prod: Scalar = a
        for s in range(k):
            prod = scalar_mul(prod, table.entries[w[s]][word[s]])
        total = scalar_add(total, prod)
    return total
