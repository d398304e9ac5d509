"""Exact scalars, words, and noncommutative polynomials.

The scalar tower has three levels, promoted automatically as needed:

    Fraction  ->  MPoly   (multivariate polynomial, rational coefficients)
              ->  RatFunc (MPoly numerator over a monic denominator in Q[t])

Plain ``int`` is accepted everywhere and normalized to ``Fraction``.  Results
always demote back to the narrowest level (a constant MPoly becomes a
Fraction, a RatFunc with unit denominator becomes its numerator), so ``==``
against literals behaves as expected and equality is canonical-form based.

Words over a fixed :class:`Alphabet` are plain tuples of letter indices; the
empty tuple is the unit word.  :class:`NcPoly` is a sparse word -> scalar
mapping supporting the concatenation product, the shuffle product, the
canonical inner product (words are orthonormal), and extraction of
homogeneous parts.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "TVAR",
    "MPoly",
    "RatFunc",
    "Scalar",
    "var",
    "coerce_scalar",
    "scalar_add",
    "scalar_mul",
    "scalar_div",
    "scalar_neg",
    "scalar_pow",
    "scalar_dt",
    "scalar_str",
    "is_zero_scalar",
    "Alphabet",
    "Word",
    "default_letters",
    "word_str",
    "NcPoly",
    "concat_mul",
    "shuffle",
    "shuffle_words",
    "inner",
    "homogeneous_part",
]

# The distinguished variable that rational-function denominators live in.
TVAR = "t"

# A monomial is a tuple of (variable name, exponent) pairs, sorted by name,
# all exponents positive.  The empty tuple is the constant monomial.
Mono = tuple


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    merged: dict = {}
    for v, e in a:
        merged[v] = merged.get(v, 0) + e
    for v, e in b:
        merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items()))


def _mono_degree(m: Mono) -> int:
    return sum(e for _, e in m)


def _mono_str(m: Mono) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


class MPoly:
    """Multivariate polynomial with Fraction coefficients.

    Always non-constant: constructors demote constants to ``Fraction``.
    Immutable by convention; do not mutate ``terms``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Mono, Fraction]):
        # Trusted constructor: callers normalize first (see _make_mpoly).
        self.terms = dict(terms)

    # -- construction ----------------------------------------------------

    @staticmethod
    def from_var(name: str) -> "MPoly":
        return MPoly({((name, 1),): Fraction(1)})

    def variables(self) -> tuple:
        seen = set()
        for m in self.terms:
            for v, _ in m:
                seen.add(v)
        return tuple(sorted(seen))

    # -- arithmetic (delegates to the union-level functions) -------------

    def __add__(self, other):
        if not isinstance(other, (int, Fraction, MPoly, RatFunc)):
            return NotImplemented
        return scalar_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (int, Fraction, MPoly, RatFunc)):
            return NotImplemented
        return scalar_add(self, scalar_neg(other))

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction, MPoly, RatFunc)):
            return NotImplemented
        return scalar_add(other, scalar_neg(self))

    def __mul__(self, other):
        if not isinstance(other, (int, Fraction, MPoly, RatFunc)):
            return NotImplemented
        return scalar_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction, MPoly, RatFunc)):
            return NotImplemented
        return scalar_div(self, other)

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction, MPoly, RatFunc)):
            return NotImplemented
        return scalar_div(other, self)

    def __neg__(self):
        return MPoly({m: -c for m, c in self.terms.items()})

    def __pow__(self, n: int):
        return scalar_pow(self, n)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.terms == other.terms
        # Canonical demotion means a genuine MPoly is never a constant.
        return False

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return scalar_str(self)

    __repr__ = __str__


class RatFunc:
    """Quotient num/den with den a monic non-constant polynomial in t.

    Normalized: gcd(num, den) = 1 over Q(other vars)[t]; den monic in t.
    Constructors demote unit denominators, so a genuine RatFunc always has a
    non-trivial denominator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        # Trusted constructor: use _make_ratfunc for normalization.
        self.num = num  # Fraction | MPoly, nonzero
        self.den = den  # MPoly in TVAR only, monic, degree >= 1

    def __add__(self, other):
        if not isinstance(other, (int, Fraction, MPoly, RatFunc)):
            return NotImplemented
        return scalar_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (int, Fraction, MPoly, RatFunc)):
            return NotImplemented
        return scalar_add(self, scalar_neg(other))

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction, MPoly, RatFunc)):
            return NotImplemented
        return scalar_add(other, scalar_neg(self))

    def __mul__(self, other):
        if not isinstance(other, (int, Fraction, MPoly, RatFunc)):
            return NotImplemented
        return scalar_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction, MPoly, RatFunc)):
            return NotImplemented
        return scalar_div(self, other)

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction, MPoly, RatFunc)):
            return NotImplemented
        return scalar_div(other, self)

    def __neg__(self):
        return RatFunc(scalar_neg(self.num), self.den)

    def __pow__(self, n: int):
        return scalar_pow(self, n)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        return False

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        return scalar_str(self)

    __repr__ = __str__


Scalar = Union[Fraction, MPoly, RatFunc]


def var(name: str) -> MPoly:
    """A polynomial indeterminate."""
    if not name or not (name[0].isalpha() or name[0] == "_"):
        raise ValueError(f"bad variable name: {name!r}")
    return MPoly.from_var(name)


def coerce_scalar(x) -> Scalar:
    """Normalize int/Fraction/MPoly/RatFunc into the scalar union."""
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (Fraction, MPoly, RatFunc)):
        return x
    raise TypeError(f"not a scalar: {x!r}")


def is_zero_scalar(x) -> bool:
    x = coerce_scalar(x)
    return isinstance(x, Fraction) and x == 0


def _make_mpoly(terms: dict) -> Scalar:
    """Normalize a mono->Fraction dict, demoting constants."""
    clean = {m: c for m, c in terms.items() if c != 0}
    if not clean:
        return Fraction(0)
    if len(clean) == 1 and () in clean:
        return clean[()]
    return MPoly(clean)


def _mpoly_terms(x: Scalar) -> dict:
    if isinstance(x, Fraction):
        return {(): x} if x else {}
    assert isinstance(x, MPoly)
    return x.terms


def _mpoly_add(a, b) -> Scalar:
    out = dict(_mpoly_terms(a))
    for m, c in _mpoly_terms(b).items():
        s = out.get(m, Fraction(0)) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return _make_mpoly(out)


def _mpoly_mul(a, b) -> Scalar:
    ta, tb = _mpoly_terms(a), _mpoly_terms(b)
    out: dict = {}
    for ma, ca in ta.items():
        for mb, cb in tb.items():
            m = _mono_mul(ma, mb)
            s = out.get(m, Fraction(0)) + ca * cb
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return _make_mpoly(out)


# -- univariate helpers over Q[t], used for RatFunc normalization ---------
# A upoly is a tuple of Fractions, low degree first, no trailing zeros.


def _up_trim(c: list) -> tuple:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _up_from_scalar(x) -> tuple:
    """Fraction or MPoly in TVAR only -> upoly."""
    if isinstance(x, Fraction):
        return (x,) if x else ()
    coeffs: dict = {}
    for m, c in x.terms.items():
        if not m:
            coeffs[0] = c
        elif len(m) == 1 and m[0][0] == TVAR:
            coeffs[m[0][1]] = c
        else:
            raise ValueError(f"not a polynomial in {TVAR}: {x}")
    if not coeffs:
        return ()
    out = [Fraction(0)] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return _up_trim(out)


def _up_to_scalar(u: tuple) -> Scalar:
    return _make_mpoly(
        {((TVAR, e),) if e else (): c for e, c in enumerate(u) if c}
    )


def _up_mul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _up_trim(out)


def _up_divmod(a: tuple, b: tuple) -> tuple:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    if len(a) < len(b):
        return (), tuple(rem)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = rem[i + len(b) - 1] / lead
        if c:
            q[i] = c
            for j, cb in enumerate(b):
                rem[i + j] -= c * cb
    return _up_trim(q), _up_trim(rem)


def _up_gcd(a: tuple, b: tuple) -> tuple:
    while b:
        _, r = _up_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = tuple(c / lead for c in a)
    return a


def _is_tpoly(x) -> bool:
    if isinstance(x, Fraction):
        return True
    if isinstance(x, MPoly):
        return all(not m or (len(m) == 1 and m[0][0] == TVAR) for m in x.terms)
    return False


def _num_den(x: Scalar) -> tuple:
    """Split a scalar into (numerator, denominator in Q[t])."""
    if isinstance(x, RatFunc):
        return x.num, x.den
    return x, Fraction(1)


def _t_content_split(num) -> dict:
    """Group numerator terms by their non-t monomial part.

    Returns a dict: non-t monomial -> upoly in t.
    """
    groups: dict = {}
    for m, c in _mpoly_terms(num).items():
        te = 0
        rest = []
        for v, e in m:
            if v == TVAR:
                te = e
            else:
                rest.append((v, e))
        groups.setdefault(tuple(rest), {})[te] = c
    out = {}
    for rest, coeffs in groups.items():
        lst = [Fraction(0)] * (max(coeffs) + 1)
        for e, c in coeffs.items():
            lst[e] = c
        out[rest] = _up_trim(lst)
    return out


def _make_ratfunc(num, den) -> Scalar:
    """Normalize num/den: cancel the gcd, make den monic, demote."""
    if isinstance(den, Fraction):
        if den == 0:
            raise ZeroDivisionError("scalar division by zero")
        return _mpoly_mul(num, Fraction(1) / den)
    if not _is_tpoly(den):
        raise ValueError(f"denominator must be a polynomial in {TVAR}: {den}")
    if is_zero_scalar(num):
        return Fraction(0)
    dup = _up_from_scalar(den)
    groups = _t_content_split(num)
    g = dup
    for u in groups.values():
        if len(g) <= 1:
            break
        g = _up_gcd(g, u)
    if len(g) > 1:
        dup, _ = _up_divmod(dup, g)
        new_terms: dict = {}
        for rest, u in groups.items():
            q, r = _up_divmod(u, g)
            assert not r
            for e, c in enumerate(q):
                if c:
                    m = _mono_mul(rest, ((TVAR, e),) if e else ())
                    new_terms[m] = c
        num = _make_mpoly(new_terms)
    lead = dup[-1]
    if lead != 1:
        dup = tuple(c / lead for c in dup)
        num = _mpoly_mul(num, Fraction(1) / lead)
    if len(dup) == 1:  # unit denominator after cancellation
        return num
    return RatFunc(num, _up_to_scalar(dup))


# -- union-level arithmetic -----------------------------------------------


def scalar_add(a, b) -> Scalar:
    a, b = coerce_scalar(a), coerce_scalar(b)
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a + b
    if isinstance(a, RatFunc) or isinstance(b, RatFunc):
        na, da = _num_den(a)
        nb, db = _num_den(b)
        num = _mpoly_add(_mpoly_mul(na, db), _mpoly_mul(nb, da))
        return _make_ratfunc(num, _mpoly_mul(da, db))
    return _mpoly_add(a, b)


def scalar_neg(a) -> Scalar:
    a = coerce_scalar(a)
    if isinstance(a, Fraction):
        return -a
    return -a


def scalar_mul(a, b) -> Scalar:
    a, b = coerce_scalar(a), coerce_scalar(b)
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a * b
    if isinstance(a, RatFunc) or isinstance(b, RatFunc):
        na, da = _num_den(a)
        nb, db = _num_den(b)
        return _make_ratfunc(_mpoly_mul(na, nb), _mpoly_mul(da, db))
    return _mpoly_mul(a, b)


def scalar_div(a, b) -> Scalar:
    """a / b, defined when b is rational or lies in Q(t)."""
    a, b = coerce_scalar(a), coerce_scalar(b)
    if isinstance(b, Fraction):
        if b == 0:
            raise ZeroDivisionError("scalar division by zero")
        return scalar_mul(a, Fraction(1) / b)
    nb, db = _num_den(b)
    if not _is_tpoly(nb):
        raise ValueError(f"division by a scalar outside Q({TVAR}): {b}")
    if is_zero_scalar(nb):
        raise ZeroDivisionError("scalar division by zero")
    na, da = _num_den(a)
    return _make_ratfunc(_mpoly_mul(na, db), _mpoly_mul(da, nb))


def scalar_pow(a, n: int) -> Scalar:
    a = coerce_scalar(a)
    if n < 0:
        return scalar_div(Fraction(1), scalar_pow(a, -n))
    out: Scalar = Fraction(1)
    for _ in range(n):
        out = scalar_mul(out, a)
    return out


def scalar_dt(a) -> Scalar:
    """Formal derivative d/dt (all other indeterminates are constants)."""
    a = coerce_scalar(a)
    if isinstance(a, Fraction):
        return Fraction(0)
    if isinstance(a, MPoly):
        out: dict = {}
        for m, c in a.terms.items():
            for idx, (v, e) in enumerate(m):
                if v == TVAR:
                    rest = m[:idx] + m[idx + 1:]
                    nm = _mono_mul(rest, ((TVAR, e - 1),) if e > 1 else ())
                    s = out.get(nm, Fraction(0)) + c * e
                    if s:
                        out[nm] = s
                    else:
                        out.pop(nm, None)
                    break
        return _make_mpoly(out)
    n, d = a.num, a.den
    num = _mpoly_add(
        _mpoly_mul(scalar_dt(n), d),
        scalar_neg(_mpoly_mul(n, scalar_dt(d))),
    )
    return _make_ratfunc(num, _mpoly_mul(d, d))


# -- printing ---------------------------------------------------------------


def _mono_sort_key(m: Mono, varlist: tuple):
    exps = dict(m)
    return (_mono_degree(m), tuple(exps.get(v, 0) for v in varlist))


def _fraction_piece(c: Fraction, tail: str) -> tuple:
    """(sign, text) for coefficient c attached to monomial/word text."""
    sign = c < 0
    c = abs(c)
    if not tail:
        return sign, str(c)
    body = tail if c.numerator == 1 else f"{c.numerator}*{tail}"
    if c.denominator != 1:
        body = f"{body}/{c.denominator}"
    return sign, body


def _mpoly_pieces(p: MPoly):
    varlist = p.variables()
    order = sorted(p.terms, key=lambda m: _mono_sort_key(m, varlist))
    return [_fraction_piece(p.terms[m], _mono_str(m)) for m in order]


def _join_pieces(pieces) -> str:
    out = []
    for i, (sign, text) in enumerate(pieces):
        if i == 0:
            out.append(f"-{text}" if sign else text)
        else:
            out.append(f"- {text}" if sign else f"+ {text}")
    return " ".join(out)


def scalar_str(x) -> str:
    """Canonical text form: deterministic, exact, reparseable digits."""
    x = coerce_scalar(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, MPoly):
        return _join_pieces(_mpoly_pieces(x))
    num, den = x.num, x.den
    if isinstance(num, Fraction):
        npart = str(num) if num.denominator == 1 else f"({num})"
        if num < 0:
            npart = f"({num})"
    else:
        pieces = _mpoly_pieces(num)
        if len(pieces) == 1 and not pieces[0][0]:
            npart = pieces[0][1]
        else:
            npart = f"({_join_pieces(pieces)})"
    dterms = den.terms
    if len(dterms) == 1:
        dpart = _mono_str(next(iter(dterms)))
    else:
        dpart = f"({_join_pieces(_mpoly_pieces(den))})"
    return f"{npart}/{dpart}"


# -- alphabets and words -----------------------------------------------------


@dataclass(frozen=True)
class Alphabet:
    """An ordered tuple of distinct letter names; the order fixes all bases."""

    letters: tuple

    def __post_init__(self):
        if not self.letters:
            raise ValueError("alphabet must have at least one letter")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f"duplicate letters: {self.letters}")

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, i: int) -> str:
        return self.letters[i]

    def index(self, name: str) -> int:
        try:
            return self.letters.index(name)
        except ValueError:
            raise KeyError(f"letter {name!r} not in alphabet {self.letters}")

    def words(self, k: int) -> Iterator[tuple]:
        """All words of length k in lexicographic order."""
        if k == 0:
            yield ()
            return
        m = len(self.letters)
        for prefix in self.words(k - 1):
            for i in range(m):
                yield prefix + (i,)


def default_letters(m: int) -> tuple:
    """x, y, z for m <= 3; x1..xm beyond."""
    if m <= 3:
        return ("x", "y", "z")[:m]
    return tuple(f"x{i + 1}" for i in range(m))


Word = tuple  # tuple of letter indices


def word_str(alphabet: Alphabet, word: Word) -> str:
    """Run-length rendering: (0, 0, 1) over (x, y) -> 'x^2 y'."""
    if not word:
        return ""
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = alphabet[word[i]]
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return " ".join(parts)


class NcPoly:
    """Sparse noncommutative polynomial: word -> nonzero scalar."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping[Word, object] = ()):
        self.alphabet = alphabet
        clean: dict = {}
        for w, c in dict(terms).items():
            c = coerce_scalar(c)
            if not is_zero_scalar(c):
                clean[tuple(w)] = c
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "NcPoly":
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet: Alphabet) -> "NcPoly":
        return cls(alphabet, {(): Fraction(1)})

    @classmethod
    def letter(cls, alphabet: Alphabet, i) -> "NcPoly":
        if isinstance(i, str):
            i = alphabet.index(i)
        if not 0 <= i < len(alphabet):
            raise IndexError(f"letter index {i} out of range")
        return cls(alphabet, {(i,): Fraction(1)})

    @classmethod
    def from_word(cls, alphabet: Alphabet, word: Iterable, coeff=1) -> "NcPoly":
        w = tuple(word)
        for i in w:
            if not 0 <= i < len(alphabet):
                raise IndexError(f"letter index {i} out of range")
        return cls(alphabet, {w: coeff})

    # -- basic queries ------------------------------------------------------

    def coeff(self, word: Iterable) -> Scalar:
        return self.terms.get(tuple(word), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> tuple:
        return tuple(sorted({len(w) for w in self.terms}))

    def max_degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def items(self):
        return self.terms.items()

    # -- linear structure ---------------------------------------------------

    def _check_alphabet(self, other: "NcPoly"):
        if self.alphabet != other.alphabet:
            raise ValueError(
                f"alphabet mismatch: {self.alphabet.letters} vs "
                f"{other.alphabet.letters}"
            )

    def __add__(self, other: "NcPoly") -> "NcPoly":
        self._check_alphabet(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = scalar_add(out.get(w, Fraction(0)), c)
            if is_zero_scalar(s):
                out.pop(w, None)
            else:
                out[w] = s
        return NcPoly(self.alphabet, out)

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        return self + (-other)

    def __neg__(self) -> "NcPoly":
        return NcPoly(
            self.alphabet, {w: scalar_neg(c) for w, c in self.terms.items()}
        )

    def scale(self, s) -> "NcPoly":
        s = coerce_scalar(s)
        if is_zero_scalar(s):
            return NcPoly.zero(self.alphabet)
        return NcPoly(
            self.alphabet, {w: scalar_mul(s, c) for w, c in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            return concat_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            if other == 0:
                return self.is_zero()
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self):
        return hash(
            (self.alphabet, frozenset((w, scalar_str(c)) for w, c in self.terms.items()))
        )

    # -- printing -------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            wtext = word_str(self.alphabet, w)
            if isinstance(c, Fraction):
                pieces.append(_fraction_piece(c, wtext))
            elif not wtext:
                pieces.append((False, f"({scalar_str(c)})"))
            elif isinstance(c, MPoly) and len(c.terms) == 1:
                (m, f), = c.terms.items()
                if abs(f) == 1 and m:
                    pieces.append((f < 0, f"{_mono_str(m)}*{wtext}"))
                else:
                    pieces.append((False, f"({scalar_str(c)})*{wtext}"))
            else:
                pieces.append((False, f"({scalar_str(c)})*{wtext}"))
        return _join_pieces(pieces)

    __repr__ = __str__


# -- products and pairings ----------------------------------------------------


def concat_mul(p: NcPoly, q: NcPoly) -> NcPoly:
    """Bilinear extension of word concatenation (the associative product)."""
    p._check_alphabet(q)
    out: dict = {}
    for wp, cp in p.terms.items():
        for wq, cq in q.terms.items():
            w = wp + wq
            s = scalar_add(out.get(w, Fraction(0)), scalar_mul(cp, cq))
            if is_zero_scalar(s):
                out.pop(w, None)
            else:
                out[w] = s
    return NcPoly(p.alphabet, out)


_SHUFFLE_CACHE: dict = {}


def shuffle_words(u: Word, v: Word) -> dict:
    """All order-preserving interleavings: word -> multiplicity."""
    if not u:
        return {tuple(v): 1}
    if not v:
        return {tuple(u): 1}
    key = (tuple(u), tuple(v))
    hit = _SHUFFLE_CACHE.get(key)
    if hit is not None:
        return hit
    out: dict = {}
    for w, c in shuffle_words(key[0][1:], key[1]).items():
        w = (key[0][0],) + w
        out[w] = out.get(w, 0) + c
    for w, c in shuffle_words(key[0], key[1][1:]).items():
        w = (key[1][0],) + w
        out[w] = out.get(w, 0) + c
    _SHUFFLE_CACHE[key] = out
    return out


def shuffle(p: NcPoly, q: NcPoly) -> NcPoly:
    """Bilinear extension of the word shuffle product."""
    p._check_alphabet(q)
    out: dict = {}
    for wp, cp in p.terms.items():
        for wq, cq in q.terms.items():
            c = scalar_mul(cp, cq)
            for w, mult in shuffle_words(wp, wq).items():
                s = scalar_add(out.get(w, Fraction(0)), scalar_mul(c, mult))
                if is_zero_scalar(s):
                    out.pop(w, None)
                else:
                    out[w] = s
    return NcPoly(p.alphabet, out)


def inner(p: NcPoly, q: NcPoly) -> Scalar:
    """Canonical symmetric pairing: words are orthonormal."""
    p._check_alphabet(q)
    small, large = (p, q) if len(p.terms) <= len(q.terms) else (q, p)
    total: Scalar = Fraction(0)
    for w, c in small.terms.items():
        d = large.terms.get(w)
        if d is not None:
            total = scalar_add(total, scalar_mul(c, d))
    return total


def homogeneous_part(p: NcPoly, k: int) -> NcPoly:
    """Restriction to words of length k."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    return NcPoly(
        p.alphabet, {w: c for w, c in p.terms.items() if len(w) == k}
    )
