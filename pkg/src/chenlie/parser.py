"""Expression parsing for the command-line tools.

Two expression kinds share one tokenizer:

* polynomial expressions — words of letters with exact scalar coefficients,
  ``[a,b]`` for the bracket ab - ba, ``#`` for the shuffle product, ``*``
  or juxtaposition for concatenation, ``/`` for division by a scalar;
* group words — juxtaposition for the group product, ``^-1`` (or any
  integer power) for inverses, ``(a,b)`` for the commutator a b a^-1 b^-1,
  ``1`` for the identity.

Identifier resolution: with an explicit alphabet, letters are exactly the
alphabet members and every other identifier is a scalar indeterminate;
without one, declared scalar names (plus the connection variable t) are
scalars and all remaining identifiers become letters, alphabetized.

The printers in the algebra modules emit text this grammar accepts, and
parsing their output reproduces the original value exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .freegrp import GroupWord, commutator, gw_inv, gw_mul
from .liealg import LieTree
from .ncalg import TVAR, Alphabet, NcPoly, scalar_div, scalar_pow, shuffle, var

__all__ = [
    "ParseError",
    "parse",
    "parse_poly",
    "parse_gw",
    "parse_lie",
    "parse_scalar",
    "collect_idents",
    "build_poly",
    "build_gw",
    "build_lietree",
    "infer_alphabet",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# Tokens
# ---------------------------------------------------------------------------

_SYMBOLS = "+-*/^#()[],"


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident", "int", one of _SYMBOLS, or "end"
    text: str
    line: int
    col: int


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, line, col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("end", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# Syntax trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PInt:
    value: Fraction


@dataclass(frozen=True)
class PIdent:
    name: str


@dataclass(frozen=True)
class PPow:
    base: object
    exponent: int


@dataclass(frozen=True)
class PProd:
    factors: tuple


@dataclass(frozen=True)
class PDiv:
    num: object
    den: object


@dataclass(frozen=True)
class PBracket:
    left: object
    right: object


@dataclass(frozen=True)
class PShuffle:
    left: object
    right: object


@dataclass(frozen=True)
class PSum:
    terms: tuple  # of (sign, node), sign in {+1, -1}


@dataclass(frozen=True)
class GIdent:
    name: str


@dataclass(frozen=True)
class GOne:
    pass


@dataclass(frozen=True)
class GPow:
    base: object
    exponent: int


@dataclass(frozen=True)
class GComm:
    left: object
    right: object


@dataclass(frozen=True)
class GProd:
    factors: tuple


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def cur(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.cur
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        if self.cur.kind != kind:
            self.fail(f"expected {kind!r}, found {self.cur.text or 'end of input'!r}")
        return self.advance()

    def fail(self, message: str):
        raise ParseError(message, self.cur.line, self.cur.col)

    # -- polynomial grammar -------------------------------------------------
    #
    # sum      := ["-"] shuffle (("+" | "-") shuffle)*
    # shuffle  := product ("#" product)*
    # product  := postfix (("*" postfix | "/" postfix | postfix))*
    # postfix  := atom ["^" int]
    # atom     := int | ident | "(" sum ")" | "[" sum "," sum "]"

    def parse_sum(self):
        terms = []
        sign = 1
        if self.cur.kind == "-":
            self.advance()
            sign = -1
        terms.append((sign, self.parse_shuffle()))
        while self.cur.kind in ("+", "-"):
            sign = 1 if self.advance().kind == "+" else -1
            terms.append((sign, self.parse_shuffle()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return PSum(tuple(terms))

    def parse_shuffle(self):
        node = self.parse_product()
        while self.cur.kind == "#":
            self.advance()
            node = PShuffle(node, self.parse_product())
        return node

    _ATOM_STARTS = ("int", "ident", "(", "[")

    def parse_product(self):
        node = self.parse_postfix()
        while True:
            if self.cur.kind == "*":
                self.advance()
                node = self._mul(node, self.parse_postfix())
            elif self.cur.kind == "/":
                self.advance()
                node = PDiv(node, self.parse_postfix())
            elif self.cur.kind in self._ATOM_STARTS:
                node = self._mul(node, self.parse_postfix())
            else:
                return node

    @staticmethod
    def _mul(a, b):
        fa = a.factors if isinstance(a, PProd) else (a,)
        fb = b.factors if isinstance(b, PProd) else (b,)
        return PProd(fa + fb)

    def parse_postfix(self):
        node = self.parse_atom()
        if self.cur.kind == "^":
            self.advance()
            tok = self.expect("int")
            node = PPow(node, int(tok.text))
        return node

    def parse_atom(self):
        tok = self.cur
        if tok.kind == "int":
            self.advance()
            return PInt(Fraction(int(tok.text)))
        if tok.kind == "ident":
            self.advance()
            return PIdent(tok.text)
        if tok.kind == "(":
            self.advance()
            node = self.parse_sum()
            self.expect(")")
            return node
        if tok.kind == "[":
            self.advance()
            left = self.parse_sum()
            self.expect(",")
            right = self.parse_sum()
            self.expect("]")
            return PBracket(left, right)
        self.fail(f"expected an expression, found {tok.text or 'end of input'!r}")

    # -- group-word grammar ---------------------------------------------------
    #
    # gw      := gfactor+
    # gfactor := gatom ["^" ["-"] int]
    # gatom   := ident | "1" | "(" gw ["," gw] ")"

    def parse_gw_expr(self):
        factors = [self.parse_gw_factor()]
        while self.cur.kind in ("ident", "int", "("):
            factors.append(self.parse_gw_factor())
        if len(factors) == 1:
            return factors[0]
        return GProd(tuple(factors))

    def parse_gw_factor(self):
        node = self.parse_gw_atom()
        if self.cur.kind == "^":
            self.advance()
            sign = 1
            if self.cur.kind == "-":
                self.advance()
                sign = -1
            tok = self.expect("int")
            node = GPow(node, sign * int(tok.text))
        return node

    def parse_gw_atom(self):
        tok = self.cur
        if tok.kind == "ident":
            self.advance()
            return GIdent(tok.text)
        if tok.kind == "int":
            if tok.text != "1":
                self.fail("the only literal group word is the identity, 1")
            self.advance()
            return GOne()
        if tok.kind == "(":
            self.advance()
            left = self.parse_gw_expr()
            if self.cur.kind == ",":
                self.advance()
                right = self.parse_gw_expr()
                self.expect(")")
                return GComm(left, right)
            self.expect(")")
            return left
        self.fail(f"expected a group word, found {tok.text or 'end of input'!r}")


def parse(text: str, kind: str = "poly"):
    """Parse to a syntax tree; kind is "poly" or "gw"."""
    p = _Parser(text)
    if kind == "poly":
        node = p.parse_sum()
    elif kind == "gw":
        node = p.parse_gw_expr()
    else:
        raise ValueError(f"unknown expression kind {kind!r}")
    if p.cur.kind != "end":
        p.fail(f"unexpected trailing input {p.cur.text!r}")
    return node


# ---------------------------------------------------------------------------
# Identifier harvesting and alphabet inference
# ---------------------------------------------------------------------------


def collect_idents(node) -> set:
    out: set = set()
    stack = [node]
    while stack:
        n = stack.pop()
        if isinstance(n, (PIdent, GIdent)):
            out.add(n.name)
        elif isinstance(n, (PPow, GPow)):
            stack.append(n.base)
        elif isinstance(n, (PProd, GProd)):
            stack.extend(n.factors)
        elif isinstance(n, PDiv):
            stack.extend((n.num, n.den))
        elif isinstance(n, (PBracket, PShuffle, GComm)):
            stack.extend((n.left, n.right))
        elif isinstance(n, PSum):
            stack.extend(t for _, t in n.terms)
    return out


def infer_alphabet(nodes, scalars=()) -> Alphabet:
    """Letters = all identifiers minus declared scalars (and t), sorted."""
    names: set = set()
    for node in nodes:
        names |= collect_idents(node)
    letters = sorted(names - set(scalars) - {TVAR})
    if not letters:
        letters = ["x"]  # scalar-only expressions still need a carrier
    return Alphabet(tuple(letters))


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def build_poly(node, alphabet: Alphabet) -> NcPoly:
    """Evaluate a poly syntax tree.  Identifiers outside the alphabet are
    scalar indeterminates and ride along as degree-0 polynomials, so
    products never care which factor is which."""

    def ev(n) -> NcPoly:
        if isinstance(n, PInt):
            return NcPoly.one(alphabet).scale(n.value)
        if isinstance(n, PIdent):
            if n.name in alphabet.letters:
                return NcPoly.letter(alphabet, n.name)
            return NcPoly.one(alphabet).scale(var(n.name))
        if isinstance(n, PPow):
            base = ev(n.base)
            if base.max_degree() <= 0:
                c = scalar_pow(base.coeff(()), n.exponent)
                return NcPoly.one(alphabet).scale(c)
            if n.exponent < 0:
                raise ValueError("negative powers need a scalar base")
            out = NcPoly.one(alphabet)
            for _ in range(n.exponent):
                out = out * base
            return out
        if isinstance(n, PProd):
            out = NcPoly.one(alphabet)
            for f in n.factors:
                out = out * ev(f)
            return out
        if isinstance(n, PDiv):
            num = ev(n.num)
            den = ev(n.den)
            if den.max_degree() > 0:
                raise ValueError("division is only defined by scalars")
            return num.scale(scalar_div(Fraction(1), den.coeff(())))
        if isinstance(n, PBracket):
            a, b = ev(n.left), ev(n.right)
            return a * b - b * a
        if isinstance(n, PShuffle):
            return shuffle(ev(n.left), ev(n.right))
        if isinstance(n, PSum):
            out = NcPoly.zero(alphabet)
            for sign, t in n.terms:
                out = out + ev(t) if sign > 0 else out - ev(t)
            return out
        raise TypeError(f"not a poly syntax node: {n!r}")

    return ev(node)


def build_gw(node, alphabet: Alphabet) -> GroupWord:
    def ev(n) -> GroupWord:
        if isinstance(n, GIdent):
            return GroupWord.generator(alphabet, alphabet.index(n.name))
        if isinstance(n, GOne):
            return GroupWord.identity(alphabet)
        if isinstance(n, GPow):
            base = ev(n.base)
            if n.exponent < 0:
                base = gw_inv(base)
            out = GroupWord.identity(alphabet)
            for _ in range(abs(n.exponent)):
                out = gw_mul(out, base)
            return out
        if isinstance(n, GComm):
            return commutator(ev(n.left), ev(n.right))
        if isinstance(n, GProd):
            out = GroupWord.identity(alphabet)
            for f in n.factors:
                out = gw_mul(out, ev(f))
            return out
        raise TypeError(f"not a group-word syntax node: {n!r}")

    return ev(node)


def build_lietree(node) -> LieTree:
    """Strict bracket shape: nested [,] over letters only."""
    if isinstance(node, PIdent):
        return LieTree.leaf(node.name)
    if isinstance(node, PBracket):
        return LieTree.bracket(build_lietree(node.left), build_lietree(node.right))
    raise ValueError("expected nested brackets of letters")


def parse_poly(text: str, alphabet: Alphabet = None, scalars=()) -> NcPoly:
    node = parse(text, "poly")
    if alphabet is None:
        alphabet = infer_alphabet([node], scalars)
    return build_poly(node, alphabet)


def parse_gw(text: str, alphabet: Alphabet = None) -> GroupWord:
    node = parse(text, "gw")
    if alphabet is None:
        alphabet = infer_alphabet([node])
    return build_gw(node, alphabet)


def parse_lie(text: str) -> LieTree:
    return build_lietree(parse(text, "poly"))


_SCALAR_CARRIER = Alphabet(("_",))


def parse_scalar(text: str):
    """Parse text with no letters at all: every identifier is a scalar
    indeterminate and the result is a single exact scalar."""
    poly = build_poly(parse(text, "poly"), _SCALAR_CARRIER)
    if poly.max_degree() > 0:
        raise ValueError(f"expected a scalar, got words: {text!r}")
    return poly.coeff(())
