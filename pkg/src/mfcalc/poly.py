"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial lives in a declared ring with two blocks of variables: the base
block (x-variables, each carrying a positive integer weight) and an optional
auxiliary block (T-variables, whose degree is tracked separately from the
weighted x-degree).  Coefficients are `fractions.Fraction`; no floating point
appears anywhere.

Terms are stored as a dict mapping exponent tuples to nonzero coefficients,
so the zero polynomial has an empty term map and equality is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]
Monomial = tuple  # exponent tuple, length = ring arity


@dataclass(frozen=True)
class Ring:
    """A polynomial ring Q[x_1..x_n, T_1..T_c] with weights on the x-block."""

    x_vars: tuple
    t_vars: tuple = ()
    x_weights: tuple = ()

    def __post_init__(self):
        x = tuple(self.x_vars)
        t = tuple(self.t_vars)
        w = tuple(self.x_weights) if self.x_weights else (1,) * len(x)
        if len(x) < 1:
            raise ValueError("ring needs at least one x-variable")
        if len(w) != len(x):
            raise ValueError("one weight per x-variable required")
        if any(wi < 1 for wi in w):
            raise ValueError("weights must be positive integers")
        names = x + t
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        object.__setattr__(self, "x_vars", x)
        object.__setattr__(self, "t_vars", t)
        object.__setattr__(self, "x_weights", w)

    @property
    def n(self) -> int:
        return len(self.x_vars)

    @property
    def c(self) -> int:
        return len(self.t_vars)

    @property
    def arity(self) -> int:
        return len(self.x_vars) + len(self.t_vars)

    @property
    def names(self) -> tuple:
        return self.x_vars + self.t_vars

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def zero_mono(self) -> Monomial:
        return (0,) * self.arity

    def x_degree(self, mono: Monomial) -> int:
        """Weighted degree of the x-part of a monomial."""
        return sum(w * e for w, e in zip(self.x_weights, mono))

    def t_degree(self, mono: Monomial) -> int:
        return sum(mono[self.n:])


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on monomials: grevlex, lex, or weighted grevlex.

    Keys sort ascending, so max(key) picks the leading monomial.  Grevlex
    compares total degree first, then reversed-negated exponents; with the
    x-block listed first this puts T-variables last, matching the default
    engine order.
    """

    kind: str = "grevlex"
    weights: tuple = ()

    def key(self, mono: Monomial):
        if self.kind == "lex":
            return tuple(mono)
        if self.kind == "grevlex":
            return (sum(mono), tuple(-e for e in reversed(mono)))
        if self.kind == "weighted-grevlex":
            w = self.weights if self.weights else (1,) * len(mono)
            wd = sum(wi * e for wi, e in zip(w, mono))
            return (wd, sum(mono), tuple(-e for e in reversed(mono)))
        raise ValueError(f"unknown order kind {self.kind!r}")


GREVLEX = MonomialOrder("grevlex")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True if monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class Poly:
    """Immutable sparse polynomial: {exponent tuple: nonzero Fraction}."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Coeff]):
        clean = {}
        for mono, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff != 0:
                if len(mono) != ring.arity:
                    raise ValueError("monomial arity does not match ring")
                clean[tuple(mono)] = coeff
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ring: Ring) -> "Poly":
        return Poly(ring, {})

    @staticmethod
    def const(ring: Ring, value: Coeff) -> "Poly":
        return Poly(ring, {ring.zero_mono(): Fraction(value)})

    @staticmethod
    def var(ring: Ring, name: str) -> "Poly":
        i = ring.index(name)
        e = [0] * ring.arity
        e[i] = 1
        return Poly(ring, {tuple(e): Fraction(1)})

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.ring, other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.ring, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly.zero(self.ring)
            return Poly(self.ring, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        out = Poly.const(self.ring, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.ring, other)
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            h = hash((self.ring, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in m) for m in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get(self.ring.zero_mono(), Fraction(0))

    def leading(self, order: MonomialOrder = GREVLEX):
        """(monomial, coeff) maximal for the order; None for zero."""
        if not self.terms:
            return None
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def x_weighted_degree(self) -> int:
        """Max weighted x-degree over terms (-1 for zero)."""
        if not self.terms:
            return -1
        return max(self.ring.x_degree(m) for m in self.terms)

    def t_degree(self) -> int:
        """Max T-degree over terms (-1 for zero)."""
        if not self.terms:
            return -1
        return max(self.ring.t_degree(m) for m in self.terms)

    def is_t_homogeneous(self) -> bool:
        degs = {self.ring.t_degree(m) for m in self.terms}
        return len(degs) <= 1

    def is_x_homogeneous(self) -> bool:
        degs = {self.ring.x_degree(m) for m in self.terms}
        return len(degs) <= 1

    # -- calculus ----------------------------------------------------------

    def derivative(self, var: Union[int, str]) -> "Poly":
        """Formal partial derivative with respect to an x-variable.

        T-variables are inert base directions; differentiating by one is
        rejected.
        """
        i = self.ring.index(var) if isinstance(var, str) else var
        if i >= self.ring.n:
            raise ValueError("cannot differentiate with respect to a T-variable")
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                m2 = m[:i] + (e - 1,) + m[i + 1:]
                out[m2] = out.get(m2, Fraction(0)) + c * e
        return Poly(self.ring, out)

    def substitute(self, assignment: Mapping[str, Union["Poly", Coeff]]) -> "Poly":
        """Simultaneous substitution var -> Poly or constant, exact."""
        ring = self.ring
        images = {}
        for name, val in assignment.items():
            i = ring.index(name)
            if isinstance(val, Poly):
                if val.ring != ring:
                    raise ValueError("ring mismatch in substitution value")
                images[i] = val
            else:
                images[i] = Poly.const(ring, val)
        out = Poly.zero(ring)
        for m, c in self.terms.items():
            part = Poly.const(ring, c)
            rest = [0] * ring.arity
            for i, e in enumerate(m):
                if e == 0:
                    continue
                if i in images:
                    part = part * images[i] ** e
                else:
                    rest[i] = e
            out = out + part * Poly(ring, {tuple(rest): Fraction(1)})
        return out

    def weighted_parts(self) -> dict:
        """Decompose into x-weighted-homogeneous parts: {degree: part}.

        T-exponents ride along unchanged; the key is the weighted x-degree.
        """
        parts: dict = {}
        for m, c in self.terms.items():
            d = self.ring.x_degree(m)
            parts.setdefault(d, {})[m] = c
        return {d: Poly(self.ring, t) for d, t in sorted(parts.items())}

    # -- printing ----------------------------------------------------------

    def __repr__(self):
        return f"Poly({render_poly(self)!r})"

    def __str__(self):
        return render_poly(self)


# -- parsing ---------------------------------------------------------------


class ParseError(ValueError):
    """Syntax error in a polynomial expression, with position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens = []
        self._run()
        self.i = 0

    def _run(self):
        t, n = self.text, len(self.text)
        i = 0
        while i < n:
            ch = t[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and t[j].isdigit():
                    j += 1
                self.tokens.append(("int", t[i:j], i))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < n and (t[j].isalnum() or t[j] == "_"):
                    j += 1
                self.tokens.append(("name", t[i:j], i))
                i = j
                continue
            if ch in "+-*^()/":
                self.tokens.append((ch, ch, i))
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", i)
        self.tokens.append(("end", "", n))

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok


class _Parser:
    """Recursive descent for: expr := term (('+'|'-') term)*
    term := atom ('*' atom)*;  atom := primary ('^' int)?
    primary := int ('/' int)? | name | '(' expr ')' | '-' atom
    Implicit multiplication is rejected.
    """

    def __init__(self, text: str, ring: Ring):
        self.lex = _Lexer(text)
        self.ring = ring

    def parse(self) -> Poly:
        p = self.expr()
        kind, _, pos = self.lex.peek()
        if kind != "end":
            raise ParseError("trailing input (implicit multiplication is not allowed)", pos)
        return p

    def expr(self) -> Poly:
        kind, _, _ = self.lex.peek()
        if kind == "-":
            self.lex.next()
            p = -self.term()
        else:
            p = self.term()
        while True:
            kind, _, _ = self.lex.peek()
            if kind == "+":
                self.lex.next()
                p = p + self.term()
            elif kind == "-":
                self.lex.next()
                p = p - self.term()
            else:
                return p

    def term(self) -> Poly:
        p = self.atom()
        while self.lex.peek()[0] == "*":
            self.lex.next()
            p = p * self.atom()
        return p

    def atom(self) -> Poly:
        p = self.primary()
        if self.lex.peek()[0] == "^":
            self.lex.next()
            kind, text, pos = self.lex.next()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", pos)
            p = p ** int(text)
        return p

    def primary(self) -> Poly:
        kind, text, pos = self.lex.next()
        if kind == "int":
            value = Fraction(int(text))
            if self.lex.peek()[0] == "/":
                self.lex.next()
                k2, t2, p2 = self.lex.next()
                if k2 != "int":
                    raise ParseError("denominator must be an integer", p2)
                if int(t2) == 0:
                    raise ParseError("zero denominator", p2)
                value = value / int(t2)
            return Poly.const(self.ring, value)
        if kind == "name":
            if text not in self.ring.names:
                raise ParseError(f"unknown variable {text!r}", pos)
            return Poly.var(self.ring, text)
        if kind == "(":
            p = self.expr()
            k2, _, p2 = self.lex.next()
            if k2 != ")":
                raise ParseError("expected ')'", p2)
            return p
        if kind == "-":
            return -self.atom()
        raise ParseError(f"unexpected token {text!r}", pos)


def parse_poly(text: str, ring: Ring) -> Poly:
    """Parse an expression string into a canonical Poly."""
    return _Parser(text, ring).parse()


def render_poly(p: Poly, order: MonomialOrder = GREVLEX) -> str:
    """Render so that parse_poly(render_poly(p)) == p."""
    if not p.terms:
        return "0"
    names = p.ring.names
    parts = []
    for m in sorted(p.terms, key=order.key, reverse=True):
        c = p.terms[m]
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = _render_coeff(abs(c))
        elif abs(c) == 1:
            body = "*".join(factors)
        else:
            body = _render_coeff(abs(c)) + "*" + "*".join(factors)
        parts.append(("- " if c < 0 else "+ ") + body)
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


def _render_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
