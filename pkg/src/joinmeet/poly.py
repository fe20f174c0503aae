"""Exact multivariate polynomials with pluggable monomial orders.

One variable per lattice element, arbitrary-precision rational coefficients by
default.  A prime-field mode exists as a fast cross-check; it is never used
for verdicts.  Exponent vectors are dense tuples: the rings here have at most
~20 variables and simplicity wins at that scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction


class PolyParseError(ValueError):
    """A polynomial string does not match the grammar."""


# ---------------------------------------------------------------------------
# coefficient fields


class RationalField:
    """Arbitrary-precision rationals; the verdict-grade default field."""

    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into QQ")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class GFElement:
    """An element of a prime field Z/p, with operator arithmetic."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def __add__(self, other):
        o = self._val(other)
        return NotImplemented if o is None else GFElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._val(other)
        return NotImplemented if o is None else GFElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._val(other)
        return NotImplemented if o is None else GFElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._val(other)
        return NotImplemented if o is None else GFElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        o %= self.p
        if o == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return GFElement(self.value * pow(o, self.p - 2, self.p), self.p)

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def _val(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return str(self.value)


@dataclass(frozen=True)
class PrimeField:
    """GF(p) for an odd prime p (default cross-check prime is 32003)."""

    p: int = 32003

    @property
    def characteristic(self):
        return self.p

    @property
    def zero(self):
        return GFElement(0, self.p)

    @property
    def one(self):
        return GFElement(1, self.p)

    def coerce(self, value):
        if isinstance(value, GFElement):
            if value.p != self.p:
                raise ValueError("mixed prime fields")
            return value
        if isinstance(value, int):
            return GFElement(value, self.p)
        if isinstance(value, Fraction):
            return GFElement(value.numerator, self.p) / value.denominator
        if isinstance(value, str):
            return self.coerce(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    def __repr__(self):
        return f"GF({self.p})"


def GF(p):
    return PrimeField(p)


# ---------------------------------------------------------------------------
# monomial orders


def _drl_key(exps):
    # degrevlex on a priority-permuted vector: degree first, then the
    # negated reversed vector (ties broken against the smallest variable).
    return (sum(exps), tuple(-e for e in reversed(exps)))


@dataclass(frozen=True)
class MonomialOrder:
    """A term order: degrevlex, lex, or a 2-block elimination order.

    ``priority`` lists variable indices from biggest to smallest.  For
    ``kind="block"`` the first ``block`` positions (after applying the
    priority) form the eliminated block; comparison is degrevlex within each
    block, first block dominating.
    """

    kind: str
    priority: tuple
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if sorted(self.priority) != list(range(len(self.priority))):
            raise ValueError("priority must be a permutation of the variables")
        if self.kind == "block" and not 0 < self.block < len(self.priority):
            raise ValueError("block size must split the variables")

    def key(self, exps):
        perm = tuple(exps[i] for i in self.priority)
        if self.kind == "degrevlex":
            return _drl_key(perm)
        if self.kind == "lex":
            return perm
        return (_drl_key(perm[: self.block]), _drl_key(perm[self.block :]))


def degrevlex(nvars, priority=None):
    if priority is None:
        priority = tuple(range(nvars))
    return MonomialOrder("degrevlex", tuple(priority))


def lex(nvars, priority=None):
    if priority is None:
        priority = tuple(range(nvars))
    return MonomialOrder("lex", tuple(priority))


# ---------------------------------------------------------------------------
# rings and polynomials


@dataclass(frozen=True)
class Ring:
    """A polynomial ring: variable names, a monomial order, a coefficient field."""

    names: tuple
    order: MonomialOrder
    field: object = QQ
    _key_cache: dict = dc_field(default_factory=dict, compare=False, repr=False)
    _index: dict = dc_field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        if len(self.order.priority) != len(self.names):
            raise ValueError("order priority size must match variable count")
        self._index.update({name: i for i, name in enumerate(self.names)})

    @property
    def nvars(self):
        return len(self.names)

    def key(self, exps):
        cache = self._key_cache
        k = cache.get(exps)
        if k is None:
            k = cache[exps] = self.order.key(exps)
        return k

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def zero(self):
        return Polynomial(self, ())

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field.coerce(c)
        if not c:
            return Polynomial(self, ())
        return Polynomial(self, (((0,) * self.nvars, c),))

    def var(self, name):
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial(self, ((tuple(exps), self.field.one),))

    def gens(self):
        return tuple(self.var(name) for name in self.names)

    def monomial(self, exps, coeff=1):
        coeff = self.field.coerce(coeff)
        if not coeff:
            return self.zero()
        return Polynomial(self, ((tuple(exps), coeff),))

    def from_dict(self, mapping):
        terms = tuple(
            (m, c)
            for m, c in sorted(mapping.items(), key=lambda mc: self.key(mc[0]), reverse=True)
            if c
        )
        return Polynomial(self, terms)

    def parse(self, text):
        return _parse(self, text)


class Polynomial:
    """Canonical form: terms strictly decreasing in the ring's order, no zeros."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- basic structure

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    def leading_monomial(self):
        return self.leading_term()[0]

    def leading_coeff(self):
        return self.leading_term()[1]

    def total_degree(self):
        """Maximum term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m, _ in self.terms)

    def is_homogeneous(self):
        degs = {sum(m) for m, _ in self.terms}
        return len(degs) <= 1

    def is_linear_form(self):
        return all(sum(m) == 1 for m, _ in self.terms)

    def degree_part(self, d):
        return Polynomial(self.ring, tuple((m, c) for m, c in self.terms if sum(m) == d))

    def monic(self):
        if not self.terms:
            return self
        lc = self.terms[0][1]
        if lc == self.ring.field.one:
            return self
        return Polynomial(self.ring, tuple((m, c / lc) for m, c in self.terms))

    # -- arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            v = acc.get(m)
            v = c if v is None else v + c
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return self.ring.from_dict(acc)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Polynomial(self.ring, tuple((m, -c) for m, c in self.terms))

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.field.coerce(other)
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, tuple((m, cc * c) for m, cc in self.terms))
        acc = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                v = acc.get(m)
                v = c1 * c2 if v is None else v + c1 * c2
                if v:
                    acc[m] = v
                else:
                    del acc[m]
        return self.ring.from_dict(acc)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        for _ in range(k):
            result = result * self
        return result

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("mixed rings")
            return other
        return self.ring.constant(other)

    def shift(self, exps, coeff):
        """Multiply by coeff * x^exps; order-preserving, no re-sort needed."""
        if not coeff:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            tuple((tuple(a + b for a, b in zip(m, exps)), c * coeff) for m, c in self.terms),
        )

    def map_exponents(self, ring, fn):
        """Carry this polynomial into another ring, rewriting exponent vectors."""
        return ring.from_dict({fn(m): c for m, c in self.terms})

    # -- printing

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for i, (m, c) in enumerate(self.terms):
            neg = _is_negative(c)
            mag = -c if neg else c
            factors = []
            for j, e in enumerate(m):
                if e == 1:
                    factors.append(names[j])
                elif e > 1:
                    factors.append(f"{names[j]}^{e}")
            body = "*".join(factors)
            if not body:
                body = str(mag)
            elif mag != self.ring.field.one:
                body = f"{mag}*{body}"
            if i == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"<poly {self}>"


def _is_negative(c):
    if isinstance(c, Fraction):
        return c < 0
    return False  # prime-field coefficients print as canonical residues


# ---------------------------------------------------------------------------
# parsing
#
# grammar: poly := [sign] term ((+|-) term)* ; term := factor ((* | juxtapose) factor)*
#          factor := coefficient | NAME [^ INT] ; coefficient := INT [/ INT]
# Variable names are matched longest-first, so labels take precedence over
# integer literals (relevant in divisor lattices whose labels are numerals).


def _tokenize(ring, text):
    names_by_len = sorted(ring.names, key=len, reverse=True)
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^/":
            tokens.append(("op", ch))
            i += 1
            continue
        matched = None
        for name in names_by_len:
            if text.startswith(name, i):
                matched = name
                break
        if matched is not None:
            tokens.append(("name", matched))
            i += len(matched)
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
            continue
        raise PolyParseError(f"unexpected character {ch!r} at position {i} in {text!r}")
    return tokens


class _Parser:
    def __init__(self, ring, tokens, text):
        self.ring = ring
        self.tokens = tokens
        self.text = text
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def fail(self, why):
        raise PolyParseError(f"{why} in {self.text!r}")

    def parse(self):
        result = self.ring.zero()
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        if self.peek()[0] is None:
            self.fail("empty polynomial")
        while True:
            result = result + self.term() * sign
            kind, val = self.peek()
            if kind is None:
                return result
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
            else:
                self.fail(f"expected + or - before {val!r}")

    def term(self):
        field = self.ring.field
        coeff = field.one
        exps = [0] * self.ring.nvars
        while True:
            kind, val = self.take()
            if kind == "int":
                c = field.coerce(val)
                nk, nv = self.peek()
                if nk == "op" and nv == "/":
                    self.take()
                    dk, dv = self.take()
                    if dk != "int" or dv == 0:
                        self.fail("bad rational coefficient")
                    c = c / dv
                elif nk == "op" and nv == "^":
                    self.take()
                    ek, ev = self.take()
                    if ek != "int":
                        self.fail("bad exponent")
                    c = field.coerce(val**ev)
                coeff = coeff * c
            elif kind == "name":
                e = 1
                nk, nv = self.peek()
                if nk == "op" and nv == "^":
                    self.take()
                    ek, ev = self.take()
                    if ek != "int":
                        self.fail("bad exponent")
                    e = ev
                exps[self.ring.index(val)] += e
            else:
                self.fail("expected a coefficient or variable")
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                continue
            if kind in ("name", "int"):
                continue  # juxtaposition
            break
        return self.ring.monomial(tuple(exps), coeff)


def _parse(ring, text):
    tokens = _tokenize(ring, text)
    if not tokens:
        raise PolyParseError(f"empty polynomial in {text!r}")
    return _Parser(ring, tokens, text).parse()
