"""Sparse multivariate polynomials over exact fields.

A :class:`Ring` fixes a variable universe ``x_0 > x_1 > ... > x_{n-1}``
(smaller index = larger variable) and a coefficient field.  Polynomials are
immutable: a tuple of ``(monomial, coefficient)`` terms kept strictly
descending under the ring's lexicographic order.  Monomials are plain
exponent tuples, so the ring order coincides with native tuple comparison.

Variables are never renamed: computations on a sub-ring reuse global indices
and restrict the support, and alternative orders are expressed as a priority
permutation of the same indices.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import Field, QQ

Monomial = tuple


# ---------------------------------------------------------------------------
# monomial helpers

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    """True if monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


class Lex:
    """Lexicographic order given by a priority sequence of variable indices.

    ``priority[0]`` is the largest variable.  ``priority=None`` means the
    ring's built-in order 0, 1, ..., n-1, for which the sort key is the
    exponent tuple itself.
    """

    kind = "lex"

    def __init__(self, priority=None):
        self.priority = tuple(priority) if priority is not None else None

    def key(self, m):
        if self.priority is None:
            return m
        return tuple(m[i] for i in self.priority)

    def compare(self, a, b):
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __repr__(self):
        if self.priority is None:
            return "lex"
        return f"lex{list(self.priority)}"


class DegRevLex:
    """Graded reverse lexicographic order on the ring's built-in variables."""

    kind = "degrevlex"
    priority = None

    def key(self, m):
        return (sum(m), tuple(-e for e in reversed(m)))

    def compare(self, a, b):
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __repr__(self):
        return "degrevlex"


LEX = Lex()
DEGREVLEX = DegRevLex()


def compare_monomials(a, b, order=LEX):
    """Three-way comparison of two monomials: -1, 0 or 1."""
    if len(a) != len(b):
        raise ValueError("monomials from rings of different dimension")
    return order.compare(a, b)


class Ring:
    """A polynomial ring: named variables over an exact field."""

    __slots__ = ("names", "field", "_index")

    def __init__(self, names, field: Field = QQ):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = names
        self.field = field
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def zero_mono(self):
        return (0,) * self.nvars

    def var(self, i: int) -> "Polynomial":
        m = [0] * self.nvars
        m[i] = 1
        return Polynomial(self, ((tuple(m), self.field.one),))

    def const(self, value) -> "Polynomial":
        c = self.field.element(value)
        if c == self.field.zero:
            return Polynomial(self, ())
        return Polynomial(self, ((self.zero_mono(), c),))

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def from_dict(self, d) -> "Polynomial":
        field = self.field
        terms = [(m, field.element(c)) for m, c in d.items()
                 if field.element(c) != field.zero]
        terms.sort(key=lambda t: t[0], reverse=True)
        return Polynomial(self, tuple(terms))

    def __eq__(self, other):
        return (isinstance(other, Ring) and other.names == self.names
                and other.field == self.field)

    def __hash__(self):
        return hash((self.names, self.field))

    def __repr__(self):
        return f"Ring({', '.join(self.names)} over {self.field!r})"


class Polynomial:
    """An immutable sparse polynomial; terms descend under the ring order."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms=()):
        self.ring = ring
        self.terms = tuple(terms)
        self._hash = None

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or not any(self.terms[0][0])

    def constant_value(self):
        if not self.terms:
            return self.ring.field.zero
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms[0][1]

    def support(self) -> frozenset:
        vs = set()
        for m, _ in self.terms:
            for i, e in enumerate(m):
                if e:
                    vs.add(i)
        return frozenset(vs)

    def degree_in(self, v: int) -> int:
        return max((m[v] for m, _ in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=0)

    def terms_for(self, order):
        """Terms sorted descending under a (possibly non-ring) order."""
        if order.priority is None and order.kind == "lex":
            return self.terms
        return tuple(sorted(self.terms, key=lambda t: order.key(t[0]),
                            reverse=True))

    def coeff(self, m):
        for mono, c in self.terms:
            if mono == m:
                return c
        return self.ring.field.zero

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        self._check(other)
        field = self.ring.field
        out = []
        a, b = self.terms, other.terms
        i = j = 0
        while i < len(a) and j < len(b):
            ma, ca = a[i]
            mb, cb = b[j]
            if ma > mb:
                out.append(a[i])
                i += 1
            elif mb > ma:
                out.append(b[j])
                j += 1
            else:
                c = field.add(ca, cb)
                if c != field.zero:
                    out.append((ma, c))
                i += 1
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return Polynomial(self.ring, out)

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring,
                          tuple((m, field.neg(c)) for m, c in self.terms))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(self.ring.field.element(other))
        self._check(other)
        field = self.ring.field
        acc = {}
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                m = mono_mul(ma, mb)
                c = field.add(acc.get(m, field.zero), field.mul(ca, cb))
                if c == field.zero:
                    acc.pop(m, None)
                else:
                    acc[m] = c
        terms = sorted(acc.items(), key=lambda t: t[0], reverse=True)
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def scale(self, c):
        field = self.ring.field
        if c == field.zero:
            return Polynomial(self.ring, ())
        return Polynomial(self.ring,
                          tuple((m, field.mul(cc, c)) for m, cc in self.terms))

    def mul_term(self, m, c):
        """Multiply by the single term c * x^m."""
        field = self.ring.field
        if c == field.zero:
            return Polynomial(self.ring, ())
        return Polynomial(self.ring,
                          tuple((mono_mul(mm, m), field.mul(cc, c))
                                for mm, cc in self.terms))

    def monic(self, order=LEX):
        if self.is_zero():
            return self
        lc = self.leading_coefficient(order)
        if lc == self.ring.field.one:
            return self
        return self.scale(self.ring.field.inv(lc))

    # -- leading data -------------------------------------------------------

    def leading_term(self, order=LEX):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        if order.priority is None and order.kind == "lex":
            return self.terms[0]
        return max(self.terms, key=lambda t: order.key(t[0]))

    def leading_monomial(self, order=LEX):
        return self.leading_term(order)[0]

    def leading_coefficient(self, order=LEX):
        return self.leading_term(order)[1]

    # -- evaluation / substitution -------------------------------------------

    def subs(self, assignment) -> "Polynomial":
        """Substitute field values for a subset of variables."""
        field = self.ring.field
        vals = {v: field.element(c) for v, c in assignment.items()}
        acc = {}
        for m, c in self.terms:
            rest = list(m)
            for v, val in vals.items():
                e = m[v]
                if e:
                    c = field.mul(c, field.pow(val, e))
                    rest[v] = 0
            if c == field.zero:
                continue
            key = tuple(rest)
            c2 = field.add(acc.get(key, field.zero), c)
            if c2 == field.zero:
                acc.pop(key, None)
            else:
                acc[key] = c2
        terms = sorted(acc.items(), key=lambda t: t[0], reverse=True)
        return Polynomial(self.ring, terms)

    def eval_point(self, point):
        """Evaluate at a full point (sequence indexed by variable)."""
        field = self.ring.field
        total = field.zero
        for m, c in self.terms:
            v = c
            for i, e in enumerate(m):
                if e:
                    v = field.mul(v, field.pow(point[i], e))
            total = field.add(total, v)
        return total

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and other.ring == self.ring
                and other.terms == self.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def __repr__(self):
        return format_polynomial(self)


# ---------------------------------------------------------------------------
# structural predicates

def support_vars(f: Polynomial) -> frozenset:
    """Indices of the variables occurring with positive degree in f."""
    return f.support()


def is_simplicial(f: Polynomial) -> bool:
    """True if, for every variable of f, the monomial of maximal degree in
    that variable is unique and is a pure power of it.

    The property does not depend on any monomial order.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    for v in f.support():
        d = f.degree_in(v)
        tops = [m for m, _ in f.terms if m[v] == d]
        if len(tops) != 1:
            return False
        top = tops[0]
        if any(top[i] for i in range(len(top)) if i != v):
            return False
    return True


def is_dominated(f: Polynomial, v: int, q=None, order=LEX) -> bool:
    """True if the leading monomial of f is a pure power x_v^d (d <= q if
    a bound q is given)."""
    if f.is_zero():
        return False
    lm = f.leading_monomial(order)
    if any(lm[i] for i in range(len(lm)) if i != v):
        return False
    return q is None or lm[v] <= q


def leading_coefficient_in(f: Polynomial, v: int) -> Polynomial:
    """The coefficient of x_v^d in f, viewed univariate in x_v, where d is
    the degree of f in x_v.  For d = 0 this is f itself."""
    d = f.degree_in(v)
    acc = {}
    for m, c in f.terms:
        if m[v] == d:
            mm = list(m)
            mm[v] = 0
            acc[tuple(mm)] = c
    terms = sorted(acc.items(), key=lambda t: t[0], reverse=True)
    return Polynomial(f.ring, tuple(terms))


# ---------------------------------------------------------------------------
# division and S-polynomials

def normal_form(f: Polynomial, divisors, order=LEX) -> Polynomial:
    """Remainder of f under multivariate division by the given divisors.

    No term of the result is divisible by any divisor's leading monomial,
    and f minus the result lies in the ideal the divisors generate.  The
    first applicable divisor (in list order) is used at each step, which
    makes the function deterministic.
    """
    import heapq

    ring = f.ring
    field = ring.field
    gs = []
    for g in divisors:
        if g.is_zero():
            raise ValueError("zero divisor in normal form")
        lm, lc = g.leading_term(order)
        gs.append((lm, lc, g.terms_for(order)))
    key = order.key

    def negkey(m):
        return tuple(-x for x in key(m))

    work = dict(f.terms)
    # max-heap with lazy deletion: entries may be stale once a monomial
    # cancels out of the working dict
    heap = [(negkey(m), m) for m in work]
    heapq.heapify(heap)
    remainder = {}
    while heap:
        _, m = heapq.heappop(heap)
        if m not in work:
            continue
        c = work.pop(m)
        for lm, lc, gterms in gs:
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                q = field.div(c, lc)
                for mg, cg in gterms[1:]:
                    mm = mono_mul(mg, shift)
                    old = work.get(mm)
                    nc = field.sub(old if old is not None else field.zero,
                                   field.mul(q, cg))
                    if nc == field.zero:
                        work.pop(mm, None)
                    else:
                        if old is None:
                            heapq.heappush(heap, (negkey(mm), mm))
                        work[mm] = nc
                break
        else:
            remainder[m] = c
    terms = sorted(remainder.items(), key=lambda t: t[0], reverse=True)
    return Polynomial(ring, tuple(terms))


def s_polynomial(f: Polynomial, g: Polynomial, order=LEX) -> Polynomial:
    """S(f, g) = (lcm/lt(f)) f - (lcm/lt(g)) g for the leading-monomial lcm."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of zero polynomial")
    f._check(g)
    field = f.ring.field
    lmf, lcf = f.leading_term(order)
    lmg, lcg = g.leading_term(order)
    lcm = mono_lcm(lmf, lmg)
    left = f.mul_term(mono_div(lcm, lmf), field.inv(lcf))
    right = g.mul_term(mono_div(lcm, lmg), field.inv(lcg))
    return left - right


# ---------------------------------------------------------------------------
# parsing and formatting

class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        elif ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse a polynomial in the ring's variables.

    Grammar: ``expr := ['-'] term (('+'|'-') term)*``;
    ``term := coeff ('*' factor)* | factor ('*' factor)*``;
    ``factor := var ('^' uint)?``; ``coeff := int ['/' uint]``.
    """
    tokens = _tokenize(text)
    field = ring.field
    pos = 0

    def peek():
        return tokens[pos]

    def take(kind=None):
        nonlocal pos
        tok = tokens[pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2])
        pos += 1
        return tok

    def parse_coeff():
        tok = take("int")
        num = int(tok[1])
        if peek()[0] == "/":
            take("/")
            den_tok = take("int")
            den = int(den_tok[1])
            if den == 0:
                raise ParseError("zero denominator", den_tok[2])
            return field.element(Fraction(num, den))
        return field.element(num)

    def parse_factor():
        tok = take("name")
        v = ring._index.get(tok[1])
        if v is None:
            raise ParseError(f"unknown variable {tok[1]!r}", tok[2])
        e = 1
        if peek()[0] == "^":
            take("^")
            e_tok = take("int")
            e = int(e_tok[1])
        m = [0] * ring.nvars
        m[v] = e
        return tuple(m)

    def parse_term():
        coeff = field.one
        mono = ring.zero_mono()
        if peek()[0] == "int":
            coeff = parse_coeff()
            while peek()[0] == "*":
                take("*")
                mono = mono_mul(mono, parse_factor())
        elif peek()[0] == "name":
            mono = parse_factor()
            while peek()[0] == "*":
                take("*")
                mono = mono_mul(mono, parse_factor())
        else:
            tok = peek()
            raise ParseError(f"expected term, found {tok[1]!r}", tok[2])
        return mono, coeff

    acc = {}

    def accumulate(mono, coeff):
        c = field.add(acc.get(mono, field.zero), coeff)
        if c == field.zero:
            acc.pop(mono, None)
        else:
            acc[mono] = c

    sign = 1
    if peek()[0] == "-":
        take("-")
        sign = -1
    mono, coeff = parse_term()
    accumulate(mono, field.neg(coeff) if sign < 0 else coeff)
    while peek()[0] in ("+", "-"):
        op = take()[0]
        mono, coeff = parse_term()
        accumulate(mono, field.neg(coeff) if op == "-" else coeff)
    end = peek()
    if end[0] != "end":
        raise ParseError(f"trailing input {end[1]!r}", end[2])
    terms = sorted(acc.items(), key=lambda t: t[0], reverse=True)
    return Polynomial(ring, tuple(terms))


def _format_term(ring, m, c, lead: bool) -> str:
    field = ring.field
    factors = []
    for i, e in enumerate(m):
        if e == 1:
            factors.append(ring.names[i])
        elif e > 1:
            factors.append(f"{ring.names[i]}^{e}")
    neg = isinstance(c, (int, Fraction)) and c < 0 and field.kind == "Q"
    mag = field.neg(c) if neg else c
    coeff_txt = field.format(mag)
    if factors and coeff_txt == "1":
        body = "*".join(factors)
    elif factors:
        body = coeff_txt + "*" + "*".join(factors)
    else:
        body = coeff_txt
    if lead:
        return ("-" if neg else "") + body
    return (" - " if neg else " + ") + body


def format_polynomial(f: Polynomial) -> str:
    """Canonical text form; ``parse_polynomial`` round-trips it."""
    if f.is_zero():
        return "0"
    parts = [_format_term(f.ring, m, c, i == 0)
             for i, (m, c) in enumerate(f.terms)]
    return "".join(parts)


def dedupe(polys):
    """Drop zero polynomials and exact duplicates, preserving order."""
    seen = set()
    out = []
    for f in polys:
        if f.is_zero():
            continue
        if f in seen:
            continue
        seen.add(f)
        out.append(f)
    return out
