"""Exact arithmetic over A = Z[q, q^-1, Q1, ..., Qr], its fraction field and
specialization fields Q[x]/(m(x)).

A LaurentPoly is a finitely supported map from exponent tuples
(e_q, e_Q1, ..., e_Qr) to rational coefficients.  Trailing zero exponents are
stripped from keys so that the same monomial has one key whatever r is.
Quotients are carried by ``Fraction``; ``frac`` returns a plain LaurentPoly
whenever the denominator divides the numerator exactly.
"""

import fractions
import math
import random
import re
from functools import reduce

from .errors import (DenominatorVanishes, InexactDivision, NonInvertibleQ,
                     ParseError, ZeroDivisor)

Rat = fractions.Fraction


# Exponent tuples (e_q, e_Q1, ..., e_Qr) are packed into one integer with
# base-B digits (the q digit is signed), so multiplying monomials is a single
# integer addition.
_BITS = 12
_B = 1 << _BITS
_HALF = _B >> 1
_MASK = _B - 1


def encode(key):
    out = 0
    for j in range(len(key) - 1, -1, -1):
        out = out * _B + key[j]
    return out


def decode(code):
    out = []
    while code:
        d = code & _MASK
        if d >= _HALF:
            d -= _B
        out.append(d)
        code = (code - d) >> _BITS
    return tuple(out)


def _pad(k, nv):
    return k + (0,) * (nv - len(k)) if len(k) < nv else k


def _norm_coeff(c):
    if isinstance(c, Rat) and c.denominator == 1:
        return int(c)
    return c


class LaurentPoly:
    """Element of A (rational coefficients are tolerated).

    ``terms`` maps packed exponent codes (see :func:`encode`) to coefficients.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        """Build from a dict keyed by exponent tuples."""
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    k = encode(tuple(k))
                    c = clean.get(k, 0) + c
                    if c:
                        clean[k] = c
                    else:
                        clean.pop(k, None)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    # constructors
    @classmethod
    def const(cls, c):
        return cls._raw({0: c}) if c else cls._raw({})

    @classmethod
    def monomial(cls, key, c=1):
        return cls._raw({encode(tuple(key)): c}) if c else cls._raw({})

    # predicates
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_one(self):
        return len(self.terms) == 1 and self.terms.get(0) == 1

    def is_monomial(self):
        return len(self.terms) == 1

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        return self.terms.get(0, 0)

    def items_tuples(self):
        return [(decode(k), c) for k, c in self.terms.items()]

    def nvars(self):
        return max((len(decode(k)) for k in self.terms), default=0)

    def has_integer_coeffs(self):
        return all(isinstance(c, int) or c.denominator == 1 for c in self.terms.values())

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Rat)):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.terms:
            return self
        if not self.terms:
            return o
        out = dict(self.terms)
        for k, c in o.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.terms:
            return self
        out = dict(self.terms)
        for k, c in o.terms.items():
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            else:
                del out[k]
        return LaurentPoly._raw(out)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.terms, o.terms
        if not a or not b:
            return LaurentPoly._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            if kb == 0:
                if cb == 1:
                    return LaurentPoly._raw(dict(a))
                return LaurentPoly._raw({k: c * cb for k, c in a.items()})
            return LaurentPoly._raw({k + kb: c * cb for k, c in a.items()})
        out = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            if self.is_monomial():
                (k, c), = self.terms.items()
                inv = tuple(-x for x in decode(k))
                if any(x < 0 for x in inv[1:]):
                    raise InexactDivision("only powers of q are invertible in A")
                return LaurentPoly.monomial(inv, _norm_coeff(Rat(1, 1) / c)) ** (-e)
            raise InexactDivision("negative power of a non-unit")
        result = LaurentPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Rat)):
            return LaurentPoly._raw({k: _norm_coeff(Rat(c) / other) for k, c in self.terms.items()})
        if isinstance(other, LaurentPoly):
            return frac(self, other)
        if isinstance(other, Fraction):
            return frac(self * other.den, other.num)
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return frac(o, self)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Rat)):
            if not other:
                return not self.terms
            return self.terms == {0: other}
        if isinstance(other, Fraction):
            return other == self
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # structure
    def sorted_items(self, nv=None):
        """(exponent tuple, coeff) pairs in canonical descending-lex order."""
        items = self.items_tuples()
        nv = max(max((len(k) for k, _ in items), default=0), nv or 0, 1)
        return sorted(items, key=lambda kv: _pad(kv[0], nv), reverse=True)

    def leading(self, nv):
        """(code, coeff) of the lex-largest term."""
        return max(self.terms.items(), key=lambda kv: _pad(decode(kv[0]), nv))

    def min_q(self):
        return min(_qexp(k) for k in self.terms)

    def max_q(self):
        return max(_qexp(k) for k in self.terms)

    def min_exponents(self, nv):
        keys = [_pad(decode(k), nv) for k in self.terms]
        return tuple(min(k[i] for k in keys) for i in range(nv))

    def content(self):
        """Positive rational g with self/g primitive with integer coefficients."""
        cs = list(self.terms.values())
        den = reduce(_lcm, (Rat(c).denominator for c in cs), 1)
        num = reduce(math.gcd, (int(Rat(c) * den) for c in cs), 0)
        return Rat(num, den)

    def scale(self, c):
        return LaurentPoly._raw({k: _norm_coeff(v * c) for k, v in self.terms.items()})

    def shift(self, key):
        code = encode(tuple(key))
        return LaurentPoly._raw({k + code: v for k, v in self.terms.items()})

    def divexact(self, d):
        """Return self/d if d divides self in A (over Q), else None."""
        if not d.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return self
        if len(d.terms) == 1:
            (kd, cd), = d.terms.items()
            out = {}
            for k, c in self.terms.items():
                nk = k - kd
                if any(x < 0 for x in decode(nk)[1:]):
                    return None
                out[nk] = _norm_coeff(Rat(c) / cd)
            return LaurentPoly._raw(out)
        if d.terms == self.terms:
            return LaurentPoly.const(1)
        nv = max(self.nvars(), d.nvars(), 1)
        kd, cd = d.leading(nv)
        qmin = self.min_q() - d.min_q()
        dterms = list(d.terms.items())
        rem = dict(self.terms)
        quo = {}
        keyf = lambda kv: _pad(decode(kv[0]), nv)
        while rem:
            kr, cr = max(rem.items(), key=keyf)
            e = kr - kd
            et = decode(e)
            if (et[0] if et else 0) < qmin or any(x < 0 for x in et[1:]):
                return None
            c = _norm_coeff(Rat(cr) / cd)
            quo[e] = c
            for k, v in dterms:
                nk = k + e
                val = rem.get(nk, 0) - v * c
                if val:
                    rem[nk] = val
                else:
                    rem.pop(nk, None)
        return LaurentPoly._raw(quo)

    # evaluation
    def evaluate(self, q, qinv, Qs, one):
        """Ring-homomorphic image; ``Qs`` indexed from 0 for Q1."""
        total = one * 0
        qpow = {}
        Qpow = {}
        for code, c in self.terms.items():
            k = decode(code)
            t = one * c
            if k:
                e = k[0]
                if e:
                    p = qpow.get(e)
                    if p is None:
                        p = _power(q if e > 0 else qinv, abs(e), one)
                        qpow[e] = p
                    t = t * p
                for j, e in enumerate(k[1:]):
                    if e:
                        if j >= len(Qs):
                            raise ValueError("polynomial uses Q%d but only %d values given" % (j + 1, len(Qs)))
                        p = Qpow.get((j, e))
                        if p is None:
                            p = _power(Qs[j], e, one)
                            Qpow[(j, e)] = p
                        t = t * p
            total = total + t
        return total

    def eval_mod(self, point, p):
        """Evaluate mod prime p at point = (q, Q1, ...) of residues."""
        total = 0
        for code, c in self.terms.items():
            if isinstance(c, int):
                t = c
            else:
                c = Rat(c)
                t = c.numerator * pow(c.denominator, -1, p)
            for j, e in enumerate(decode(code)):
                if e:
                    t = t * pow(point[j], e, p)
            total += t
        return total % p

    def __repr__(self):
        return "LaurentPoly(%s)" % to_str(self)

    def __str__(self):
        return to_str(self)


def _qexp(code):
    d = code & _MASK
    return d - _B if d >= _HALF else d


def _lcm(a, b):
    return a * b // math.gcd(a, b)


def _power(x, e, one):
    r = one
    while e:
        if e & 1:
            r = r * x
        x = x * x
        e >>= 1
    return r


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly.const(1)


def poly(x):
    """Coerce int/Rat/LaurentPoly to LaurentPoly."""
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly.const(x)


def qvar(e=1):
    return LaurentPoly.monomial((e,))


def Qvar(k, e=1):
    key = [0] * (k + 1)
    key[k] = e
    return LaurentPoly.monomial(tuple(key))


class Fraction:
    """Quotient num/den of LaurentPolys, kept unreduced (no polynomial GCD)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    __hash__ = None

    def is_zero(self):
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def __add__(self, other):
        if isinstance(other, (int, Rat)):
            other = LaurentPoly.const(other)
        if isinstance(other, LaurentPoly):
            return frac(self.num + other * self.den, self.den)
        if isinstance(other, Fraction):
            if self.den == other.den:
                return frac(self.num + other.num, self.den)
            e = self.den.divexact(other.den)
            if e is not None:
                return frac(self.num + other.num * e, self.den)
            e = other.den.divexact(self.den)
            if e is not None:
                return frac(self.num * e + other.num, other.den)
            return frac(self.num * other.den + other.num * self.den, self.den * other.den)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Fraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rat)):
            other = LaurentPoly.const(other)
        if isinstance(other, LaurentPoly):
            if not other.terms:
                return ZERO
            e = other.divexact(self.den)
            if e is not None:
                return self.num * e
            return frac(self.num * other, self.den)
        if isinstance(other, Fraction):
            a, b, c, d = self.num, self.den, other.num, other.den
            e = a.divexact(d)
            if e is not None:
                a, d = e, ONE
            e = c.divexact(b)
            if e is not None:
                c, b = e, ONE
            return frac(a * c, b * d)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rat)):
            other = LaurentPoly.const(other)
        if isinstance(other, LaurentPoly):
            return frac(self.num, self.den * other)
        if isinstance(other, Fraction):
            return self * Fraction(other.den, other.num)
        return NotImplemented

    def __rtruediv__(self, other):
        return poly(other) * Fraction(self.den, self.num)

    def __pow__(self, e):
        if e < 0:
            return Fraction(self.den, self.num) ** (-e)
        return frac(self.num ** e, self.den ** e)

    def __eq__(self, other):
        if isinstance(other, (int, Rat)):
            other = LaurentPoly.const(other)
        if isinstance(other, LaurentPoly):
            return self.num == other * self.den
        if isinstance(other, Fraction):
            return self.num * other.den == other.num * self.den
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __repr__(self):
        return "Fraction(%s)" % to_str(self)

    def __str__(self):
        return to_str(self)


def frac(num, den):
    """num/den as a LaurentPoly when exact, else a normalized Fraction."""
    num, den = poly(num), poly(den)
    if not den.terms:
        raise ZeroDivisionError("zero denominator")
    if not num.terms:
        return ZERO
    qt = num.divexact(den)
    if qt is not None:
        return qt
    nv = max(num.nvars(), den.nvars(), 1)
    mn = num.min_exponents(nv)
    md = den.min_exponents(nv)
    common = [md[0]] + [min(a, b) for a, b in zip(mn[1:], md[1:])]
    if any(common):
        neg = tuple(-x for x in common)
        num, den = num.shift(neg), den.shift(neg)
    sign = -1 if den.leading(nv)[1] < 0 else 1
    # joint integer normalisation: both integral and jointly primitive
    dn = reduce(_lcm, (Rat(c).denominator for c in list(num.terms.values()) + list(den.terms.values())), 1)
    ints = [int(Rat(c) * dn) for c in list(num.terms.values()) + list(den.terms.values())]
    gg = reduce(math.gcd, ints, 0)
    scale = Rat(dn, gg) * sign
    if scale != 1:
        num, den = num.scale(scale), den.scale(scale)
    return Fraction(num, den)


def as_fraction(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(poly(x), ONE)


def numden(x):
    if isinstance(x, Fraction):
        return x.num, x.den
    return poly(x), ONE


def is_zero(x):
    if isinstance(x, (int, Rat)):
        return x == 0
    return x.is_zero()


def in_A(x):
    """Return the LaurentPoly value of x if x lies in A (integer coefficients,
    denominators restricted to units), else None."""
    if isinstance(x, (int, Rat)):
        x = LaurentPoly.const(x)
    if isinstance(x, Fraction):
        x = x.num.divexact(x.den)
        if x is None:
            return None
    if isinstance(x, LaurentPoly) and x.has_integer_coeffs():
        return LaurentPoly._raw({k: int(c) for k, c in x.terms.items()})
    return None


# quantum integers


def quantum_int(k):
    if k == 0:
        return ZERO
    a = abs(k)
    p = LaurentPoly({(a - 1 - 2 * j,): 1 for j in range(a)})
    return p if k > 0 else -p


_QFACT = {0: ONE}


def quantum_factorial(t):
    if t < 0:
        raise ValueError("quantum_factorial needs t >= 0")
    if t not in _QFACT:
        _QFACT[t] = quantum_factorial(t - 1) * quantum_int(t)
    return _QFACT[t]


def quantum_binom(k, t):
    if t < 0:
        raise ValueError("quantum_binom needs t >= 0")
    num = ONE
    for j in range(t):
        num = num * quantum_int(k - j)
    out = num.divexact(quantum_factorial(t))
    if out is None:
        raise InexactDivision("quantum binomial division not exact")
    return out


# canonical string form


def _fmt_rat(c):
    c = Rat(c)
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def _mono_str(key, names):
    parts = []
    for j, e in enumerate(key):
        if e:
            parts.append(names(j) if e == 1 else "%s^%d" % (names(j), e))
    return "*".join(parts)


def _default_names(j):
    return "q" if j == 0 else "Q%d" % j


def poly_str(p, names=_default_names):
    if not p.terms:
        return "0"
    out = []
    for i, (k, c) in enumerate(p.sorted_items()):
        neg = c < 0
        a = -c if neg else c
        mono = _mono_str(k, names)
        if mono:
            body = mono if a == 1 else "%s*%s" % (_fmt_rat(a), mono)
        else:
            body = _fmt_rat(a)
        if i == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def to_str(x):
    if isinstance(x, Fraction):
        if x.den.is_one():
            return poly_str(x.num)
        return "(%s)/(%s)" % (poly_str(x.num), poly_str(x.den))
    if isinstance(x, LaurentPoly):
        return poly_str(x)
    if isinstance(x, FieldElem):
        return str(x)
    return _fmt_rat(x)


# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(\^|\*|/|\+|-|\(|\)))")


def _tokenize(s):
    toks = []
    pos = 0
    s = s.replace("−", "-")
    while pos < len(s):
        if s[pos:].strip() == "":
            break
        m = _TOKEN.match(s, pos)
        if not m:
            raise ParseError("cannot parse %r at offset %d" % (s, pos))
        num, name, op = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif name is not None:
            toks.append(("name", name))
        else:
            toks.append(("op", op))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, s, var_index):
        self.toks = _tokenize(s)
        self.i = 0
        self.var_index = var_index
        self.src = s

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            raise ParseError("trailing input in %r" % self.src)
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            v = v + t if op == "+" else v - t
        return v

    def term(self):
        v = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            t = self.unary()
            if op == "*":
                v = v * t
            else:
                if t.is_constant():
                    c = t.constant_value()
                    if not c:
                        raise ParseError("division by zero in %r" % self.src)
                    v = v / Rat(c)
                elif t.is_monomial():
                    v = v * t ** -1
                else:
                    raise ParseError("only division by constants or monomials is supported")
        return v

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "num":
                raise ParseError("exponent must be an integer in %r" % self.src)
            return base ** (sign * val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return LaurentPoly.const(val)
        if kind == "name":
            idx = self.var_index(val)
            if idx is None:
                raise ParseError("unknown variable %r" % val)
            key = [0] * (idx + 1)
            key[idx] = 1
            return LaurentPoly.monomial(tuple(key))
        if (kind, val) == ("op", "("):
            v = self.expr()
            if self.take() != ("op", ")"):
                raise ParseError("unbalanced parentheses in %r" % self.src)
            return v
        raise ParseError("unexpected token %r in %r" % (val, self.src))


def _param_index(name):
    if name == "q":
        return 0
    m = re.fullmatch(r"Q(\d+)", name)
    if m and int(m.group(1)) >= 1:
        return int(m.group(1))
    return None


def parse_poly(s):
    """Parse the canonical grammar, e.g. ``"q^2*Q1 - Q2"`` or ``"q + q^-1"``."""
    return _Parser(s, _param_index).parse()


def parse_x(s):
    """Parse a univariate polynomial in x; returns coefficient list low->high."""
    p = _Parser(str(s), lambda n: 0 if n == "x" else None).parse()
    if p.terms and p.min_q() < 0:
        raise ParseError("negative powers of x are not allowed: %r" % s)
    deg = p.max_q() if p.terms else 0
    out = [Rat(0)] * (deg + 1)
    for k, c in p.items_tuples():
        out[k[0] if k else 0] = Rat(c)
    return out


# univariate helpers over Q (coefficient lists low->high)


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _umul(a, b):
    if not a or not b:
        return []
    out = [Rat(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _udivmod(a, b):
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError
    q = [Rat(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and r:
        c = r[-1] / b[-1]
        d = len(r) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            r[i + d] -= c * y
        r = _trim(r)
    return _trim(q), r


def _usub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


class FieldElem:
    """Element of Q[x]/(m(x)); in rational mode m(x) = x and elements are constants."""

    __slots__ = ("c", "mod")

    def __init__(self, coeffs, mod):
        coeffs = _trim(Rat(x) for x in coeffs)
        if len(coeffs) >= len(mod):
            coeffs = _udivmod(coeffs, list(mod))[1]
        self.c = tuple(coeffs)
        self.mod = mod

    def _lift(self, o):
        if isinstance(o, FieldElem):
            return o
        if isinstance(o, (int, Rat)):
            return FieldElem([o], self.mod)
        return None

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __add__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        n = max(len(self.c), len(o.c))
        return FieldElem([(self.c[i] if i < len(self.c) else 0) + (o.c[i] if i < len(o.c) else 0)
                          for i in range(n)], self.mod)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem([-x for x in self.c], self.mod)

    def __sub__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        if len(self.mod) == 2:
            if not self.c or not o.c:
                return FieldElem([], self.mod)
            return FieldElem([self.c[0] * o.c[0]], self.mod)
        return FieldElem(_umul(self.c, o.c), self.mod)

    __rmul__ = __mul__

    def inverse(self):
        if not self.c:
            raise ZeroDivisionError("inverse of zero field element")
        # extended Euclid on (a, m)
        r0, r1 = list(self.mod), list(self.c)
        s0, s1 = [], [Rat(1)]
        while r1:
            qt, rem = _udivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _usub(s0, _umul(qt, s1))
        if len(r0) != 1:
            raise ZeroDivisor("element %s is a zero divisor modulo the minimal polynomial" % self)
        return FieldElem([x / r0[0] for x in s0], self.mod)

    def __truediv__(self, o):
        o = self._lift(o)
        return self * o.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return _power(self, e, FieldElem([1], self.mod))

    def __eq__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __str__(self):
        if not self.c:
            return "0"
        p = LaurentPoly({(i,): c for i, c in enumerate(self.c)})
        return poly_str(p, names=lambda j: "x")

    __repr__ = __str__


class FieldConfig:
    """Specialization target: q and Q_k values in Q or Q[x]/(m(x))."""

    def __init__(self, mode, q, Q, minpoly=None):
        if mode not in ("rational", "number_field"):
            raise ParseError("field mode must be 'rational' or 'number_field'")
        self.mode = mode
        if mode == "rational":
            mod = (Rat(0), Rat(1))
            self.minpoly_str = None
        else:
            if minpoly is None:
                raise ParseError("number_field mode requires minpoly")
            m = _trim(parse_x(minpoly))
            if len(m) < 2:
                raise ParseError("minpoly must have degree >= 1")
            mod = tuple(x / m[-1] for x in m)
            self.minpoly_str = str(minpoly)
        self.mod = mod
        self.one = FieldElem([1], mod)
        self.q = self.elem(q)
        self.Q = [self.elem(v) for v in Q]
        self.q_src = str(q)
        self.Q_src = [str(v) for v in Q]
        if self.q.is_zero():
            raise NonInvertibleQ("q specializes to 0")
        try:
            self.qinv = self.q.inverse()
        except (ZeroDivisor, ZeroDivisionError) as exc:
            raise NonInvertibleQ("q is not invertible: %s" % exc)

    def elem(self, v):
        if isinstance(v, FieldElem):
            return v
        if isinstance(v, (int, Rat)):
            return FieldElem([v], self.mod)
        coeffs = parse_x(v)
        if self.mode == "rational" and len(_trim(coeffs)) > 1:
            raise ParseError("rational mode values must be constants, got %r" % v)
        return FieldElem(coeffs, self.mod)

    @classmethod
    def from_json(cls, doc):
        if not isinstance(doc, dict):
            raise ParseError("field config must be a JSON object")
        mode = doc.get("mode", "rational")
        if "q" not in doc or "Q" not in doc:
            raise ParseError("field config needs 'q' and 'Q'")
        return cls(mode, doc["q"], list(doc["Q"]), doc.get("minpoly"))

    def to_json(self):
        d = {"mode": self.mode, "q": self.q_src, "Q": self.Q_src}
        if self.mode == "number_field":
            d["minpoly"] = self.minpoly_str
        return d

    def zero(self):
        return FieldElem([], self.mod)

    def __repr__(self):
        return "FieldConfig(%r)" % (self.to_json(),)


def specialize(x, cfg):
    """Image of an element of A or its fraction field under q -> cfg.q, Q_k -> cfg.Q[k]."""
    if isinstance(x, FieldElem):
        return x
    if isinstance(x, (int, Rat)):
        return cfg.one * x
    if isinstance(x, Fraction):
        d = specialize(x.den, cfg)
        if d.is_zero():
            raise DenominatorVanishes("denominator %s vanishes under %r" % (poly_str(x.den), cfg.to_json()))
        return specialize(x.num, cfg) / d
    return x.evaluate(cfg.q, cfg.qinv, cfg.Q, cfg.one)


# linear algebra


def field_rank(M, is_zero_fn=lambda x: x.is_zero()):
    """Rank of a matrix over a field by Gaussian elimination."""
    rows = [list(r) for r in M]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if not is_zero_fn(rows[i][col]):
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        inv = 1 / pr[col] if not isinstance(pr[col], FieldElem) else pr[col].inverse()
        for i in range(rank + 1, len(rows)):
            f = rows[i][col]
            if is_zero_fn(f):
                continue
            f = f * inv
            row = rows[i]
            for j in range(col, ncols):
                row[j] = row[j] - f * pr[j]
        rank += 1
        if rank == len(rows):
            break
    return rank


def corank(M):
    """#columns - rank for a matrix of FieldElem."""
    if not M:
        return 0
    return len(M[0]) - field_rank(M)


def clear_row_denominators(M):
    """Rows rescaled to LaurentPoly entries (row scaling keeps rank)."""
    out = []
    for row in M:
        dens = []
        for x in row:
            if isinstance(x, Fraction) and not x.den.is_one():
                if not any(x.den == d for d in dens):
                    dens.append(x.den)
        m = reduce(lambda a, b: a * b, dens, ONE)
        new = []
        for x in row:
            if isinstance(x, Fraction):
                y = (x.num * m).divexact(x.den)
                if y is None:
                    raise InexactDivision("row denominator clearing failed")
                new.append(y)
            else:
                new.append(poly(x) * m)
        out.append(new)
    return out


def bareiss_echelon(M):
    """Fraction-free elimination over A.  Returns (rank, pivot columns, last pivot)."""
    rows = [list(r) for r in clear_row_denominators(M)]
    if not rows:
        return 0, [], ONE
    ncols = len(rows[0])
    prev = ONE
    rank = 0
    pivots = []
    for col in range(ncols):
        piv = None
        best = None
        for i in range(rank, len(rows)):
            x = rows[i][col]
            if x.terms:
                size = len(x.terms)
                if best is None or size < best:
                    piv, best = i, size
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        p = pr[col]
        for i in range(rank + 1, len(rows)):
            row = rows[i]
            f = row[col]
            for j in range(col + 1, ncols):
                v = p * row[j] - f * pr[j]
                if not prev.is_one() and v.terms:
                    w = v.divexact(prev)
                    if w is None:
                        raise InexactDivision("Bareiss step not exact")
                    v = w
                row[j] = v
            row[col] = ZERO
        prev = p
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rank, pivots, prev


def rank_generic(M):
    """Rank over the fraction field of A."""
    if not M or not M[0]:
        return 0
    return bareiss_echelon(M)[0]


def det_bareiss(M):
    """Determinant of a square matrix over A (entries LaurentPoly)."""
    n = len(M)
    if n == 0:
        return ONE
    rows = [[poly(x) for x in r] for r in M]
    prev = ONE
    sign = 1
    for k in range(n):
        piv = None
        for i in range(k, n):
            if rows[i][k].terms:
                piv = i
                break
        if piv is None:
            return ZERO
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        p = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = p * rows[i][j] - rows[i][k] * rows[k][j]
                if not prev.is_one() and v.terms:
                    w = v.divexact(prev)
                    if w is None:
                        raise InexactDivision("Bareiss determinant step not exact")
                    v = w
                rows[i][j] = v
        prev = p
    return rows[n - 1][n - 1] if sign > 0 else -rows[n - 1][n - 1]


def solve_cramer(A, b):
    """Solve the square system A x = b over the fraction field by Cramer's rule
    with Bareiss determinants.  Entries of A and b may be Fractions."""
    n = len(A)
    aug = clear_row_denominators([list(A[i]) + [b[i]] for i in range(n)])
    Ap = [r[:n] for r in aug]
    bp = [r[n] for r in aug]
    d = det_bareiss(Ap)
    if not d.terms:
        raise ZeroDivisionError("singular system")
    xs = []
    for j in range(n):
        Aj = [row[:j] + [bp[i]] + row[j + 1:] for i, row in enumerate(Ap)]
        xs.append(frac(det_bareiss(Aj), d))
    return xs


# modular evaluation for fast generic-rank probes

PRIME = (1 << 61) - 1


def random_point(nvars, rng=None, p=PRIME):
    rng = rng or random.Random(0x5EED)
    return tuple(rng.randrange(2, p - 1) for _ in range(max(nvars, 1)))


def eval_mod(x, point, p=PRIME):
    if isinstance(x, (int, Rat)):
        x = Rat(x)
        return x.numerator * pow(x.denominator, -1, p) % p
    if isinstance(x, Fraction):
        d = x.den.eval_mod(point, p)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at probe point")
        return x.num.eval_mod(point, p) * pow(d, -1, p) % p
    return x.eval_mod(point, p)


def rank_mod(M, p=PRIME):
    """Rank of an integer matrix modulo p; also returns pivot columns."""
    rows = [list(r) for r in M]
    if not rows:
        return 0, []
    ncols = len(rows[0])
    rank = 0
    pivots = []
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        inv = pow(pr[col], -1, p)
        for i in range(rank + 1, len(rows)):
            f = rows[i][col] % p
            if f:
                f = f * inv % p
                row = rows[i]
                for j in range(col, ncols):
                    row[j] = (row[j] - f * pr[j]) % p
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rank, pivots
