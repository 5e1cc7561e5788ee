"""Exact coefficient arithmetic: Laurent polynomials in q over the rationals,
their field of fractions, and an optional polynomial extension by the three
commuting symbols c1, c2, c3.

Everything here is exact (fractions.Fraction); equality is decidable and all
values are immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction

SYMBOLS = ("c1", "c2", "c3")

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LaurentPoly:
    """A Laurent polynomial in q with rational coefficients.

    Stored as a map from integer q-exponent to a nonzero Fraction; the zero
    polynomial has an empty map.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[int(exp)] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return LaurentPoly()

    @staticmethod
    def const(value) -> "LaurentPoly":
        return LaurentPoly({0: Fraction(value)})

    @staticmethod
    def q_power(exp: int) -> "LaurentPoly":
        return LaurentPoly({exp: _ONE})

    @staticmethod
    def nu() -> "LaurentPoly":
        """q - q^-1."""
        return LaurentPoly({1: _ONE, -1: -_ONE})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def leading_coeff(self) -> Fraction:
        return self.terms[self.max_exp()]

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return _ZERO
        if not self.is_const():
            raise ValueError("not a constant: %s" % self)
        return self.terms[0]

    def evaluate_at_one(self) -> Fraction:
        return sum(self.terms.values(), _ZERO)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            new = terms.get(exp, _ZERO) + coeff
            if new:
                terms[exp] = new
            else:
                terms.pop(exp, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result.terms = terms
        return result

    def __neg__(self):
        result = LaurentPoly.__new__(LaurentPoly)
        result.terms = {exp: -coeff for exp, coeff in self.terms.items()}
        return result

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = e1 + e2
                new = terms.get(exp, _ZERO) + c1 * c2
                if new:
                    terms[exp] = new
                else:
                    terms.pop(exp, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result.terms = terms
        return result

    def scale(self, value) -> "LaurentPoly":
        value = Fraction(value)
        result = LaurentPoly.__new__(LaurentPoly)
        result.terms = {e: c * value for e, c in self.terms.items()} if value else {}
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        result = LaurentPoly.__new__(LaurentPoly)
        result.terms = {e + k: c for e, c in self.terms.items()}
        return result

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- polynomial division and gcd ----------------------------------------

    def _as_dense(self):
        """Dense coefficient list after shifting the lowest exponent to 0."""
        lo = self.min_exp()
        hi = self.max_exp()
        dense = [_ZERO] * (hi - lo + 1)
        for exp, coeff in self.terms.items():
            dense[exp - lo] = coeff
        return dense

    @staticmethod
    def _from_dense(dense, lo=0):
        return LaurentPoly({i + lo: c for i, c in enumerate(dense) if c})

    @staticmethod
    def _dense_divmod(a, b):
        a = list(a)
        db, lead = len(b) - 1, b[-1]
        quot = [_ZERO] * max(len(a) - db, 1)
        while len(a) - 1 >= db and any(a):
            while a and not a[-1]:
                a.pop()
            if len(a) - 1 < db:
                break
            factor = a[-1] / lead
            shift = len(a) - 1 - db
            quot[shift] = factor
            for i, c in enumerate(b):
                a[shift + i] -= factor * c
            a.pop()
        while a and not a[-1]:
            a.pop()
        return quot, a

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other; raises ValueError on inexact division."""
        if other.is_zero():
            raise ZeroDivisionError("division of Laurent polynomial by zero")
        if self.is_zero():
            return LaurentPoly.zero()
        quot, rem = self._dense_divmod(self._as_dense(), other._as_dense())
        if any(rem):
            raise ValueError("inexact Laurent polynomial division")
        return LaurentPoly._from_dense(quot, self.min_exp() - other.min_exp())

    @staticmethod
    def gcd(a: "LaurentPoly", b: "LaurentPoly") -> "LaurentPoly":
        """Monic gcd in Q[q] of the shifted polynomials (q-power units dropped)."""
        if a.is_zero():
            return b.monic() if not b.is_zero() else LaurentPoly.zero()
        if b.is_zero():
            return a.monic()
        x, y = a._as_dense(), b._as_dense()
        while any(y):
            _, r = LaurentPoly._dense_divmod(x, y)
            x, y = y, r
        g = LaurentPoly._from_dense(x)
        return g.monic()

    def monic(self) -> "LaurentPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading_coeff()).shift(-self.min_exp())

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            coeff = self.terms[exp]
            sign = "-" if coeff < 0 else "+"
            mag = -coeff if coeff < 0 else coeff
            if exp == 0:
                body = str(mag)
            else:
                qpart = "q" if exp == 1 else "q^%d" % exp
                body = qpart if mag == 1 else "%s*%s" % (mag, qpart)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "LaurentPoly(%s)" % self.render()


_LP_ZERO = LaurentPoly.zero()
_LP_ONE = LaurentPoly.const(1)
_NO_SYMS = (0, 0, 0)


class Coefficient:
    """An element of Q(q)[c1, c2, c3]: a polynomial in the commuting symbols
    with Laurent-polynomial coefficients, over a common denominator in Q[q].

    The denominator is canonical: lowest q-exponent 0, integer primitive with
    positive leading coefficient, and no common polynomial factor with the
    numerator.  Equality of canonical forms agrees with cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=None, den=None):
        num = dict(num) if num else {}
        den = den if den is not None else _LP_ONE
        self.num, self.den = _canonicalize(num, den)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Coefficient":
        return _C_ZERO

    @staticmethod
    def one() -> "Coefficient":
        return _C_ONE

    @staticmethod
    def from_rational(value) -> "Coefficient":
        return Coefficient({_NO_SYMS: LaurentPoly.const(value)})

    @staticmethod
    def from_laurent(poly: LaurentPoly) -> "Coefficient":
        return Coefficient({_NO_SYMS: poly})

    @staticmethod
    def q_power(exp: int) -> "Coefficient":
        return Coefficient({_NO_SYMS: LaurentPoly.q_power(exp)})

    @staticmethod
    def nu() -> "Coefficient":
        return Coefficient({_NO_SYMS: LaurentPoly.nu()})

    @staticmethod
    def symbol(name: str) -> "Coefficient":
        mono = [0, 0, 0]
        mono[SYMBOLS.index(name)] = 1
        return Coefficient({tuple(mono): _LP_ONE})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def has_symbols(self) -> bool:
        return any(mono != _NO_SYMS for mono in self.num)

    def is_divisible_by_symbol(self, name: str) -> bool:
        """True iff every numerator monomial contains the symbol (0 counts)."""
        idx = SYMBOLS.index(name)
        return all(mono[idx] > 0 for mono in self.num)

    def evaluate_at_one(self) -> Fraction:
        """The exact rational value at q = 1; errors on poles and c-symbols."""
        if self.has_symbols():
            raise ValueError("cannot evaluate at q=1: c-symbols present")
        den_at_one = self.den.evaluate_at_one()
        if den_at_one == 0:
            raise ZeroDivisionError("pole at q = 1")
        if self.is_zero():
            return _ZERO
        return self.num[_NO_SYMS].evaluate_at_one() / den_at_one

    def substitute_symbols(self, values) -> "Coefficient":
        """Replace c1, c2, c3 by exact rational values."""
        values = tuple(Fraction(v) for v in values)
        total = _LP_ZERO
        for mono, poly in self.num.items():
            scalar = _ONE
            for sym_exp, value in zip(mono, values):
                scalar *= value ** sym_exp
            total = total + poly.scale(scalar)
        return Coefficient({_NO_SYMS: total}, self.den)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            num = dict(self.num)
            for mono, poly in other.num.items():
                num[mono] = num.get(mono, _LP_ZERO) + poly
            return Coefficient(num, self.den)
        num = {mono: poly * other.den for mono, poly in self.num.items()}
        for mono, poly in other.num.items():
            num[mono] = num.get(mono, _LP_ZERO) + poly * self.den
        return Coefficient(num, self.den * other.den)

    def __neg__(self):
        return Coefficient({mono: -poly for mono, poly in self.num.items()}, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return _C_ZERO
        num = {}
        for mono1, poly1 in self.num.items():
            for mono2, poly2 in other.num.items():
                mono = tuple(a + b for a, b in zip(mono1, mono2))
                prod = poly1 * poly2
                num[mono] = num.get(mono, _LP_ZERO) + prod
        return Coefficient(num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division of coefficients by zero")
        if other.has_symbols():
            raise ValueError("division by coefficients containing c-symbols unsupported")
        num = {mono: poly * other.den for mono, poly in self.num.items()}
        return Coefficient(num, self.den * other.num[_NO_SYMS])

    def __eq__(self, other):
        if not isinstance(other, Coefficient):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((frozenset((m, hash(p)) for m, p in self.num.items()), hash(self.den)))

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for mono in sorted(self.num, reverse=True):
            poly = self.num[mono]
            sym = "*".join(
                name if exp == 1 else "%s^%d" % (name, exp)
                for name, exp in zip(SYMBOLS, mono) if exp
            )
            if not sym:
                parts.append(poly.render())
            elif len(poly.terms) == 1:
                ((exp, coeff),) = poly.terms.items()
                body = sym
                if exp:
                    body += "*q" if exp == 1 else "*q^%d" % exp
                if coeff == 1:
                    parts.append(body)
                elif coeff == -1:
                    parts.append("-" + body)
                else:
                    parts.append("%s*%s" % (coeff, body))
            else:
                parts.append("(%s)*%s" % (poly.render(), sym))
        text = parts[0]
        for part in parts[1:]:
            text += " - " + part[1:] if part.startswith("-") else " + " + part
        if self.den == _LP_ONE:
            return text
        num_text = "(%s)" % text if (len(parts) > 1 or " " in text) else text
        den_text = self.den.render()
        if len(self.den.terms) > 1:
            den_text = "(%s)" % den_text
        return "%s/%s" % (num_text, den_text)

    def __repr__(self):
        return "Coefficient(%s)" % self.render()


def _canonicalize(num, den):
    """Reduce to the canonical numerator/denominator pair."""
    num = {mono: poly for mono, poly in num.items() if not poly.is_zero()}
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if not num:
        return {}, _LP_ONE
    common = den
    for poly in num.values():
        if common.is_const() and not common.is_zero():
            break
        common = LaurentPoly.gcd(common, poly)
    if not common.is_const():
        den = den.divide_exact(common)
        num = {mono: poly.divide_exact(common) for mono, poly in num.items()}
    # move the q-power unit of the denominator into the numerator
    lo = den.min_exp()
    if lo:
        den = den.shift(-lo)
        num = {mono: poly.shift(-lo) for mono, poly in num.items()}
    # integer-primitive denominator with positive leading coefficient
    scale = _content(den)
    if den.leading_coeff() < 0:
        scale = -scale
    if scale != 1:
        inv = 1 / scale
        den = den.scale(inv)
        num = {mono: poly.scale(inv) for mono, poly in num.items()}
    if den == _LP_ONE:
        return num, _LP_ONE
    return num, den


def _content(poly: LaurentPoly) -> Fraction:
    """Positive rational content: gcd of numerators over lcm of denominators."""
    num_gcd, den_lcm = 0, 1
    for coeff in poly.terms.values():
        num_gcd = _int_gcd(num_gcd, abs(coeff.numerator))
        den_lcm = den_lcm * coeff.denominator // _int_gcd(den_lcm, coeff.denominator)
    return Fraction(num_gcd, den_lcm)


def _int_gcd(a, b):
    while b:
        a, b = b, a % b
    return a


_C_ZERO = Coefficient()
_C_ONE = Coefficient({_NO_SYMS: _LP_ONE})

ZERO = _C_ZERO
ONE = _C_ONE


def arith(a: Coefficient, b: Coefficient, op: str) -> Coefficient:
    """Dispatch table used by callers that carry the operation as data."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown operation %r" % op)
