"""Exact Laurent polynomials in the deformation parameter mu.

Coefficients are rational and exponents are integers (negative powers
allowed), so every identity in the symbolic layer is decided with zero
tolerance.  Values are immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    """Finite rational linear combination of integer powers of mu.

    Stored as a map from exponent to coefficient; zero coefficients are
    never stored, so equality and hashing are structural.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for exp, val in coeffs.items():
                val = Fraction(val)
                if val:
                    clean[int(exp)] = val
        self._coeffs = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def mu(cls, power=1, coeff=1):
        return cls({power: coeff})

    @classmethod
    def rational(cls, value):
        return cls({0: value})

    @staticmethod
    def _coerce(value):
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return LaurentPoly({0: value})
        return NotImplemented

    def items(self):
        return sorted(self._coeffs.items())

    def coefficient(self, exp):
        return self._coeffs.get(exp, Fraction(0))

    @property
    def is_zero(self):
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._coeffs)
        for exp, val in other._coeffs.items():
            out[exp] = out.get(exp, Fraction(0)) + val
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, v1 in self._coeffs.items():
            for e2, v2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = LaurentPoly.one()
        for _ in range(n):
            result = result * self
        return result

    def substitute(self, value):
        """Exact evaluation at a rational mu value."""
        value = Fraction(value)
        total = Fraction(0)
        for exp, coeff in self._coeffs.items():
            if exp < 0 and value == 0:
                raise ZeroDivisionError("negative power of mu at mu = 0")
            total += coeff * value ** exp
        return total

    def evaluate(self, mu_value):
        """Floating-point evaluation at a real mu value."""
        total = 0.0
        for exp, coeff in self._coeffs.items():
            total += float(coeff) * mu_value ** exp
        return total

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for exp, coeff in self.items():
            if exp == 0:
                term = str(coeff)
            else:
                base = "mu" if exp == 1 else f"mu^{exp}"
                if coeff == 1:
                    term = base
                elif coeff == -1:
                    term = f"-{base}"
                else:
                    term = f"{coeff}*{base}"
            parts.append(term)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return f"LaurentPoly({dict(self.items())!r})"
