"""
Exact arithmetic in Q(q): Laurent polynomials, canonical rational functions
and quantum integers.

Polynomial arithmetic (products, gcd, exact quotients) is delegated to
``sympy.Poly`` over ``QQ``. Scalars are ``fractions.Fraction``.

A nonzero rational function is stored as ``q^shift * N(q) / D(q)`` where
``N`` and ``D`` are ordinary polynomials with nonzero constant terms,
``gcd(N, D) = 1`` and ``D`` is monic. This form is unique, so structural
equality is mathematical equality.

Canonical text form:

    Laurent polynomial   c*q^e terms joined by '+', exponents ascending
                         ("1*q^-1+1*q^1"), zero is "0"
    rational function    "(num)/(den)"

Example:
    >>> two = quantum_int(2, QuantumConvention.BALANCED)
    >>> str(two)
    '(1*q^-1+1*q^1)/(1*q^0)'
    >>> RationalFunction.parse(str(two)) == two
    True
"""

import operator
import re
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Mapping, Optional, Tuple, Union

import sympy
from sympy import QQ, Poly

from seminormal.errors import PoleError

q = sympy.Symbol("q")

Rational = Fraction
Scalar = Union[int, Fraction]

_TERM_PATTERN = re.compile(r"^(-?\d+(?:/\d+)?)\*q\^(-?\d+)$")
_RATIONAL_FUNCTION_PATTERN = re.compile(r"^\((.*)\)/\((.*)\)$")


def _to_sympy(value: Scalar) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def fraction_text(value: Fraction) -> str:
    """Render a rational as ``p`` or ``p/q``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _poly(coefficients: Mapping[int, Scalar]) -> Poly:
    if not coefficients:
        return Poly(0, q, domain=QQ)
    return Poly.from_dict(
        {(exp,): _to_sympy(c) for exp, c in coefficients.items()}, q, domain=QQ
    )


def _monomial(exp: int) -> Poly:
    return Poly.from_dict({(exp,): 1}, q, domain=QQ)


def _low_degree(poly: Poly) -> int:
    return min(monom[0] for monom, coeff in poly.terms() if coeff != 0)


def _strip_q(poly: Poly) -> Tuple[int, Poly]:
    """Split a nonzero polynomial as q^k * P with P(0) != 0."""
    k = _low_degree(poly)
    if k == 0:
        return 0, poly
    return k, poly.exquo(_monomial(k))


def _root_multiplicity(poly: Poly, point: Fraction) -> int:
    linear = Poly.from_list([1, -_to_sympy(point)], q, domain=QQ)
    count = 0
    quotient, remainder = poly.div(linear)
    while remainder.is_zero:
        count += 1
        poly = quotient
        quotient, remainder = poly.div(linear)
    return count


class LaurentPoly:
    """
    A Laurent polynomial in q with rational coefficients.

    Args:
        coefficients: Map from exponent to coefficient; zero coefficients
            are dropped.
    """

    __slots__ = ("_terms",)

    def __init__(self, coefficients: Optional[Mapping[int, Scalar]] = None):
        terms: Dict[int, Fraction] = {}
        for exp, coeff in (coefficients or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                terms[int(exp)] = coeff
        self._terms: Tuple[Tuple[int, Fraction], ...] = tuple(sorted(terms.items()))

    @classmethod
    def from_poly(cls, poly: Poly, shift: int = 0) -> "LaurentPoly":
        return cls(
            {
                monom[0] + shift: _to_fraction(coeff)
                for monom, coeff in poly.terms()
                if coeff != 0
            }
        )

    def split(self) -> Tuple[int, Poly]:
        """Return ``(k, P)`` with self = q^k * P and P(0) != 0."""
        if not self._terms:
            return 0, Poly(0, q, domain=QQ)
        low = self._terms[0][0]
        return low, _poly({exp - low: coeff for exp, coeff in self._terms})

    @property
    def coefficients(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("the zero Laurent polynomial has no valuation")
        return self._terms[0][0]

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero Laurent polynomial has no degree")
        return self._terms[-1][0]

    def evaluate(self, point: Scalar) -> Fraction:
        point = Fraction(point)
        if point == 0 and self._terms and self._terms[0][0] < 0:
            raise PoleError(self._terms[0][0], point)
        return sum(
            (coeff * point**exp for exp, coeff in self._terms), Fraction(0)
        )

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        merged = dict(self._terms)
        for exp, coeff in other._terms:
            merged[exp] = merged.get(exp, Fraction(0)) + coeff
        return LaurentPoly(merged)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({exp: -coeff for exp, coeff in self._terms})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        s1, p1 = self.split()
        s2, p2 = other.split()
        return LaurentPoly.from_poly(p1 * p2, s1 + s2)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("LaurentPoly", self._terms))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return "+".join(f"{fraction_text(c)}*q^{e}" for e, c in self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """
        Parse the canonical text form.

        Raises:
            ValueError: If a term does not have the form ``c*q^e``
        """
        text = text.strip()
        if text == "0":
            return cls()
        coefficients: Dict[int, Fraction] = {}
        for term in text.split("+"):
            match = _TERM_PATTERN.match(term.strip())
            if not match:
                raise ValueError(f"Malformed Laurent term: {term!r}")
            exp = int(match.group(2))
            coefficients[exp] = coefficients.get(exp, Fraction(0)) + Fraction(
                match.group(1)
            )
        return cls(coefficients)


_ZERO_POLY = Poly(0, q, domain=QQ)
_ONE_POLY = Poly(1, q, domain=QQ)


def _as_laurent(value: Union["LaurentPoly", Scalar]) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly({0: value})
    raise TypeError(f"Cannot interpret {type(value).__name__} as a Laurent polynomial")


class RationalFunction:
    """
    An element of Q(q) in canonical form.

    Args:
        numerator: Laurent polynomial or scalar
        denominator: Laurent polynomial or scalar (default 1)

    Raises:
        ZeroDivisionError: If the denominator is zero

    Example:
        >>> x = RationalFunction(LaurentPoly({1: 1}), LaurentPoly({0: 1, 2: 1}))
        >>> x.valuation
        1
        >>> x.evaluate(1)
        Fraction(1, 2)
    """

    __slots__ = ("_shift", "_num", "_den")

    def __init__(
        self,
        numerator: Union[LaurentPoly, Scalar] = 0,
        denominator: Union[LaurentPoly, Scalar] = 1,
    ):
        num = _as_laurent(numerator)
        den = _as_laurent(denominator)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self._set(0, _ZERO_POLY, _ONE_POLY)
            return
        s1, n = num.split()
        s2, d = den.split()
        self._set(*_canonical(s1 - s2, n, d))

    def _set(self, shift: int, num: Poly, den: Poly) -> None:
        self._shift = shift
        self._num = num
        self._den = den

    @classmethod
    def _from_parts(cls, shift: int, num: Poly, den: Poly) -> "RationalFunction":
        """Build from q^shift * num / den with den(0) != 0; num may be anything."""
        result = cls.__new__(cls)
        if num.is_zero:
            result._set(0, _ZERO_POLY, _ONE_POLY)
            return result
        k, num = _strip_q(num)
        result._set(*_canonical(shift + k, num, den))
        return result

    # -- structure ---------------------------------------------------------

    @property
    def numerator(self) -> LaurentPoly:
        return LaurentPoly.from_poly(self._num, self._shift)

    @property
    def denominator(self) -> LaurentPoly:
        return LaurentPoly.from_poly(self._den)

    def is_zero(self) -> bool:
        return self._num.is_zero

    def is_constant(self) -> bool:
        return self.is_zero() or (
            self._shift == 0 and self._num.degree() == 0 and self._den.degree() == 0
        )

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        if self.is_zero():
            return Fraction(0)
        return _to_fraction(self._num.LC())

    @property
    def valuation(self) -> int:
        """Order at q = 0; negative for a pole."""
        if self.is_zero():
            raise ValueError("the zero rational function has valuation +infinity")
        return self._shift

    @property
    def size(self) -> int:
        """Total degree of numerator and denominator, used to rank pivots."""
        if self.is_zero():
            return 0
        return int(self._num.degree()) + int(self._den.degree())

    def evaluate(self, point: Scalar) -> Fraction:
        """
        Exact value at a rational point.

        Raises:
            PoleError: If the function has a pole at ``point``; the error
                carries the (negative) valuation there
        """
        point = Fraction(point)
        if self.is_zero():
            return Fraction(0)
        if point == 0:
            if self._shift < 0:
                raise PoleError(self._shift, point)
            if self._shift > 0:
                return Fraction(0)
            return _to_fraction(self._num.eval(0)) / _to_fraction(self._den.eval(0))
        den_value = _to_fraction(self._den.eval(_to_sympy(point)))
        if den_value == 0:
            raise PoleError(-_root_multiplicity(self._den, point), point)
        num_value = _to_fraction(self._num.eval(_to_sympy(point)))
        return point**self._shift * num_value / den_value

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self._shift, other._shift)
        a = self._num
        if self._shift > low:
            a = a * _monomial(self._shift - low)
        b = other._num
        if other._shift > low:
            b = b * _monomial(other._shift - low)
        if self._den == other._den:
            return RationalFunction._from_parts(low, a + b, self._den)
        return RationalFunction._from_parts(
            low, a * other._den + b * self._den, self._den * other._den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        result = RationalFunction.__new__(RationalFunction)
        result._set(self._shift, -self._num, self._den)
        return result

    def __sub__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        result = RationalFunction.__new__(RationalFunction)
        result._set(
            *_canonical(
                self._shift + other._shift,
                self._num * other._num,
                self._den * other._den,
            )
        )
        return result

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        result = RationalFunction.__new__(RationalFunction)
        result._set(*_canonical(-self._shift, self._den, self._num))
        return result

    def __truediv__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.is_zero():
            return ONE if exponent == 0 else ZERO
        result = RationalFunction.__new__(RationalFunction)
        # coprime factors stay coprime, monic stays monic
        result._set(self._shift * exponent, self._num**exponent, self._den**exponent)
        return result

    # -- comparison and text ----------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (
            self._shift == other._shift
            and self._num == other._num
            and self._den == other._den
        )

    def __hash__(self) -> int:
        return hash(
            (
                self._shift,
                tuple(self._num.all_coeffs()),
                tuple(self._den.all_coeffs()),
            )
        )

    def __str__(self) -> str:
        return f"({self.numerator})/({self.denominator})"

    def __repr__(self) -> str:
        return f"RationalFunction('{self}')"

    @classmethod
    def parse(cls, text: str) -> "RationalFunction":
        """
        Parse ``(num)/(den)``; the result is canonicalized.

        Raises:
            ValueError: On malformed input
            ZeroDivisionError: If the denominator parses to zero
        """
        match = _RATIONAL_FUNCTION_PATTERN.match(text.strip())
        if not match:
            raise ValueError(f"Malformed rational function: {text!r}")
        return cls(LaurentPoly.parse(match.group(1)), LaurentPoly.parse(match.group(2)))


def _canonical(shift: int, num: Poly, den: Poly) -> Tuple[int, Poly, Poly]:
    if num.is_zero:
        return 0, _ZERO_POLY, _ONE_POLY
    common = num.gcd(den)
    if common.degree() > 0:
        num = num.exquo(common)
        den = den.exquo(common)
    lead = den.LC()
    if lead != 1:
        num = num.quo_ground(lead)
        den = den.quo_ground(lead)
    return shift, num, den


def _coerce(value) -> Optional[RationalFunction]:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (int, Fraction, LaurentPoly)):
        return RationalFunction(value)
    return None


ZERO = RationalFunction(0)
ONE = RationalFunction(1)


def monomial(exp: int, coefficient: Scalar = 1) -> RationalFunction:
    """Return ``coefficient * q^exp``."""
    return RationalFunction(LaurentPoly({exp: coefficient}))


class QuantumConvention(str, Enum):
    """The two quantum-integer conventions; there is no default."""

    BALANCED = "balanced"
    STANDARD = "standard"


def quantum_int(n: int, convention: QuantumConvention) -> RationalFunction:
    """
    Quantum integer [n].

    Args:
        n: Nonnegative integer
        convention: BALANCED gives q^{-(n-1)} + q^{-(n-3)} + ... + q^{n-1};
            STANDARD gives 1 + q + ... + q^{n-1}

    Raises:
        ValueError: For negative n or an unknown convention

    Example:
        >>> str(quantum_int(3, QuantumConvention.BALANCED))
        '(1*q^-2+1*q^0+1*q^2)/(1*q^0)'
    """
    convention = QuantumConvention(convention)
    if n < 0:
        raise ValueError(f"quantum_int requires n >= 0, got {n}; use -[{-n}]")
    if convention is QuantumConvention.BALANCED:
        terms = {2 * k - (n - 1): 1 for k in range(n)}
    else:
        terms = {k: 1 for k in range(n)}
    return RationalFunction(LaurentPoly(terms))


def signed_quantum_int(n: int) -> RationalFunction:
    """Balanced [n] extended to negative n by [-n] = -[n]."""
    if n < 0:
        return -quantum_int(-n, QuantumConvention.BALANCED)
    return quantum_int(n, QuantumConvention.BALANCED)


def order_at_zero(x: RationalFunction) -> int:
    """
    Valuation of ``x`` at q = 0.

    Raises:
        ValueError: For x = 0 (valuation +infinity)
    """
    return x.valuation


def eval_at(x: RationalFunction, point: Scalar) -> Fraction:
    """Exact evaluation; raises PoleError where x is not regular."""
    return x.evaluate(point)


class FieldOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


_FIELD_OPS: Dict[FieldOp, Callable] = {
    FieldOp.ADD: operator.add,
    FieldOp.SUB: operator.sub,
    FieldOp.MUL: operator.mul,
    FieldOp.DIV: operator.truediv,
}


def field_arith(
    a: RationalFunction, b: RationalFunction, op: Union[FieldOp, str]
) -> RationalFunction:
    """
    Apply a field operation; ``div`` by zero raises ZeroDivisionError.

    Example:
        >>> b = quantum_int(2, QuantumConvention.BALANCED)
        >>> field_arith(b, b, "div") == ONE
        True
    """
    return _FIELD_OPS[FieldOp(op)](a, b)
