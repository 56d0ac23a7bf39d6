"""
Integer polynomials and exact arithmetic at roots of unity.

A primitive r-th root of unity is modelled as the class of q in
Z[q]/Phi_r(q), so comparisons such as P(w^k) = |Fix(c^k)| are exact
residue comparisons.
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Union

from sympy import QQ, ZZ, Poly, divisors

from seminormal.errors import InexactDivisionError
from seminormal.exact.rational import q


def _integral(poly: Poly, what: str) -> List[int]:
    coeffs = []
    for c in reversed(poly.all_coeffs()):
        if c.q != 1:
            raise InexactDivisionError(f"{what} has non-integral coefficient {c}")
        coeffs.append(int(c.p))
    return coeffs


class IntPoly:
    """
    Polynomial in q with integer coefficients, stored in ascending order.

    Args:
        coefficients: Coefficients of 1, q, q^2, ...; trailing zeros are
            trimmed so the zero polynomial has no coefficients.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Sequence[int] = ()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def from_poly(cls, poly: Poly) -> "IntPoly":
        return cls(_integral(poly, "polynomial"))

    @classmethod
    def monomial(cls, exp: int, coefficient: int = 1) -> "IntPoly":
        return cls([0] * exp + [coefficient])

    def to_poly(self) -> Poly:
        return Poly.from_list(list(reversed(self._coeffs)) or [0], q, domain=ZZ)

    @property
    def coefficients(self) -> List[int]:
        return list(self._coeffs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def constant_term(self) -> int:
        return self._coeffs[0] if self._coeffs else 0

    def evaluate(self, point: Union[int, Fraction]) -> Fraction:
        value = Fraction(0)
        for c in reversed(self._coeffs):
            value = value * point + c
        return value

    def compose_power(self, k: int) -> "IntPoly":
        """Return P(q^k) for k >= 0."""
        if k < 0:
            raise ValueError(f"compose_power requires k >= 0, got {k}")
        if k == 0:
            return IntPoly([sum(self._coeffs)])
        spread = [0] * (k * max(self.degree, 0) + 1)
        for exp, c in enumerate(self._coeffs):
            spread[exp * k] = c
        return IntPoly(spread)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly.from_poly(self.to_poly() + other.to_poly())

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly.from_poly(self.to_poly() - other.to_poly())

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self._coeffs])

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly.from_poly(self.to_poly() * other.to_poly())

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """
        Quotient in Z[q].

        Raises:
            ZeroDivisionError: If ``other`` is zero
            InexactDivisionError: If the remainder is nonzero or the
                quotient is not integral
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        quotient, remainder = self.to_poly().set_domain(QQ).div(
            other.to_poly().set_domain(QQ)
        )
        if not remainder.is_zero:
            raise InexactDivisionError(
                f"{self} is not divisible by {other} (remainder {remainder.as_expr()})"
            )
        return IntPoly(_integral(quotient, "quotient"))

    def rem(self, modulus: "IntPoly") -> "IntPoly":
        """Remainder modulo a monic polynomial."""
        if modulus.is_zero() or modulus._coeffs[-1] != 1:
            raise ValueError(f"modulus must be monic, got {modulus}")
        return IntPoly(_integral(self.to_poly().rem(modulus.to_poly()), "remainder"))

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == IntPoly([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPoly", self._coeffs))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for exp, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if exp == 0:
                terms.append(str(c))
            else:
                power = "q" if exp == 1 else f"q^{exp}"
                if c == 1:
                    terms.append(power)
                elif c == -1:
                    terms.append(f"-{power}")
                else:
                    terms.append(f"{c}*{power}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"IntPoly({list(self._coeffs)})"

    def to_dict(self) -> Dict[str, Any]:
        return {"coefficients": list(self._coeffs), "text": str(self)}


def cyclotomic(r: int) -> IntPoly:
    """
    The r-th cyclotomic polynomial, by exact division of q^r - 1.

    Example:
        >>> cyclotomic(6).coefficients
        [1, -1, 1]
    """
    if r < 1:
        raise ValueError(f"cyclotomic order must be positive, got {r}")
    factors: Dict[int, Poly] = {}
    for d in divisors(r):
        poly = Poly(q**d - 1, q, domain=ZZ)
        for e in divisors(d)[:-1]:
            poly = poly.exquo(factors[e])
        factors[d] = poly
    return IntPoly.from_poly(factors[r])


class CyclotomicElement:
    """
    Element of Z[q]/Phi_r(q); the residue is always fully reduced.

    Args:
        modulus_order: r
        residue: Any integer polynomial; it is reduced on construction
    """

    __slots__ = ("modulus_order", "residue")

    def __init__(self, modulus_order: int, residue: IntPoly):
        self.modulus_order = modulus_order
        self.residue = residue.rem(cyclotomic(modulus_order))

    def _check(self, other: "CyclotomicElement") -> None:
        if other.modulus_order != self.modulus_order:
            raise ValueError(
                f"cannot combine residues mod Phi_{self.modulus_order} "
                f"and Phi_{other.modulus_order}"
            )

    def __add__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        self._check(other)
        return CyclotomicElement(self.modulus_order, self.residue + other.residue)

    def __mul__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        self._check(other)
        return CyclotomicElement(self.modulus_order, self.residue * other.residue)

    def as_integer(self) -> Optional[int]:
        """The integer this element equals, or None if it is not rational."""
        if self.residue.degree <= 0:
            return self.residue.constant_term()
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, CyclotomicElement):
            return (
                self.modulus_order == other.modulus_order
                and self.residue == other.residue
            )
        if isinstance(other, int):
            return self.as_integer() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.modulus_order, self.residue))

    def __str__(self) -> str:
        return f"{self.residue} mod Phi_{self.modulus_order}"

    def __repr__(self) -> str:
        return f"CyclotomicElement({self.modulus_order}, {self.residue!r})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "modulus_order": self.modulus_order,
            "residue": self.residue.coefficients,
        }


def eval_at_root(P: IntPoly, r: int, k: int) -> CyclotomicElement:
    """
    P(w^k) for a primitive r-th root of unity w, as P(q^k) mod Phi_r.

    Example:
        >>> eval_at_root(IntPoly([1, 0, 1]), 4, 2) == 2
        True
    """
    if r < 1:
        raise ValueError(f"root order must be positive, got {r}")
    return CyclotomicElement(r, P.compose_power(k % r))
