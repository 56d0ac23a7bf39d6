"""
Output renderers for reports and emitted objects.

Renderers take the JSON-ready dictionaries produced by ``to_dict`` methods.
Matrices are recognised by their ``rows``/``cols``/``entries`` keys and
polynomials by ``coefficients``.
"""

import json
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Type

import sympy
from sympy import Poly

from seminormal.exact.rational import RationalFunction, q

_MAX_QUANTUM = 16


class ReportRenderer(ABC):
    """
    Abstract base class for renderers.
    """

    # Registry to keep track of all renderer subclasses
    _registry: Dict[str, Type["ReportRenderer"]] = {}

    format_name = ""

    @abstractmethod
    def render(self, data: Dict[str, Any]) -> str:
        """Render a JSON-ready dictionary."""

    def to_dict(self) -> dict:
        return {"type": self.__class__.__name__}

    @classmethod
    def from_dict(cls, data: dict) -> "ReportRenderer":
        renderer_type = data.get("type")
        if not renderer_type:
            raise ValueError("Missing 'type' field in renderer data")
        renderer_class = cls._registry.get(renderer_type)
        if not renderer_class:
            raise ValueError(f"Unknown renderer type: {renderer_type}")
        return renderer_class()

    @classmethod
    def register(cls, renderer_class: Type["ReportRenderer"]) -> Type["ReportRenderer"]:
        """Register a renderer subclass."""
        cls._registry[renderer_class.__name__] = renderer_class
        return renderer_class

    @classmethod
    def for_format(cls, format_name: str) -> "ReportRenderer":
        for renderer_class in cls._registry.values():
            if renderer_class.format_name == format_name:
                return renderer_class()
        known = sorted(c.format_name for c in cls._registry.values())
        raise ValueError(f"Unknown output format: {format_name} (known: {known})")


def _is_matrix(data: Any) -> bool:
    return isinstance(data, dict) and {"rows", "cols", "entries"} <= set(data)


@ReportRenderer.register
class JSONRenderer(ReportRenderer):
    format_name = "json"

    def render(self, data: Dict[str, Any]) -> str:
        return json.dumps(data, indent=2)


# -- LaTeX ---------------------------------------------------------------------


def _balanced_factor(n: int) -> Poly:
    """q^{n-1} [n] = 1 + q^2 + ... + q^{2(n-1)}."""
    return Poly(sum(q ** (2 * k) for k in range(n)), q, domain="QQ")


def _peel(poly: Poly) -> Tuple[Dict[int, int], Poly]:
    """Divide out q^{n-1}[n] factors, largest n first."""
    factors: Dict[int, int] = {}
    for n in range(_MAX_QUANTUM, 1, -1):
        factor = _balanced_factor(n)
        while poly.degree() >= factor.degree():
            quotient, remainder = poly.div(factor)
            if not remainder.is_zero:
                break
            factors[n] = factors.get(n, 0) + 1
            poly = quotient
    return factors, poly


def quantum_factorization(
    x: RationalFunction,
) -> Optional[Tuple[Fraction, int, Dict[int, int]]]:
    """
    Write x as c q^e prod [n]^{k_n} with balanced quantum integers.

    Returns:
        ``(c, e, {n: k_n})`` with negative k_n in the denominator, or None
        when no such form was found
    """
    if x.is_zero():
        return None
    num_shift, num = x.numerator.split()
    den_shift, den = x.denominator.split()
    for extra in [1] + list(range(2, _MAX_QUANTUM + 1)):
        top, bottom = num, den
        if extra > 1:
            top = top * _balanced_factor(extra)
            bottom = bottom * _balanced_factor(extra)
        top_factors, top_rest = _peel(top)
        bottom_factors, bottom_rest = _peel(bottom)
        if top_rest.degree() == 0 and bottom_rest.degree() == 0:
            exponents = dict(top_factors)
            for n, k in bottom_factors.items():
                exponents[n] = exponents.get(n, 0) - k
            exponents = {n: k for n, k in exponents.items() if k}
            coefficient = Fraction(str(top_rest.LC())) / Fraction(str(bottom_rest.LC()))
            e = num_shift - den_shift + sum((n - 1) * k for n, k in exponents.items())
            return coefficient, e, exponents
    return None


def _latex_power(base: str, k: int) -> str:
    return base if k == 1 else f"{base}^{{{k}}}"


def _latex_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def _latex_poly(poly_text: str) -> str:
    expr = sympy.sympify(poly_text.replace("^", "**"), locals={"q": q})
    return sympy.latex(expr)


def latex_entry(x: RationalFunction) -> str:
    """
    LaTeX for one entry, in quantum integers when possible.

    Example:
        >>> latex_entry(RationalFunction.parse("(1*q^2)/(1*q^0+1*q^2+1*q^4)"))
        '\\\\frac{1}{[3]}'
    """
    if x.is_zero():
        return "0"
    if x.is_constant():
        return _latex_fraction(x.constant_value())
    found = quantum_factorization(x)
    if found is None:
        return f"\\frac{{{_latex_poly(str(x.numerator))}}}{{{_latex_poly(str(x.denominator))}}}"
    coefficient, e, exponents = found
    top: List[str] = []
    bottom: List[str] = []
    if abs(coefficient.numerator) != 1:
        top.append(str(abs(coefficient.numerator)))
    if coefficient.denominator != 1:
        bottom.append(str(coefficient.denominator))
    if e > 0:
        top.append(_latex_power("q", e))
    elif e < 0:
        bottom.append(_latex_power("q", -e))
    for n in sorted(exponents):
        k = exponents[n]
        (top if k > 0 else bottom).append(_latex_power(f"[{n}]", abs(k)))
    sign = "-" if coefficient < 0 else ""
    numerator = "".join(top) or "1"
    if not bottom:
        return sign + numerator
    return f"{sign}\\frac{{{numerator}}}{{{''.join(bottom)}}}"


def latex_matrix(data: Dict[str, Any]) -> str:
    entries = [[RationalFunction.parse(x) for x in row] for row in data["entries"]]
    body = " \\\\\n".join(" & ".join(latex_entry(x) for x in row) for row in entries)
    return (
        f"\\left(\\begin{{array}}{{{'r' * data['cols']}}}\n"
        f"{body}\n"
        f"\\end{{array}}\\right)"
    )


@ReportRenderer.register
class LaTeXRenderer(ReportRenderer):
    """Matrices as arrays, polynomials as sums; other values are skipped."""

    format_name = "latex"

    def render(self, data: Dict[str, Any]) -> str:
        blocks: List[str] = []
        self._collect(data, "", blocks)
        return "\n\n".join(blocks) + "\n"

    def _collect(self, data: Any, label: str, blocks: List[str]) -> None:
        if _is_matrix(data):
            blocks.append(f"% {label}\n{latex_matrix(data)}" if label else latex_matrix(data))
        elif isinstance(data, dict) and "coefficients" in data:
            expr = sum(c * q**k for k, c in enumerate(data["coefficients"]))
            blocks.append(f"% {label}\n{sympy.latex(sympy.expand(expr))}")
        elif isinstance(data, dict):
            for key, value in data.items():
                self._collect(value, f"{label}.{key}" if label else str(key), blocks)
        elif isinstance(data, list):
            for k, value in enumerate(data):
                self._collect(value, f"{label}[{k + 1}]", blocks)


@ReportRenderer.register
class TextRenderer(ReportRenderer):
    """One line per relation entry, then status totals."""

    format_name = "text"

    def render(self, data: Dict[str, Any]) -> str:
        lines: List[str] = []
        counts: Dict[str, int] = {}
        self._collect(data.get("results", data), "", lines, counts)
        if counts:
            lines.append(", ".join(f"{status}: {n}" for status, n in sorted(counts.items())))
        return "\n".join(lines) + "\n"

    def _collect(self, data: Any, label: str, lines: List[str], counts: Dict[str, int]) -> None:
        if isinstance(data, dict) and "relation" in data:
            counts[data["status"]] = counts.get(data["status"], 0) + 1
            lines.append(f"{data['status']:<13} {label:<10} {data['relation']}: {data['instance']}")
        elif _is_matrix(data):
            lines.append(f"{label}:")
            lines.extend("  " + " ".join(row) for row in data["entries"])
        elif isinstance(data, dict):
            for key, value in data.items():
                self._collect(value, label or str(key), lines, counts)
        elif isinstance(data, list):
            for value in data:
                self._collect(value, label, lines, counts)
