"""
Cyclic sieving for promotion on standard tableaux.

A triple (X, c, P) exhibits cyclic sieving when P(w^k) = |Fix(c^k)| for a
primitive r-th root of unity w and every k. Here X = SYT(shape), c is
promotion and P is either the q-hook polynomial or the major-index
generating function. Roots of unity are handled exactly in Z[q]/Phi_r.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Union

import numpy as np

from seminormal.combinat.tableau import (
    Shape,
    StandardTableau,
    enumerate_syt,
    hook_lengths,
    jdt_promotion,
    statistics,
)
from seminormal.exact.cyclotomic import CyclotomicElement, IntPoly, eval_at_root


class CspPolynomial(str, Enum):
    Q_HOOK = "q_hook"
    MAJ = "maj"


def _standard_quantum(n: int) -> IntPoly:
    return IntPoly([1] * n)


def q_hook_polynomial(shape: Shape) -> IntPoly:
    """
    [r]! / prod over cells of [h], with [n] = 1 + q + ... + q^{n-1}.

    Raises:
        InexactDivisionError: If the quotient is not a polynomial

    Example:
        >>> q_hook_polynomial(Shape((2, 2))).coefficients
        [1, 0, 1]
    """
    numerator = IntPoly([1])
    for n in range(1, shape.size + 1):
        numerator = numerator * _standard_quantum(n)
    denominator = IntPoly([1])
    for h in hook_lengths(shape):
        denominator = denominator * _standard_quantum(h)
    return numerator.exact_div(denominator)


def maj_generating_function(shape: Shape) -> IntPoly:
    """Sum of q^maj(T) over the standard tableaux of ``shape``."""
    majs = [statistics(T).maj for T in enumerate_syt(shape)]
    coeffs = [0] * (max(majs) + 1)
    for m in majs:
        coeffs[m] += 1
    return IntPoly(coeffs)


def b_statistic(shape: Shape) -> int:
    """sum (i-1) * lambda_i; maj generating function = q^b * q-hook."""
    return sum(i * part for i, part in enumerate(shape.parts))


def csp_polynomial(shape: Shape, polynomial: Union[CspPolynomial, str]) -> IntPoly:
    if CspPolynomial(polynomial) is CspPolynomial.Q_HOOK:
        return q_hook_polynomial(shape)
    return maj_generating_function(shape)


def promotion_images(shape: Shape) -> List[int]:
    """Index of jdt_promotion(T) for every basis tableau T."""
    basis = enumerate_syt(shape)
    index = {T: x for x, T in enumerate(basis)}
    return [index[jdt_promotion(T)] for T in basis]


def fixed_point_counts(shape: Shape) -> List[int]:
    """
    |Fix(p^k)| for k = 0..r-1, with p = promotion.

    Example:
        >>> fixed_point_counts(Shape((2, 2)))
        [2, 0, 2, 0]
    """
    images = promotion_images(shape)
    n = len(images)
    current = list(range(n))
    counts = []
    for _ in range(shape.size):
        counts.append(sum(1 for x in range(n) if current[x] == x))
        current = [images[y] for y in current]
    return counts


def promotion_orbits(shape: Shape) -> List[List[StandardTableau]]:
    """Orbits of promotion, each starting at its first basis tableau."""
    basis = enumerate_syt(shape)
    images = promotion_images(shape)
    seen, orbits = set(), []
    for start in range(len(basis)):
        if start in seen:
            continue
        orbit, x = [], start
        while x not in seen:
            seen.add(x)
            orbit.append(basis[x])
            x = images[x]
        orbits.append(orbit)
    return orbits


@dataclass
class RootComparison:
    k: int
    lhs: CyclotomicElement
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "lhs": self.lhs.to_dict(),
            "rhs": self.rhs,
            "equal": self.equal,
        }


@dataclass
class CspVerdict:
    """Outcome of comparing P(w^k) with |Fix(p^k)| for k = 0..r-1."""

    shape: Shape
    polynomial_kind: CspPolynomial
    polynomial: IntPoly
    fix_counts: List[int]
    per_k: List[RootComparison] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(c.equal for c in self.per_k)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "shape": self.shape.to_list(),
            "polynomial_kind": self.polynomial_kind.value,
            "polynomial": self.polynomial.to_dict(),
            "fix_counts": list(self.fix_counts),
            "holds": self.holds,
            "per_k": [c.to_dict() for c in self.per_k],
        }


def csp_check(
    shape: Shape, polynomial: Union[CspPolynomial, str] = CspPolynomial.Q_HOOK
) -> CspVerdict:
    """
    Compare P(w^k) with the fixed-point counts of promotion powers.

    Example:
        >>> csp_check(Shape((2, 2))).holds
        True
    """
    r = shape.size
    if r < 2:
        raise ValueError(f"csp_check needs r >= 2, got {r}")
    kind = CspPolynomial(polynomial)
    P = csp_polynomial(shape, kind)
    counts = fixed_point_counts(shape)
    per_k = [RootComparison(k, eval_at_root(P, r, k), counts[k]) for k in range(r)]
    return CspVerdict(shape, kind, P, counts, per_k)


def compare_maj_and_hook(shape: Shape) -> Dict[str, Any]:
    """
    Relate the two candidate polynomials.

    Records exact equality, the shift identity maj = q^b * hook, and the
    k for which the two agree at w^k.
    """
    hook = q_hook_polynomial(shape)
    maj = maj_generating_function(shape)
    r = shape.size
    b = b_statistic(shape)
    agree = [eval_at_root(hook, r, k) == eval_at_root(maj, r, k) for k in range(r)]
    return {
        "q_hook": hook.to_dict(),
        "maj": maj.to_dict(),
        "equal": hook == maj,
        "shift": b,
        "maj_is_shifted_hook": maj == IntPoly.monomial(b) * hook,
        "roots_agree": agree,
        "disagreeing_k": [k for k, ok in enumerate(agree) if not ok],
    }


def character_check(shape: Shape, traces: List[int]) -> List[RootComparison]:
    """
    Compare tr(c^k) with the q-hook polynomial at w^k.

    Args:
        shape: The shape
        traces: Traces of the powers c^0 .. c^{r-1} of a matrix of promotion
            or of the long cycle; they must be integers
    """
    hook = q_hook_polynomial(shape)
    r = shape.size
    return [RootComparison(k, eval_at_root(hook, r, k), traces[k]) for k in range(r)]


def matrix_power_traces(matrix: np.ndarray, count: int) -> List[int]:
    """Integer traces of matrix^0 .. matrix^(count-1)."""
    n = matrix.shape[0]
    current = np.identity(n, dtype=object)
    traces = []
    for _ in range(count):
        trace = sum(current[i, i] for i in range(n))
        if getattr(trace, "denominator", 1) != 1:
            raise ValueError(f"trace {trace} is not an integer")
        traces.append(int(trace))
        current = current @ matrix
    return traces
