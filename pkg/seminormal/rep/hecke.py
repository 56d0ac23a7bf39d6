"""
Seminormal matrices of the Hecke algebra and of the cactus group.

Matrices act on column vectors indexed by ``enumerate_syt(shape)``; entry
[Y][X] is the coefficient of Y in the image of X. With a = a_T(i) the signed
axial distance, balanced quantum integers and [-n] = -[n]:

    u_i T = -[a-1]/[a] T + [a+1]/[a] s_i T
    t_i T =      1/[a] T + [a+1]/[a] s_i T
    sigma_i = q + u_i,   sigma_i^{-1} = q^{-1} + u_i

where the s_i T term is dropped when s_i T is not standard. On a fixed
vector t_i is +1 (i, i+1 in one row) or -1 (one column), which is Young's
seminormal form at q = 1.

The CONJUGATE convention twists by the sign character:
t -> -t, u -> -[2] - u, sigma -> -sigma^{-1}. AUTO picks, per shape, the
convention whose interpolating matrix specialises to the 0/1 promotion
matrix at q = 0 (CONJUGATE for rectangles with an even number of rows,
YOUNG otherwise).
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Union

import numpy as np

from seminormal.combinat.cactus import CactusAction, CactusWord, check_presentation
from seminormal.combinat.tableau import (
    Shape,
    StandardTableau,
    axial_distance,
    enumerate_syt,
    hook_length_count,
)
from seminormal.exact.matrix import MatrixQq, rational_identity
from seminormal.exact.rational import (
    ONE,
    QuantumConvention,
    RationalFunction,
    monomial,
    quantum_int,
    signed_quantum_int,
)
from seminormal.report.core import RelationResult, Status

logger = logging.getLogger(__name__)


class SignConvention(str, Enum):
    YOUNG = "young"
    CONJUGATE = "conjugate"
    AUTO = "auto"


def resolve_convention(
    shape: Shape, convention: Union[SignConvention, str]
) -> SignConvention:
    """Replace AUTO by the concrete convention used for ``shape``."""
    convention = SignConvention(convention)
    if convention is not SignConvention.AUTO:
        return convention
    if shape.is_rectangular and len(shape.parts) % 2 == 0:
        return SignConvention.CONJUGATE
    return SignConvention.YOUNG


class _Quantum:
    """Signed balanced quantum integers for one build."""

    def __init__(self):
        self._values: Dict[int, RationalFunction] = {}

    def __getitem__(self, n: int) -> RationalFunction:
        if n not in self._values:
            self._values[n] = signed_quantum_int(n)
        return self._values[n]


def _seminormal_columns(
    shape: Shape, i: int, diagonal, off_diagonal
) -> MatrixQq:
    basis = enumerate_syt(shape)
    index = {T: x for x, T in enumerate(basis)}
    columns = []
    for T in basis:
        a = axial_distance(T, i)
        column = {index[T]: diagonal(a)}
        partner = T.swapped(i)
        if partner is not None:
            column[index[partner]] = off_diagonal(a)
        columns.append(column)
    return MatrixQq.from_columns(len(basis), columns)


def build_u(
    shape: Shape, convention: Union[SignConvention, str] = SignConvention.YOUNG
) -> List[MatrixQq]:
    """
    Matrices of u_1 .. u_{r-1}.

    Example:
        >>> build_u(Shape((3,)))[0].is_diagonal()
        True
    """
    convention = resolve_convention(shape, convention)
    qi = _Quantum()
    matrices = [
        _seminormal_columns(
            shape,
            i,
            lambda a: -qi[a - 1] / qi[a],
            lambda a: qi[a + 1] / qi[a],
        )
        for i in range(1, shape.size)
    ]
    if convention is SignConvention.CONJUGATE:
        n = len(enumerate_syt(shape))
        shift = MatrixQq.identity(n).scale(-qi[2])
        matrices = [shift - u for u in matrices]
    return matrices


def build_sigma(
    shape: Shape, convention: Union[SignConvention, str] = SignConvention.YOUNG
) -> List[MatrixQq]:
    """sigma_i = q I + u_i."""
    n = len(enumerate_syt(shape))
    q_identity = MatrixQq.identity(n).scale(monomial(1))
    return [q_identity + u for u in build_u(shape, convention)]


def build_sigma_inverse(
    shape: Shape, convention: Union[SignConvention, str] = SignConvention.YOUNG
) -> List[MatrixQq]:
    """q^{-1} I + u_i, the inverse of sigma_i by u^2 = -[2] u."""
    n = len(enumerate_syt(shape))
    q_identity = MatrixQq.identity(n).scale(monomial(-1))
    return [q_identity + u for u in build_u(shape, convention)]


def build_t_q(
    shape: Shape, convention: Union[SignConvention, str] = SignConvention.YOUNG
) -> List[MatrixQq]:
    """
    Matrices of the cactus generators t_1 .. t_{r-1} over Q(q).

    Example:
        >>> t = build_t_q(Shape((2, 2)))
        >>> (t[1] @ t[1]).is_identity()
        True
    """
    convention = resolve_convention(shape, convention)
    qi = _Quantum()
    matrices = [
        _seminormal_columns(
            shape,
            i,
            lambda a: ONE / qi[a],
            lambda a: qi[a + 1] / qi[a],
        )
        for i in range(1, shape.size)
    ]
    if convention is SignConvention.CONJUGATE:
        matrices = [-t for t in matrices]
    return matrices


class MatrixAction(CactusAction[MatrixQq]):
    """The cactus group acting through given matrices of t_1 .. t_{r-1}."""

    def __init__(self, generators: List[MatrixQq], label: str = "matrices"):
        super().__init__(len(generators) + 1)
        self.generators = list(generators)
        self.label = label
        self.dimension = generators[0].rows if generators else 1

    def describe(self) -> str:
        return self.label

    def generator(self, i: int) -> MatrixQq:
        return self.generators[i - 1]

    def identity(self) -> MatrixQq:
        return MatrixQq.identity(self.dimension)

    def compose(self, a: MatrixQq, b: MatrixQq) -> MatrixQq:
        return a @ b

    def equal(self, a: MatrixQq, b: MatrixQq) -> bool:
        return a == b


@dataclass
class SeminormalRep:
    """All seminormal generator matrices of one shape."""

    shape: Shape
    convention: SignConvention
    basis: List[StandardTableau]
    u: List[MatrixQq] = field(default_factory=list)
    sigma: List[MatrixQq] = field(default_factory=list)
    sigma_inverse: List[MatrixQq] = field(default_factory=list)
    t_q: List[MatrixQq] = field(default_factory=list)

    @classmethod
    def build(
        cls, shape: Shape, convention: Union[SignConvention, str] = SignConvention.YOUNG
    ) -> "SeminormalRep":
        convention = resolve_convention(shape, convention)
        logger.debug("building seminormal representation of %s (%s)", shape, convention.value)
        return cls(
            shape=shape,
            convention=convention,
            basis=enumerate_syt(shape),
            u=build_u(shape, convention),
            sigma=build_sigma(shape, convention),
            sigma_inverse=build_sigma_inverse(shape, convention),
            t_q=build_t_q(shape, convention),
        )

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def action(self) -> MatrixAction:
        return MatrixAction(self.t_q, label=f"t matrices of {self.shape}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "shape": self.shape.to_list(),
            "convention": self.convention.value,
            "basis": [T.to_dict() for T in self.basis],
            "u": [m.to_dict() for m in self.u],
            "sigma": [m.to_dict() for m in self.sigma],
            "t": [m.to_dict() for m in self.t_q],
        }


def long_cycle_matrix(
    shape: Shape, convention: Union[SignConvention, str] = SignConvention.YOUNG
) -> MatrixQq:
    """
    The q = 1 value of the matrix of p(r-1) = t(r-1) ... t(1).

    Example:
        >>> c = long_cycle_matrix(Shape((2, 2)))
        >>> c.power(4).is_identity()
        True
    """
    r = shape.size
    t = build_t_q(shape, convention)
    if r < 2:
        return MatrixQq.identity(1)
    product = MatrixAction(t).element(CactusWord.of(r, "p", r - 1))
    return MatrixQq.constant(product.evaluate(1))


def _support_ok(matrix: MatrixQq, shape: Shape, i: int) -> bool:
    basis = enumerate_syt(shape)
    index = {T: x for x, T in enumerate(basis)}
    for x, T in enumerate(basis):
        partner = T.swapped(i)
        allowed = {x} if partner is None else {x, index[partner]}
        if any(not matrix[y, x].is_zero() for y in range(len(basis)) if y not in allowed):
            return False
    return True


def relation_suite(
    shape: Shape,
    convention: Union[SignConvention, str] = SignConvention.YOUNG,
    include_cactus: bool = True,
    t_override: Optional[List[MatrixQq]] = None,
) -> List[RelationResult]:
    """
    Check the Hecke, braid and cactus relations as exact identities.

    Args:
        shape: The shape
        convention: Sign convention of the matrices
        include_cactus: Also check every cactus relation instance in the
            matrix action of the t generators
        t_override: Use these t matrices instead of the built ones

    Returns:
        One entry per relation instance; failures are entries, not errors
    """
    rep = SeminormalRep.build(shape, convention)
    t_q = t_override if t_override is not None else rep.t_q
    r = shape.size
    n = rep.dimension
    identity = MatrixQq.identity(n)
    two = quantum_int(2, QuantumConvention.BALANCED)
    q_minus = identity.scale(monomial(1) - monomial(-1))
    results: List[RelationResult] = [
        RelationResult(
            "sign_convention",
            f"{rep.convention.value}: t = +1 on same-row fixed vectors, "
            f"-1 on same-column fixed vectors"
            + (" (negated)" if rep.convention is SignConvention.CONJUGATE else ""),
            Status.INFORMATIONAL,
        )
    ]

    def record(relation: str, instance: str, holds: bool) -> None:
        results.append(RelationResult(relation, instance, Status.PASS if holds else Status.FAIL))

    for k in range(r - 1):
        i = k + 1
        u, sigma, t = rep.u[k], rep.sigma[k], t_q[k]
        record("hecke_quadratic", f"u{i}^2 = -[2] u{i}", u @ u == u.scale(-two))
        record(
            "sigma_inverse",
            f"sigma{i} (q^-1 + u{i}) = 1",
            (sigma @ rep.sigma_inverse[k]).is_identity(),
        )
        record(
            "sigma_difference",
            f"sigma{i} - sigma{i}^-1 = (q - q^-1)",
            sigma - rep.sigma_inverse[k] == q_minus,
        )
        record("t_involution", f"t{i}^2 = 1", (t @ t).is_identity())
        record(
            "seminormal_support",
            f"u{i}, t{i} supported on {{T, s{i}T}}",
            _support_ok(u, shape, i) and _support_ok(t, shape, i),
        )
        record("q1_anchor", f"t{i}(1) = sigma{i}(1)", np.array_equal(t.evaluate(1), sigma.evaluate(1)))

    for k in range(r - 2):
        i = k + 1
        u, v = rep.u[k], rep.u[k + 1]
        record(
            "hecke_cubic",
            f"u{i} u{i + 1} u{i} - u{i} = u{i + 1} u{i} u{i + 1} - u{i + 1}",
            u @ v @ u - u == v @ u @ v - v,
        )
        s, s_next = rep.sigma[k], rep.sigma[k + 1]
        record(
            "braid",
            f"sigma{i} sigma{i + 1} sigma{i} = sigma{i + 1} sigma{i} sigma{i + 1}",
            s @ s_next @ s == s_next @ s @ s_next,
        )

    for k in range(r - 1):
        for l in range(k + 2, r - 1):
            record(
                "hecke_commute",
                f"u{k + 1} u{l + 1} = u{l + 1} u{k + 1}",
                rep.u[k] @ rep.u[l] == rep.u[l] @ rep.u[k],
            )

    results.extend(_q1_checks(shape, t_q))
    if include_cactus and r >= 2:
        results.extend(check_presentation(MatrixAction(t_q), r))
    return results


def _q1_checks(shape: Shape, t_q: List[MatrixQq]) -> List[RelationResult]:
    """At q = 1 the t matrices give a representation of the symmetric group."""
    values = [t.evaluate(1) for t in t_q]
    n = values[0].shape[0] if values else 1
    identity = rational_identity(n)
    results = []

    def record(relation: str, instance: str, holds: bool) -> None:
        results.append(RelationResult(relation, instance, Status.PASS if holds else Status.FAIL))

    for k, s in enumerate(values):
        record("q1_involution", f"s{k + 1}^2 = 1 at q = 1", np.array_equal(s @ s, identity))
    for k in range(len(values) - 1):
        product = values[k] @ values[k + 1]
        record(
            "q1_braid",
            f"(s{k + 1} s{k + 2})^3 = 1 at q = 1",
            np.array_equal(product @ product @ product, identity),
        )
    for k in range(len(values)):
        for l in range(k + 2, len(values)):
            product = values[k] @ values[l]
            record(
                "q1_commute",
                f"(s{k + 1} s{l + 1})^2 = 1 at q = 1",
                np.array_equal(product @ product, identity),
            )
    record(
        "q1_identity_trace",
        f"character at the identity = {hook_length_count(shape)}",
        n == hook_length_count(shape),
    )
    return results
