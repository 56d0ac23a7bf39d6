"""
Seminormal: exact cactus-group matrices between promotion and rotation

Seminormal builds the seminormal representations of the Hecke algebra and of
the cactus group on standard Young tableaux over Q(q), and uses them to
construct a matrix that specialises to jeu-de-taquin promotion at q = 0 and to
the long cycle at q = 1. Everything is exact: rational functions in q,
integer polynomials modulo cyclotomic polynomials, and rational matrices.

## Core Components

### Exact arithmetic (`seminormal.exact`)
- **RationalFunction**: canonical element of Q(q) (gcd-reduced, monic
  denominator, powers of q factored out)
- **quantum_int**: balanced and standard quantum integers
- **CyclotomicElement**: exact values of integer polynomials at roots of unity
- **MatrixQq**: immutable matrices over Q(q) with exact inverse, powers,
  diagonal conjugation and evaluation

### Combinatorics (`seminormal.combinat`)
- **Shape / StandardTableau**: partitions and standard tableaux in a fixed
  basis order
- **bender_knuth / jdt_promotion / reverse_complement**: the involutions and
  promotion
- **CactusWord / check_presentation**: the cactus group, its image in the
  symmetric group and a relation checker for any action
- **csp_check**: cyclic sieving for promotion with exact root-of-unity
  comparison

### Representations (`seminormal.rep`)
- **build_u / build_sigma / build_t_q**: seminormal matrices in the YOUNG or
  CONJUGATE sign convention
- **relation_suite**: Hecke, braid and cactus relations as exact identities
- **interpolating_matrix**: the normalized product p_hat with a certificate
  of its values at q = 0 and q = 1 and of p_hat^r = 1
- **match_paper_example**: reproduction of the worked example for shape 3,3

### Reports and CLI (`seminormal.report`, `seminormal.cli`)
- **Report / RelationResult**: pass / fail / informational entries keyed by
  shape, validated against a versioned schema
- **ReportRenderer**: JSON, LaTeX and text output
- `seminormal paper-example`, `seminormal verify ...`, `seminormal emit ...`

## Quick Start

```python
from seminormal import Shape, interpolating_matrix, csp_check

shape = Shape.parse("3,3")
certificate = interpolating_matrix(shape)
certificate.power_is_identity      # True: p_hat^6 = 1
certificate.eval0_is_promotion     # True: p_hat(0) is the promotion matrix
csp_check(shape).holds             # True
```

## Conventions

- Matrices act on column vectors indexed by `enumerate_syt(shape)`; entry
  [Y][X] is the coefficient of Y in the image of X.
- A cactus word l1 l2 ... ln is the matrix product M(l1) M(l2) ... M(ln);
  the rightmost letter acts first.
- Quantum integers in the representation matrices are balanced,
  [n] = q^{-(n-1)} + ... + q^{n-1}; the cyclic sieving polynomials use the
  standard form 1 + q + ... + q^{n-1}.
"""

__version__ = "0.1.0"

from seminormal.exact import (
    CyclotomicElement,
    IntPoly,
    LaurentPoly,
    MatrixQq,
    QuantumConvention,
    RationalFunction,
    quantum_int,
)
from seminormal.combinat import (
    CactusWord,
    Shape,
    StandardTableau,
    check_presentation,
    csp_check,
    enumerate_syt,
    jdt_promotion,
)
from seminormal.rep import (
    Normalization,
    SignConvention,
    build_t_q,
    build_u,
    interpolating_matrix,
    match_paper_example,
    relation_suite,
)
from seminormal.report import Report, RelationResult, validate_report

__all__ = [
    "CyclotomicElement",
    "IntPoly",
    "LaurentPoly",
    "MatrixQq",
    "QuantumConvention",
    "RationalFunction",
    "quantum_int",
    "CactusWord",
    "Shape",
    "StandardTableau",
    "check_presentation",
    "csp_check",
    "enumerate_syt",
    "jdt_promotion",
    "Normalization",
    "SignConvention",
    "build_t_q",
    "build_u",
    "interpolating_matrix",
    "match_paper_example",
    "relation_suite",
    "Report",
    "RelationResult",
    "validate_report",
]
