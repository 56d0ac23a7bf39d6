"""
The cactus group as words in its generators.

Words act right to left: in ``l1 l2 ... ln`` the letter ``ln`` acts first.
Generator families, for a word of rank r:

    t(i)    1 <= i <= r-1   image (i, i+1)
    p(i)    = t(i) t(i-1) ... t(1)          image 1 -> i+1 -> i -> ... -> 2 -> 1
    q(i)    = p(1) p(2) ... p(i) = s(1,i+1) image reverses [1, i+1]
    v(i)    = t(i) t(i+1) ... t(r-1)        image r -> i -> i+1 -> ... -> r
    w(i)    = v(r-1) v(r-2) ... v(r-i)      image reverses [r-i, r]
    s(p,q)  1 <= p < q <= r                 image reverses [p, q]

so p(r-1) is promotion and maps to the long cycle, and q(r-1) = s(1,r) is
the longest element. ``s(p,q)`` with p > 1 expands as
``s(1,q) s(1,q-p+1) s(1,q)``.

Group elements are never simplified; equality is always tested through an
action (``CactusAction``).
"""

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Generic, List, Optional, Tuple, TypeVar

from seminormal.combinat.tableau import (
    Shape,
    StandardTableau,
    bender_knuth,
    enumerate_syt,
    jdt_promotion,
    reverse_complement,
)
from seminormal.report.core import RelationResult, Status

GENERATOR_KINDS = ["t", "p", "q", "v", "w", "s"]

_LETTER_PATTERN = re.compile(r"^([tpqvw])(\d+)$")
_INTERVAL_PATTERN = re.compile(r"^s\[(\d+),(\d+)\]$")


@dataclass(frozen=True)
class Generator:
    """One letter; ``indices`` is (i,) for t/p/q/v/w and (p, q) for s."""

    kind: str
    indices: Tuple[int, ...]

    def __str__(self) -> str:
        if self.kind == "s":
            return f"s[{self.indices[0]},{self.indices[1]}]"
        return f"{self.kind}{self.indices[0]}"

    def validate(self, rank: int) -> None:
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "s":
            p, q = self.indices
            if not 1 <= p < q <= rank:
                raise ValueError(f"{self} needs 1 <= p < q <= {rank}")
        else:
            (i,) = self.indices
            if not 1 <= i <= rank - 1:
                raise ValueError(f"{self} needs 1 <= i <= {rank - 1}")


def t(i: int) -> Generator:
    return Generator("t", (i,))


def s(p: int, q: int) -> Generator:
    return Generator("s", (p, q))


@dataclass(frozen=True)
class CactusWord:
    """
    A word in the cactus generators of rank r.

    Raises:
        ValueError: If a letter index is out of range for ``rank``

    Example:
        >>> str(CactusWord.parse("p3", 4).to_t_word())
        't3.t2.t1'
    """

    letters: Tuple[Generator, ...]
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        for letter in self.letters:
            letter.validate(self.rank)

    @classmethod
    def of(cls, rank: int, kind: str, *indices: int) -> "CactusWord":
        return cls((Generator(kind, tuple(indices)),), rank)

    @classmethod
    def parse(cls, text: str, rank: int) -> "CactusWord":
        """Parse ``t3.t2.t1``, ``s[2,4]``, ``p5`` ...; the empty string is the identity."""
        letters = []
        for token in filter(None, text.replace(" ", "").split(".")):
            match = _LETTER_PATTERN.match(token)
            if match:
                letters.append(Generator(match.group(1), (int(match.group(2)),)))
                continue
            match = _INTERVAL_PATTERN.match(token)
            if match:
                letters.append(s(int(match.group(1)), int(match.group(2))))
                continue
            raise ValueError(f"malformed cactus letter: {token!r}")
        return cls(tuple(letters), rank)

    def __mul__(self, other: "CactusWord") -> "CactusWord":
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        return CactusWord(self.letters + other.letters, self.rank)

    def __pow__(self, n: int) -> "CactusWord":
        return CactusWord(self.letters * n, self.rank)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return ".".join(str(letter) for letter in self.letters)

    def is_t_word(self) -> bool:
        return all(letter.kind == "t" for letter in self.letters)

    def to_t_word(self) -> "CactusWord":
        """Syntactic expansion into t-letters; nothing is cancelled."""
        out: List[Generator] = []
        for letter in self.letters:
            out.extend(_expand(letter, self.rank))
        return CactusWord(tuple(out), self.rank)


def _expand(letter: Generator, rank: int) -> List[Generator]:
    kind = letter.kind
    if kind == "t":
        return [letter]
    if kind == "p":
        (i,) = letter.indices
        return [t(k) for k in range(i, 0, -1)]
    if kind == "q":
        (i,) = letter.indices
        return [x for k in range(1, i + 1) for x in _expand(Generator("p", (k,)), rank)]
    if kind == "v":
        (i,) = letter.indices
        return [t(k) for k in range(i, rank)]
    if kind == "w":
        (i,) = letter.indices
        return [
            x for k in range(rank - 1, rank - i - 1, -1)
            for x in _expand(Generator("v", (k,)), rank)
        ]
    p, q = letter.indices
    outer = _expand(Generator("q", (q - 1,)), rank)
    if p == 1:
        return outer
    return outer + _expand(Generator("q", (q - p,)), rank) + outer


def to_t_word(w: CactusWord) -> CactusWord:
    return w.to_t_word()


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..r given by its image sequence."""

    images: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{list(self.images)} is not a permutation")

    @classmethod
    def identity(cls, r: int) -> "Permutation":
        return cls(tuple(range(1, r + 1)))

    @classmethod
    def reversal(cls, r: int, low: int, high: int) -> "Permutation":
        return cls(tuple(low + high - i if low <= i <= high else i for i in range(1, r + 1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other."""
        return Permutation(tuple(self(other(i)) for i in range(1, len(self.images) + 1)))

    def cycles(self) -> List[Tuple[int, ...]]:
        seen, cycles = set(), []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cycle, x = [], start
            while x not in seen:
                seen.add(x)
                cycle.append(x)
                x = self(x)
            cycles.append(tuple(cycle))
        return cycles

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.images) + ")"


def generator_image(letter: Generator, rank: int) -> Permutation:
    """Image of a single generator in the symmetric group."""
    letter.validate(rank)
    kind = letter.kind
    if kind == "s":
        return Permutation.reversal(rank, *letter.indices)
    (i,) = letter.indices
    if kind == "t":
        return Permutation.reversal(rank, i, i + 1)
    if kind == "q":
        return Permutation.reversal(rank, 1, i + 1)
    if kind == "w":
        return Permutation.reversal(rank, rank - i, rank)
    images = list(range(1, rank + 1))
    if kind == "p":
        images[0] = i + 1
        for j in range(2, i + 2):
            images[j - 1] = j - 1
    else:
        for j in range(i, rank):
            images[j - 1] = j + 1
        images[rank - 1] = i
    return Permutation(tuple(images))


def image_in_symmetric(w: CactusWord) -> Permutation:
    """
    Image under the homomorphism to the symmetric group, composed right to left.

    Example:
        >>> str(image_in_symmetric(CactusWord.of(5, "s", 2, 4)))
        '(1,4,3,2,5)'
    """
    result = Permutation.identity(w.rank)
    for letter in w.letters:
        result = result.compose(generator_image(letter, w.rank))
    return result


def act_on_tableau(w: CactusWord, T: StandardTableau) -> StandardTableau:
    """
    Apply w to T, the rightmost t-letter first.

    Raises:
        ValueError: If the rank of w differs from the size of T
    """
    if w.rank != T.size:
        raise ValueError(f"word of rank {w.rank} cannot act on a tableau of size {T.size}")
    for letter in reversed(w.to_t_word().letters):
        T = bender_knuth(T, letter.indices[0])
    return T


# -- actions and the presentation check ----------------------------------------

E = TypeVar("E")


class CactusAction(ABC, Generic[E]):
    """
    An action of the cactus group, given by the images of the t-generators.

    Subclasses supply the generator images, composition and equality; the
    element of a word is the product of its t-letters.
    """

    def __init__(self, rank: int):
        self.rank = rank

    @abstractmethod
    def generator(self, i: int) -> E:
        """Image of t(i)."""

    @abstractmethod
    def identity(self) -> E:
        pass

    @abstractmethod
    def compose(self, a: E, b: E) -> E:
        """The element ``a b`` (b acts first)."""

    @abstractmethod
    def equal(self, a: E, b: E) -> bool:
        pass

    def describe(self) -> str:
        return self.__class__.__name__

    def element(self, w: CactusWord) -> E:
        result = self.identity()
        for letter in w.to_t_word().letters:
            result = self.compose(result, self.generator(letter.indices[0]))
        return result


class TableauAction(CactusAction[Tuple[int, ...]]):
    """
    The Bender-Knuth action on the standard tableaux of a shape.

    Elements are maps of basis indices stored as tuples: ``e[x]`` is the
    index of the image of basis tableau ``x``.
    """

    def __init__(self, shape: Shape):
        super().__init__(shape.size)
        self.shape = shape
        self.basis = enumerate_syt(shape)
        self.index = {T: x for x, T in enumerate(self.basis)}

    def describe(self) -> str:
        return f"tableaux of shape {self.shape}"

    def generator(self, i: int) -> Tuple[int, ...]:
        return tuple(self.index[bender_knuth(T, i)] for T in self.basis)

    def identity(self) -> Tuple[int, ...]:
        return tuple(range(len(self.basis)))

    def compose(self, a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(a[y] for y in b)

    def equal(self, a: Tuple[int, ...], b: Tuple[int, ...]) -> bool:
        return a == b


def _intervals(r: int) -> List[Tuple[int, int]]:
    return [(p, q) for p in range(1, r + 1) for q in range(p + 1, r + 1)]


def check_presentation(action: CactusAction, r: Optional[int] = None) -> List[RelationResult]:
    """
    Check every relation of the cactus presentation in ``action``.

    For all intervals [p,q] and [k,l] of 1..r:

        s(p,q)^2 = 1
        s(p,q) s(k,l) = s(k,l) s(p,q)                   if q < k
        s(p,q) s(k,l) = s(p+q-l, p+q-k) s(p,q)          if [k,l] in [p,q]

    Failures are report entries, never exceptions.
    """
    r = action.rank if r is None else r
    if r < 2:
        raise ValueError(f"the presentation check needs r >= 2, got {r}")
    # s[1,j+1] = s[1,j] p(j); s[p,q] = s[1,q] s[1,q-p+1] s[1,q]
    first: Dict[int, Any] = {1: action.identity()}
    for j in range(1, r):
        first[j + 1] = action.compose(first[j], action.element(CactusWord.of(r, "p", j)))
    elements = {
        (p, q): first[q]
        if p == 1
        else action.compose(action.compose(first[q], first[q - p + 1]), first[q])
        for p, q in _intervals(r)
    }
    identity = action.identity()
    results: List[RelationResult] = []

    def record(relation: str, instance: str, holds: bool) -> None:
        results.append(
            RelationResult(relation, instance, Status.PASS if holds else Status.FAIL)
        )

    for (p, q), x in elements.items():
        record("involution", f"s[{p},{q}]^2 = 1", action.equal(action.compose(x, x), identity))
    for (p, q), x in elements.items():
        for (k, l), y in elements.items():
            if q < k:
                record(
                    "disjoint_commute",
                    f"s[{p},{q}] s[{k},{l}] = s[{k},{l}] s[{p},{q}]",
                    action.equal(action.compose(x, y), action.compose(y, x)),
                )
            elif p <= k and l <= q and (k, l) != (p, q):
                z = elements[(p + q - l, p + q - k)]
                record(
                    "nesting",
                    f"s[{p},{q}] s[{k},{l}] = s[{p + q - l},{p + q - k}] s[{p},{q}]",
                    action.equal(action.compose(x, y), action.compose(z, x)),
                )
    return results


def verify_lemma_cyclic(shape: Shape) -> List[RelationResult]:
    """
    Check p(r-1)^r = w(r-1) q(r-1) on every tableau of ``shape``.

    The last entry is informational and records the order of promotion.
    """
    r = shape.size
    if r < 2:
        raise ValueError(f"the cyclic lemma needs r >= 2, got {r}")
    lhs = CactusWord.of(r, "p", r - 1) ** r
    rhs = CactusWord.of(r, "w", r - 1) * CactusWord.of(r, "q", r - 1)
    action = TableauAction(shape)
    left, right = action.element(lhs), action.element(rhs)
    results = [
        RelationResult(
            "lemma_cyclic",
            f"p{r - 1}^{r} = w{r - 1} q{r - 1} on {T}",
            Status.PASS if left[x] == right[x] else Status.FAIL,
        )
        for x, T in enumerate(action.basis)
    ]
    results.append(
        RelationResult(
            "promotion_order",
            f"order of promotion on {shape} is {promotion_order(shape)}",
            Status.INFORMATIONAL,
        )
    )
    return results


def promotion_order(shape: Shape) -> int:
    """Least m >= 1 with promotion^m = identity on SYT(shape)."""
    basis = enumerate_syt(shape)
    current, m = [jdt_promotion(T) for T in basis], 1
    while current != basis:
        current = [jdt_promotion(T) for T in current]
        m += 1
    return m


def verify_rect_order(shape: Shape) -> List[RelationResult]:
    """
    On every tableau of a rectangle, check

        (a) p(r-1)^r = 1
        (b) RC q(r-1) RC = w(r-1)
        (c) RC q(r-1) = q(r-1) RC

    where RC is reverse-complement.

    Raises:
        ValueError: For a non-rectangular shape
    """
    if not shape.is_rectangular:
        raise ValueError(f"verify_rect_order needs a rectangle, got {shape}")
    r = shape.size
    if r < 2:
        raise ValueError(f"verify_rect_order needs r >= 2, got {r}")
    p_power = CactusWord.of(r, "p", r - 1) ** r
    longest = CactusWord.of(r, "q", r - 1)
    dual = CactusWord.of(r, "w", r - 1)
    results = []
    for T in enumerate_syt(shape):
        checks = [
            ("rect_order", f"p{r - 1}^{r} = 1 on {T}", act_on_tableau(p_power, T) == T),
            (
                "rc_conjugates_q_to_w",
                f"RC q{r - 1} RC = w{r - 1} on {T}",
                reverse_complement(act_on_tableau(longest, reverse_complement(T)))
                == act_on_tableau(dual, T),
            ),
            (
                "rc_commutes_with_q",
                f"RC q{r - 1} = q{r - 1} RC on {T}",
                reverse_complement(act_on_tableau(longest, T))
                == act_on_tableau(longest, reverse_complement(T)),
            ),
        ]
        results.extend(
            RelationResult(name, instance, Status.PASS if ok else Status.FAIL)
            for name, instance, ok in checks
        )
    return results
