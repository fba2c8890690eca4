"""Characteristic-class monomials and their exact weight evaluation.

For an oriented fiber of dimension 2n the relevant characteristic classes
are the Pontryagin classes p_1, ..., p_n (degree 4i) and the Euler class e
(degree 2n), subject to the single ring relation e^2 = p_n.  A linear
circle action on R^{2n} splits into n rotation planes with integer weights
a_1, ..., a_n, and a class monomial evaluates against those weights to an
integer:

    sigma_{p_i}(a_1, ..., a_n) = sigma_i(a_1^2, ..., a_n^2)
    sigma_e(a_1, ..., a_n)     = a_1 * a_2 * ... * a_n

extended multiplicatively over monomial factors.  This is consistent with
e^2 = p_n because sigma_e^2 equals sigma_n of the squares.

All arithmetic is exact (arbitrary-precision integers).  The divisibility
tests built on these numbers downstream would be meaningless with floats,
and sigma_i of squared weights overflows 64 bits already for modest input.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence, Union

from .errors import DomainError, ParseError

__all__ = [
    "CharClassMonomial",
    "WeightVector",
    "WeightsLike",
    "degree",
    "elementary_symmetric",
    "parse_class_monomial",
    "reduce_monomial",
    "sigma_eval",
    "signed_doubling_sigma",
]


@dataclass(frozen=True)
class WeightVector:
    """The n integer rotation weights of a real 2n-dimensional circle representation."""

    weights: tuple[int, ...]

    def __post_init__(self):
        ws = tuple(int(a) for a in self.weights)
        if not ws:
            raise DomainError("empty weight vector: a 2n-dimensional fiber needs n >= 1")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def of(cls, w: "WeightsLike") -> "WeightVector":
        return w if isinstance(w, WeightVector) else cls(tuple(w))

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.weights)


WeightsLike = Union[WeightVector, Sequence[int]]


@dataclass(frozen=True)
class CharClassMonomial:
    """A monomial p_1^{k_1} * ... * p_n^{k_n} * e^{m} for fiber dimension 2n.

    ``p_exponents[i-1]`` is the exponent of p_i.  Canonical form keeps the
    e-exponent in {0, 1}; :func:`reduce_monomial` folds each e^2 into p_n.
    Instances are immutable and compare structurally.
    """

    fiber_half_dim: int
    p_exponents: tuple[int, ...]
    e_exponent: int = 0

    def __post_init__(self):
        n = int(self.fiber_half_dim)
        if n < 1:
            raise DomainError(f"fiber half-dimension must be >= 1, got {n}")
        exps = tuple(int(k) for k in self.p_exponents)
        if len(exps) != n:
            raise DomainError(
                f"expected {n} Pontryagin exponents, got {len(exps)}"
            )
        if any(k < 0 for k in exps) or int(self.e_exponent) < 0:
            raise DomainError("class-monomial exponents must be non-negative")
        object.__setattr__(self, "fiber_half_dim", n)
        object.__setattr__(self, "p_exponents", exps)
        object.__setattr__(self, "e_exponent", int(self.e_exponent))

    @classmethod
    def one(cls, n: int) -> "CharClassMonomial":
        return cls(n, (0,) * n, 0)

    @classmethod
    def pontryagin(cls, i: int, n: int) -> "CharClassMonomial":
        if not 1 <= i <= n:
            raise DomainError(f"p{i} does not exist for fiber half-dimension {n}")
        return cls(n, tuple(1 if j == i else 0 for j in range(1, n + 1)), 0)

    @classmethod
    def euler(cls, n: int) -> "CharClassMonomial":
        return cls(n, (0,) * n, 1)

    @property
    def degree(self) -> int:
        """Cohomological degree: deg p_i = 4i, deg e = 2n."""
        n = self.fiber_half_dim
        return 4 * sum(i * k for i, k in enumerate(self.p_exponents, start=1)) + 2 * n * self.e_exponent

    @property
    def is_canonical(self) -> bool:
        return self.e_exponent <= 1

    def __mul__(self, other: "CharClassMonomial") -> "CharClassMonomial":
        if not isinstance(other, CharClassMonomial):
            return NotImplemented
        if other.fiber_half_dim != self.fiber_half_dim:
            raise DomainError(
                "cannot multiply monomials for fiber half-dimensions "
                f"{self.fiber_half_dim} and {other.fiber_half_dim}"
            )
        return CharClassMonomial(
            self.fiber_half_dim,
            tuple(a + b for a, b in zip(self.p_exponents, other.p_exponents)),
            self.e_exponent + other.e_exponent,
        )

    def __str__(self) -> str:
        parts = []
        if self.e_exponent == 1:
            parts.append("e")
        elif self.e_exponent > 1:
            parts.append(f"e^{self.e_exponent}")
        for i, k in enumerate(self.p_exponents, start=1):
            if k == 1:
                parts.append(f"p{i}")
            elif k > 1:
                parts.append(f"p{i}^{k}")
        return "*".join(parts) if parts else "1"


def reduce_monomial(m: CharClassMonomial) -> CharClassMonomial:
    """Canonical representative under e^2 = p_n: e-exponent drops to 0 or 1."""
    if m.is_canonical:
        return m
    pairs, rest = divmod(m.e_exponent, 2)
    exps = list(m.p_exponents)
    exps[-1] += pairs
    return CharClassMonomial(m.fiber_half_dim, tuple(exps), rest)


def degree(m: CharClassMonomial) -> int:
    """Cohomological degree of the monomial (invariant under reduction)."""
    return m.degree


def elementary_symmetric(i: int, values: Iterable[int]) -> int:
    """The i-th elementary symmetric polynomial of the given integers, exactly.

    sigma_0 is 1 by the empty-product convention.
    """
    vals = [int(v) for v in values]
    if i < 0 or i > len(vals):
        raise DomainError(
            f"elementary symmetric index {i} outside 0..{len(vals)}"
        )
    # coefficient extraction from prod(1 + v*t), truncated at degree i
    coeffs = [1] + [0] * i
    for v in vals:
        for j in range(i, 0, -1):
            coeffs[j] += v * coeffs[j - 1]
    return coeffs[i]


def sigma_eval(c: CharClassMonomial, w: WeightsLike) -> int:
    """Evaluate the monomial against circle weights.

    Multiplicative over factors, with sigma_{p_i} the i-th elementary
    symmetric polynomial of the squared weights and sigma_e the plain
    product of the weights.  The result depends only on the canonical
    class of ``c``, so reduction beforehand is optional.
    """
    w = WeightVector.of(w)
    n = c.fiber_half_dim
    if len(w) != n:
        raise DomainError(
            f"weight vector has {len(w)} entries, monomial expects {n}"
        )
    squares = [a * a for a in w.weights]
    total = 1
    for i, k in enumerate(c.p_exponents, start=1):
        if k:
            total *= elementary_symmetric(i, squares) ** k
    if c.e_exponent:
        total *= prod(w.weights) ** c.e_exponent
    return total


def signed_doubling_sigma(i: int, w: WeightsLike) -> int:
    """(-1)^i sigma_{2i} of the doubled signed list (a_1, -a_1, ..., a_n, -a_n).

    Expanded term by term over all 2i-element subsets, deliberately without
    the symmetric-function shortcut: mixed terms cancel in pairs, so this
    serves as the independent cross-check that the p_i evaluation rule in
    :func:`sigma_eval` equals sigma_i of the squares.
    """
    w = WeightVector.of(w)
    n = len(w)
    if i < 0 or i > n:
        raise DomainError(f"index {i} outside 0..{n}")
    doubled = []
    for a in w.weights:
        doubled.append(a)
        doubled.append(-a)
    total = sum(prod(combo) for combo in itertools.combinations(doubled, 2 * i))
    return (-1) ** i * total


_FACTOR_RE = re.compile(r"(e|p([0-9]+))(?:\^(-?[0-9]+))?\Z")


def parse_class_monomial(text: str, n: int) -> CharClassMonomial:
    """Parse the monomial syntax ``e``, ``p1``, ``p2^3``, ``e*p1^2``.

    Whitespace-insensitive and case-insensitive; ``1`` names the empty
    monomial.  Indices above n and negative exponents are rejected.
    """
    if n < 1:
        raise DomainError(f"fiber half-dimension must be >= 1, got {n}")
    s = re.sub(r"\s+", "", text).lower()
    if not s:
        raise ParseError("empty class monomial")
    if s == "1":
        return CharClassMonomial.one(n)
    p_exp = [0] * n
    e_exp = 0
    for factor in s.split("*"):
        m = _FACTOR_RE.match(factor)
        if m is None:
            raise ParseError(f"bad class factor '{factor}'")
        exp = 1
        if m.group(3) is not None:
            exp = int(m.group(3))
            if exp < 0:
                raise ParseError(f"negative exponent in '{factor}'")
        if m.group(2) is None:
            e_exp += exp
        else:
            idx = int(m.group(2))
            if not 1 <= idx <= n:
                raise ParseError(
                    f"class index p{idx} outside 1..{n} for fiber half-dimension {n}"
                )
            p_exp[idx - 1] += exp
    return CharClassMonomial(n, tuple(p_exp), e_exp)
