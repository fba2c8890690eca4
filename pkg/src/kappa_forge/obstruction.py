"""The arithmetic obstruction for action-induced bundles over BSU(2).

For a non-trivial smooth SU(2)-action on a closed oriented 2n-manifold W
that is rationally odd and has chi(W) < 0, the normalized kappa-values
b_i defined by  kappa_{e*p_i} = b_i * chi(W) * c2^i  are forced to be
integers whose greatest common divisor is a power of 2.  The reason is
that the circle-fixed set is a single connected component whose tangential
weights include a 1 or a 2, making b_i = sigma_i of the squared weights,
and a monic integer polynomial with 1 or 4 among its roots cannot reduce
to t^n modulo an odd prime.

Composing the classifying map of an action with the degree-k^2 self-map of
BSU(2) (k odd) multiplies b_i by k^{2i}.  For k an odd prime this plants
an odd prime in the gcd, so the resulting bundle cannot come from any
action: that computation, packaged with its witness prime, is the
certificate this module emits.

The checks run on plain b-vectors; whether the topological hypotheses
actually hold for a given manifold is asserted by the caller through
:class:`HypothesisFlags`, never inferred.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import DomainError
from .symalg import WeightVector, WeightsLike, elementary_symmetric

__all__ = [
    "BVector",
    "BettiFeasibility",
    "CONSISTENT",
    "Certificate",
    "HypothesisFlags",
    "NotApplicable",
    "RULED_OUT",
    "Reason",
    "Verdict",
    "adams_transform",
    "betti_feasible",
    "gcd_power_of_two",
    "nonkinetic_certificate",
    "self_map_degree_realizable",
    "theorem_a_check",
    "weights_to_b",
]

CONSISTENT = "consistent"
RULED_OUT = "ruled_out"


@dataclass(frozen=True)
class BVector:
    """Exact rational coefficients b_1..b_n of the normalized kappa-values."""

    entries: tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(Fraction(x) for x in self.entries)
        if not entries:
            raise DomainError("b-vector must have at least one entry")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, values: Union["BVector", Iterable]) -> "BVector":
        return values if isinstance(values, BVector) else cls(tuple(values))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.entries)


@dataclass(frozen=True)
class HypothesisFlags:
    """Caller-asserted topological hypotheses under which the test obstructs."""

    rationally_odd: bool
    negative_euler_char: bool
    nontrivial_action_assumed: bool

    def all_set(self) -> bool:
        return (
            self.rationally_odd
            and self.negative_euler_char
            and self.nontrivial_action_assumed
        )

    def missing(self) -> tuple[str, ...]:
        out = []
        if not self.rationally_odd:
            out.append("rationally_odd")
        if not self.negative_euler_char:
            out.append("negative_euler_char")
        if not self.nontrivial_action_assumed:
            out.append("nontrivial_action_assumed")
        return tuple(out)

    @classmethod
    def all_true(cls) -> "HypothesisFlags":
        return cls(True, True, True)


@dataclass(frozen=True)
class Reason:
    """Why a b-vector is ruled out.

    kind is one of 'non_integer' (detail: 1-based index),
    'gcd_has_odd_prime' (detail: the prime) or 'all_zero'.
    """

    kind: str
    detail: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == "non_integer":
            return f"b_{self.detail} is not an integer"
        if self.kind == "gcd_has_odd_prime":
            return f"gcd is divisible by the odd prime {self.detail}"
        return "all entries are zero, but some kappa value must be non-zero"


@dataclass(frozen=True)
class Verdict:
    """Outcome of the obstruction test on one b-vector.

    ``applicable`` records whether all hypothesis flags were asserted; the
    arithmetic is computed either way, but only an applicable ruled_out
    verdict obstructs anything.
    """

    status: str
    reasons: tuple[Reason, ...]
    applicable: bool

    def __post_init__(self):
        if self.status == RULED_OUT and not self.reasons:
            raise DomainError("a ruled_out verdict needs at least one reason")


def gcd_power_of_two(values: Iterable[int]) -> bool:
    """True iff the gcd of the absolute values is 1, 2, 4, 8, ...

    The gcd of an all-zero list is 0, which is not a power of 2.
    """
    vals = [abs(int(v)) for v in values]
    if not vals:
        raise DomainError("gcd of an empty list is undefined")
    g = 0
    for v in vals:
        g = math.gcd(g, v)
    return g > 0 and g & (g - 1) == 0


def _smallest_odd_prime_factor(g: int) -> Optional[int]:
    while g % 2 == 0:
        g //= 2
    if g == 1:
        return None
    f = 3
    while f * f <= g:
        if g % f == 0:
            return f
        f += 2
    return g


def theorem_a_check(b: BVector, flags: HypothesisFlags) -> Verdict:
    """Rule out b-vectors no action can produce.

    Ruled out iff some entry is non-integral, or all entries are integers
    whose gcd (0 included) is not a power of 2.
    """
    b = BVector.of(b)
    reasons: list[Reason] = []
    ints: list[int] = []
    for idx, value in enumerate(b.entries, start=1):
        if value.denominator != 1:
            reasons.append(Reason("non_integer", idx))
        else:
            ints.append(int(value))
    if not reasons:
        g = 0
        for v in ints:
            g = math.gcd(g, abs(v))
        if g == 0:
            reasons.append(Reason("all_zero"))
        elif g & (g - 1):
            reasons.append(Reason("gcd_has_odd_prime", _smallest_odd_prime_factor(g)))
    status = RULED_OUT if reasons else CONSISTENT
    return Verdict(status, tuple(reasons), flags.all_set())


def weights_to_b(w: WeightsLike) -> BVector:
    """b_i = sigma_i of the squared weights; the values a connected fixed set yields."""
    w = WeightVector.of(w)
    squares = [a * a for a in w.weights]
    return BVector(
        tuple(Fraction(elementary_symmetric(i, squares)) for i in range(1, len(w) + 1))
    )


def adams_transform(k: int, b: BVector) -> BVector:
    """Rescale b_i by k^{2i}, the effect of the degree-k^2 self-map (k odd)."""
    k = int(k)
    if k < 1 or k % 2 == 0:
        raise DomainError(
            f"k must be a positive odd integer, got {k}: self-maps of the "
            "SU(2) classifying space realize only loop-degree 0 and odd squares"
        )
    b = BVector.of(b)
    return BVector(
        tuple(Fraction(k) ** (2 * i) * x for i, x in enumerate(b.entries, start=1))
    )


def self_map_degree_realizable(d: int) -> bool:
    """True iff d occurs as the loop-degree of a self-map: 0 or an odd square."""
    d = int(d)
    if d == 0:
        return True
    if d < 0 or d % 2 == 0:
        return False
    root = math.isqrt(d)
    return root * root == d


@dataclass(frozen=True)
class Certificate:
    """Arithmetic witness that the k-twisted bundle is not action-induced."""

    k: int
    b_base: BVector
    b_transformed: BVector
    gcd: int
    witness_prime: int
    hypotheses: HypothesisFlags
    conclusion: str = "non-kinetic"

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "b_base": [str(x) for x in self.b_base],
            "b_transformed": [str(x) for x in self.b_transformed],
            "gcd": self.gcd,
            "witness_prime": self.witness_prime,
            "hypotheses": {
                "rationally_odd": self.hypotheses.rationally_odd,
                "negative_euler_char": self.hypotheses.negative_euler_char,
                "nontrivial_action_assumed": self.hypotheses.nontrivial_action_assumed,
            },
            "conclusion": self.conclusion,
        }


@dataclass(frozen=True)
class NotApplicable:
    """The certificate pipeline declined; the reason says why."""

    reason: str
    gcd: Optional[int] = None


def nonkinetic_certificate(
    b_base: BVector, k: int, flags: HypothesisFlags
) -> Union[Certificate, NotApplicable]:
    """Certify the k-twist of an action-realized b-vector as non-kinetic.

    Requires all hypothesis flags and a base vector that itself passes the
    obstruction test (it is supposed to come from an action).  The twisted
    vector k^{2i} b_i is then checked; a ruled_out outcome yields the
    certificate with the odd prime dividing the new gcd.
    """
    b_base = BVector.of(b_base)
    if not flags.all_set():
        return NotApplicable(
            "hypotheses not all asserted: missing " + ", ".join(flags.missing())
        )
    k = int(k)
    if k <= 1 or k % 2 == 0:
        raise DomainError(f"k must be an odd integer > 1, got {k}")
    base_verdict = theorem_a_check(b_base, flags)
    if base_verdict.status != CONSISTENT:
        return NotApplicable(
            "base values already fail the action constraint: "
            + "; ".join(str(r) for r in base_verdict.reasons)
        )
    transformed = adams_transform(k, b_base)
    # base passed, so every entry of the transform is an integer
    g = 0
    for x in transformed:
        g = math.gcd(g, abs(int(x)))
    verdict = theorem_a_check(transformed, flags)
    if verdict.status == RULED_OUT:
        witness = next(
            (r.detail for r in verdict.reasons if r.kind == "gcd_has_odd_prime"), None
        )
        if witness is None:
            return NotApplicable(
                "transform ruled out without an odd prime witness", gcd=g
            )
        return Certificate(k, b_base, transformed, g, witness, flags)
    return NotApplicable(
        f"transformed values still satisfy the constraint (gcd {g})", gcd=g
    )


@dataclass(frozen=True)
class BettiFeasibility:
    feasible: bool
    k: Optional[int]

    def __bool__(self) -> bool:
        return self.feasible


def betti_feasible(
    w_even: int, w_odd: int, m_even: int, m_odd: int
) -> BettiFeasibility:
    """Can a fixed set with Betti sums (m_even, m_odd) sit inside W?

    Feasible iff both sums drop by the same k >= 0, which in particular
    forces chi(M) = chi(W).  Returns the witness k.
    """
    for label, v in (
        ("w_even", w_even),
        ("w_odd", w_odd),
        ("m_even", m_even),
        ("m_odd", m_odd),
    ):
        if int(v) < 0:
            raise DomainError(f"Betti sums are non-negative, got {label}={v}")
    k = w_even - m_even
    if k >= 0 and w_odd - m_odd == k:
        return BettiFeasibility(True, k)
    return BettiFeasibility(False, None)
