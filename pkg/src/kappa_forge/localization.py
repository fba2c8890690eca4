"""Fixed-point localization of tautological classes for circle actions.

A smooth circle action on a closed oriented 2n-manifold W is summarized,
for our purposes, by its fixed-point data: the connected components of the
fixed set together with their Euler characteristics and the n signed
weights of the tangential circle representation along each component.
The pullback of the tautological class kappa_{e*c} to the circle
classifying space is then

    sum_i  chi(M_i) * sigma_c(weights of M_i)

times the appropriate power of the degree-2 generator gamma.  When the
action extends to SU(2), restriction to a maximal torus is injective on
rational cohomology and sends the second Chern class c2 to gamma^2, so
even gamma-powers promote to c2-powers and b_i = coefficient / chi(W)
is defined whenever chi(W) is known and non-zero.

The JSON file format read and written here is the interchange unit for the
command-line tool and the example catalog.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DomainError, ParseError
from .symalg import (
    CharClassMonomial,
    WeightVector,
    parse_class_monomial,
    reduce_monomial,
    sigma_eval,
)

__all__ = [
    "C2",
    "Diagnostic",
    "ExpectedComparison",
    "ExpectedValue",
    "FixedComponent",
    "FixedPointData",
    "FixedPointFile",
    "GAMMA",
    "KappaValue",
    "compare_expected",
    "fixed_point_payload",
    "gamma_to_c2",
    "kappa_class_label",
    "localize_circle",
    "parse_fixed_point_payload",
    "pullback_su2",
    "read_fixed_point_file",
    "validate_fixed_data",
    "write_fixed_point_file",
]

GAMMA = "gamma"
C2 = "c2"


@dataclass(frozen=True)
class FixedComponent:
    """One connected component of the fixed set: name, chi, signed weights."""

    name: str
    euler_char: int
    weights: WeightVector

    def __post_init__(self):
        object.__setattr__(self, "euler_char", int(self.euler_char))
        object.__setattr__(self, "weights", WeightVector.of(self.weights))


@dataclass(frozen=True)
class FixedPointData:
    """Fixed-point data of a circle action on a 2n-dimensional fiber.

    Construction is deliberately lenient about cross-field consistency;
    :func:`validate_fixed_data` reports problems instead of repairing them.
    """

    fiber_half_dim: int
    components: tuple[FixedComponent, ...]
    fiber_euler_char: Optional[int] = None

    def __post_init__(self):
        n = int(self.fiber_half_dim)
        if n < 1:
            raise DomainError(f"fiber half-dimension must be >= 1, got {n}")
        object.__setattr__(self, "fiber_half_dim", n)
        object.__setattr__(self, "components", tuple(self.components))
        if self.fiber_euler_char is not None:
            object.__setattr__(self, "fiber_euler_char", int(self.fiber_euler_char))


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" or "info"
    message: str

    def __str__(self) -> str:
        return f"{self.severity}: {self.message}"


@dataclass(frozen=True)
class KappaValue:
    """Exact coefficient of a kappa-class pullback on a generator power.

    ``class_monomial`` is the c in kappa_{e*c}.  Over the circle the
    generator is gamma with power degree(c)/2; over SU(2) it is c2 with
    power degree(c)/4.
    """

    class_monomial: CharClassMonomial
    coefficient: Fraction
    generator: str
    generator_power: int

    def __post_init__(self):
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        deg = self.class_monomial.degree
        if self.generator == GAMMA:
            expected = deg // 2
        elif self.generator == C2:
            if deg % 4:
                raise DomainError(
                    f"degree {deg} is not divisible by 4: no c2-power carries it"
                )
            expected = deg // 4
        else:
            raise DomainError(f"unknown generator '{self.generator}'")
        if int(self.generator_power) != expected:
            raise DomainError(
                f"generator power {self.generator_power} does not match "
                f"degree {deg} of {self.class_monomial} on {self.generator}"
            )
        object.__setattr__(self, "generator_power", int(self.generator_power))


def validate_fixed_data(d: FixedPointData) -> list[Diagnostic]:
    """Structural checks; errors make the data unusable, infos are advisory."""
    out: list[Diagnostic] = []
    n = d.fiber_half_dim
    for comp in d.components:
        if len(comp.weights) != n:
            out.append(
                Diagnostic(
                    "error",
                    f"component '{comp.name}': expected {n} weights, "
                    f"got {len(comp.weights)}",
                )
            )
        elif any(a == 0 for a in comp.weights):
            out.append(
                Diagnostic(
                    "info",
                    f"component '{comp.name}': zero weight present, so the "
                    "component is not isolated in that tangent plane",
                )
            )
    if d.fiber_euler_char is not None:
        total = sum(comp.euler_char for comp in d.components)
        if total != d.fiber_euler_char:
            out.append(
                Diagnostic(
                    "error",
                    f"Euler characteristic mismatch: components sum to {total}, "
                    f"fiber_euler_char is {d.fiber_euler_char}",
                )
            )
    return out


def _require_usable(d: FixedPointData) -> None:
    errors = [diag for diag in validate_fixed_data(d) if diag.severity == "error"]
    if errors:
        raise DomainError("; ".join(diag.message for diag in errors))


def localize_circle(d: FixedPointData, c: CharClassMonomial) -> KappaValue:
    """Coefficient of the kappa_{e*c} pullback on gamma^(deg(c)/2).

    Sum over fixed components of chi times the weight evaluation of c.
    """
    _require_usable(d)
    if c.fiber_half_dim != d.fiber_half_dim:
        raise DomainError(
            f"monomial is for fiber half-dimension {c.fiber_half_dim}, "
            f"data has {d.fiber_half_dim}"
        )
    coeff = sum(
        comp.euler_char * sigma_eval(c, comp.weights) for comp in d.components
    )
    return KappaValue(c, Fraction(coeff), GAMMA, c.degree // 2)


def gamma_to_c2(kv: KappaValue) -> KappaValue:
    """Rewrite gamma^(2j) as c2^j; odd gamma-powers have no preimage."""
    if kv.generator != GAMMA:
        raise DomainError(f"expected a gamma-value, got generator '{kv.generator}'")
    if kv.generator_power % 2:
        raise DomainError(
            f"gamma^{kv.generator_power} has odd exponent and is not the "
            "restriction of any class from the SU(2) classifying space"
        )
    return KappaValue(kv.class_monomial, kv.coefficient, C2, kv.generator_power // 2)


def pullback_su2(d: FixedPointData, i: int) -> tuple[KappaValue, Fraction]:
    """Kappa_{e*p_i} on c2^i together with b_i = coefficient / chi(W)."""
    n = d.fiber_half_dim
    if not 1 <= i <= n:
        raise DomainError(f"index {i} outside 1..{n}")
    if d.fiber_euler_char is None:
        raise DomainError(
            "fiber Euler characteristic is required to normalize b_i"
        )
    if d.fiber_euler_char == 0:
        raise DomainError("fiber Euler characteristic 0 leaves b_i undefined")
    kv = gamma_to_c2(localize_circle(d, CharClassMonomial.pontryagin(i, n)))
    return kv, kv.coefficient / d.fiber_euler_char


# ---------------------------------------------------------------------------
# JSON interchange format
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExpectedValue:
    """One annotated expectation: class, exact coefficient, generator power."""

    class_monomial: CharClassMonomial
    coefficient: Fraction
    generator: str
    power: int

    def __post_init__(self):
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        if self.generator not in (GAMMA, C2):
            raise DomainError(f"unknown generator '{self.generator}'")


@dataclass(frozen=True)
class ExpectedComparison:
    expected: ExpectedValue
    computed: KappaValue

    @property
    def matches(self) -> bool:
        return (
            self.computed.coefficient == self.expected.coefficient
            and self.computed.generator_power == self.expected.power
        )


@dataclass(frozen=True)
class FixedPointFile:
    """Parsed contents of a fixed-point data file, annotations included."""

    data: FixedPointData
    expected: Optional[tuple[ExpectedValue, ...]] = None
    provenance: Optional[str] = None


def compare_expected(
    data: FixedPointData, expected: Sequence[ExpectedValue]
) -> list[ExpectedComparison]:
    """Re-run localization against each annotated expectation."""
    out = []
    for ev in expected:
        kv = localize_circle(data, ev.class_monomial)
        if ev.generator == C2:
            kv = gamma_to_c2(kv)
        out.append(ExpectedComparison(ev, kv))
    return out


_TOP_KEYS = {"fiber_half_dim", "fiber_euler_char", "components", "expected", "provenance"}
_COMPONENT_KEYS = {"name", "euler_char", "weights"}
_EXPECTED_KEYS = {"class", "coefficient", "generator", "power"}


def _plain_int(value, where: str) -> int:
    # bool is an int subclass; JSON true/false must not sneak in as 1/0
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where} must be an integer, got {value!r}")
    return value


def _reject_unknown(obj: dict, allowed: set, where: str) -> None:
    unknown = sorted(set(obj) - allowed)
    if unknown:
        raise ParseError(f"unknown key '{unknown[0]}' in {where}")


def parse_fixed_point_payload(obj) -> FixedPointFile:
    """Validate a decoded JSON object against the fixed-point file schema."""
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON value must be an object")
    _reject_unknown(obj, _TOP_KEYS, "fixed-point data")
    if "fiber_half_dim" not in obj:
        raise ParseError("missing key 'fiber_half_dim'")
    n = _plain_int(obj["fiber_half_dim"], "'fiber_half_dim'")
    if n < 1:
        raise ParseError(f"'fiber_half_dim' must be >= 1, got {n}")
    chi = None
    if "fiber_euler_char" in obj:
        chi = _plain_int(obj["fiber_euler_char"], "'fiber_euler_char'")
    raw_components = obj.get("components")
    if not isinstance(raw_components, list):
        raise ParseError("'components' must be an array")
    components = []
    for idx, raw in enumerate(raw_components):
        where = f"components[{idx}]"
        if not isinstance(raw, dict):
            raise ParseError(f"{where} must be an object")
        _reject_unknown(raw, _COMPONENT_KEYS, where)
        name = raw.get("name")
        if not isinstance(name, str):
            raise ParseError(f"{where}: 'name' must be a string")
        euler_char = _plain_int(raw.get("euler_char"), f"{where}: 'euler_char'")
        raw_weights = raw.get("weights")
        if not isinstance(raw_weights, list) or not raw_weights:
            raise ParseError(f"{where}: 'weights' must be a non-empty array")
        weights = [_plain_int(a, f"{where}: weight") for a in raw_weights]
        components.append(FixedComponent(name, euler_char, WeightVector(tuple(weights))))
    data = FixedPointData(n, tuple(components), chi)

    expected = None
    if "expected" in obj:
        raw_expected = obj["expected"]
        if not isinstance(raw_expected, list):
            raise ParseError("'expected' must be an array")
        parsed = []
        for idx, raw in enumerate(raw_expected):
            where = f"expected[{idx}]"
            if not isinstance(raw, dict):
                raise ParseError(f"{where} must be an object")
            _reject_unknown(raw, _EXPECTED_KEYS, where)
            cls_text = raw.get("class")
            if not isinstance(cls_text, str):
                raise ParseError(f"{where}: 'class' must be a string")
            monomial = parse_class_monomial(cls_text, n)
            coeff_raw = raw.get("coefficient")
            if isinstance(coeff_raw, bool) or not isinstance(coeff_raw, (int, str)):
                raise ParseError(
                    f"{where}: 'coefficient' must be an integer or a 'p/q' string"
                )
            try:
                coefficient = Fraction(coeff_raw)
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"{where}: bad coefficient {coeff_raw!r}") from None
            generator = raw.get("generator")
            if generator not in (GAMMA, C2):
                raise ParseError(f"{where}: 'generator' must be 'gamma' or 'c2'")
            power = _plain_int(raw.get("power"), f"{where}: 'power'")
            deg = monomial.degree
            consistent = (generator == GAMMA and power == deg // 2) or (
                generator == C2 and deg % 4 == 0 and power == deg // 4
            )
            if not consistent:
                raise ParseError(
                    f"{where}: power {power} does not match degree {deg} "
                    f"of '{cls_text}' on {generator}"
                )
            parsed.append(ExpectedValue(monomial, coefficient, generator, power))
        expected = tuple(parsed)

    provenance = None
    if "provenance" in obj:
        provenance = obj["provenance"]
        if not isinstance(provenance, str):
            raise ParseError("'provenance' must be a string")
    return FixedPointFile(data, expected, provenance)


def read_fixed_point_file(path) -> FixedPointFile:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            obj = json.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot read '{path}': {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"'{path}' is not valid JSON: {exc}") from None
    try:
        return parse_fixed_point_payload(obj)
    except ParseError as exc:
        raise ParseError(f"'{path}': {exc}") from None


def fixed_point_payload(
    data: FixedPointData,
    expected: Optional[Sequence[ExpectedValue]] = None,
    provenance: Optional[str] = None,
) -> dict:
    """Build the JSON-serializable payload for a fixed-point data file."""
    payload: dict = {
        "fiber_half_dim": data.fiber_half_dim,
        "components": [
            {
                "name": comp.name,
                "euler_char": comp.euler_char,
                "weights": list(comp.weights),
            }
            for comp in data.components
        ],
    }
    if data.fiber_euler_char is not None:
        payload["fiber_euler_char"] = data.fiber_euler_char
    if expected:
        payload["expected"] = [
            {
                "class": str(ev.class_monomial),
                "coefficient": str(ev.coefficient),
                "generator": ev.generator,
                "power": ev.power,
            }
            for ev in expected
        ]
    if provenance is not None:
        payload["provenance"] = provenance
    return payload


def write_fixed_point_file(
    path,
    data: FixedPointData,
    expected: Optional[Sequence[ExpectedValue]] = None,
    provenance: Optional[str] = None,
) -> None:
    payload = fixed_point_payload(data, expected, provenance)
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2, sort_keys=True)
        handle.write("\n")


def kappa_class_label(c: CharClassMonomial) -> str:
    """Display name of kappa_{e*c}, with the implicit Euler factor folded in."""
    return str(reduce_monomial(CharClassMonomial.euler(c.fiber_half_dim) * c))
