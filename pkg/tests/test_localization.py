import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kappa_forge.errors import DomainError, ParseError
from kappa_forge.localization import (
    C2,
    GAMMA,
    ExpectedValue,
    FixedComponent,
    FixedPointData,
    KappaValue,
    compare_expected,
    fixed_point_payload,
    gamma_to_c2,
    kappa_class_label,
    localize_circle,
    parse_fixed_point_payload,
    pullback_su2,
    read_fixed_point_file,
    validate_fixed_data,
    write_fixed_point_file,
)
from kappa_forge.symalg import CharClassMonomial, WeightVector, sigma_eval


def four_point_data(k, chi=4):
    comps = tuple(
        FixedComponent(f"x{i}", 1, WeightVector(w))
        for i, w in enumerate([(k, 1), (k, -1), (-k, 1), (-k, -1)])
    )
    return FixedPointData(2, comps, fiber_euler_char=chi)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def test_validate_clean_data():
    assert validate_fixed_data(four_point_data(2)) == []


def test_validate_euler_char_mismatch():
    diags = validate_fixed_data(four_point_data(2, chi=2))
    assert len(diags) == 1
    assert diags[0].severity == "error"
    assert "Euler characteristic mismatch" in diags[0].message


def test_validate_weight_length():
    data = FixedPointData(
        2, (FixedComponent("bad", 1, WeightVector((1, 2, 3))),), fiber_euler_char=1
    )
    diags = validate_fixed_data(data)
    assert any(d.severity == "error" and "expected 2 weights" in d.message for d in diags)


def test_validate_zero_weight_is_informational():
    data = FixedPointData(2, (FixedComponent("c", 2, WeightVector((0, 3))),))
    diags = validate_fixed_data(data)
    assert [d.severity for d in diags] == ["info"]


# ---------------------------------------------------------------------------
# localize_circle
# ---------------------------------------------------------------------------

def test_localize_four_points_p1():
    kv = localize_circle(four_point_data(2), CharClassMonomial.pontryagin(1, 2))
    assert kv.coefficient == 20
    assert kv.generator == GAMMA
    assert kv.generator_power == 2


def test_localize_negative_euler_characteristic():
    data = FixedPointData(3, (FixedComponent("m", -2, WeightVector((1, 1, 1))),))
    kv = localize_circle(data, CharClassMonomial.pontryagin(1, 3))
    assert kv.coefficient == -6
    assert kv.generator_power == 2


def test_localize_euler_class_with_zero_weights():
    data = FixedPointData(2, (FixedComponent("m", 7, WeightVector((0, 0))),))
    kv = localize_circle(data, CharClassMonomial.euler(2))
    assert kv.coefficient == 0


def test_localize_rejects_bad_data():
    with pytest.raises(DomainError):
        localize_circle(four_point_data(2, chi=2), CharClassMonomial.pontryagin(1, 2))
    with pytest.raises(DomainError):
        localize_circle(four_point_data(2), CharClassMonomial.pontryagin(1, 3))


def test_localize_linear_over_disjoint_union():
    a = FixedPointData(2, four_point_data(2).components)
    b = FixedPointData(
        2,
        (
            FixedComponent("y0", -3, WeightVector((1, 2))),
            FixedComponent("y1", 2, WeightVector((5, 1))),
        ),
    )
    union = FixedPointData(2, a.components + b.components)
    c = CharClassMonomial(2, (1, 1), 0)
    assert (
        localize_circle(union, c).coefficient
        == localize_circle(a, c).coefficient + localize_circle(b, c).coefficient
    )


@given(
    chi=st.integers(-4, 4),
    weights=st.lists(st.integers(-6, 6), min_size=2, max_size=2),
    flip=st.integers(0, 1),
)
def test_localize_sign_flip_behaviour(chi, weights, flip):
    base = FixedPointData(2, (FixedComponent("m", chi, WeightVector(tuple(weights))),))
    flipped_weights = list(weights)
    flipped_weights[flip] = -flipped_weights[flip]
    flipped = FixedPointData(
        2, (FixedComponent("m", chi, WeightVector(tuple(flipped_weights))),)
    )
    p_mono = CharClassMonomial(2, (2, 1), 0)
    assert (
        localize_circle(base, p_mono).coefficient
        == localize_circle(flipped, p_mono).coefficient
    )
    e = CharClassMonomial.euler(2)
    assert (
        localize_circle(base, e).coefficient
        == -localize_circle(flipped, e).coefficient
    )


@given(t=st.integers(-5, 5), weights=st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_localize_weight_scaling(t, weights):
    c = CharClassMonomial(3, (1, 0, 0), 1)  # degree 4 + 6 = 10
    base = FixedPointData(3, (FixedComponent("m", 2, WeightVector(tuple(weights))),))
    scaled = FixedPointData(
        3, (FixedComponent("m", 2, WeightVector(tuple(t * a for a in weights))),)
    )
    expected = t ** (c.degree // 2) * localize_circle(base, c).coefficient
    assert localize_circle(scaled, c).coefficient == expected


# ---------------------------------------------------------------------------
# promotion to SU(2)
# ---------------------------------------------------------------------------

def test_pullback_su2_four_points():
    for k in (0, 2, 4):
        kv, b1 = pullback_su2(four_point_data(k), 1)
        assert kv.coefficient == 4 * (k * k + 1)
        assert kv.generator == C2
        assert kv.generator_power == 1
        assert b1 == Fraction(k * k + 1)


def test_pullback_su2_single_component_gives_sigma():
    weights = (1, 2, 3)
    data = FixedPointData(
        3, (FixedComponent("m", -2, WeightVector(weights)),), fiber_euler_char=-2
    )
    squares = [a * a for a in weights]
    for i in (1, 2, 3):
        _, b_i = pullback_su2(data, i)
        assert b_i == sigma_eval(CharClassMonomial.pontryagin(i, 3), weights)


def test_pullback_su2_requires_euler_char():
    data = FixedPointData(2, four_point_data(2).components)
    with pytest.raises(DomainError, match="Euler characteristic"):
        pullback_su2(data, 1)


def test_pullback_su2_rejects_zero_euler_char():
    data = FixedPointData(
        2,
        (
            FixedComponent("a", 1, WeightVector((1, 1))),
            FixedComponent("b", -1, WeightVector((1, 1))),
        ),
        fiber_euler_char=0,
    )
    with pytest.raises(DomainError, match="0"):
        pullback_su2(data, 1)


def test_pullback_su2_index_range():
    with pytest.raises(DomainError):
        pullback_su2(four_point_data(2), 3)
    with pytest.raises(DomainError):
        pullback_su2(four_point_data(2), 0)


def test_gamma_to_c2_rejects_odd_power():
    kv = KappaValue(CharClassMonomial.euler(1), Fraction(3), GAMMA, 1)
    with pytest.raises(DomainError, match="odd"):
        gamma_to_c2(kv)


def test_kappa_value_power_consistency():
    p1 = CharClassMonomial.pontryagin(1, 2)
    with pytest.raises(DomainError):
        KappaValue(p1, Fraction(1), GAMMA, 3)
    with pytest.raises(DomainError):
        KappaValue(CharClassMonomial.euler(1), Fraction(1), C2, 1)


def test_kappa_class_label_folds_euler_factor():
    assert kappa_class_label(CharClassMonomial.pontryagin(1, 2)) == "e*p1"
    assert kappa_class_label(CharClassMonomial.euler(2)) == "p2"


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------

def payload_round_trip(data, expected=None, provenance=None):
    payload = fixed_point_payload(data, expected, provenance)
    return parse_fixed_point_payload(json.loads(json.dumps(payload)))


def test_payload_round_trip():
    data = four_point_data(2)
    loaded = payload_round_trip(data)
    assert loaded.data == data
    assert loaded.expected is None
    assert loaded.provenance is None


def test_payload_round_trip_with_annotations():
    data = four_point_data(2)
    expected = (
        ExpectedValue(CharClassMonomial.pontryagin(1, 2), Fraction(20), C2, 1),
    )
    loaded = payload_round_trip(data, expected, "four fixed points")
    assert loaded.expected == expected
    assert loaded.provenance == "four fixed points"
    comparisons = compare_expected(loaded.data, loaded.expected)
    assert all(c.matches for c in comparisons)


def test_file_round_trip(tmp_path):
    path = tmp_path / "data.json"
    data = four_point_data(4)
    write_fixed_point_file(path, data, provenance="round trip")
    loaded = read_fixed_point_file(path)
    assert loaded.data == data
    assert loaded.provenance == "round trip"


def test_parse_rejects_unknown_top_level_key():
    payload = fixed_point_payload(four_point_data(2))
    payload["extra"] = 1
    with pytest.raises(ParseError, match="extra"):
        parse_fixed_point_payload(payload)


def test_parse_rejects_unknown_component_key():
    payload = fixed_point_payload(four_point_data(2))
    payload["components"][0]["orientation"] = "up"
    with pytest.raises(ParseError, match="orientation"):
        parse_fixed_point_payload(payload)


def test_parse_rejects_wrong_types():
    with pytest.raises(ParseError):
        parse_fixed_point_payload([])
    with pytest.raises(ParseError, match="fiber_half_dim"):
        parse_fixed_point_payload({"fiber_half_dim": "2", "components": []})
    with pytest.raises(ParseError, match="fiber_half_dim"):
        parse_fixed_point_payload({"fiber_half_dim": True, "components": []})
    payload = fixed_point_payload(four_point_data(2))
    payload["components"][0]["weights"] = [1.5, 2]
    with pytest.raises(ParseError, match="weight"):
        parse_fixed_point_payload(payload)


def test_parse_rejects_inconsistent_expected_power():
    payload = fixed_point_payload(four_point_data(2))
    payload["expected"] = [
        {"class": "p1", "coefficient": "20", "generator": "c2", "power": 2}
    ]
    with pytest.raises(ParseError, match="power"):
        parse_fixed_point_payload(payload)


def test_read_missing_file():
    with pytest.raises(ParseError, match="cannot read"):
        read_fixed_point_file("/nonexistent/nope.json")
