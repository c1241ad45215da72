import pytest

from cqschur.errors import DenominatorVanishes, NonInvertibleQ, ParseError
from cqschur.ring import (ONE, ZERO, FieldConfig, Qvar, corank, det_bareiss,
                          frac, in_A, parse_poly, quantum_binom,
                          quantum_factorial, quantum_int, qvar, rank_generic,
                          rank_mod, solve_cramer, specialize, to_str)

q = qvar()


def test_quantum_integers():
    assert to_str(quantum_int(2)) == "q + q^-1"
    assert quantum_int(3) == parse_poly("q^2 + 1 + q^-2")
    assert quantum_int(0) == ZERO
    assert quantum_int(-2) == -quantum_int(2)
    assert quantum_factorial(3) == quantum_int(2) * quantum_int(3)
    assert quantum_binom(4, 2) * quantum_factorial(2) * quantum_factorial(2) == quantum_factorial(4)


def test_laurent_arithmetic():
    a = parse_poly("q*Q1 - q^-1")
    b = parse_poly("Q2 + 2")
    assert a * b == b * a
    assert (a + b) - b == a
    assert qvar(3) * qvar(-3) == ONE
    assert (a * a) * b == a * (a * b)


def test_parse_roundtrip():
    for text in ["(q + q^-1)*(Q1 - Q2)", "q^-2*Q1 - Q2", "3*q^4*Q1^2 - 1/2"]:
        p = parse_poly(text)
        assert parse_poly(to_str(p)) == p


def test_parse_error():
    with pytest.raises(ParseError):
        parse_poly("q +")


def test_fraction_and_A_membership():
    assert in_A(frac(parse_poly("q^2 - 1"), parse_poly("q - 1"))) == parse_poly("q + 1")
    assert in_A(frac(ONE, q)) == qvar(-1)
    assert in_A(frac(ONE, parse_poly("2*q"))) is None
    assert in_A(frac(ONE, parse_poly("q + 1"))) is None


def test_field_config_rational():
    cfg = FieldConfig.from_json({"mode": "rational", "q": "2", "Q": ["1", "1/4"]})
    assert cfg.to_json() == {"mode": "rational", "q": "2", "Q": ["1", "1/4"]}
    assert specialize(parse_poly("q^2*Q2 - Q1"), cfg).is_zero()
    assert specialize(qvar(-1), cfg) == specialize(frac(ONE, q), cfg)


def test_field_config_number_field():
    cfg = FieldConfig("number_field", "x", ["1", "-1"], "x^2+1")
    assert specialize(quantum_int(2), cfg).is_zero()
    assert not specialize(quantum_int(3), cfg).is_zero()
    assert specialize(parse_poly("Q1 + Q2"), cfg).is_zero()


def test_q_must_be_invertible():
    with pytest.raises(NonInvertibleQ):
        FieldConfig("rational", "0", ["1", "1"])


def test_vanishing_denominator_is_reported():
    cfg = FieldConfig("number_field", "x", ["1", "1"], "x^2+1")
    with pytest.raises(DenominatorVanishes):
        specialize(frac(ONE, quantum_int(2)), cfg)


def test_linear_algebra():
    assert det_bareiss([[q, Qvar(1)], [ONE, q]]) == parse_poly("q^2 - Q1")
    assert rank_generic([[q, ONE], [q * q, q]]) == 1
    x = solve_cramer([[q, ZERO], [ZERO, ONE]], [ONE, Qvar(1)])
    assert x[0] == qvar(-1) and x[1] == Qvar(1)
    assert rank_mod([[1, 2], [2, 4]])[0] == 1


def test_corank_at_root_of_unity():
    cfg = FieldConfig("number_field", "x", ["1", "1"], "x^2+1")
    M = [[quantum_int(2), quantum_int(2)], [quantum_int(2), quantum_int(2)]]
    assert corank([[specialize(x, cfg) for x in r] for r in M]) == 2
    M = [[quantum_int(2), ONE], [ONE, ONE]]
    assert corank([[specialize(x, cfg) for x in r] for r in M]) == 0
