from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from capelli_quiver.algebra import (
    AlgebraError,
    OperatorElement,
    ThetaPoly,
    b_polynomial,
    elements_equal,
    make_algebra,
    normalize_mul,
    skew_preset,
)
from oracles import WeightModule

F = Fraction


def TP(*coeffs):
    return ThetaPoly(coeffs)


# ---------------------------------------------------------------- make_algebra


def test_make_algebra_skew_presets():
    assert make_algebra(1, [0]) == skew_preset(1)
    assert make_algebra(2, [0, 2]) == skew_preset(2)


@pytest.mark.parametrize(
    "d, lambdas, code",
    [
        (2, [1, 0], "lambda0-nonzero"),
        (2, [0], "length-mismatch"),
        (2, [], "length-mismatch"),
        (0, [], "d-nonpositive"),
        (-1, [0], "d-nonpositive"),
    ],
)
def test_make_algebra_errors(d, lambdas, code):
    with pytest.raises(AlgebraError) as info:
        make_algebra(d, lambdas)
    assert info.value.code == code


# ---------------------------------------------------------------- b_polynomial


def test_b_polynomial_examples():
    assert b_polynomial(skew_preset(1), 0) == TP(0, 1)
    assert b_polynomial(skew_preset(2), 0) == TP(0, 1, F(1, 4))
    assert b_polynomial(make_algebra(2, [0, F(1, 2)]), 0) == TP(0, F(1, 4), F(1, 4))
    assert b_polynomial(skew_preset(2), 1) == TP(3, 2, F(1, 4))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4), st.data())
def test_b1_is_b0_shifted_by_d(d, data):
    lams = [0] + data.draw(st.lists(st.fractions(-3, 3, max_denominator=3), min_size=d - 1, max_size=d - 1))
    spec = make_algebra(d, lams)
    assert spec.b1 == spec.b0.shift(d)
    for x in range(-5, 6):
        expected = F(1)
        for lam in spec.lambdas:
            expected *= F(x, d) + lam
        assert spec.b0(x) == expected


# ---------------------------------------------------------------- products


def test_theta_times_f():
    spec = skew_preset(2)
    assert (spec.theta * spec.f).layers == {1: TP(2, 1)}


def test_delta_f_and_f_delta_skew2():
    spec = skew_preset(2)
    assert normalize_mul(spec, spec.delta, spec.f).layers == {0: TP(3, 2, F(1, 4))}
    assert normalize_mul(spec, spec.f, spec.delta).layers == {0: TP(0, 1, F(1, 4))}


def test_associativity_instance():
    spec = skew_preset(2)
    f, D = spec.f, spec.delta
    assert (D * f) * f == D * (f * f)


def test_elements_equal_examples():
    spec = skew_preset(3)
    f, D, t = spec.f, spec.delta, spec.theta
    assert elements_equal(normalize_mul(spec, f, D), spec.poly(b_polynomial(spec, 0)))
    assert not elements_equal(f, D)
    assert elements_equal(normalize_mul(spec, t, f), f * t + spec.d * f)


def specs():
    fixed = st.sampled_from([skew_preset(1), skew_preset(2), skew_preset(3), make_algebra(2, [0, F(1, 2)])])

    @st.composite
    def custom(draw):
        d = draw(st.integers(1, 3))
        lams = [0] + draw(st.lists(st.fractions(-2, 2, max_denominator=3), min_size=d - 1, max_size=d - 1))
        return make_algebra(d, lams)

    return st.one_of(fixed, custom())


@st.composite
def elements(draw, spec, max_level=2, max_layers=2):
    levels = draw(st.lists(st.integers(-max_level, max_level), min_size=1, max_size=max_layers, unique=True))
    layers = {}
    for lv in levels:
        coeffs = draw(st.lists(st.fractions(-3, 3, max_denominator=2), min_size=1, max_size=3))
        layers[lv] = ThetaPoly(coeffs)
    return OperatorElement(spec, layers)


@settings(max_examples=60, deadline=None)
@given(specs())
def test_defining_relations_close(spec):
    f, D, t = spec.f, spec.delta, spec.theta
    assert t * f - f * t == spec.d * f
    assert t * D - D * t == -spec.d * D
    assert f * D == spec.poly(spec.b0)
    assert D * f == spec.poly(spec.b1)


@settings(max_examples=60, deadline=None)
@given(specs(), st.data())
def test_associativity(spec, data):
    a, b, c = (data.draw(elements(spec)) for _ in range(3))
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60, deadline=None)
@given(specs(), st.data())
def test_weight_grading(spec, data):
    x = data.draw(elements(spec, max_layers=1))
    assume(not x.is_zero())
    (level,) = x.layers
    assert spec.theta * x - x * spec.theta == (level * spec.d) * x


@settings(max_examples=60, deadline=None)
@given(specs(), st.data())
def test_degree_additivity(spec, data):
    a = data.draw(elements(spec, max_layers=1))
    b = data.draw(elements(spec, max_layers=1))
    prod = a * b
    assert prod.is_homogeneous()
    assert prod.is_zero() or prod.weight == a.weight + b.weight


# ---------------------------------------------------------------- weight-module oracle


letters = st.sampled_from(["f", "D", "t", F(2), F(-1, 3)])


@settings(max_examples=80, deadline=None)
@given(specs(), st.lists(st.tuples(st.fractions(-2, 2, max_denominator=2), st.lists(letters, max_size=6)), min_size=1, max_size=3))
def test_normal_form_agrees_with_weight_module(spec, words):
    gens = {"f": spec.f, "D": spec.delta, "t": spec.theta}
    element = spec.zero()
    for coeff, word in words:
        term = spec.scalar(coeff)
        for letter in word:
            term = term * (gens[letter] if isinstance(letter, str) else spec.scalar(letter))
        element = element + term
    for s in (F(1, 3), F(-7, 5), F(11, 2)):
        module = WeightModule(spec.d, spec.lambdas, s)
        for n in range(-3, 4):
            vec = {n: F(1)}
            assert module.act_normal_form(element, vec) == module.act_sum(words, vec)


def test_weight_module_is_faithful_on_a_basis_element():
    spec = skew_preset(2)
    x = spec.f * spec.theta - spec.theta * spec.f + 2 * spec.f
    assert x.is_zero()
    module = WeightModule(2, [0, 2], F(1, 3))
    y = spec.delta * spec.f
    assert module.act_normal_form(y, {0: F(1)}) == {0: spec.b1(F(1, 3))}


# ---------------------------------------------------------------- ThetaPoly


def test_theta_poly_shift_and_eval():
    p = TP(1, -2, 3)  # 3t^2 - 2t + 1
    q = p.shift(F(1, 2))
    for x in range(-3, 4):
        assert q(x) == p(x + F(1, 2))


def test_pow_and_negative_exponent():
    spec = skew_preset(1)
    assert spec.f ** 3 == spec.f * spec.f * spec.f
    assert spec.theta ** 0 == 1
    with pytest.raises(ValueError):
        spec.f ** -1


def test_mixing_algebras_rejected():
    with pytest.raises(ValueError):
        skew_preset(1).f * skew_preset(2).f
