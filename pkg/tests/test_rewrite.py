"""Normal ordering: correctness, confluence, involution, ideal membership."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import gen_polynomials, polynomials, sample_tensors
from wickalg import (
    CoeffTensor,
    Polynomial,
    Scalar,
    ideal_membership,
    is_normal,
    make_preset,
    rational,
    verify_identity,
    wick_order,
)
from wickalg.rewrite import TermBudgetExceeded

TENSORS = sample_tensors()


def test_is_normal():
    assert is_normal(())
    assert is_normal((1, 2, -1, -2))
    assert not is_normal((-1, 1))
    assert not is_normal((1, -1, 2))


def test_single_relation_examples():
    q = rational(1, 2)
    T = make_preset("qccr", 2, q=q).tensor
    # a1† a1 = 1 + q a1 a1†
    out = wick_order(Polynomial.monomial((-1, 1)), T)
    assert out == Polynomial.unit() + Polynomial.monomial((1, -1), Scalar(q))
    # a1† a2 = q a2 a1†
    out = wick_order(Polynomial.monomial((-1, 2)), T)
    assert out == Polynomial.monomial((2, -1), Scalar(q))

    T = make_preset("tlw", 2, q=q).tensor
    # a1† a2 = q a1 a2†
    out = wick_order(Polynomial.monomial((-1, 2)), T)
    assert out == Polynomial.monomial((1, -2), Scalar(q))


def test_normal_words_are_fixed_points():
    T = TENSORS[1]
    p = Polynomial.monomial((1, 2, -1)) + Polynomial.unit().scale(3)
    assert wick_order(p, T) == p


def test_zero_tensor_annihilates_crossings():
    T = CoeffTensor(2)
    assert wick_order(Polynomial.monomial((-1, 2)), T).is_zero
    assert wick_order(Polynomial.monomial((-1, 1)), T) == Polynomial.unit()


def test_result_is_always_normal():
    for T in TENSORS:
        out = wick_order(Polynomial.monomial((-1, 2, -2, 1)), T)
        assert all(is_normal(w) for w in out.terms)


def test_index_out_of_range():
    T = CoeffTensor(2)
    with pytest.raises(ValueError):
        wick_order(Polynomial.monomial((3,)), T)


def test_term_budget():
    T = make_preset("qccr", 2, q=2).tensor
    big = Polynomial.monomial((-1, -2, -1, 1, 2, 1))
    with pytest.raises(TermBudgetExceeded):
        wick_order(big, T, cap=2)
    with pytest.raises(TermBudgetExceeded):
        wick_order(big, T, strategy="rightmost", cap=2)


@settings(max_examples=60, deadline=None)
@given(
    polynomials(2, max_len=4, max_terms=3),
    st.integers(min_value=0, max_value=len(TENSORS) - 1),
    st.integers(min_value=0, max_value=2**16),
)
def test_confluence_strategies_agree(p, ti, seed):
    T = TENSORS[ti]
    left = wick_order(p, T)
    assert wick_order(p, T, strategy="rightmost") == left
    assert wick_order(p, T, strategy="random", rng=random.Random(seed)) == left


@settings(max_examples=60, deadline=None)
@given(
    polynomials(2, max_len=4, max_terms=3),
    st.integers(min_value=0, max_value=len(TENSORS) - 1),
)
def test_involution_compatibility(p, ti):
    # All sample tensors are hermitian, so normal ordering commutes with *.
    T = TENSORS[ti]
    assert wick_order(p.adjoint(), T) == wick_order(p, T).adjoint()


@settings(max_examples=40, deadline=None)
@given(
    polynomials(2, max_len=3, max_terms=2),
    polynomials(2, max_len=3, max_terms=2),
    st.integers(min_value=0, max_value=len(TENSORS) - 1),
)
def test_order_is_ring_homomorphism_on_normal_forms(p, q, ti):
    # Normalizing a product equals normalizing the product of normal forms.
    T = TENSORS[ti]
    assert wick_order(p * q, T) == wick_order(wick_order(p, T) * wick_order(q, T), T)


def test_verify_identity():
    mu = rational(1, 2)
    T = make_preset("twisted_ccr", 2, mu=mu).tensor
    # a1† a2 = mu a2 a1† holds in the twisted algebra
    lhs = Polynomial.monomial((-1, 2))
    rhs = Polynomial.monomial((2, -1), Scalar(mu))
    assert verify_identity(lhs, rhs, T)
    assert not verify_identity(lhs, rhs.scale(2), T)


def test_non_hermitian_inline_tensor_identity():
    # A deliberately non-hermitian two-generator relation family where
    # a1†(a1† - a2†)(a1 - a2)a1 collapses to the constant 1 - mu.
    for mu in (rational(1, 2), rational(1, 3)):
        T = CoeffTensor(2, {(1, 2, 1, 1): Scalar(mu), (2, 1, 1, 1): Scalar(1)})
        a1d = Polynomial.adjoint_generator(1)
        a2d = Polynomial.adjoint_generator(2)
        a1 = Polynomial.generator(1)
        a2 = Polynomial.generator(2)
        p = a1d * (a1d - a2d) * (a1 - a2) * a1
        expect = Polynomial.unit().scale(Scalar(1) - Scalar(mu))
        assert wick_order(p, T) == expect


# -- ideal membership -----------------------------------------------------------


def test_ideal_membership_examples():
    mu = Scalar(rational(1, 2))
    g = Polynomial.monomial((1, 2)) - Polynomial.monomial((2, 1), mu)
    a1 = Polynomial.generator(1)
    a2 = Polynomial.generator(2)
    assert ideal_membership(a1 * g + g * a2, [g], max_deg=3, d=2)
    assert ideal_membership(g.scale(Scalar(0, 3)), [g], max_deg=2, d=2)
    assert not ideal_membership(Polynomial.monomial((1, 2)), [g], max_deg=2, d=2)
    assert not ideal_membership(a1, [g], max_deg=3, d=2)
    assert ideal_membership(Polynomial.zero(), [g], max_deg=2, d=2)


def test_ideal_membership_validation():
    g = Polynomial.monomial((1, 2))
    with pytest.raises(ValueError):
        ideal_membership(Polynomial.monomial((-1,)), [g], max_deg=2, d=2)
    with pytest.raises(ValueError):
        ideal_membership(Polynomial.monomial((1, 1, 1)), [g], max_deg=2, d=2)


@settings(max_examples=30, deadline=None)
@given(
    gen_polynomials(2, max_len=1, max_terms=2),
    gen_polynomials(2, max_len=1, max_terms=2),
)
def test_ideal_membership_closed_under_multiplication(u, v):
    # u·g·v is in the ideal by construction.
    g = Polynomial.monomial((1, 1)) - Polynomial.monomial((2, 2))
    p = u * g * v
    assert ideal_membership(p, [g], max_deg=4, d=2)
