import random

import pytest

from russell.quotient import RING_A, RING_B, RingMismatchError
from russell.sampling import random_nonzero_element
from russell.weights import (WEIGHTS, deg, deg_laurent_oracle, gr,
                             homogeneous_components, is_homogeneous,
                             monomial_weight, weight_components)


def test_generator_degrees():
    assert deg(RING_A.nf("x")) == -1
    assert deg(RING_A.nf("y")) == 2
    assert deg(RING_A.nf("z")) == 0
    assert deg(RING_A.nf("t")) == 0
    assert deg(RING_A.nf("1")) == 0


def test_deg_of_zero_is_none():
    assert deg(RING_A.zero()) is None
    assert deg_laurent_oracle(RING_A.zero()) is None


def test_deg_golden_x2y():
    # nf(x^2*y) = -x - z^3 - t^2 has top weight 0, not -1 + 2
    assert deg(RING_A.nf("x^2*y")) == 0


def test_oracle_matches_on_generators_and_products():
    for text in ("x", "y", "z", "t", "x^2*y", "x*y", "y^3", "x^5", "x^2*y + t"):
        a = RING_A.nf(text)
        assert deg(a) == deg_laurent_oracle(a)


def test_oracle_matches_on_random_elements():
    rng = random.Random(41)
    for _ in range(60):
        a = random_nonzero_element(RING_A, rng)
        assert deg(a) == deg_laurent_oracle(a)


def test_oracle_only_for_ring_a():
    with pytest.raises(RingMismatchError):
        deg_laurent_oracle(RING_B.nf("x"))


def test_deg_additive_under_products():
    rng = random.Random(43)
    for _ in range(40):
        a = random_nonzero_element(RING_A, rng, max_terms=4, max_degree=4)
        b = random_nonzero_element(RING_A, rng, max_terms=4, max_degree=4)
        assert deg(a * b) == deg(a) + deg(b)


def test_deg_subadditive_under_sums():
    rng = random.Random(47)
    for _ in range(40):
        a = random_nonzero_element(RING_A, rng)
        b = random_nonzero_element(RING_A, rng)
        s = a + b
        if not s.poly.is_zero:
            assert deg(s) <= max(deg(a), deg(b))


def test_gr_goldens():
    assert gr(RING_A.nf("x")) == RING_B.nf("x")
    assert gr(RING_A.nf("y + x")) == RING_B.nf("y")
    assert gr(RING_A.nf("x^2*y")) == RING_B.nf("-1*z^3 + -1*t^2")
    assert str(gr(RING_A.nf("x^2*y"))) == "-1*z^3 + -1*t^2"


def test_gr_of_zero_rejected():
    with pytest.raises(ValueError):
        gr(RING_A.zero())
    with pytest.raises(RingMismatchError):
        gr(RING_B.nf("x"))


def test_gr_multiplicative():
    rng = random.Random(53)
    for _ in range(40):
        a = random_nonzero_element(RING_A, rng, max_terms=4, max_degree=4)
        b = random_nonzero_element(RING_A, rng, max_terms=4, max_degree=4)
        assert gr(a * b) == gr(a) * gr(b)


def test_gr_lands_in_homogeneous_part():
    rng = random.Random(59)
    for _ in range(30):
        a = random_nonzero_element(RING_A, rng)
        assert is_homogeneous(gr(a), deg(a))


def test_relation_of_b_is_homogeneous():
    assert is_homogeneous(RING_B.relation, 0)
    assert not is_homogeneous(RING_A.relation, 0)  # the x term has weight -1


def test_weight_components_partition():
    f = RING_A.ctx.var("x") + RING_A.ctx.var("y") + RING_A.ctx.var("z")
    parts = weight_components(f)
    assert sorted(parts) == [-1, 0, 2]
    assert parts[-1] == RING_A.ctx.var("x")
    assert sum(parts.values(), RING_A.ctx.zero()) == f


def test_homogeneous_components_golden():
    b = RING_B.nf("x + y + z + x*y")
    comps = homogeneous_components(b)
    assert [n for n, _ in comps] == [-1, 0, 1, 2]
    assert all(is_homogeneous(part, n) for n, part in comps)
    total = RING_B.zero()
    for _, part in comps:
        total = total + part
    assert total == b


def test_homogeneous_components_random_reconstruction():
    rng = random.Random(61)
    for _ in range(30):
        b = random_nonzero_element(RING_B, rng)
        comps = homogeneous_components(b)
        total = RING_B.zero()
        for n, part in comps:
            assert is_homogeneous(part, n)
            total = total + part
        assert total == b


def test_homogeneous_components_only_for_ring_b():
    with pytest.raises(RingMismatchError):
        homogeneous_components(RING_A.nf("x"))


def test_zero_is_homogeneous_of_every_degree():
    for n in (-3, 0, 5):
        assert is_homogeneous(RING_B.zero(), n)


def test_monomial_weight():
    ctx = RING_A.ctx
    assert monomial_weight(ctx, (2, 1, 0, 0)) == 0
    assert monomial_weight(ctx, (0, 3, 1, 4)) == 6
    assert WEIGHTS == {"x": -1, "y": 2, "z": 0, "t": 0}
