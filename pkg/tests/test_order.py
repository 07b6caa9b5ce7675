import itertools
import math

import pytest

from gaussorder.arith import factorize
from gaussorder.bounds import exact_bound_z3
from gaussorder.errors import BadConstant, GuardExceeded, ZeroConstant, ZeroElement
from gaussorder.field import (
    build_element,
    build_z,
    constant,
    gauss_period,
    make_params,
    monomial,
    one,
    theta,
    zero,
)
from gaussorder.order import (
    decompose_vw,
    element_order,
    subgroup_order_pair,
    verify_z_decomposition,
)


def brute_order(params, x):
    """Oracle: multiply until reaching 1."""
    assert not x.is_zero()
    acc = x
    for k in range(1, params.group_order + 1):
        if acc.is_one():
            return k
        acc = acc * x
    raise AssertionError("no order found")


class TestElementOrder:
    def test_known_values_f16(self):
        params = make_params(2, 5)
        x = build_element(params, 1, 1, 1)  # theta(theta + 1)
        assert brute_order(params, x) == 15
        assert element_order(params, x).order == 15
        gp = gauss_period(params)
        assert brute_order(params, gp) == 3
        assert element_order(params, gp).order == 3

    def test_matches_brute_force_everywhere(self):
        for p, r in ((2, 5), (3, 5)):
            params = make_params(p, r)
            fact = factorize(params.group_order)
            for e, f, a in itertools.product(range(r), range(1, r), range(1, p)):
                x = build_element(params, e, f, a)
                assert element_order(params, x, group_factorization=fact).order == brute_order(
                    params, x
                )

    def test_result_fields_and_minimality(self):
        params = make_params(5, 7)
        x = build_element(params, 0, 1, 2)
        result = element_order(params, x)
        assert result.group_order == 5**6 - 1 == 15624
        assert result.group_order_factorization.factors == ((2, 3), (3, 2), (7, 1), (31, 1))
        assert result.group_order % result.order == 0
        assert (x**result.order).is_one()
        for ell in factorize(result.order).primes:
            assert not (x ** (result.order // ell)).is_one()

    def test_order_of_one_and_theta(self):
        params = make_params(3, 5)
        assert element_order(params, one(params)).order == 1
        assert element_order(params, theta(params)).order == 5

    def test_zero_rejected(self):
        params = make_params(2, 5)
        with pytest.raises(ZeroElement):
            element_order(params, zero(params))

    def test_guard(self):
        params = make_params(11, 1009)
        with pytest.raises(GuardExceeded):
            element_order(params, theta(params))
        small = make_params(2, 5)
        with pytest.raises(GuardExceeded):
            element_order(small, theta(small), bit_guard=3)  # group order has 4 bits

    def test_factorization_mismatch_rejected(self):
        params = make_params(2, 5)
        with pytest.raises(ValueError):
            element_order(params, theta(params), group_factorization=factorize(7))

    def test_invariant_under_frobenius_conjugation(self):
        # ord(theta^e (theta^f + a)) = ord(theta^(e f^-1) (theta + a))
        for p, r in ((2, 5), (3, 5), (5, 7)):
            params = make_params(p, r)
            fact = factorize(params.group_order)
            for e, f, a in itertools.product(range(r), range(2, r), range(1, p)):
                x = build_element(params, e, f, a)
                g = e * pow(f, -1, r) % r
                y = build_element(params, g, 1, a)
                assert (
                    element_order(params, x, group_factorization=fact).order
                    == element_order(params, y, group_factorization=fact).order
                ), (p, r, e, f, a)


class TestSubgroupOrderPair:
    def test_lcm_of_generator_orders(self):
        params = make_params(2, 5)
        gp = gauss_period(params)  # order 3
        x = build_element(params, 1, 1, 1)  # order 15
        assert subgroup_order_pair(params, gp, x) == 15
        assert subgroup_order_pair(params, gp, gp) == 3
        assert subgroup_order_pair(params, x, one(params)) == 15

    def test_coprime_factors_multiply(self):
        params = make_params(5, 7)
        fact = factorize(params.group_order)
        z = build_z(params, 2)
        gp = gauss_period(params)
        o_z = element_order(params, z, group_factorization=fact).order
        o_gp = element_order(params, gp, group_factorization=fact).order
        assert subgroup_order_pair(params, z, gp) == math.lcm(o_z, o_gp)


class TestDecomposeVW:
    def test_frozen_f16_values(self):
        # brute-force values: base = theta(theta+1), p^s = 4,
        # v = base^3 = theta^2 and w = base^5 = theta^3 + theta^2 + 1
        params = make_params(2, 5)
        v, w = decompose_vw(params, 1, 1, check_powers=True)
        assert v.coeffs == (0, 0, 1, 0)
        assert w.coeffs == (1, 0, 1, 1)

    def test_closed_forms_match_big_powers(self):
        for p, r in ((2, 5), (3, 5), (5, 7), (3, 7)):
            params = make_params(p, r)
            for e, a in itertools.product(range(r), range(1, p)):
                decompose_vw(params, e, a, check_powers=True)  # raises on mismatch

    def test_w_independent_of_e(self):
        params = make_params(5, 7)
        w_values = {decompose_vw(params, e, 2)[1] for e in range(7)}
        assert len(w_values) == 1

    def test_product_identity(self):
        # v * w = theta^(-2(e+1)) (a theta + 1)^2
        for p, r in ((3, 5), (5, 7)):
            params = make_params(p, r)
            for e, a in itertools.product(range(r), range(1, p)):
                v, w = decompose_vw(params, e, a)
                linear = theta(params) * constant(params, a) + one(params)
                assert v * w == monomial(params, -2 * (e + 1)) * linear * linear

    def test_order_divisors(self):
        for p, r in ((2, 5), (3, 5), (5, 7)):
            params = make_params(p, r)
            fact = factorize(params.group_order)
            half = p ** params.s
            for e, a in itertools.product(range(r), range(1, p)):
                v, w = decompose_vw(params, e, a)
                if not v.is_zero():
                    assert (half + 1) % element_order(params, v, group_factorization=fact).order == 0
                if not w.is_zero():
                    assert (half - 1) % element_order(params, w, group_factorization=fact).order == 0

    def test_zero_constant_rejected(self):
        with pytest.raises(ZeroConstant):
            decompose_vw(make_params(3, 5), 0, 0)


class TestVerifyZDecomposition:
    def test_f56_instance(self):
        # exact orders in F_{5^6}: group order 15624
        params = make_params(5, 7)
        rep = verify_z_decomposition(params, 2)
        assert rep.branch == "mobius_squared"
        assert (rep.order_factor1, rep.order_factor2) == (31, 63)
        assert rep.order_z == 1953 == 31 * 63
        assert rep.orders_coprime and rep.product_matches
        assert rep.bound == 6 and rep.bound_satisfied
        assert rep.ok

    def test_all_desk_scale_instances(self):
        for p, r in ((5, 7), (7, 5), (13, 5), (5, 3), (7, 11)):
            params = make_params(p, r)
            fact = factorize(params.group_order)
            for a in range(2, p - 1):
                rep = verify_z_decomposition(params, a, group_factorization=fact)
                assert rep.ok, (p, r, a, rep)
                assert rep.order_z >= exact_bound_z3(p, r)

    def test_bad_constants(self):
        params = make_params(5, 7)
        for a in (0, 1, 4):
            with pytest.raises(BadConstant):
                verify_z_decomposition(params, a)
