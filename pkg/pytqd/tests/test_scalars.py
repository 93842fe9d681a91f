# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/9 9:00
# @Last Modified by: wqshen

import pytest
import numpy as np
from sympy import totient
from pytqd.scalars import (RootExponent, CycInt, ScalarDomainError, cyclotomic_poly, cyc_from_root,
                           cyc_is_zero, cyc_mul, cyc_one, cyc_sum, cyc_zero, cyc_eval_float)


class TestCyclotomic:

    def test_small_orders(self):
        assert cyclotomic_poly(1).all_coeffs() == [1, -1]
        assert cyclotomic_poly(2).all_coeffs() == [1, 1]
        assert cyclotomic_poly(4).all_coeffs() == [1, 0, 1]
        assert cyclotomic_poly(6).all_coeffs() == [1, -1, 1]
        print(cyclotomic_poly(12))
        assert cyclotomic_poly(12).degree() == 4

    def test_zero_detection(self):
        assert cyc_is_zero(CycInt(3, (1, 1, 1)))
        assert cyc_is_zero(CycInt(4, (1, 0, 1, 0)))
        assert not cyc_is_zero(CycInt(4, (1, 1, 0, 0)))
        assert cyc_is_zero(cyc_zero(5))

    @pytest.mark.parametrize('r', range(1, 25))
    def test_degree_is_totient(self, r):
        assert cyclotomic_poly(r).degree() == int(totient(r))

    def test_random_elements_agree_with_float(self):
        rng = np.random.default_rng(2024)
        zeros = 0
        for _ in range(1000):
            r = int(rng.integers(1, 25))
            c = CycInt(r, tuple(int(v) for v in rng.integers(-10, 11, size=r)))
            if rng.random() < 0.3:
                phi = np.zeros(r, dtype=int)
                for k, v in enumerate(reversed(cyclotomic_poly(r).all_coeffs())):
                    phi[k % r] += int(v)
                c = cyc_mul(c, CycInt(r, tuple(phi)))
            exact = cyc_is_zero(c)
            zeros += exact
            assert exact == (abs(cyc_eval_float(c)) < 1e-9), c
        print(f"{zeros} zero elements")
        assert zeros >= 100


class TestCycInt:

    def test_root_arithmetic(self):
        assert RootExponent(4, 6).e == 2
        assert -RootExponent(4, 1) == RootExponent(4, 3)
        assert (RootExponent(6, 5) + RootExponent(6, 2)).e == 1
        assert RootExponent(3, 3).is_one

    def test_equality_modulo_cyclotomic(self):
        a = CycInt(4, (0, 0, 1, 0))
        b = CycInt(4, (-1, 0, 0, 0))
        assert a == b
        assert hash(a) == hash(b)
        assert CycInt(4, (1, 0, 0, 0)).times_root(1).coeffs == (0, 1, 0, 0)

    def test_products(self):
        z = cyc_from_root(RootExponent(4, 1))
        z3 = cyc_from_root(RootExponent(4, 3))
        assert cyc_mul(z, z3) == cyc_one(4)
        total = cyc_sum(cyc_from_root(RootExponent(5, k)) for k in range(5))
        assert cyc_is_zero(total)
        assert abs(cyc_eval_float(total)) < 1e-12

    @pytest.mark.parametrize('r', [1, 2, 3, 4, 6, 12, 24])
    def test_root_times_conjugate_root(self, r):
        for e in range(r):
            z = cyc_from_root(RootExponent(r, e))
            w = cyc_from_root(RootExponent(r, r - e))
            assert cyc_mul(z, w) == cyc_one(r)
            assert cyc_mul(z, w).coeffs == cyc_one(r).coeffs

    def test_product_folds_high_powers(self):
        one_plus = CycInt(2, (1, 1))
        one_minus = CycInt(2, (1, -1))
        assert cyc_mul(one_plus, one_minus).coeffs == (0, 0)
        a = CycInt(5, (1, 2, 0, 0, 3))
        b = CycInt(5, (0, 0, 0, 1, 1))
        # (1 + 2z + 3z^4)(z^3 + z^4) = z^3 + 3z^4 + 2z^5 + 3z^7 + 3z^8
        assert cyc_mul(a, b).coeffs == (2, 0, 3, 4, 3)

    def test_domain_mismatch(self):
        with pytest.raises(ScalarDomainError):
            cyc_one(2) + cyc_one(3)
        with pytest.raises(ScalarDomainError):
            RootExponent(2, 1) + RootExponent(4, 1)


if __name__ == '__main__':
    pytest.main(['-q', __file__])
