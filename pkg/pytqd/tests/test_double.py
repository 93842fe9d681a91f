# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/9 11:00
# @Last Modified by: wqshen

import pytest
from pytqd.cocycle import (coboundary, cyclic_cocycle, pair_product_cocycle, random_cochain, triple_product_cocycle,
                           trivial_cocycle)
from pytqd.double import (DoubleBasis, TwistedDouble, select_coproduct_reading, select_theta_variant)
from pytqd.group import make_cyclic, make_dihedral, make_product, make_quaternion8

SMALL_DOUBLES = [trivial_cocycle(make_cyclic(2)), cyclic_cocycle(2, 1),
                 trivial_cocycle(make_cyclic(3)), cyclic_cocycle(3, 1), cyclic_cocycle(3, 2),
                 trivial_cocycle(make_cyclic(4)), cyclic_cocycle(4, 1),
                 trivial_cocycle(make_product(make_cyclic(2), make_cyclic(2))), pair_product_cocycle(2)]


class TestAlgebra:

    def test_basis_product_support(self):
        D = TwistedDouble(trivial_cocycle(make_dihedral(3)))
        # r s r^-1 = r^2 s
        assert D.basis_mul(DoubleBasis(3, 1), DoubleBasis(3, 2)) is None
        e, b = D.basis_mul(DoubleBasis(5, 1), DoubleBasis(3, 2))
        assert e.is_one and b == DoubleBasis(5, 0)

    @pytest.mark.parametrize('w', [cyclic_cocycle(2, 1), cyclic_cocycle(4, 1), cyclic_cocycle(3, 2)])
    def test_associative_exhaustive(self, w):
        res = TwistedDouble(w).check_associativity()
        print(res)
        assert res

    def test_associative_sampled_triple_product(self):
        D = TwistedDouble(triple_product_cocycle(2))
        assert D.check_associativity(sample=3000, seed=2)
        assert D.check_coproduct(sample=300, seed=2)

    def test_unit(self):
        D = TwistedDouble(cyclic_cocycle(4, 1))
        assert D.check_unit()
        assert len(D.unit()) == 4

    @pytest.mark.parametrize('w', [trivial_cocycle(make_quaternion8()),
                                   coboundary(random_cochain(make_quaternion8(), 4, 1))])
    def test_quaternion_sampled(self, w):
        D = TwistedDouble(w)
        res = D.check_associativity(sample=100000, seed=8)
        print(res)
        assert res
        assert D.check_unit()
        assert D.check_coproduct(sample=20000, seed=8)
        assert D.check_r_inverse()


class TestCoalgebra:

    @pytest.mark.parametrize('w', [cyclic_cocycle(2, 1), cyclic_cocycle(4, 1)])
    def test_coproduct_multiplicative(self, w):
        assert TwistedDouble(w).check_coproduct()

    def test_counit_and_r_inverse(self):
        D = TwistedDouble(cyclic_cocycle(3, 1))
        assert D.check_counit()
        assert D.check_r_inverse()

    def test_coproduct_terms(self):
        D = TwistedDouble(cyclic_cocycle(2, 1))
        d = D.coproduct(DoubleBasis(1, 1))
        assert len(d) == 2
        assert {pair for pair, _ in d.items()} == {(DoubleBasis(0, 1), DoubleBasis(1, 1)),
                                                   (DoubleBasis(1, 1), DoubleBasis(0, 1))}


class TestSelftest:

    def test_run_selftest_nontrivial(self):
        results = TwistedDouble(cyclic_cocycle(4, 1)).run_selftest()
        for res in results:
            print(res.name, res.passed, res.witness)
        assert [r.name for r in results] == ['cocycle', 'theta identity', 'associativity', 'unit',
                                             'coproduct', 'R inverse', 'counit']
        assert all(results)

    @pytest.mark.parametrize('w', SMALL_DOUBLES, ids=lambda w: f"{w.group.name}-{w.name}")
    def test_run_selftest_small(self, w):
        results = TwistedDouble(w).run_selftest()
        for res in results:
            print(w.group.name, w.name, res.name, res.passed)
        assert all(results)

    def test_extended_untwisted(self):
        results = TwistedDouble(trivial_cocycle(make_cyclic(2))).run_selftest(extended=True)
        assert [r.name for r in results][-2:] == ['antipode', 'quasitriangular']
        assert all(results)

    def test_printed_theta_breaks_associativity(self):
        assert not TwistedDouble(cyclic_cocycle(2, 1), variant='printed').check_associativity()


class TestArbiters:

    def test_theta_variant(self):
        assert select_theta_variant() == 'standard'

    def test_coproduct_reading(self):
        assert select_coproduct_reading() == 'split'


if __name__ == '__main__':
    pytest.main(['-q', __file__])
