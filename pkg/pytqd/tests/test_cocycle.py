# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/9 10:10
# @Last Modified by: wqshen

import pytest
import numpy as np
from pytqd.cocycle import (Cocycle3, CocycleFormatError, check_cocycle, check_theta_identity, coboundary,
                           cyclic_cocycle, from_cocycle_text, pair_product_cocycle, random_cochain, theta, theta_table,
                           triple_product_cocycle, trivial_cocycle)
from pytqd.group import make_cyclic, make_dihedral, make_quaternion8


class TestCocycleCondition:

    @pytest.mark.parametrize('m,q', [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)])
    def test_cyclic_family(self, m, q):
        w = cyclic_cocycle(m, q)
        assert w.is_normalized()
        assert check_cocycle(w)

    def test_triple_product(self):
        w = triple_product_cocycle(2)
        assert w.group.order == 8
        assert w(4, 2, 1) == 1
        assert check_cocycle(w)

    def test_perturbed_entry_fails(self):
        G = make_cyclic(3)
        table = np.zeros((3, 3, 3), dtype=int)
        table[1, 1, 1] = 1
        res = check_cocycle(Cocycle3(G, 3, table))
        print(res)
        assert not res
        assert res.witness == (1, 1, 1, 1)

    def test_coboundaries_are_cocycles(self):
        G = make_dihedral(3)
        mu = random_cochain(G, 4, 7)
        w = coboundary(mu)
        assert w.is_normalized()
        assert check_cocycle(w)
        assert check_cocycle(trivial_cocycle(G, 2) * w)

    @pytest.mark.parametrize('w', [cyclic_cocycle(4, 1), cyclic_cocycle(3, 1), pair_product_cocycle(2),
                                   triple_product_cocycle(2)])
    def test_twisted_by_coboundary(self, w):
        for seed in range(3):
            v = w * coboundary(random_cochain(w.group, 4, seed))
            assert v.r == int(np.lcm(w.r, 4))
            assert not v.is_trivial
            assert check_cocycle(v)

    def test_table_not_normalized(self):
        table = np.zeros((3, 3, 3), dtype=int)
        table[0, 1, 1] = 1
        with pytest.raises(ValueError, match=r'not normalized at \(0, 1, 1\)'):
            Cocycle3(make_cyclic(3), 3, table)
        table = np.zeros((4, 4, 4), dtype=int)
        table[2, 3, 0] = 5
        with pytest.raises(ValueError, match='not normalized'):
            Cocycle3.from_table(make_cyclic(4), 4, table)
        table[2, 3, 0] = 4
        assert Cocycle3.from_table(make_cyclic(4), 4, table).is_trivial

    def test_product_lifts_to_lcm(self):
        w = cyclic_cocycle(2, 1) * cyclic_cocycle(2, 1).lift(6)
        assert w.r == 6
        assert w(1, 1, 1) == 0


class TestTheta:

    @pytest.mark.parametrize('w', [cyclic_cocycle(4, 1), coboundary(random_cochain(make_quaternion8(), 4, 1))])
    def test_identity_standard(self, w):
        assert check_theta_identity(w, 'standard')

    def test_table_matches_scalar_formula(self):
        w = coboundary(random_cochain(make_dihedral(3), 5, 3))
        T = theta_table(w)
        for x, g, h in [(0, 1, 2), (3, 4, 5), (5, 5, 1), (2, 3, 3)]:
            assert T[x, g, h] == theta(w, x, g, h).e

    def test_trivial_cocycle_has_trivial_theta(self):
        assert not theta_table(trivial_cocycle(make_quaternion8())).any()


class TestCocycleFiles:

    def test_read(self):
        G = make_cyclic(2)
        w = from_cocycle_text(['# z2', 'r 2', '1 1 1 1'], G)
        assert np.array_equal(w.w, cyclic_cocycle(2, 1).w)
        assert from_cocycle_text(w.to_text().splitlines(), G).w[1, 1, 1] == 1

    def test_not_normalized(self):
        with pytest.raises(CocycleFormatError, match='not normalized'):
            from_cocycle_text(['r 2', '0 1 1 1'], make_cyclic(2))

    def test_bad_header(self):
        with pytest.raises(CocycleFormatError, match="expected 'r R'"):
            from_cocycle_text(['1 1 1 1'], make_cyclic(2))


if __name__ == '__main__':
    pytest.main(['-q', __file__])
