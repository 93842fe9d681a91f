# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/10 9:40
# @Last Modified by: wqshen

import itertools
import pytest
from pytqd.braid.monomial import MonomialOp
from pytqd.braid.representation import BraidRepresentation
from pytqd.cocycle import cyclic_cocycle, pair_product_cocycle, trivial_cocycle
from pytqd.group import make_cyclic, make_dihedral, make_product, make_symmetric
from pytqd.image import (AnalyzeOptions, IncompleteClosureError, analyze, close, coxeter_finite,
                         coxeter_table, element_order, gauge_experiment, is_power_of,
                         nilpotency_class_closure, prime_power)


def _brute_force_orbit():
    """closure of the 16-point label map of Z/2, trivial cocycle, two strands"""
    points = list(itertools.product(range(2), repeat=4))

    def f(p):
        x, a, y, b = p
        return y, (x + b) % 2, x, a

    gen = tuple(points.index(f(p)) for p in points)
    found = {tuple(range(16))}
    frontier = list(found)
    while frontier:
        nxt = []
        for perm in frontier:
            prod = tuple(gen[k] for k in perm)
            if prod not in found:
                found.add(prod)
                nxt.append(prod)
        frontier = nxt
    return found


class TestClosure:

    def test_cyclic_generator(self):
        op = MonomialOp(2, [1, 2, 3, 0], [1, 0, 0, 0])
        c = close([op])
        assert c.complete
        assert c.order == 8
        assert element_order(op) == 8
        assert c.index_of(op) == c.generators[0]

    def test_budget(self):
        rep = BraidRepresentation(cyclic_cocycle(2, 1), 3)
        c = close(rep.braid_generators(), max_elements=5)
        assert not c.complete
        assert c.order <= 5
        with pytest.raises(IncompleteClosureError):
            nilpotency_class_closure(c)

    def test_dihedral_image_class(self):
        s = MonomialOp(1, [0, 3, 2, 1], [0, 0, 0, 0])
        r = MonomialOp(1, [1, 2, 3, 0], [0, 0, 0, 0])
        c = close([r, s])
        assert c.order == 8
        assert nilpotency_class_closure(c) == 2

    def test_closure_is_closed(self):
        rep = BraidRepresentation(cyclic_cocycle(2, 1), 2)
        c = close(rep.braid_generators())
        assert c.complete
        for i in range(c.order):
            assert c.inverse(i) is not None
            for j in range(c.order):
                assert c.index_of(c.elements[i] @ c.elements[j]) is not None


class TestMicroOracle:

    def test_brute_force_orbit(self):
        assert len(_brute_force_orbit()) == 4

    def test_analyze(self):
        report = analyze(trivial_cocycle(make_cyclic(2)), 2)
        print(report.to_frame())
        assert report.braid_order == 4
        assert report.pure_order == 2
        assert report.pure_class == 1
        assert report.generator_order == 4
        assert report.square_order == 2
        assert report.diagonal_order == 1
        assert report.permutation_order == 2
        assert report.braid_order_p_power and report.pure_order_p_power
        assert report.coxeter_finite
        assert report.complete
        assert report.dim == 16


class TestPGroups:

    @pytest.mark.parametrize('w,n,p', [(cyclic_cocycle(2, 1), 2, 2), (cyclic_cocycle(2, 1), 3, 2),
                                       (cyclic_cocycle(4, 1), 2, 2), (trivial_cocycle(make_dihedral(4)), 2, 2),
                                       (trivial_cocycle(make_cyclic(3)), 2, 3), (cyclic_cocycle(3, 1), 2, 3),
                                       (cyclic_cocycle(3, 2), 2, 3),
                                       (trivial_cocycle(make_product(make_cyclic(2), make_cyclic(2))), 2, 2),
                                       (pair_product_cocycle(2), 2, 2)])
    def test_pure_image_is_p_group(self, w, n, p):
        report = analyze(w, n)
        print(report.to_dict())
        assert report.pure_complete
        assert report.group_p == p
        assert is_power_of(report.pure_order, p)
        assert report.pure_order_p_power
        assert is_power_of(report.square_order, p)
        assert report.pure_class is not None
        assert report.pure_order == report.diagonal_order * report.permutation_order
        assert report.dim == w.group.order ** (2 * n)

    def test_cyclic_three_orders(self):
        report = analyze(cyclic_cocycle(3, 1), 2)
        assert report.braid_complete
        assert (report.braid_order, report.pure_order, report.square_order) == (18, 9, 9)

    def test_non_p_group_is_reported(self):
        report = analyze(trivial_cocycle(make_symmetric(3)), 2, AnalyzeOptions(which='pure'))
        assert report.group_p is None
        assert report.braid_order is None
        assert report.pure_order >= 1

    def test_strand_count(self):
        with pytest.raises(ValueError):
            analyze(trivial_cocycle(make_cyclic(2)), 1)


class TestArithmetic:

    def test_prime_power(self):
        assert prime_power(32) == (2, 5)
        assert prime_power(12) is None
        assert prime_power(1) is None
        assert is_power_of(1, 3)
        assert not is_power_of(18, 3)

    def test_coxeter(self):
        assert coxeter_finite(3, 5)
        assert not coxeter_finite(3, 6)
        assert coxeter_finite(4, 3)
        assert not coxeter_finite(4, 4)
        assert coxeter_finite(2, 100)
        table = coxeter_table([2, 3, 4, 5, 6], [2, 3, 4, 5, 6])
        print(table)
        assert table.loc[5, 3] and not table.loc[6, 3]
        with pytest.raises(ValueError):
            coxeter_finite(1, 2)

    def test_coxeter_grid(self):
        table = coxeter_table(range(2, 11), range(1, 11))
        assert table.shape == (9, 10)
        for n, k in itertools.product(range(2, 11), range(1, 11)):
            expected = (n - 2) * (k - 2) < 4
            assert coxeter_finite(n, k) == expected, (n, k)
            assert bool(table.loc[n, k]) == expected, (n, k)
        assert int(table.values.sum()) == 31
        assert list(table.loc[3]) == [True] * 5 + [False] * 5


class TestGauge:

    def test_rows(self):
        rows = gauge_experiment(cyclic_cocycle(2, 1), 2, count=2, seed=4)
        assert len(rows) == 2
        assert all('match' in row for row in rows)


if __name__ == '__main__':
    pytest.main(['-q', __file__])
