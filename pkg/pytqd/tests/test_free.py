# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/9 15:20
# @Last Modified by: wqshen

import pytest
from pytqd.braid.free import (FreeAutomorphism, evaluate, format_word, free_group_on, psi_generator,
                              psi_word, substitute, tuple_to_pairs, x_letter)
from pytqd.group import make_quaternion8


class TestFreeWords:

    def test_reduction(self):
        g1, g2, x1, x2 = free_group_on(2).generators
        assert (g1 * g2 * g2 ** -1 * g1 ** -1).is_identity
        assert g1 * x1 * x1 ** -1 == g1
        w = g1 * x2 * g2 ** -1
        assert (w * w ** -1).is_identity
        assert format_word(w) == 'g1 x2 g2^-1'
        assert format_word(g1 ** 2) == 'g1 g1'
        assert format_word(free_group_on(2).identity) == '1'

    def test_evaluate(self):
        Q = make_quaternion8()
        g1, x1 = free_group_on(1).generators
        # i j i^-1 = -j
        assert evaluate(g1 * x1 * g1 ** -1, Q, [2, 4]) == 5
        assert evaluate(g1 ** 2, Q, [2, 4]) == Q.mul[2, 2]
        assert evaluate(free_group_on(1).identity, Q, [2, 4]) == 0

    def test_substitute_is_simultaneous(self):
        g1, g2, x1, x2 = free_group_on(2).generators
        swapped = substitute(g1 * g2 ** -1, [g2, g1, x1, x2])
        assert swapped == g2 * g1 ** -1


class TestPsi:

    def test_inverse_witness(self):
        for i in (1, 2, 3):
            psi = psi_generator(4, i)
            assert psi.check_witness()
            assert (psi @ psi.inverse()).is_identity()

    def test_braid_relations(self):
        assert psi_word(3, [1, 2, 1]).images == psi_word(3, [2, 1, 2]).images
        assert psi_word(4, [1, 3]).images == psi_word(4, [3, 1]).images
        assert psi_word(3, [1, -1]).is_identity()
        assert not psi_word(3, [1, 1]).is_identity()

    def test_generator_images(self):
        psi = psi_generator(2, 1)
        print(psi)
        assert str(psi).splitlines()[0] == 'g1 -> g1 x1 g1^-1 g2'
        assert psi.images[2] == x_letter(2, 2)
        assert psi_generator(4, 1).images[6] == x_letter(4, 3)

    def test_pairs(self):
        Q = make_quaternion8()
        # g = i, x = j: i j i^-1 = -j
        assert tuple_to_pairs(Q, 1, (2, 4)) == ((5, 2),)

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            psi_generator(3, 3)
        assert FreeAutomorphism.identity(2).is_identity()


if __name__ == '__main__':
    pytest.main(['-q', __file__])
