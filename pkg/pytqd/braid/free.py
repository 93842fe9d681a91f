# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/5 9:30
# @Last Modified by: wqshen
"""Free group F_2n on g_1..g_n, x_1..x_n and the braid action psi on it

Words are sympy ``FreeGroupElement``s, freely reduced on construction.
Generator k-1 of the group is g_k, generator n+k-1 is x_k.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple
from sympy.combinatorics.free_groups import FreeGroup, FreeGroupElement, free_group
from ..group import FiniteGroup


@lru_cache(maxsize=None)
def free_group_on(n: int) -> FreeGroup:
    """F_2n with symbols g1..gn, x1..xn"""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    names = [f"g{k}" for k in range(1, n + 1)] + [f"x{k}" for k in range(1, n + 1)]
    return free_group(', '.join(names))[0]


def g_letter(n: int, i: int) -> FreeGroupElement:
    return free_group_on(n).generators[i - 1]


def x_letter(n: int, i: int) -> FreeGroupElement:
    return free_group_on(n).generators[n + i - 1]


def _positions(word: FreeGroupElement) -> Iterable[Tuple[int, int]]:
    """(generator position, exponent) syllables of a word"""
    symbols = word.group.symbols
    for sym, e in word.array_form:
        yield symbols.index(sym), int(e)


def substitute(word: FreeGroupElement, images: Sequence[FreeGroupElement]) -> FreeGroupElement:
    """replace generator k by images[k], simultaneously"""
    out = word.group.identity
    for k, e in _positions(word):
        out = out * images[k] ** e
    return out


def evaluate(word: FreeGroupElement, G: FiniteGroup, values: Sequence[int]) -> int:
    """image under the homomorphism sending generator k to values[k]"""
    out = 0
    for k, e in _positions(word):
        v = int(values[k]) if e > 0 else int(G.inv[values[k]])
        for _ in range(abs(e)):
            out = int(G.mul[out, v])
    return out


def format_word(word: FreeGroupElement) -> str:
    if word.is_identity:
        return '1'
    out = []
    for sym, e in word.array_form:
        out.extend([f"{sym}^-1" if e < 0 else str(sym)] * abs(int(e)))
    return ' '.join(out)


@dataclass(frozen=True)
class FreeAutomorphism:
    """automorphism of F_2n by its generator images, with the inverse images as witness"""
    n: int
    images: Tuple[FreeGroupElement, ...]
    inverse_images: Tuple[FreeGroupElement, ...]

    def __post_init__(self):
        if len(self.images) != 2 * self.n or len(self.inverse_images) != 2 * self.n:
            raise ValueError(f"automorphism of F_{2 * self.n} needs {2 * self.n} generator images")

    @classmethod
    def identity(cls, n: int) -> 'FreeAutomorphism':
        gens = tuple(free_group_on(n).generators)
        return cls(n, gens, gens)

    def apply(self, word: FreeGroupElement) -> FreeGroupElement:
        return substitute(word, self.images)

    def compose(self, other: 'FreeAutomorphism') -> 'FreeAutomorphism':
        """self o other, other acts first"""
        if self.n != other.n:
            raise ValueError("automorphisms of different free groups")
        images = tuple(self.apply(w) for w in other.images)
        inverse_images = tuple(other.inverse().apply(w) for w in self.inverse_images)
        return FreeAutomorphism(self.n, images, inverse_images)

    def __matmul__(self, other: 'FreeAutomorphism') -> 'FreeAutomorphism':
        return self.compose(other)

    def inverse(self) -> 'FreeAutomorphism':
        return FreeAutomorphism(self.n, self.inverse_images, self.images)

    def is_identity(self) -> bool:
        return self.images == tuple(free_group_on(self.n).generators)

    def check_witness(self) -> bool:
        """composing with the stored inverse gives the identity on both sides"""
        inv = self.inverse()
        return self.compose(inv).is_identity() and inv.compose(self).is_identity()

    def tuple_action(self, G: FiniteGroup, t: Sequence[int]) -> Tuple[int, ...]:
        """new tuple (g_1..g_n, x_1..x_n) obtained by evaluating the images at t"""
        return tuple(evaluate(w, G, t) for w in self.images)

    def __str__(self):
        gens = free_group_on(self.n).generators
        return '\n'.join(f"{format_word(g)} -> {format_word(w)}" for g, w in zip(gens, self.images))


def psi_generator(n: int, i: int) -> FreeAutomorphism:
    """psi(beta_i): x_i <-> x_{i+1}, g_i -> g_i x_i g_i^-1 g_{i+1}, g_{i+1} -> g_i"""
    if not 1 <= i < n:
        raise IndexError(f"strand index {i} out of range for n={n}")
    gi, gj = g_letter(n, i), g_letter(n, i + 1)
    xi, xj = x_letter(n, i), x_letter(n, i + 1)
    images = list(free_group_on(n).generators)
    inverse = list(images)
    images[i - 1] = gi * xi * gi ** -1 * gj
    images[i] = gi
    images[n + i - 1] = xj
    images[n + i] = xi
    inverse[i - 1] = gj
    inverse[i] = gj * xj ** -1 * gj ** -1 * gi
    inverse[n + i - 1] = xj
    inverse[n + i] = xi
    return FreeAutomorphism(n, tuple(images), tuple(inverse))


def psi_word(n: int, word: Iterable[int]) -> FreeAutomorphism:
    """psi of a braid word, letters +-i for beta_i^{+-1}"""
    out = FreeAutomorphism.identity(n)
    for s in word:
        gen = psi_generator(n, abs(s))
        out = out @ (gen if s > 0 else gen.inverse())
    return out


def psi_tuple_action(G: FiniteGroup, n: int, i: int, t: Sequence[int]) -> Tuple[int, ...]:
    if len(t) != 2 * n:
        raise ValueError(f"tuple of length {len(t)}, expected {2 * n}")
    return psi_generator(n, i).tuple_action(G, t)


def tuple_to_pairs(G: FiniteGroup, n: int, t: Sequence[int]) -> Tuple[Tuple[int, int], ...]:
    """(g, x) -> (g x g^-1, g) per position, the delta_x g labels of the regular module"""
    return tuple((G.conj(t[p], t[n + p]), int(t[p])) for p in range(n))
