# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/2 10:40
# @Last Modified by: wqshen

import numpy as np
from functools import lru_cache
from typing import Tuple, Iterable, Union
from dataclasses import dataclass
from sympy import Poly, Symbol, divisors, ZZ

_x = Symbol('x')


class ScalarDomainError(ValueError):
    """scalars living in different root-of-unity groups were combined"""


def _check_domain(a, b):
    if a.r != b.r:
        raise ScalarDomainError(f"incompatible scalar domains: mu_{a.r} and mu_{b.r}")


@dataclass(frozen=True)
class RootExponent:
    """The root of unity zeta_r ** e, zeta_r = exp(2 pi i / r)"""
    r: int
    e: int = 0

    def __post_init__(self):
        if int(self.r) < 1:
            raise ValueError(f"r must be a positive integer, got {self.r}")
        object.__setattr__(self, 'r', int(self.r))
        object.__setattr__(self, 'e', int(self.e) % int(self.r))

    def __add__(self, other: 'RootExponent') -> 'RootExponent':
        _check_domain(self, other)
        return RootExponent(self.r, self.e + other.e)

    def __neg__(self) -> 'RootExponent':
        return RootExponent(self.r, -self.e)

    def __sub__(self, other: 'RootExponent') -> 'RootExponent':
        return self + (-other)

    @property
    def is_one(self) -> bool:
        return self.e == 0

    def __repr__(self):
        return f"zeta_{self.r}^{self.e}"


@lru_cache(maxsize=None)
def cyclotomic_poly(r: int) -> Poly:
    """r-th cyclotomic polynomial over the integers

    Computed as (x**r - 1) divided exactly by Phi_d for every proper divisor d of r.

    Parameters
    ----------
    r: int
        positive integer

    Returns
    -------
    phi: sympy.Poly
        Phi_r in x with integer coefficients
    """
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    poly = Poly(_x ** r - 1, _x, domain=ZZ)
    for d in divisors(r)[:-1]:
        poly = poly.exquo(cyclotomic_poly(d))
    return poly


@lru_cache(maxsize=65536)
def _reduce(r: int, coeffs: Tuple[int, ...]) -> Tuple[int, ...]:
    """coefficients of sum(coeffs[k] x**k) mod Phi_r, padded to length r"""
    if not any(coeffs):
        return coeffs
    poly = Poly(list(reversed(coeffs)), _x, domain=ZZ)
    rem = poly.rem(cyclotomic_poly(r))
    low_first = [int(c) for c in reversed(rem.all_coeffs())]
    return tuple(low_first + [0] * (r - len(low_first)))


@dataclass(frozen=True, eq=False)
class CycInt:
    """Integer combination sum(coeffs[k] * zeta_r ** k)"""
    r: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != int(self.r):
            raise ValueError(f"CycInt over mu_{self.r} needs {self.r} coefficients, "
                             f"got {len(coeffs)}")
        object.__setattr__(self, 'r', int(self.r))
        object.__setattr__(self, 'coeffs', coeffs)

    def canonical(self) -> Tuple[int, ...]:
        return _reduce(self.r, self.coeffs)

    def times_root(self, e: int) -> 'CycInt':
        """multiply by zeta_r ** e"""
        e = int(e) % self.r
        if e == 0:
            return self
        return CycInt(self.r, self.coeffs[-e:] + self.coeffs[:-e])

    def __add__(self, other: 'CycInt') -> 'CycInt':
        return cyc_add(self, other)

    def __sub__(self, other: 'CycInt') -> 'CycInt':
        return cyc_sub(self, other)

    def __neg__(self) -> 'CycInt':
        return cyc_neg(self)

    def __mul__(self, other: 'CycInt') -> 'CycInt':
        return cyc_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycInt):
            return NotImplemented
        _check_domain(self, other)
        return self.coeffs == other.coeffs or cyc_is_zero(cyc_sub(self, other))

    def __hash__(self):
        return hash((self.r, self.canonical()))

    def __repr__(self):
        terms = [f"{c}*z^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"CycInt(r={self.r}: {' + '.join(terms) or '0'})"


def cyc_zero(r: int) -> CycInt:
    return CycInt(r, (0,) * r)


def cyc_one(r: int) -> CycInt:
    return cyc_from_root(RootExponent(r, 0))


def cyc_from_root(e: RootExponent) -> CycInt:
    """unit vector at index e"""
    coeffs = [0] * e.r
    coeffs[e.e] = 1
    return CycInt(e.r, tuple(coeffs))


def cyc_add(a: CycInt, b: CycInt) -> CycInt:
    _check_domain(a, b)
    return CycInt(a.r, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def cyc_neg(a: CycInt) -> CycInt:
    return CycInt(a.r, tuple(-x for x in a.coeffs))


def cyc_sub(a: CycInt, b: CycInt) -> CycInt:
    _check_domain(a, b)
    return CycInt(a.r, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def cyc_mul(a: CycInt, b: CycInt) -> CycInt:
    """product with exponent indices taken mod r"""
    _check_domain(a, b)
    r = a.r
    full = np.convolve(np.asarray(a.coeffs, dtype=np.int64), np.asarray(b.coeffs, dtype=np.int64))
    # fold x**(r + k) onto x**k
    out = full[:r].copy()
    out[:r - 1] += full[r:]
    return CycInt(r, tuple(int(c) for c in out))


def cyc_is_zero(c: CycInt) -> bool:
    """True iff sum(coeffs[k] x**k) is divisible by Phi_r"""
    return not any(_reduce(c.r, c.coeffs))


def cyc_eval_float(c: CycInt) -> complex:
    """evaluate at zeta_r = exp(2 pi i / r); a cross-check only, never an equality test"""
    roots = np.exp(2j * np.pi * np.arange(c.r) / c.r)
    return complex(np.dot(np.asarray(c.coeffs, dtype=float), roots))


def cyc_sum(values: Iterable[CycInt], r: Union[int, None] = None) -> CycInt:
    values = list(values)
    if not values:
        if r is None:
            raise ValueError("empty sum needs r")
        return cyc_zero(r)
    total = values[0]
    for v in values[1:]:
        total = cyc_add(total, v)
    return total
