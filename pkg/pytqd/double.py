# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/3 9:10
# @Last Modified by: wqshen

import itertools
import numpy as np
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple
from logzero import logger
from .cocycle import (Cocycle3, THETA_VARIANTS, theta_table, gamma_table, check_cocycle,
                      check_theta_identity, cyclic_cocycle)
from .checks import CheckResult
from .scalars import CycInt, RootExponent, cyc_add, cyc_mul, cyc_one, cyc_is_zero
from .settings import SETTINGS

COPRODUCT_READINGS = ('split', 'printed')


class DoubleBasis(NamedTuple):
    """basis element delta_x g of the double"""
    x: int
    g: int


Pair = Tuple[DoubleBasis, DoubleBasis]


@dataclass
class _Sparse:
    r: int
    terms: Dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {k: c for k, c in self.terms.items() if not cyc_is_zero(c)}

    @classmethod
    def monomial(cls, r: int, key, e: int = 0):
        return cls(r, {key: cyc_one(r).times_root(e)})

    def __add__(self, other):
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(acc, k, c)
        return type(self)(self.r, acc)

    def __sub__(self, other):
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(acc, k, -c)
        return type(self)(self.r, acc)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return not (self - other).terms

    def scaled(self, e: int):
        """multiply every coefficient by zeta_r ** e"""
        return type(self)(self.r, {k: c.times_root(e) for k, c in self.terms.items()})

    def __len__(self):
        return len(self.terms)

    def items(self):
        """terms in canonical basis order"""
        return sorted(self.terms.items())


class AlgElement(_Sparse):
    """exact element of the double, sparse in the delta_x g basis"""


class TensorElement(_Sparse):
    """exact element of the tensor square, keyed by basis pairs"""

    def flip(self) -> 'TensorElement':
        return TensorElement(self.r, {(b, a): c for (a, b), c in self.terms.items()})


def _accumulate(acc: dict, key, coeff: CycInt):
    if key in acc:
        acc[key] = cyc_add(acc[key], coeff)
    else:
        acc[key] = coeff


class TwistedDouble(object):
    """the quasi-Hopf algebra D^omega(G) of a normalized 3-cocycle

    Parameters
    ----------
    cocycle: Cocycle3
        normalized 3-cocycle omega on G
    variant: str
        theta convention, 'standard' or 'printed', settings default when None
    reading: str
        coproduct second factor, 'split' (delta_z) or 'printed' (delta_x)
    """

    def __init__(self, cocycle: Cocycle3, variant: Optional[str] = None, reading: Optional[str] = None):
        self.cocycle = cocycle
        self.group = cocycle.group
        self.r = cocycle.r
        self.variant = variant or SETTINGS['theta_variant']
        self.reading = reading or SETTINGS['coproduct_reading']
        if self.variant not in THETA_VARIANTS:
            raise ValueError(f"unknown theta variant {self.variant!r}")
        if self.reading not in COPRODUCT_READINGS:
            raise ValueError(f"unknown coproduct reading {self.reading!r}")
        self.theta = theta_table(cocycle, self.variant)
        self.gamma = gamma_table(cocycle)
        self._conj = self.group.conj_table()

    def __repr__(self):
        return f"TwistedDouble({self.group.name}, {self.cocycle.name}, {self.variant}, {self.reading})"

    @property
    def dimension(self) -> int:
        return self.group.order ** 2

    def basis(self) -> List[DoubleBasis]:
        n = self.group.order
        return [DoubleBasis(x, g) for x in range(n) for g in range(n)]

    # ----------------------------------------------------------------- algebra

    def basis_mul(self, b1: DoubleBasis, b2: DoubleBasis) -> Optional[Tuple[RootExponent, DoubleBasis]]:
        """(delta_x g)(delta_y h) = theta_x(g, h) [x = g y g^-1] delta_x gh"""
        x, g = b1
        y, h = b2
        if x != self._conj[g, y]:
            return None
        return RootExponent(self.r, self.theta[x, g, h]), DoubleBasis(x, int(self.group.mul[g, h]))

    def mul(self, a: AlgElement, b: AlgElement) -> AlgElement:
        acc = {}
        for k1, c1 in a.terms.items():
            for k2, c2 in b.terms.items():
                prod = self.basis_mul(k1, k2)
                if prod is not None:
                    e, k = prod
                    _accumulate(acc, k, cyc_mul(c1, c2).times_root(e.e))
        return AlgElement(self.r, acc)

    def tensor_mul(self, A: TensorElement, B: TensorElement) -> TensorElement:
        """(a (x) b)(c (x) d) = ac (x) bd"""
        acc = {}
        for (a1, a2), c1 in A.terms.items():
            for (b1, b2), c2 in B.terms.items():
                p1 = self.basis_mul(a1, b1)
                if p1 is None:
                    continue
                p2 = self.basis_mul(a2, b2)
                if p2 is None:
                    continue
                _accumulate(acc, (p1[1], p2[1]), cyc_mul(c1, c2).times_root(p1[0].e + p2[0].e))
        return TensorElement(self.r, acc)

    def element(self, b: DoubleBasis, e: int = 0) -> AlgElement:
        return AlgElement.monomial(self.r, DoubleBasis(*b), e)

    def unit(self) -> AlgElement:
        """sum_g delta_g e"""
        one = cyc_one(self.r)
        return AlgElement(self.r, {DoubleBasis(g, 0): one for g in range(self.group.order)})

    def tensor_unit(self) -> TensorElement:
        u = self.unit()
        return self.tensor(u, u)

    def tensor(self, a: AlgElement, b: AlgElement) -> TensorElement:
        acc = {}
        for k1, c1 in a.terms.items():
            for k2, c2 in b.terms.items():
                _accumulate(acc, (k1, k2), cyc_mul(c1, c2))
        return TensorElement(self.r, acc)

    # --------------------------------------------------------------- coalgebra

    def coproduct(self, b: DoubleBasis, reading: Optional[str] = None) -> TensorElement:
        """Delta(delta_x g) = sum_{yz=x} gamma_g(y, z) delta_y g (x) delta_z g"""
        reading = reading or self.reading
        x, g = b
        G = self.group
        acc = {}
        for y in range(G.order):
            z = int(G.mul[G.inv[y], x])
            second = DoubleBasis(z if reading == 'split' else x, g)
            _accumulate(acc, (DoubleBasis(y, g), second),
                        cyc_one(self.r).times_root(self.gamma[g, y, z]))
        return TensorElement(self.r, acc)

    def coproduct_element(self, a: AlgElement, reading: Optional[str] = None) -> TensorElement:
        acc = {}
        for k, c in a.terms.items():
            for pair, d in self.coproduct(k, reading).terms.items():
                _accumulate(acc, pair, cyc_mul(c, d))
        return TensorElement(self.r, acc)

    def counit(self, b: DoubleBasis) -> int:
        """epsilon(delta_x g) = [x = e]"""
        return int(b[0] == 0)

    def antipode(self, b: DoubleBasis) -> Tuple[RootExponent, DoubleBasis]:
        """S(delta_x g) with alpha = 1"""
        x, g = b
        G = self.group
        gi = int(G.inv[g])
        xi = int(G.inv[x])
        target = G.m(gi, xi, g)
        e = -int(self.gamma[g, x, xi]) - int(self.theta[target, gi, g])
        return RootExponent(self.r, e), DoubleBasis(target, gi)

    def beta_element(self) -> AlgElement:
        """sum_g omega(g, g^-1, g) delta_g e"""
        G = self.group
        one = cyc_one(self.r)
        return AlgElement(self.r, {DoubleBasis(g, 0): one.times_root(self.cocycle(g, int(G.inv[g]), g))
                                   for g in range(G.order)})

    # -------------------------------------------------------------- braiding

    def r_matrix(self) -> TensorElement:
        """R = sum_{g,y} delta_g e (x) delta_y g"""
        n = self.group.order
        one = cyc_one(self.r)
        return TensorElement(self.r, {(DoubleBasis(g, 0), DoubleBasis(y, g)): one
                                      for g in range(n) for y in range(n)})

    def r_matrix_inv(self) -> TensorElement:
        """R^-1 = sum_{g,h} theta_{ghg^-1}(g, g^-1)^-1 delta_g e (x) delta_h g^-1"""
        G = self.group
        one = cyc_one(self.r)
        terms = {}
        for g in range(G.order):
            gi = int(G.inv[g])
            for h in range(G.order):
                e = -int(self.theta[self._conj[g, h], g, gi])
                terms[(DoubleBasis(g, 0), DoubleBasis(h, gi))] = one.times_root(e)
        return TensorElement(self.r, terms)

    def associator_exponent(self, u: int, v: int, t: int, sign: Optional[int] = None) -> RootExponent:
        """scalar of (X Y) Z -> X (Y Z) on segments with x-products u, v, t"""
        sign = SETTINGS['associator_sign'] if sign is None else sign
        return RootExponent(self.r, sign * self.cocycle(u, v, t))

    # ---------------------------------------------------------------- checks

    def _basis_triples(self, sample: Optional[int], seed) -> Iterable[Tuple[DoubleBasis, ...]]:
        basis = self.basis()
        if sample is None:
            return itertools.product(basis, repeat=3)
        rng = np.random.default_rng(seed)
        idx = rng.integers(0, len(basis), size=(sample, 3))
        return ([basis[i] for i in row] for row in idx)

    def check_associativity(self, sample: Optional[int] = None, seed=0) -> CheckResult:
        """(ab)c = a(bc) over basis triples, exhaustive unless sample is given"""
        count = 0
        for a, b, c in self._basis_triples(sample, seed):
            count += 1
            left = right = None
            ab = self.basis_mul(a, b)
            if ab is not None:
                abc = self.basis_mul(ab[1], c)
                if abc is not None:
                    left = (ab[0] + abc[0], abc[1])
            bc = self.basis_mul(b, c)
            if bc is not None:
                abc = self.basis_mul(a, bc[1])
                if abc is not None:
                    right = (bc[0] + abc[0], abc[1])
            if left != right:
                return CheckResult('associativity', False, (a, b, c),
                                   f"(ab)c = {left}, a(bc) = {right}")
        logger.debug(f"associativity holds on {count} basis triples")
        return CheckResult('associativity', True, detail=f"{count} triples")

    def check_unit(self) -> CheckResult:
        u = self.unit()
        for b in self.basis():
            a = self.element(b)
            if self.mul(u, a) != a or self.mul(a, u) != a:
                return CheckResult('unit', False, b, "unit law fails")
        return CheckResult('unit', True)

    def check_coproduct(self, reading: Optional[str] = None, sample: Optional[int] = None,
                        seed=0) -> CheckResult:
        """Delta(ab) = Delta(a) Delta(b) over basis pairs"""
        name = 'coproduct'
        basis = self.basis()
        pairs = itertools.product(basis, repeat=2)
        if sample is not None:
            rng = np.random.default_rng(seed)
            pairs = ((basis[i], basis[j]) for i, j in rng.integers(0, len(basis), size=(sample, 2)))
        for a, b in pairs:
            prod = self.basis_mul(a, b)
            if prod is None:
                lhs = TensorElement(self.r)
            else:
                lhs = self.coproduct(prod[1], reading).scaled(prod[0].e)
            rhs = self.tensor_mul(self.coproduct(a, reading), self.coproduct(b, reading))
            if lhs != rhs:
                return CheckResult(name, False, (a, b), "coproduct is not multiplicative")
        return CheckResult(name, True)

    def check_r_inverse(self) -> CheckResult:
        R, Ri, one = self.r_matrix(), self.r_matrix_inv(), self.tensor_unit()
        if self.tensor_mul(R, Ri) != one:
            return CheckResult('R inverse', False, 'R.R^-1', "R R^-1 differs from 1 (x) 1")
        if self.tensor_mul(Ri, R) != one:
            return CheckResult('R inverse', False, 'R^-1.R', "R^-1 R differs from 1 (x) 1")
        return CheckResult('R inverse', True)

    def check_counit(self) -> CheckResult:
        for b in self.basis():
            a = self.element(b)
            left, right = {}, {}
            for (b1, b2), c in self.coproduct(b).terms.items():
                if self.counit(b1):
                    _accumulate(left, b2, c)
                if self.counit(b2):
                    _accumulate(right, b1, c)
            if AlgElement(self.r, left) != a or AlgElement(self.r, right) != a:
                return CheckResult('counit', False, b, "counit law fails")
        return CheckResult('counit', True)

    def _apply_antipode(self, a: AlgElement) -> AlgElement:
        acc = {}
        for k, c in a.terms.items():
            e, t = self.antipode(k)
            _accumulate(acc, t, c.times_root(e.e))
        return AlgElement(self.r, acc)

    def check_antipode(self) -> CheckResult:
        """S(a_1) a_2 = epsilon(a) 1 and a_1 beta S(a_2) = epsilon(a) beta"""
        u, beta = self.unit(), self.beta_element()
        zero = AlgElement(self.r)
        for b in self.basis():
            left = zero
            right = zero
            for (b1, b2), c in self.coproduct(b).terms.items():
                a1 = AlgElement(self.r, {b1: c})
                a2 = self.element(b2)
                left = left + self.mul(self._apply_antipode(a1), a2)
                right = right + self.mul(self.mul(a1, beta), self._apply_antipode(a2))
            expect_left = u if self.counit(b) else zero
            expect_right = beta if self.counit(b) else zero
            if left != expect_left:
                return CheckResult('antipode', False, b, "S(a_1) a_2 differs from epsilon(a) 1")
            if right != expect_right:
                return CheckResult('antipode', False, b, "a_1 beta S(a_2) differs from epsilon(a) beta")
        return CheckResult('antipode', True)

    def check_quasitriangular(self) -> CheckResult:
        """R Delta(a) R^-1 = flip(Delta(a)) for basis a"""
        R, Ri = self.r_matrix(), self.r_matrix_inv()
        for b in self.basis():
            d = self.coproduct(b)
            if self.tensor_mul(self.tensor_mul(R, d), Ri) != d.flip():
                return CheckResult('quasitriangular', False, b, "R Delta(a) R^-1 differs from Delta^op(a)")
        return CheckResult('quasitriangular', True)

    def run_selftest(self, extended: bool = False, assoc_exhaustive: int = 262144,
                     sample: int = 100000, seed=0) -> List[CheckResult]:
        """the structure checks of the double, in order

        Associativity is exhaustive while |G|^6 <= assoc_exhaustive, sampled otherwise.
        extended adds the antipode and quasitriangularity checks for |G| <= 4.
        """
        n = self.group.order
        results = [check_cocycle(self.cocycle)]
        results.append(check_theta_identity(self.cocycle, self.variant))
        results.append(self.check_associativity(None if n ** 6 <= assoc_exhaustive else sample, seed))
        results.append(self.check_unit())
        results.append(self.check_coproduct(sample=None if n <= 6 else min(sample, 20000), seed=seed))
        results.append(self.check_r_inverse())
        results.append(self.check_counit())
        if extended and n <= 4:
            results.append(self.check_antipode())
            results.append(self.check_quasitriangular())
        for res in results:
            logger.info(f"{self.group.name}/{self.cocycle.name} {res.name}: {'pass' if res else 'FAIL'}")
        return results


def basis_mul(w: Cocycle3, b1: DoubleBasis, b2: DoubleBasis, variant: Optional[str] = None):
    return TwistedDouble(w, variant).basis_mul(b1, b2)


def alg_unit(w: Cocycle3) -> AlgElement:
    return TwistedDouble(w).unit()


def coproduct(w: Cocycle3, b: DoubleBasis, reading: Optional[str] = None) -> TensorElement:
    return TwistedDouble(w, reading=reading).coproduct(b)


def r_matrix(w: Cocycle3) -> TensorElement:
    return TwistedDouble(w).r_matrix()


def r_matrix_inv(w: Cocycle3) -> TensorElement:
    return TwistedDouble(w).r_matrix_inv()


def associator_exponent(w: Cocycle3, u: int, v: int, t: int, sign: Optional[int] = None) -> RootExponent:
    sign = SETTINGS['associator_sign'] if sign is None else sign
    return RootExponent(w.r, sign * w(u, v, t))


def _arbiter_instances() -> List[Cocycle3]:
    return [cyclic_cocycle(2, 1), cyclic_cocycle(4, 1)]


def select_theta_variant(instances: Optional[List[Cocycle3]] = None) -> str:
    """the theta convention under which the double is associative on the given instances"""
    instances = instances or _arbiter_instances()
    passing = [v for v in THETA_VARIANTS
               if all(TwistedDouble(w, variant=v).check_associativity() for w in instances)]
    logger.info(f"theta variants passing associativity: {passing}")
    if len(passing) != 1:
        raise RuntimeError(f"associativity does not single out a theta variant: {passing}")
    return passing[0]


def select_coproduct_reading(instances: Optional[List[Cocycle3]] = None) -> str:
    """the coproduct reading under which Delta is multiplicative on the given instances"""
    instances = instances or _arbiter_instances()
    passing = [rd for rd in COPRODUCT_READINGS
               if all(TwistedDouble(w, reading=rd).check_coproduct() for w in instances)]
    logger.info(f"coproduct readings passing multiplicativity: {passing}")
    if len(passing) != 1:
        raise RuntimeError(f"multiplicativity does not single out a coproduct reading: {passing}")
    return passing[0]
