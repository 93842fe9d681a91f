# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/6 10:20
# @Last Modified by: wqshen

import numpy as np
import pandas as pd
from fractions import Fraction
from dataclasses import dataclass, field, asdict
from typing import Dict, List, Optional, Sequence, Tuple
from logzero import logger
from sympy import factorint
from .braid.monomial import MonomialOp, OperatorMismatchError
from .braid.representation import BraidRepresentation
from .cocycle import Cocycle3, coboundary, random_cochain
from .group import is_p_group, lower_central_series_generic, nilpotency_class_from_series
from .settings import SETTINGS


class BudgetExceededError(RuntimeError):
    """a closure or series budget was hit"""


class IncompleteClosureError(BudgetExceededError):
    """the operation needs a complete closure, rerun with a larger budget"""


@dataclass
class GroupClosure:
    """finite group generated by monomial operators

    elements are kept in fingerprint order; generators index into elements.
    complete is False when the element budget stopped the search.
    """
    elements: List[MonomialOp]
    generators: List[int]
    complete: bool
    _index: Dict[bytes, int] = field(default_factory=dict, repr=False)
    _products: Dict[Tuple[int, int], int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {op.fingerprint(): k for k, op in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def r(self) -> int:
        return self.elements[0].r

    @property
    def dim(self) -> int:
        return self.elements[0].dim

    def index_of(self, op: MonomialOp) -> Optional[int]:
        return self._index.get(op.fingerprint())

    @property
    def identity_index(self) -> int:
        return self._index[MonomialOp.identity(self.r, self.dim).fingerprint()]

    def multiply(self, i: int, j: int) -> int:
        key = (i, j)
        if key not in self._products:
            k = self.index_of(self.elements[i] @ self.elements[j])
            if k is None:
                raise IncompleteClosureError("product left the element set, closure is incomplete")
            self._products[key] = k
        return self._products[key]

    def inverse(self, i: int) -> int:
        k = self.index_of(self.elements[i].inverse())
        if k is None:
            raise IncompleteClosureError("inverse left the element set, closure is incomplete")
        return k

    def require_complete(self):
        if not self.complete:
            raise IncompleteClosureError(f"closure stopped at {self.order} elements, "
                                         f"increase max_elements")


def close(gens: Sequence[MonomialOp], max_elements: Optional[int] = None) -> GroupClosure:
    """breadth-first closure under right multiplication by generators and their inverses"""
    max_elements = SETTINGS['max_elements'] if max_elements is None else int(max_elements)
    if max_elements < 1:
        raise ValueError(f"max_elements must be positive, got {max_elements}")
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    r, dim = gens[0].r, gens[0].dim
    for g in gens[1:]:
        if g.r != r or g.dim != dim:
            raise OperatorMismatchError(f"generators of (r={g.r}, dim={g.dim}) "
                                        f"and (r={r}, dim={dim})")
    moves = list({op.fingerprint(): op for op in gens + [g.inverse() for g in gens]}.values())
    moves.sort(key=MonomialOp.fingerprint)
    identity = MonomialOp.identity(r, dim)
    found = {identity.fingerprint(): identity}
    frontier = [identity]
    # generators are always members, even when the budget is tiny
    for g in gens:
        if g.fingerprint() not in found:
            found[g.fingerprint()] = g
            frontier.append(g)
    frontier.sort(key=MonomialOp.fingerprint)
    complete = True
    while frontier and complete:
        nxt = []
        for a in frontier:
            for s in moves:
                b = a @ s
                fp = b.fingerprint()
                if fp in found:
                    continue
                if len(found) >= max_elements:
                    complete = False
                    break
                found[fp] = b
                nxt.append(b)
            if not complete:
                break
        frontier = sorted(nxt, key=MonomialOp.fingerprint)
        logger.debug(f"closure: {len(found)} elements, frontier {len(frontier)}")
    if not complete:
        logger.warning(f"closure budget of {max_elements} elements exhausted")
    keys = sorted(found)
    elements = [found[k] for k in keys]
    index = {k: n for n, k in enumerate(keys)}
    return GroupClosure(elements, [index[g.fingerprint()] for g in gens], complete)


def element_order(op: MonomialOp, cap: Optional[int] = None) -> Optional[int]:
    """least k <= cap with op**k the identity"""
    cap = SETTINGS['order_cap'] if cap is None else cap
    acc, k = op, 1
    while not acc.is_identity():
        if k >= cap:
            return None
        acc = acc @ op
        k += 1
    return k


def diagonal_subgroup_order(c: GroupClosure) -> int:
    c.require_complete()
    return sum(1 for op in c.elements if op.is_diagonal())


def permutation_quotient_order(c: GroupClosure) -> int:
    c.require_complete()
    return len({op.perm.tobytes() for op in c.elements})


def nilpotency_class_closure(c: GroupClosure, cap: Optional[int] = None) -> Optional[int]:
    """nilpotency class of the abstract group, None when it is not nilpotent"""
    cap = SETTINGS['nilpotency_cap'] if cap is None else cap
    c.require_complete()
    if c.order > cap:
        raise BudgetExceededError(f"closure of order {c.order} is above the nilpotency cap {cap}")
    series = lower_central_series_generic(c.generators, c.multiply, c.inverse, c.identity_index)
    logger.debug(f"lower central series orders: {[len(s) for s in series]}")
    return nilpotency_class_from_series(series)


def prime_power(n: int) -> Optional[Tuple[int, int]]:
    """(p, k) with n = p**k and k >= 1, None otherwise"""
    if n < 2:
        return None
    f = factorint(n)
    if len(f) != 1:
        return None
    p, k = next(iter(f.items()))
    return int(p), int(k)


def is_power_of(n: int, p: int) -> bool:
    """n = p**k for some k >= 0"""
    if n < 1:
        return False
    while n % p == 0:
        n //= p
    return n == 1


def coxeter_finite(n: int, k: int) -> bool:
    """B_n / <<beta_1^k>> is finite iff 1/n + 1/k > 1/2"""
    if n < 2 or k < 1:
        raise ValueError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    return Fraction(1, n) + Fraction(1, k) > Fraction(1, 2)


def coxeter_table(ns: Sequence[int], ks: Sequence[int]) -> pd.DataFrame:
    data = [[coxeter_finite(n, k) for k in ks] for n in ns]
    return pd.DataFrame(data, index=pd.Index(list(ns), name='n'), columns=pd.Index(list(ks), name='k'))


@dataclass
class AnalyzeOptions:
    max_elements: int = field(default_factory=lambda: SETTINGS['max_elements'])
    order_cap: int = field(default_factory=lambda: SETTINGS['order_cap'])
    nilpotency_cap: int = field(default_factory=lambda: SETTINGS['nilpotency_cap'])
    which: str = 'both'    # braid | pure | both
    variant: Optional[str] = None


@dataclass
class ImageReport:
    """what is known about the images of B_n and P_n for one (G, omega, n)"""
    group: str
    cocycle: str
    n: int
    group_order: int
    group_trivial: bool
    group_p: Optional[int]
    group_class: Optional[int]
    r: int
    dim: int
    variant: str
    associator_sign: int
    braid_order: Optional[int] = None
    braid_complete: Optional[bool] = None
    pure_order: Optional[int] = None
    pure_complete: Optional[bool] = None
    diagonal_order: Optional[int] = None
    permutation_order: Optional[int] = None
    generator_order: Optional[int] = None
    square_order: Optional[int] = None
    braid_order_p_power: Optional[bool] = None
    pure_order_p_power: Optional[bool] = None
    square_order_p_power: Optional[bool] = None
    pure_class: Optional[int] = None
    pure_class_complete: Optional[bool] = None
    coxeter_finite: Optional[bool] = None
    format_version: int = field(default_factory=lambda: SETTINGS['report_format_version'])

    @property
    def complete(self) -> bool:
        flags = [self.braid_complete, self.pure_complete, self.pure_class_complete]
        return all(f is not False for f in flags)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_frame(self) -> pd.DataFrame:
        d = self.to_dict()
        return pd.DataFrame({'value': ['-' if v is None else v for v in d.values()]},
                            index=pd.Index(list(d.keys()), name='field'))


def _p_power_flag(order: Optional[int], p: Optional[int]) -> Optional[bool]:
    if order is None:
        return None
    if p is not None:
        return is_power_of(order, p)
    return order == 1 or prime_power(order) is not None


def analyze(w: Cocycle3, n: int, opts: Optional[AnalyzeOptions] = None,
            group_name: Optional[str] = None, cocycle_name: Optional[str] = None) -> ImageReport:
    """close the braid and pure braid images and collect their structure

    Budget exhaustion is recorded in the completeness flags.
    """
    opts = opts or AnalyzeOptions()
    if n < 2:
        raise ValueError(f"need at least two strands, got {n}")
    G = w.group
    pg = is_p_group(G)
    p = pg[0] if pg else None
    rep = BraidRepresentation(w, n, variant=opts.variant)
    report = ImageReport(group=group_name or G.name, cocycle=cocycle_name or w.name, n=n,
                         group_order=G.order, group_trivial=G.is_trivial, group_p=p,
                         group_class=G.nilpotency_class(), r=w.r, dim=rep.dim,
                         variant=rep.variant, associator_sign=rep.sign)
    gens = rep.braid_generators()
    beta = gens[0]
    report.generator_order = element_order(beta, opts.order_cap)
    report.square_order = element_order(beta @ beta, opts.order_cap)
    report.square_order_p_power = _p_power_flag(report.square_order, p)
    if report.generator_order is not None:
        report.coxeter_finite = coxeter_finite(n, report.generator_order)

    if opts.which in ('braid', 'both'):
        braid = close(gens, opts.max_elements)
        report.braid_order = braid.order
        report.braid_complete = braid.complete
        if braid.complete:
            report.braid_order_p_power = _p_power_flag(braid.order, p)
        logger.info(f"{report.group}/{report.cocycle} n={n}: braid image order "
                    f"{braid.order}{'' if braid.complete else '+ (incomplete)'}")

    if opts.which in ('pure', 'both'):
        pure = close(rep.pure_braid_generators(), opts.max_elements)
        report.pure_order = pure.order
        report.pure_complete = pure.complete
        if pure.complete:
            report.pure_order_p_power = _p_power_flag(pure.order, p)
            report.diagonal_order = diagonal_subgroup_order(pure)
            report.permutation_order = permutation_quotient_order(pure)
            try:
                report.pure_class = nilpotency_class_closure(pure, opts.nilpotency_cap)
                report.pure_class_complete = True
            except BudgetExceededError as e:
                logger.warning(f"nilpotency class skipped: {e}")
                report.pure_class_complete = False
        logger.info(f"{report.group}/{report.cocycle} n={n}: pure braid image order "
                    f"{pure.order}{'' if pure.complete else '+ (incomplete)'}")
    return report


def gauge_experiment(w: Cocycle3, n: int, count: int = 3, seed=0, r: Optional[int] = None,
                     opts: Optional[AnalyzeOptions] = None) -> List[dict]:
    """compare image orders for omega and omega * d(mu) over random normalized 2-cochains mu

    Mismatches are logged and returned, never raised.
    """
    rng = np.random.default_rng(seed)
    r = r or max(w.r, 2)
    opts = opts or AnalyzeOptions()
    base = analyze(w, n, opts)
    rows = []
    for k in range(count):
        mu = random_cochain(w.group, r, rng)
        twisted = analyze(w * coboundary(mu), n, opts)
        row = {'cochain': k,
               'braid_order': base.braid_order, 'braid_order_twisted': twisted.braid_order,
               'pure_order': base.pure_order, 'pure_order_twisted': twisted.pure_order}
        row['match'] = (row['braid_order'] == row['braid_order_twisted']
                        and row['pure_order'] == row['pure_order_twisted'])
        if not row['match']:
            logger.warning(f"gauge experiment: image orders differ for cochain {k}: {row}")
        rows.append(row)
    return rows
