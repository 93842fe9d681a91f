# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/2 11:25
# @Last Modified by: wqshen

import itertools
import numpy as np
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, List, Optional, Sequence, Tuple, FrozenSet
from logzero import logger
from sympy import factorint

GroupElement = int


class CayleyFormatError(ValueError):
    """Cayley table file could not be parsed or does not define a group"""


@dataclass
class FiniteGroup:
    """Finite group given by its Cayley table, identity at index 0

    Parameters
    ----------
    order: int
        number of elements
    mul: array-like
        order x order table, mul[g, h] is the index of g*h
    inv: array-like, optional
        inverse of every element, derived from mul when omitted
    name: str
        display name
    """
    order: int
    mul: np.ndarray
    inv: Optional[np.ndarray] = None
    name: str = 'G'

    def __post_init__(self):
        self.order = int(self.order)
        if self.order < 1:
            raise ValueError(f"group order must be positive, got {self.order}")
        self.mul = np.asarray(self.mul, dtype=np.int64)
        if self.mul.shape != (self.order, self.order):
            raise ValueError(f"Cayley table of shape {self.mul.shape} for order {self.order}")
        if self.inv is None:
            has_inv = (self.mul == 0).any(axis=1)
            # elements without an inverse keep index 0, check_axioms reports them
            self.inv = np.where(has_inv, np.argmax(self.mul == 0, axis=1), 0)
        self.inv = np.asarray(self.inv, dtype=np.int64)
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def m(self, *elements: GroupElement) -> GroupElement:
        """product of the elements, left to right"""
        out = 0
        for g in elements:
            out = int(self.mul[out, g])
        return out

    def conj(self, g: GroupElement, x: GroupElement) -> GroupElement:
        """g x g^-1"""
        return int(self.mul[self.mul[g, x], self.inv[g]])

    def comm(self, a: GroupElement, b: GroupElement) -> GroupElement:
        """[a, b] = a b a^-1 b^-1"""
        return int(self.mul[self.mul[self.mul[a, b], self.inv[a]], self.inv[b]])

    def conj_table(self) -> np.ndarray:
        """T[g, x] = g x g^-1"""
        ar = np.arange(self.order)
        return self.mul[self.mul[ar[:, None], ar[None, :]], self.inv[:, None]]

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    def element_order(self, g: GroupElement) -> int:
        k, h = 1, int(g)
        while h != 0:
            h = int(self.mul[h, g])
            k += 1
        return k

    def elements_of_order(self, k: int) -> List[GroupElement]:
        return [g for g in range(self.order) if self.element_order(g) == k]

    def subgroup(self, gens: Iterable[GroupElement]) -> FrozenSet[GroupElement]:
        return subgroup_closure(gens, self._mul, 0)

    def is_normal(self, subset: Iterable[GroupElement]) -> bool:
        subset = frozenset(int(h) for h in subset)
        return all(self.conj(g, h) in subset for g in range(self.order) for h in subset)

    def center(self) -> FrozenSet[GroupElement]:
        return frozenset(g for g in range(self.order)
                         if (self.mul[g, :] == self.mul[:, g]).all())

    def check_axioms(self) -> Optional[Tuple[str, object]]:
        """first violated group axiom as (kind, witness), None when the table is a group

        kind is one of 'range', 'identity', 'inverse', 'associativity'
        """
        n = self.order
        bad = np.argwhere((self.mul < 0) | (self.mul >= n))
        if len(bad):
            return 'range', tuple(int(v) for v in bad[0])
        ar = np.arange(n)
        if not (self.mul[0, :] == ar).all() or not (self.mul[:, 0] == ar).all():
            g = int(np.argmax((self.mul[0, :] != ar) | (self.mul[:, 0] != ar)))
            return 'identity', g
        for g in range(n):
            if self.mul[g, self.inv[g]] != 0 or self.mul[self.inv[g], g] != 0:
                return 'inverse', g
        for a in range(n):
            left = self.mul[self.mul[a, :], :]   # (ab)c indexed [b, c]
            right = self.mul[a, self.mul]        # a(bc) indexed [b, c]
            diff = np.argwhere(left != right)
            if len(diff):
                b, c = diff[0]
                return 'associativity', (a, int(b), int(c))
        return None

    def lower_central_series(self, gens: Optional[Iterable[GroupElement]] = None) -> List[FrozenSet[GroupElement]]:
        gens = list(range(self.order)) if gens is None else [int(g) for g in gens]
        return lower_central_series_generic(gens, self._mul, self._inv, 0)

    def nilpotency_class(self) -> Optional[int]:
        return nilpotency_class_from_series(self.lower_central_series())

    def to_cayley_text(self) -> str:
        lines = [f"# {self.name}", f"order {self.order}"]
        lines += [' '.join(str(int(v)) for v in row) for row in self.mul]
        return '\n'.join(lines) + '\n'

    def _mul(self, a, b):
        return int(self.mul[a, b])

    def _inv(self, a):
        return int(self.inv[a])


def conj(G: FiniteGroup, g: GroupElement, x: GroupElement) -> GroupElement:
    return G.conj(g, x)


def comm(G: FiniteGroup, a: GroupElement, b: GroupElement) -> GroupElement:
    return G.comm(a, b)


def is_p_group(G: FiniteGroup) -> Optional[Tuple[int, int]]:
    """(p, k) with |G| = p**k, None otherwise and for the trivial group"""
    if G.is_trivial:
        return None
    factors = factorint(G.order)
    if len(factors) != 1:
        return None
    p, k = next(iter(factors.items()))
    return int(p), int(k)


def lower_central_series(G: FiniteGroup, gens: Optional[Iterable[GroupElement]] = None):
    return G.lower_central_series(gens)


def nilpotency_class(G: FiniteGroup) -> Optional[int]:
    return G.nilpotency_class()


# --------------------------------------------------------------------------
# series on abstract finite groups, shared with image and filtration


def subgroup_closure(seeds: Iterable[Hashable], mul: Callable, identity: Hashable,
                     limit: Optional[int] = None) -> FrozenSet:
    """subgroup generated by seeds, closing under right multiplication"""
    gens = list(dict.fromkeys(seeds))
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                b = mul(a, s)
                if b not in elements:
                    elements.add(b)
                    nxt.append(b)
        if limit is not None and len(elements) > limit:
            raise OverflowError(f"subgroup exceeds {limit} elements")
        frontier = nxt
    return frozenset(elements)


def normal_closure(seeds: Iterable[Hashable], mul: Callable, inv: Callable, identity: Hashable,
                   conjugators: Sequence[Hashable], limit: Optional[int] = None) -> FrozenSet:
    """smallest subgroup containing seeds and normalized by every conjugator"""
    H = frozenset([identity])
    gens = []
    queue = list(seeds)
    while queue:
        s = queue.pop()
        if s in H:
            continue
        gens.append(s)
        H = subgroup_closure(gens, mul, identity, limit)
        queue.extend(mul(mul(c, s), inv(c)) for c in conjugators)
    return H


def lower_central_series_generic(gens: Sequence[Hashable], mul: Callable, inv: Callable,
                                 identity: Hashable, limit: Optional[int] = None) -> List[FrozenSet]:
    """L_1 = <gens>, L_{k+1} = normal closure in L_1 of [L_k, gens], until trivial or stable"""
    gens = list(dict.fromkeys(gens))
    series = [subgroup_closure(gens, mul, identity, limit)]
    while len(series[-1]) > 1:
        current = series[-1]
        seeds = {mul(mul(mul(a, s), inv(a)), inv(s)) for a in current for s in gens}
        seeds.discard(identity)
        nxt = normal_closure(sorted(seeds), mul, inv, identity, gens, limit)
        logger.debug(f"lower central series term {len(series) + 1}: {len(nxt)} elements")
        if nxt == current:
            break
        series.append(nxt)
    return series


def nilpotency_class_from_series(series: Sequence[FrozenSet]) -> Optional[int]:
    if len(series[-1]) == 1:
        return len(series) - 1
    return None


# --------------------------------------------------------------------------
# constructors, element orderings are fixed


def make_trivial() -> FiniteGroup:
    return FiniteGroup(1, np.zeros((1, 1), dtype=np.int64), name='1')


def make_cyclic(m: int) -> FiniteGroup:
    """Z/m, elements are the residues 0..m-1"""
    if m < 1:
        raise ValueError(f"cyclic group needs m >= 1, got {m}")
    ar = np.arange(m)
    return FiniteGroup(m, (ar[:, None] + ar[None, :]) % m, name=f"Z/{m}")


def make_dihedral(m: int) -> FiniteGroup:
    """dihedral group of order 2m, element k + m*f is r^k s^f"""
    if m < 1:
        raise ValueError(f"dihedral group needs m >= 1, got {m}")
    n = 2 * m
    mul = np.empty((n, n), dtype=np.int64)
    for a, b in itertools.product(range(n), repeat=2):
        k, f = a % m, a // m
        l, g = b % m, b // m
        mul[a, b] = (k + (-1) ** f * l) % m + m * ((f + g) % 2)
    return FiniteGroup(n, mul, name=f"D{m}")


_UNIT_MUL = {
    ('i', 'i'): (-1, 'e'), ('j', 'j'): (-1, 'e'), ('k', 'k'): (-1, 'e'),
    ('i', 'j'): (1, 'k'), ('j', 'k'): (1, 'i'), ('k', 'i'): (1, 'j'),
    ('j', 'i'): (-1, 'k'), ('k', 'j'): (-1, 'i'), ('i', 'k'): (-1, 'j'),
}


def make_quaternion8() -> FiniteGroup:
    """quaternion group, elements ordered 1, -1, i, -i, j, -j, k, -k"""
    units = ['e', 'i', 'j', 'k']
    elements = [(s, u) for u in units for s in (1, -1)]
    index = {el: n for n, el in enumerate(elements)}
    mul = np.empty((8, 8), dtype=np.int64)
    for (a, (sa, ua)), (b, (sb, ub)) in itertools.product(enumerate(elements), repeat=2):
        if ua == 'e' or ub == 'e':
            sign, unit = 1, ub if ua == 'e' else ua
        else:
            sign, unit = _UNIT_MUL[(ua, ub)]
        mul[a, b] = index[(sa * sb * sign, unit)]
    return FiniteGroup(8, mul, name='Q8')


def make_symmetric(m: int) -> FiniteGroup:
    """S_m for m <= 5, permutations in lexicographic order, (g h)(t) = g(h(t))"""
    if not 1 <= m <= 5:
        raise ValueError(f"symmetric group needs 1 <= m <= 5, got {m}")
    perms = list(itertools.permutations(range(m)))
    index = {p: n for n, p in enumerate(perms)}
    n = len(perms)
    mul = np.empty((n, n), dtype=np.int64)
    for a, g in enumerate(perms):
        for b, h in enumerate(perms):
            mul[a, b] = index[tuple(g[h[t]] for t in range(m))]
    return FiniteGroup(n, mul, name=f"S{m}")


def make_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """direct product, pair (g, h) has index g*|H| + h"""
    nh = H.order
    mul = G.mul[:, None, :, None] * nh + H.mul[None, :, None, :]
    n = G.order * nh
    return FiniteGroup(n, mul.reshape(n, n), name=f"{G.name}x{H.name}")


def from_cayley_file(path) -> FiniteGroup:
    """read and validate a Cayley table file

    The first data line is ``order N``, followed by N rows of N integers.
    Lines starting with ``#`` are ignored.
    """
    with open(path, 'r') as f:
        raw = f.readlines()
    return from_cayley_text(raw, name=str(path))


def from_cayley_text(lines: Iterable[str], name: str = 'G') -> FiniteGroup:
    rows = []
    order = None
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        if order is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != 'order':
                raise CayleyFormatError(f"line {lineno}: expected 'order N', got {line!r}")
            try:
                order = int(parts[1])
            except ValueError:
                raise CayleyFormatError(f"line {lineno}: order is not an integer: {parts[1]!r}")
            if order < 1:
                raise CayleyFormatError(f"line {lineno}: order must be positive")
            continue
        try:
            row = [int(v) for v in line.split()]
        except ValueError:
            raise CayleyFormatError(f"line {lineno}: non-integer entry in {line!r}")
        if len(row) != order:
            raise CayleyFormatError(f"line {lineno}: expected {order} entries, got {len(row)}")
        bad = [v for v in row if not 0 <= v < order]
        if bad:
            raise CayleyFormatError(f"line {lineno}: entry {bad[0]} out of range [0, {order})")
        if len(rows) == order:
            raise CayleyFormatError(f"line {lineno}: more than {order} rows")
        rows.append(row)
    if order is None:
        raise CayleyFormatError("missing 'order N' line")
    if len(rows) != order:
        raise CayleyFormatError(f"expected {order} rows, got {len(rows)}")
    G = FiniteGroup(order, np.array(rows, dtype=np.int64), name=name)
    violation = G.check_axioms()
    if violation is not None:
        kind, witness = violation
        if kind == 'identity':
            raise CayleyFormatError(f"element 0 is not the identity (row/column {witness})")
        if kind == 'inverse':
            raise CayleyFormatError(f"element {witness} has no inverse")
        raise CayleyFormatError(f"associativity fails for triple (a, b, c) = {witness}")
    logger.debug(f"loaded Cayley table {name} of order {order}")
    return G
