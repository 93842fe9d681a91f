# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/5 14:00
# @Last Modified by: wqshen

import numpy as np
from typing import Dict, Iterable, List, Optional, Sequence, Tuple
from logzero import logger
from ..checks import CheckResult
from ..cocycle import Cocycle3, theta_table, cyclic_cocycle, triple_product_cocycle
from ..group import FiniteGroup
from ..settings import SETTINGS
from .free import tuple_to_pairs
from .monomial import MonomialOp, check_dim
from .paren import (Tree, Move, leaves, left_comb, sibling_tree, right_moves, left_moves,
                    check_same_leaves)


class LabelSpace(object):
    """basis labels of V^(x)n, V the regular module of D^omega(G)

    A label is n pairs (x_p, g_p), the vector delta_x g at each position.
    Its index is sum_p (x_p N + g_p) (N^2)^(n-1-p), position 0 most significant.
    """

    def __init__(self, order: int, n: int):
        self.order = int(order)
        self.n = int(n)
        self.dim = (self.order ** 2) ** self.n
        self._weights = (self.order ** 2) ** np.arange(self.n - 1, -1, -1, dtype=np.int64)

    def __repr__(self):
        return f"LabelSpace(|G|={self.order}, n={self.n}, dim={self.dim})"

    def encode(self, xs: np.ndarray, gs: np.ndarray) -> np.ndarray:
        digits = np.asarray(xs, dtype=np.int64) * self.order + np.asarray(gs, dtype=np.int64)
        return digits @ self._weights

    def decode(self, index) -> Tuple[np.ndarray, np.ndarray]:
        index = np.atleast_1d(np.asarray(index, dtype=np.int64))
        digits = (index[:, None] // self._weights[None, :]) % (self.order ** 2)
        return digits // self.order, digits % self.order

    def encode_pairs(self, pairs: Sequence[Tuple[int, int]]) -> int:
        if len(pairs) != self.n:
            raise ValueError(f"label has {len(pairs)} positions, expected {self.n}")
        xs = np.array([[p[0] for p in pairs]])
        gs = np.array([[p[1] for p in pairs]])
        return int(self.encode(xs, gs)[0])

    def decode_pairs(self, index: int) -> Tuple[Tuple[int, int], ...]:
        xs, gs = self.decode(index)
        return tuple((int(x), int(g)) for x, g in zip(xs[0], gs[0]))

    def all_labels(self) -> Tuple[np.ndarray, np.ndarray]:
        check_dim(self.dim)
        return self.decode(np.arange(self.dim, dtype=np.int64))

    def random_labels(self, count: int, seed=0) -> Tuple[np.ndarray, np.ndarray]:
        rng = np.random.default_rng(seed)
        size = (count, self.n)
        return rng.integers(0, self.order, size=size), rng.integers(0, self.order, size=size)


class BraidRepresentation(object):
    """B_n acting on V^(x)n by monomial operators, left comb bracketing

    Parameters
    ----------
    cocycle: Cocycle3
        normalized 3-cocycle omega on G
    n: int
        number of strands
    associator_sign: int
        (X Y) Z -> X (Y Z) acts by omega ** associator_sign, settings default when None
    variant: str
        theta convention
    """

    def __init__(self, cocycle: Cocycle3, n: int, associator_sign: Optional[int] = None,
                 variant: Optional[str] = None):
        if n < 1:
            raise ValueError(f"need at least one strand, got {n}")
        self.cocycle = cocycle
        self.group: FiniteGroup = cocycle.group
        self.n = int(n)
        self.r = cocycle.r
        self.sign = SETTINGS['associator_sign'] if associator_sign is None else int(associator_sign)
        if self.sign not in (1, -1):
            raise ValueError(f"associator sign must be +1 or -1, got {self.sign}")
        self.variant = variant or SETTINGS['theta_variant']
        self.labels = LabelSpace(self.group.order, self.n)
        self.theta = theta_table(cocycle, self.variant)
        self._conj = self.group.conj_table()
        self._generators: Dict[int, MonomialOp] = {}

    def __repr__(self):
        return f"BraidRepresentation({self.group.name}, {self.cocycle.name}, n={self.n}, sign={self.sign})"

    @property
    def dim(self) -> int:
        return self.labels.dim

    def _check_index(self, i: int):
        if not 1 <= i < self.n:
            raise IndexError(f"strand index {i} out of range for n={self.n}")

    # ------------------------------------------------------------ label batches

    def raw_action(self, xs: np.ndarray, gs: np.ndarray, i: int):
        """R-check at positions i, i+1 on a batch of labels

        (x, a), (y, b) -> (x y x^-1, x b), (x, a) with scalar theta_{x y x^-1}(x, b)
        """
        self._check_index(i)
        p = i - 1
        x, a, y, b = xs[:, p], gs[:, p], xs[:, p + 1], gs[:, p + 1]
        nx, ng = xs.copy(), gs.copy()
        nx[:, p] = self._conj[x, y]
        ng[:, p] = self.group.mul[x, b]
        nx[:, p + 1] = x
        ng[:, p + 1] = a
        return nx, ng, self.theta[nx[:, p], x, b]

    def _segment(self, xs: np.ndarray, seg) -> np.ndarray:
        lo, hi = seg
        out = xs[:, lo]
        for q in range(lo + 1, hi):
            out = self.group.mul[out, xs[:, q]]
        return out

    def _moves_exponent(self, xs: np.ndarray, moves: Iterable[Move]) -> np.ndarray:
        total = np.zeros(len(xs), dtype=np.int64)
        for a, b, c in moves:
            total += self.cocycle.w[self._segment(xs, a), self._segment(xs, b), self._segment(xs, c)]
        return total

    def rebracket_action(self, xs: np.ndarray, source: Tree, target: Tree, via: str = 'right') -> np.ndarray:
        """exponent of the associativity isomorphism source -> target on each label"""
        check_same_leaves(source, target)
        if source == target:
            return np.zeros(len(xs), dtype=np.int64)
        if via == 'right':
            e = self._moves_exponent(xs, right_moves(source)) - self._moves_exponent(xs, right_moves(target))
            return (self.sign * e) % self.r
        if via == 'left':
            e = self._moves_exponent(xs, left_moves(source)) - self._moves_exponent(xs, left_moves(target))
            return (-self.sign * e) % self.r
        raise ValueError(f"via must be 'right' or 'left', got {via!r}")

    def generator_action(self, xs: np.ndarray, gs: np.ndarray, i: int):
        """braid generator beta_i on a batch of labels: rebracket, R-check, rebracket back"""
        self._check_index(i)
        base = left_comb(self.n)
        tree = sibling_tree(self.n, i)
        e = self.rebracket_action(xs, base, tree)
        nx, ng, e_raw = self.raw_action(xs, gs, i)
        e = e + e_raw + self.rebracket_action(nx, tree, base)
        return nx, ng, e % self.r

    def word_action(self, xs: np.ndarray, gs: np.ndarray, word: Sequence[int]):
        """a braid word on a batch of labels, rightmost letter first"""
        e = np.zeros(len(xs), dtype=np.int64)
        for s in reversed(list(word)):
            if s > 0:
                xs, gs, de = self.generator_action(xs, gs, s)
            else:
                xs, gs, de = self._inverse_generator_action(xs, gs, -s)
            e = e + de
        return xs, gs, e % self.r

    def _inverse_generator_action(self, xs, gs, i):
        self._check_index(i)
        p = i - 1
        x, a = xs[:, p + 1], gs[:, p + 1]
        xi = self.group.inv[x]
        ox, og = xs.copy(), gs.copy()
        ox[:, p], og[:, p] = x, a
        ox[:, p + 1] = self._conj[xi, xs[:, p]]
        og[:, p + 1] = self.group.mul[xi, gs[:, p]]
        _, _, e = self.generator_action(ox, og, i)
        return ox, og, (-e) % self.r

    # ------------------------------------------------------------ dense operators

    def _dense(self, nx, ng, e) -> MonomialOp:
        return MonomialOp(self.r, self.labels.encode(nx, ng), e)

    def r_check_raw(self, i: int) -> MonomialOp:
        xs, gs = self.labels.all_labels()
        return self._dense(*self.raw_action(xs, gs, i))

    def rebracket(self, source: Tree, target: Tree, via: str = 'right') -> MonomialOp:
        """diagonal operator of the associativity isomorphism between two bracketings"""
        xs, _ = self.labels.all_labels()
        e = self.rebracket_action(xs, source, target, via)
        return MonomialOp(self.r, np.arange(self.dim), e)

    def braid_generator(self, i: int) -> MonomialOp:
        self._check_index(i)
        if i not in self._generators:
            xs, gs = self.labels.all_labels()
            self._generators[i] = self._dense(*self.generator_action(xs, gs, i))
            logger.debug(f"{self}: built beta_{i}")
        return self._generators[i]

    def braid_generators(self) -> List[MonomialOp]:
        return [self.braid_generator(i) for i in range(1, self.n)]

    def apply_word(self, word: Sequence[int]) -> MonomialOp:
        """operator of beta_{w_1}^{+-1} ... beta_{w_k}^{+-1}"""
        acc = MonomialOp.identity(self.r, self.dim)
        for s in word:
            if s == 0 or abs(s) >= self.n:
                raise IndexError(f"braid letter {s} out of range for n={self.n}")
            gen = self.braid_generator(abs(s))
            acc = acc @ (gen if s > 0 else gen.inverse())
        return acc

    def pure_braid_generator(self, i: int, j: int) -> MonomialOp:
        return self.apply_word(band_word(self.n, i, j))

    def pure_braid_generators(self) -> List[MonomialOp]:
        return [self.pure_braid_generator(i, j) for i in range(1, self.n) for j in range(i + 1, self.n + 1)]

    def tuple_to_label(self, t: Sequence[int]) -> int:
        return self.labels.encode_pairs(tuple_to_pairs(self.group, self.n, t))


def band_word(n: int, i: int, j: int) -> List[int]:
    """A_ij = (beta_{j-1} .. beta_{i+1}) beta_i^2 (beta_{i+1}^-1 .. beta_{j-1}^-1)"""
    if not 1 <= i < j <= n:
        raise IndexError(f"band generator ({i}, {j}) out of range for n={n}")
    conj = list(range(j - 1, i, -1))
    return conj + [i, i] + [-s for s in reversed(conj)]


def r_check_raw(w: Cocycle3, n: int, i: int) -> MonomialOp:
    return BraidRepresentation(w, n).r_check_raw(i)


def rebracket(w: Cocycle3, source: Tree, target: Tree, via: str = 'right') -> MonomialOp:
    check_same_leaves(source, target)
    return BraidRepresentation(w, len(leaves(source))).rebracket(source, target, via)


def braid_generator(w: Cocycle3, n: int, i: int) -> MonomialOp:
    return BraidRepresentation(w, n).braid_generator(i)


def pure_braid_generator(w: Cocycle3, n: int, i: int, j: int) -> MonomialOp:
    return BraidRepresentation(w, n).pure_braid_generator(i, j)


def apply_word(w: Cocycle3, n: int, word: Sequence[int]) -> MonomialOp:
    return BraidRepresentation(w, n).apply_word(word)


def check_braid_relations(ops: Sequence[MonomialOp], n: int) -> CheckResult:
    """(B1) g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1} and (B2) g_i g_j = g_j g_i for |i - j| >= 2"""
    if len(ops) != n - 1:
        raise ValueError(f"need {n - 1} generators for n={n}, got {len(ops)}")
    for k in range(n - 2):
        a, b = ops[k], ops[k + 1]
        if a @ b @ a != b @ a @ b:
            return CheckResult('braid relations', False, ('B1', k + 1), f"B1 fails at i={k + 1}")
    for k in range(n - 1):
        for m in range(k + 2, n - 1):
            if ops[k] @ ops[m] != ops[m] @ ops[k]:
                return CheckResult('braid relations', False, ('B2', k + 1, m + 1),
                                   f"B2 fails at (i, j)=({k + 1}, {m + 1})")
    return CheckResult('braid relations', True)


def check_braid_relations_sampled(rep: BraidRepresentation, count: int = 2000, seed=0,
                                  labels: Optional[Tuple[np.ndarray, np.ndarray]] = None) -> CheckResult:
    """braid relations on sampled labels, for representations too large to build densely"""
    xs, gs = rep.labels.random_labels(count, seed) if labels is None else labels
    n = rep.n
    relations = [(('B1', i), [i, i + 1, i], [i + 1, i, i + 1]) for i in range(1, n - 1)]
    relations += [(('B2', i, j), [i, j], [j, i]) for i in range(1, n) for j in range(i + 2, n)]
    for tag, lhs, rhs in relations:
        lx, lg, le = rep.word_action(xs, gs, lhs)
        rx, rg, re_ = rep.word_action(xs, gs, rhs)
        bad = np.flatnonzero((lx != rx).any(axis=1) | (lg != rg).any(axis=1) | (le != re_))
        if len(bad):
            k = int(bad[0])
            witness = tag + (rep.labels.encode(xs[k:k + 1], gs[k:k + 1]).item(),)
            return CheckResult('braid relations', False, witness, f"{tag[0]} fails on a sampled label")
    return CheckResult('braid relations', True, detail=f"{len(xs)} sampled labels")


def select_associator_sign() -> int:
    """the associator sign under which the braid relations hold

    Cyclic instances satisfy (B1) for both signs, so the triple-product cocycle
    on (Z/3)^3 is added, checked on sampled labels including x = (e1, e2, e3).
    """
    passing = []
    for sign in (1, -1):
        ok = True
        rep = BraidRepresentation(cyclic_cocycle(2, 1), 3, associator_sign=sign)
        ok = ok and bool(check_braid_relations(rep.braid_generators(), 3))
        rep = BraidRepresentation(triple_product_cocycle(3), 3, associator_sign=sign)
        xs, gs = rep.labels.random_labels(500, seed=1)
        xs[0] = [9, 3, 1]
        ok = ok and bool(check_braid_relations_sampled(rep, labels=(xs, gs)))
        logger.info(f"associator sign {sign:+d}: braid relations {'hold' if ok else 'fail'}")
        if ok:
            passing.append(sign)
    if len(passing) != 1:
        raise RuntimeError(f"braid relations do not single out an associator sign: {passing}")
    return passing[0]
