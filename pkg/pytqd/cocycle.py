# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/2 14:20
# @Last Modified by: wqshen

import numpy as np
from dataclasses import dataclass
from typing import Optional, Union
from logzero import logger
from .group import FiniteGroup, GroupElement, make_cyclic, make_product
from .scalars import RootExponent
from .checks import CheckResult
from .settings import SETTINGS

THETA_VARIANTS = ('standard', 'printed')


class CocycleFormatError(ValueError):
    """cocycle file could not be parsed or is not normalized"""


@dataclass
class Cocycle3:
    """normalized 3-cocycle on a finite group with values in mu_r

    Parameters
    ----------
    group: FiniteGroup
        the group G
    r: int
        order of the root-of-unity group the values live in
    w: np.ndarray
        N x N x N integer table, omega(a, b, c) = zeta_r ** w[a, b, c]
    name: str
        identifier used in reports
    """
    group: FiniteGroup
    r: int
    w: np.ndarray
    name: str = 'omega'

    def __post_init__(self):
        self.r = int(self.r)
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")
        n = self.group.order
        self.w = np.asarray(self.w, dtype=np.int64) % self.r
        if self.w.shape != (n, n, n):
            raise ValueError(f"cocycle table of shape {self.w.shape} on a group of order {n}")
        if not self.is_normalized():
            a, b, c = (int(v) for v in np.argwhere(self._identity_slices())[0])
            raise ValueError(f"cocycle is not normalized at {(a, b, c)}")
        self.w.setflags(write=False)

    def __call__(self, a: GroupElement, b: GroupElement, c: GroupElement) -> int:
        return int(self.w[a, b, c])

    def root(self, a: GroupElement, b: GroupElement, c: GroupElement) -> RootExponent:
        return RootExponent(self.r, self.w[a, b, c])

    @property
    def is_trivial(self) -> bool:
        return not self.w.any()

    def _identity_slices(self) -> np.ndarray:
        """nonzero entries with an identity argument"""
        mask = np.zeros(self.w.shape, dtype=bool)
        mask[0, :, :] = mask[:, 0, :] = mask[:, :, 0] = True
        return mask & (self.w != 0)

    def is_normalized(self) -> bool:
        return not self._identity_slices().any()

    def lift(self, r: int) -> 'Cocycle3':
        """same cocycle with values read in mu_r, r a multiple of self.r"""
        if r % self.r:
            raise ValueError(f"cannot lift mu_{self.r} values to mu_{r}")
        return Cocycle3(self.group, r, self.w * (r // self.r), name=self.name)

    def __mul__(self, other: 'Cocycle3') -> 'Cocycle3':
        """pointwise product, exponents added in mu_lcm(r, r')"""
        if other.group is not self.group and not np.array_equal(other.group.mul, self.group.mul):
            raise ValueError("cocycles live on different groups")
        r = int(np.lcm(self.r, other.r))
        a, b = self.lift(r), other.lift(r)
        return Cocycle3(self.group, r, a.w + b.w, name=f"{self.name}*{other.name}")

    @classmethod
    def from_table(cls, group: FiniteGroup, r: int, table, name: str = 'omega') -> 'Cocycle3':
        return cls(group, r, np.asarray(table), name=name)

    def to_text(self) -> str:
        lines = [f"r {self.r}"]
        for a, b, c in np.argwhere(self.w):
            lines.append(f"{a} {b} {c} {self.w[a, b, c]}")
        return '\n'.join(lines) + '\n'


@dataclass
class Cochain2:
    """normalized 2-cochain, mu(a, b) = zeta_r ** table[a, b]"""
    group: FiniteGroup
    r: int
    table: np.ndarray

    def __post_init__(self):
        self.r = int(self.r)
        self.table = np.asarray(self.table, dtype=np.int64) % self.r
        n = self.group.order
        if self.table.shape != (n, n):
            raise ValueError(f"cochain table of shape {self.table.shape} on a group of order {n}")
        if self.table[0, :].any() or self.table[:, 0].any():
            raise ValueError("2-cochain is not normalized")


def trivial_cocycle(G: FiniteGroup, r: int = 1) -> Cocycle3:
    n = G.order
    return Cocycle3(G, r, np.zeros((n, n, n), dtype=np.int64), name='trivial')


def cyclic_cocycle(m: int, q: int) -> Cocycle3:
    """w(a, b, c) = q a floor((b + c) / m) mod m on Z/m, r = m"""
    if not 0 <= q < m:
        raise ValueError(f"cyclic cocycle needs 0 <= q < {m}, got {q}")
    G = make_cyclic(m)
    ar = np.arange(m)
    a, b, c = ar[:, None, None], ar[None, :, None], ar[None, None, :]
    w = q * a * ((b + c) // m)
    return Cocycle3(G, m, w, name=f"cyclic:{q}")


def triple_product_cocycle(m: int) -> Cocycle3:
    """w(a, b, c) = a_1 b_2 c_3 mod m on (Z/m)^3, r = m

    Elements are indexed (a_1 m + a_2) m + a_3.
    """
    Zm = make_cyclic(m)
    G = make_product(make_product(Zm, Zm), Zm)
    ar = np.arange(G.order)
    first, second, third = ar // (m * m), (ar // m) % m, ar % m
    w = first[:, None, None] * second[None, :, None] * third[None, None, :]
    return Cocycle3(G, m, w, name='triple')


def pair_product_cocycle(m: int) -> Cocycle3:
    """w(a, b, c) = a_1 b_2 c_2 mod m on (Z/m)^2, element a_1 m + a_2"""
    Zm = make_cyclic(m)
    G = make_product(Zm, Zm)
    ar = np.arange(G.order)
    first, second = ar // m, ar % m
    w = first[:, None, None] * second[None, :, None] * second[None, None, :]
    return Cocycle3(G, m, w, name='pair')


def random_cochain(G: FiniteGroup, r: int, rng: Union[int, np.random.Generator, None] = None) -> Cochain2:
    rng = np.random.default_rng(rng)
    table = rng.integers(0, r, size=(G.order, G.order))
    table[0, :] = 0
    table[:, 0] = 0
    return Cochain2(G, r, table)


def check_cocycle(w: Cocycle3) -> CheckResult:
    """exhaustive test of
    w(a,b,c) + w(a,bc,d) + w(b,c,d) = w(ab,c,d) + w(a,b,cd) mod r
    """
    M, t = w.group.mul, w.w
    for a in range(w.group.order):
        lhs = t[a][:, :, None] + t[a][M] + t
        rhs = t[M[a]] + t[a][:, M]
        bad = np.argwhere((lhs - rhs) % w.r)
        if len(bad):
            b, c, d = (int(v) for v in bad[0])
            logger.debug(f"cocycle condition fails at {(a, b, c, d)}")
            return CheckResult('cocycle', False, (a, b, c, d),
                               f"cocycle condition fails at (a, b, c, d) = {(a, b, c, d)}")
    return CheckResult('cocycle', True)


def coboundary(mu: Cochain2) -> Cocycle3:
    """(d mu)(a,b,c) = mu(b,c) - mu(ab,c) + mu(a,bc) - mu(a,b)"""
    M, t = mu.group.mul, mu.table
    w = t[None, :, :] - t[M] + t[:, M] - t[:, :, None]
    return Cocycle3(mu.group, mu.r, w, name='coboundary')


def _variant(variant: Optional[str]) -> str:
    variant = variant or SETTINGS['theta_variant']
    if variant not in THETA_VARIANTS:
        raise ValueError(f"unknown theta variant {variant!r}, choose from {THETA_VARIANTS}")
    return variant


def theta(w: Cocycle3, x: GroupElement, g: GroupElement, h: GroupElement,
          variant: Optional[str] = None) -> RootExponent:
    """exponent of theta_x(g, h), the twist of the product (d_x g)(d_y h)"""
    G = w.group
    gh = G.m(g, h)
    inner = G.m(G.inv[gh], x, gh)
    if _variant(variant) == 'standard':
        middle = w(g, h, inner)
    else:
        middle = w(h, h, inner)
    return RootExponent(w.r, w(x, g, h) + middle - w(g, G.m(G.inv[g], x, g), h))


def gamma(w: Cocycle3, g: GroupElement, y: GroupElement, z: GroupElement) -> RootExponent:
    """exponent of gamma_g(y, z), the twist of the coproduct"""
    G = w.group
    yg = G.m(G.inv[g], y, g)
    zg = G.m(G.inv[g], z, g)
    return RootExponent(w.r, w(y, z, g) + w(g, yg, zg) - w(y, g, zg))


def theta_table(w: Cocycle3, variant: Optional[str] = None) -> np.ndarray:
    """T[x, g, h] exponent of theta_x(g, h)"""
    G = w.group
    cj = G.conj_table()[G.inv]   # cj[u, x] = u^-1 x u
    ar = np.arange(G.order)
    X, Gs, H = ar[:, None, None], ar[None, :, None], ar[None, None, :]
    inner = cj[G.mul[Gs, H], X]
    if _variant(variant) == 'standard':
        middle = w.w[Gs, H, inner]
    else:
        middle = w.w[H, H, inner]
    return (w.w + middle - w.w[Gs, cj[Gs, X], H]) % w.r


def gamma_table(w: Cocycle3) -> np.ndarray:
    """T[g, y, z] exponent of gamma_g(y, z)"""
    G = w.group
    cj = G.conj_table()[G.inv]
    ar = np.arange(G.order)
    Gs, Y, Z = ar[:, None, None], ar[None, :, None], ar[None, None, :]
    out = w.w[Y, Z, Gs] + w.w[Gs, cj[Gs, Y], cj[Gs, Z]] - w.w[Y, Gs, cj[Gs, Z]]
    return out % w.r


def check_theta_identity(w: Cocycle3, variant: Optional[str] = None) -> CheckResult:
    """theta_x(g,h) + theta_x(gh,k) = theta_x(g,hk) + theta_{g^-1 x g}(h,k) mod r for all x,g,h,k"""
    G = w.group
    T = theta_table(w, variant)
    cj = G.conj_table()[G.inv]
    M = G.mul
    for x in range(G.order):
        lhs = T[x][:, :, None] + T[x][M]
        rhs = T[x][:, M] + T[cj[:, x]]
        bad = np.argwhere((lhs - rhs) % w.r)
        if len(bad):
            g, h, k = (int(v) for v in bad[0])
            return CheckResult('theta identity', False, (x, g, h, k),
                               f"2-cochain identity fails at (x, g, h, k) = {(x, g, h, k)}")
    return CheckResult('theta identity', True)


def from_cocycle_file(path, group: FiniteGroup) -> Cocycle3:
    """read a cocycle file for the given group

    First data line ``r R``, then lines ``a b c e``; triples not listed are 0.
    """
    with open(path, 'r') as f:
        raw = f.readlines()
    return from_cocycle_text(raw, group, name=f"file:{path}")


def from_cocycle_text(lines, group: FiniteGroup, name: str = 'file') -> Cocycle3:
    n = group.order
    r = None
    table = np.zeros((n, n, n), dtype=np.int64)
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        parts = line.split()
        if r is None:
            if len(parts) != 2 or parts[0] != 'r':
                raise CocycleFormatError(f"line {lineno}: expected 'r R', got {line!r}")
            try:
                r = int(parts[1])
            except ValueError:
                raise CocycleFormatError(f"line {lineno}: r is not an integer: {parts[1]!r}")
            if r < 1:
                raise CocycleFormatError(f"line {lineno}: r must be positive")
            continue
        if len(parts) != 4:
            raise CocycleFormatError(f"line {lineno}: expected 'a b c e', got {line!r}")
        try:
            a, b, c, e = (int(v) for v in parts)
        except ValueError:
            raise CocycleFormatError(f"line {lineno}: non-integer entry in {line!r}")
        if not all(0 <= v < n for v in (a, b, c)):
            raise CocycleFormatError(f"line {lineno}: element index out of range [0, {n})")
        if 0 in (a, b, c) and e % r:
            raise CocycleFormatError(f"line {lineno}: cocycle is not normalized at {(a, b, c)}")
        table[a, b, c] = e % r
    if r is None:
        raise CocycleFormatError("missing 'r R' line")
    logger.debug(f"loaded cocycle {name} with r={r}, {int(np.count_nonzero(table))} nonzero entries")
    return Cocycle3(group, r, table, name=name)
