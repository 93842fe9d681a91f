# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/4 10:15
# @Last Modified by: wqshen

import hashlib
import numpy as np
from dataclasses import dataclass
from typing import Union
from ..settings import SETTINGS

DTYPE = np.dtype('<i4')


class OperatorMismatchError(ValueError):
    """operators of different dimension or root-of-unity order were combined"""


class DimensionCapError(ValueError):
    """a dense operator above the dimension cap was requested"""


def check_dim(dim: int, cap: Union[int, None] = None):
    cap = SETTINGS['dim_cap'] if cap is None else cap
    if dim > cap:
        raise DimensionCapError(f"operator dimension {dim} exceeds the cap {cap}")


@dataclass(frozen=True, eq=False)
class MonomialOp:
    """element of the full monomial group G(r, 1, m)

    Acts on basis vectors as v_i -> zeta_r ** scal[i] * v_{perm[i]}.

    Parameters
    ----------
    r: int
        order of the scalar group mu_r
    perm: array-like
        permutation of range(m)
    scal: array-like
        exponents mod r, one per basis vector
    """
    r: int
    perm: np.ndarray
    scal: np.ndarray

    def __post_init__(self):
        perm = np.ascontiguousarray(self.perm, dtype=DTYPE)
        scal = np.ascontiguousarray(np.mod(self.scal, self.r), dtype=DTYPE)
        if perm.ndim != 1 or perm.shape != scal.shape:
            raise ValueError(f"perm {perm.shape} and scal {scal.shape} must be equal length vectors")
        perm.setflags(write=False)
        scal.setflags(write=False)
        object.__setattr__(self, 'r', int(self.r))
        object.__setattr__(self, 'perm', perm)
        object.__setattr__(self, 'scal', scal)

    @classmethod
    def identity(cls, r: int, dim: int) -> 'MonomialOp':
        return cls(r, np.arange(dim), np.zeros(dim))

    @classmethod
    def checked(cls, r: int, perm, scal) -> 'MonomialOp':
        """construct and verify that perm is a bijection"""
        op = cls(r, perm, scal)
        if op.perm.min(initial=0) < 0:
            raise ValueError("perm is not a bijection")
        counts = np.bincount(op.perm, minlength=op.dim)
        if len(counts) != op.dim or (counts != 1).any():
            raise ValueError("perm is not a bijection")
        return op

    @property
    def dim(self) -> int:
        return len(self.perm)

    def _check_compatible(self, other: 'MonomialOp'):
        if self.r != other.r or self.dim != other.dim:
            raise OperatorMismatchError(f"cannot combine (r={self.r}, dim={self.dim}) "
                                        f"with (r={other.r}, dim={other.dim})")

    def compose(self, other: 'MonomialOp') -> 'MonomialOp':
        """self o other, other acts first"""
        self._check_compatible(other)
        return MonomialOp(self.r, self.perm[other.perm], other.scal + self.scal[other.perm])

    __matmul__ = compose

    def inverse(self) -> 'MonomialOp':
        inv = np.empty_like(self.perm)
        inv[self.perm] = np.arange(self.dim, dtype=DTYPE)
        return MonomialOp(self.r, inv, -self.scal[inv].astype(np.int64))

    def power(self, k: int) -> 'MonomialOp':
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = MonomialOp.identity(self.r, self.dim)
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def __pow__(self, k: int) -> 'MonomialOp':
        return self.power(k)

    def is_identity(self) -> bool:
        return bool((self.perm == np.arange(self.dim)).all() and not self.scal.any())

    def is_diagonal(self) -> bool:
        return bool((self.perm == np.arange(self.dim)).all())

    def fingerprint(self) -> bytes:
        """canonical bytes of (r, perm, scal), equal iff the operators are equal"""
        return self.r.to_bytes(4, 'little') + self.perm.tobytes() + self.scal.tobytes()

    def digest(self) -> str:
        return hashlib.sha1(self.fingerprint()).hexdigest()

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialOp):
            return NotImplemented
        return (self.r == other.r and self.dim == other.dim
                and np.array_equal(self.perm, other.perm) and np.array_equal(self.scal, other.scal))

    def __hash__(self):
        return hash(self.fingerprint())

    def __repr__(self):
        return f"MonomialOp(r={self.r}, dim={self.dim}, {self.digest()[:10]})"

    def dumps(self) -> str:
        """the monop v1 text format"""
        lines = ['monop v1', f"r {self.r} dim {self.dim}"]
        lines += [f"{i} {p} {s}" for i, (p, s) in enumerate(zip(self.perm.tolist(), self.scal.tolist()))]
        return '\n'.join(lines) + '\n'

    @classmethod
    def loads(cls, text: str) -> 'MonomialOp':
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0] != 'monop v1':
            raise ValueError("missing 'monop v1' header")
        head = lines[1].split()
        if len(head) != 4 or head[0] != 'r' or head[2] != 'dim':
            raise ValueError(f"bad header line {lines[1]!r}")
        r, dim = int(head[1]), int(head[3])
        body = np.array([[int(v) for v in ln.split()] for ln in lines[2:]], dtype=np.int64).reshape(-1, 3)
        if len(body) != dim or (body[:, 0] != np.arange(dim)).any():
            raise ValueError(f"expected {dim} rows numbered 0..{dim - 1}")
        return cls.checked(r, body[:, 1], body[:, 2])

    def to_dense(self, cap: int = 4096) -> np.ndarray:
        """complex matrix with column i equal to zeta ** scal[i] e_{perm[i]}"""
        check_dim(self.dim, cap)
        mat = np.zeros((self.dim, self.dim), dtype=complex)
        mat[self.perm, np.arange(self.dim)] = np.exp(2j * np.pi * self.scal / self.r)
        return mat
