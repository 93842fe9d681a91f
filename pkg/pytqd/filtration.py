# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/7 11:30
# @Last Modified by: wqshen

import re
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Sequence, Tuple
from logzero import logger
from .checks import CheckResult
from .group import FiniteGroup, lower_central_series_generic, nilpotency_class_from_series
from .image import BudgetExceededError
from .settings import SETTINGS
from .specs import parse_group_spec

Perm = Tuple[int, ...]


class FiltrationFormatError(ValueError):
    """filtration file could not be parsed"""


@dataclass
class FiltrationSpec:
    """normal series H = H_0 > H_1 > ... > H_N = {e}

    Parameters
    ----------
    H: FiniteGroup
        the filtered group
    chain: list of frozenset
        element index sets of H_0, ..., H_N
    """
    H: FiniteGroup
    chain: List[FrozenSet[int]]

    def __post_init__(self):
        self.chain = [frozenset(int(h) for h in level) for level in self.chain]
        if len(self.chain) < 2:
            raise ValueError("a filtration needs at least H_0 and H_N")
        if self.chain[0] != frozenset(range(self.H.order)):
            raise ValueError("H_0 must be the whole group")
        if self.chain[-1] != frozenset([0]):
            raise ValueError("the last level must be the trivial subgroup")
        for k in range(1, len(self.chain)):
            if not self.chain[k] <= self.chain[k - 1]:
                raise ValueError(f"level {k} is not contained in level {k - 1}")

    @property
    def N(self) -> int:
        return len(self.chain) - 1

    def level(self, k: int) -> FrozenSet[int]:
        return self.chain[min(k, self.N)]

    def check_chain(self) -> List[CheckResult]:
        """normality, abelian quotients and [H_i, H_j] <= H_{i+j}"""
        H = self.H
        out = []
        for k, level in enumerate(self.chain):
            if H.subgroup(level) != level:
                return [CheckResult('filtration levels', False, ('subgroup', k),
                                    f"level {k} is not a subgroup")]
            if not H.is_normal(level):
                return [CheckResult('filtration levels', False, ('normal', k),
                                    f"level {k} is not normal")]
        out.append(CheckResult('filtration levels', True))
        for k in range(self.N):
            nxt = self.chain[k + 1]
            for a in self.chain[k]:
                for b in self.chain[k]:
                    if H.comm(a, b) not in nxt:
                        out.append(CheckResult('abelian quotients', False, (k, a, b),
                                               f"H_{k}/H_{k + 1} is not abelian"))
                        return out
        out.append(CheckResult('abelian quotients', True))
        for i in range(1, self.N + 1):
            for j in range(1, self.N + 1):
                target = self.level(i + j)
                for a in self.chain[i]:
                    for b in self.chain[j]:
                        if H.comm(a, b) not in target:
                            out.append(CheckResult('commutator levels', False, (i, j, a, b),
                                                   f"[H_{i}, H_{j}] is not inside H_{min(i + j, self.N)}"))
                            return out
        out.append(CheckResult('commutator levels', True))
        return out


@dataclass
class FiltrationReport:
    N: int
    hypotheses: List[CheckResult] = field(default_factory=list)
    order: Optional[int] = None
    nilpotency_class: Optional[int] = None

    @property
    def hypotheses_hold(self) -> bool:
        return all(self.hypotheses)

    @property
    def class_bound_holds(self) -> Optional[bool]:
        if self.nilpotency_class is None:
            return None
        return self.nilpotency_class <= self.N - 1

    def to_dict(self) -> dict:
        return {'N': self.N, 'order': self.order, 'nilpotency_class': self.nilpotency_class,
                'hypotheses_hold': self.hypotheses_hold,
                'class_bound_holds': self.class_bound_holds,
                'hypotheses': [h.to_dict() for h in self.hypotheses]}


def check_automorphism(f: FiltrationSpec, aut: Sequence[int], label: int = 0) -> CheckResult:
    """aut is a homomorphism of H preserving every level and trivial on each H_i/H_{i+1}"""
    H = f.H
    name = f"automorphism {label}"
    aut = tuple(int(v) for v in aut)
    if sorted(aut) != list(range(H.order)):
        return CheckResult(name, False, ('bijective',), "not a permutation of the elements")
    for a in range(H.order):
        for b in range(H.order):
            if aut[H.m(a, b)] != H.m(aut[a], aut[b]):
                return CheckResult(name, False, ('homomorphism', a, b),
                                   f"aut(ab) != aut(a) aut(b) for (a, b) = {(a, b)}")
    for k in range(f.N):
        level, nxt = f.chain[k], f.chain[k + 1]
        for h in level:
            if aut[h] not in level:
                return CheckResult(name, False, ('preserve', k, h), f"aut moves {h} out of H_{k}")
            if H.m(int(H.inv[h]), aut[h]) not in nxt:
                return CheckResult(name, False, ('quotient', k, h),
                                   f"aut is not trivial on H_{k}/H_{k + 1} at {h}")
    return CheckResult(name, True)


def _compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[v] for v in q)


def _invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for k, v in enumerate(p):
        out[v] = k
    return tuple(out)


def check_filtration_lemma(f: FiltrationSpec, auts: Sequence[Sequence[int]],
                           cap: Optional[int] = None) -> FiltrationReport:
    """verify the hypotheses on auts, then the class of the group they generate

    The class bound is N - 1.
    """
    cap = SETTINGS['nilpotency_cap'] if cap is None else cap
    report = FiltrationReport(N=f.N)
    report.hypotheses.extend(f.check_chain())
    report.hypotheses.extend(check_automorphism(f, a, k) for k, a in enumerate(auts))
    for res in report.hypotheses:
        if not res:
            logger.warning(f"hypothesis violated: {res.detail}, witness {res.witness}")
    if not all(sorted(a) == list(range(f.H.order)) for a in auts):
        return report
    gens = [tuple(int(v) for v in a) for a in auts]
    identity = tuple(range(f.H.order))
    try:
        series = lower_central_series_generic(gens or [identity], _compose, _invert, identity, limit=cap)
    except OverflowError as e:
        raise BudgetExceededError(str(e))
    report.order = len(series[0])
    report.nilpotency_class = nilpotency_class_from_series(series)
    logger.info(f"automorphism group of order {report.order}, class {report.nilpotency_class}, N={f.N}")
    return report


_LEVEL = re.compile(r'^level\s+(\d+)\s*:\s*(.*)$')
_AUT = re.compile(r'^aut\s*:\s*(.*)$')


def _ints(text: str, lineno: int) -> List[int]:
    try:
        return [int(v) for v in text.replace(',', ' ').split()]
    except ValueError:
        raise FiltrationFormatError(f"line {lineno}: non-integer entry in {text!r}")


def from_filtration_file(path) -> Tuple[FiltrationSpec, List[Perm]]:
    """read ``group <spec>``, ``level k: <indices>`` and ``aut: <permutation>`` lines

    A missing level 0 is the whole group.
    """
    group = None
    levels = {}
    auts = []
    with open(path, 'r') as fp:
        lines = fp.readlines()
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        if line.startswith('group '):
            group = parse_group_spec(line[len('group '):])
            continue
        m = _LEVEL.match(line)
        if m:
            levels[int(m.group(1))] = _ints(m.group(2), lineno)
            continue
        m = _AUT.match(line)
        if m:
            auts.append(tuple(_ints(m.group(1), lineno)))
            continue
        raise FiltrationFormatError(f"line {lineno}: unrecognised line {line!r}")
    if group is None:
        raise FiltrationFormatError("missing 'group <spec>' line")
    levels.setdefault(0, list(range(group.order)))
    if sorted(levels) != list(range(len(levels))):
        raise FiltrationFormatError(f"levels must be numbered 0..N, got {sorted(levels)}")
    for k, level in levels.items():
        if any(not 0 <= v < group.order for v in level):
            raise FiltrationFormatError(f"level {k} has an element outside [0, {group.order})")
    for a in auts:
        if len(a) != group.order:
            raise FiltrationFormatError(f"automorphism {a} does not have {group.order} entries")
    try:
        spec = FiltrationSpec(group, [levels[k] for k in range(len(levels))])
    except ValueError as e:
        raise FiltrationFormatError(str(e))
    return spec, auts
