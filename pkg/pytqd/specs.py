# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/7 9:00
# @Last Modified by: wqshen
"""Group and cocycle spec strings of the command line

group:   cyclic:m | dihedral:m | quaternion | symmetric:m | product:<spec>,<spec> | trivial | file:<path>
cocycle: trivial | cyclic:q | file:<path>
"""

import numpy as np
from .cocycle import Cocycle3, CocycleFormatError, cyclic_cocycle, trivial_cocycle, from_cocycle_file
from .group import (FiniteGroup, CayleyFormatError, make_cyclic, make_dihedral, make_quaternion8,
                    make_symmetric, make_product, make_trivial, from_cayley_file)


class SpecError(ValueError):
    """malformed group or cocycle spec"""


def _int_arg(spec: str, arg: str) -> int:
    try:
        return int(arg)
    except ValueError:
        raise SpecError(f"{spec!r}: expected an integer, got {arg!r}")


def parse_group_spec(spec: str) -> FiniteGroup:
    spec = spec.strip()
    kind, _, arg = spec.partition(':')
    try:
        if kind == 'trivial' and not arg:
            return make_trivial()
        if kind == 'quaternion' and not arg:
            return make_quaternion8()
        if kind == 'cyclic':
            return make_cyclic(_int_arg(spec, arg))
        if kind == 'dihedral':
            return make_dihedral(_int_arg(spec, arg))
        if kind == 'symmetric':
            return make_symmetric(_int_arg(spec, arg))
        if kind == 'file':
            G = from_cayley_file(arg)
            G.name = spec
            return G
    except (SpecError, CayleyFormatError, OSError):
        raise
    except ValueError as e:
        raise SpecError(f"{spec!r}: {e}")
    if kind == 'product':
        return _parse_product(spec, arg)
    raise SpecError(f"unknown group spec {spec!r}")


def _parse_product(spec: str, arg: str) -> FiniteGroup:
    """split at the first comma where both sides parse"""
    for pos, ch in enumerate(arg):
        if ch != ',':
            continue
        try:
            left, right = parse_group_spec(arg[:pos]), parse_group_spec(arg[pos + 1:])
        except SpecError:
            continue
        return make_product(left, right)
    raise SpecError(f"{spec!r}: product needs two comma separated group specs")


def parse_cocycle_spec(spec: str, G: FiniteGroup) -> Cocycle3:
    spec = spec.strip()
    kind, _, arg = spec.partition(':')
    if kind == 'trivial' and not arg:
        return trivial_cocycle(G, 1)
    if kind == 'cyclic':
        q = _int_arg(spec, arg)
        if not np.array_equal(G.mul, make_cyclic(G.order).mul):
            raise SpecError(f"{spec!r} needs a cyclic group in residue order, got {G.name}")
        if not 0 <= q < G.order:
            raise SpecError(f"{spec!r}: q must lie in [0, {G.order})")
        w = cyclic_cocycle(G.order, q)
        return Cocycle3(G, w.r, w.w, name=spec)
    if kind == 'file':
        w = from_cocycle_file(arg, G)
        w.name = spec
        return w
    raise SpecError(f"unknown cocycle spec {spec!r}")


INPUT_ERRORS = (SpecError, CayleyFormatError, CocycleFormatError, OSError)
