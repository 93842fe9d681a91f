# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/2 10:00
# @Last Modified by: wqshen

__version__ = '0.1.0'

from .group import FiniteGroup
from .cocycle import Cocycle3, trivial_cocycle, cyclic_cocycle
from .double import TwistedDouble
from .braid.monomial import MonomialOp
from .braid.representation import BraidRepresentation
from .image import analyze, AnalyzeOptions, ImageReport
