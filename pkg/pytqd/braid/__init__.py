# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/4 10:00
# @Last Modified by: wqshen


from .monomial import MonomialOp
from .representation import BraidRepresentation, band_word
