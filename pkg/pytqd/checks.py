# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/2 14:05
# @Last Modified by: wqshen

from dataclasses import dataclass, asdict
from typing import Any, Iterable, List
import pandas as pd


@dataclass
class CheckResult:
    """outcome of one verification, truthy when the property holds"""
    name: str
    passed: bool
    witness: Any = None
    detail: str = ''

    def __bool__(self):
        return bool(self.passed)

    def to_dict(self) -> dict:
        out = asdict(self)
        if isinstance(self.witness, tuple):
            out['witness'] = list(self.witness)
        return out


def results_frame(results: Iterable[CheckResult]) -> pd.DataFrame:
    """tabulate check results, one row per check"""
    rows: List[dict] = []
    for res in results:
        rows.append({'check': res.name,
                     'status': 'pass' if res.passed else 'FAIL',
                     'witness': '' if res.witness is None else str(res.witness),
                     'detail': res.detail})
    return pd.DataFrame(rows, columns=['check', 'status', 'witness', 'detail'])
