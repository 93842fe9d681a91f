#!/usr/bin/env python

# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/8 10:00
# @Last Modified by: wqshen

import os
import sys
import json
import argparse
import logzero
import numpy as np
import pandas as pd
from logzero import logger
from dataclasses import dataclass
from typing import Optional
from .braid.monomial import DimensionCapError
from .braid.representation import BraidRepresentation, select_associator_sign
from .cache import ReportCache, CacheLockedError
from .checks import CheckResult, results_frame
from .cocycle import THETA_VARIANTS, Cocycle3
from .double import TwistedDouble, select_theta_variant, select_coproduct_reading
from .filtration import FiltrationFormatError, check_filtration_lemma, from_filtration_file
from .group import is_p_group
from .image import AnalyzeOptions, BudgetExceededError, analyze, coxeter_finite, coxeter_table
from .settings import SETTINGS
from .specs import INPUT_ERRORS, parse_group_spec, parse_cocycle_spec

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INCOMPLETE = 2
EXIT_INPUT = 3


@dataclass
class JobSpec:
    """what to compute and where to put it"""
    group: str
    cocycle: str = 'trivial'
    n: int = 2
    max_elements: int = SETTINGS['max_elements']
    fmt: str = 'text'
    cache: Optional[str] = None
    variant: Optional[str] = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need n >= 2 strands, got {self.n}")

    def load(self) -> Cocycle3:
        G = parse_group_spec(self.group)
        return parse_cocycle_spec(self.cocycle, G)

    def cache_key(self, which: str) -> str:
        return ReportCache.key(group=self.group, cocycle=self.cocycle, n=self.n, which=which,
                               variant=self.variant or SETTINGS['theta_variant'],
                               max_elements=self.max_elements)


def _print(payload: dict, fmt: str, frame: Optional[pd.DataFrame] = None):
    if fmt == 'json':
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        if frame is None:
            frame = pd.DataFrame({'value': ['-' if v is None else v for v in payload.values()]},
                                 index=pd.Index(list(payload.keys()), name='field'))
        print(frame.to_string())


def cmd_group_info(spec: str, fmt: str = 'text') -> int:
    G = parse_group_spec(spec)
    pg = is_p_group(G)
    payload = {'group': spec, 'order': G.order, 'trivial': G.is_trivial, 'abelian': G.is_abelian,
               'p': pg[0] if pg else None, 'k': pg[1] if pg else None,
               'nilpotency_class': G.nilpotency_class()}
    _print(payload, fmt)
    return EXIT_OK


def cmd_selftest(job: JobSpec, extended: bool = False) -> int:
    w = job.load()
    results = TwistedDouble(w, variant=job.variant).run_selftest(extended=extended)
    payload = {'group': job.group, 'cocycle': job.cocycle, 'results': [r.to_dict() for r in results]}
    _print(payload, job.fmt, results_frame(results))
    return EXIT_OK if all(results) else EXIT_FAILED


def cmd_arbiters(fmt: str = 'text') -> int:
    results = [CheckResult('theta variant', True, select_theta_variant()),
               CheckResult('coproduct reading', True, select_coproduct_reading()),
               CheckResult('associator sign', True, select_associator_sign())]
    frozen = {'theta variant': SETTINGS['theta_variant'],
              'coproduct reading': SETTINGS['coproduct_reading'],
              'associator sign': SETTINGS['associator_sign']}
    for res in results:
        res.passed = res.witness == frozen[res.name]
        res.detail = f"settings: {frozen[res.name]}"
    _print({'results': [r.to_dict() for r in results]}, fmt, results_frame(results))
    return EXIT_OK if all(results) else EXIT_FAILED


def cmd_rep_emit(job: JobSpec, outdir: str, pure: bool = False) -> int:
    w = job.load()
    rep = BraidRepresentation(w, job.n, variant=job.variant)
    os.makedirs(outdir, exist_ok=True)
    rows = []
    ops = [(f"beta_{i}", rep.braid_generator(i)) for i in range(1, job.n)]
    if pure:
        ops += [(f"A_{i}_{j}", rep.pure_braid_generator(i, j))
                for i in range(1, job.n) for j in range(i + 1, job.n + 1)]
    for name, op in ops:
        pathfile = os.path.join(outdir, f"{name}.monop")
        with open(pathfile, 'w') as f:
            f.write(op.dumps())
        logger.info(f"wrote {pathfile}")
        rows.append({'operator': name, 'file': pathfile, 'dim': op.dim, 'r': op.r, 'sha1': op.digest()})
    _print({'operators': rows}, job.fmt, pd.DataFrame(rows))
    return EXIT_OK


def _image_payload(job: JobSpec, which: str) -> dict:
    cache = ReportCache(job.cache) if job.cache else None
    key = job.cache_key(which)
    if cache is not None:
        payload = cache.get(key)
        if payload is not None:
            return payload
    w = job.load()
    opts = AnalyzeOptions(max_elements=job.max_elements, which=which, variant=job.variant)
    report = analyze(w, job.n, opts, group_name=job.group, cocycle_name=job.cocycle)
    payload = report.to_dict()
    payload['complete'] = report.complete
    if cache is not None:
        cache.put(key, payload, job={'group': job.group, 'cocycle': job.cocycle, 'n': job.n, 'which': which})
    return payload


def cmd_image(job: JobSpec, which: str) -> int:
    payload = _image_payload(job, which)
    _print(payload, job.fmt)
    return EXIT_OK if payload['complete'] else EXIT_INCOMPLETE


def cmd_report(job: JobSpec) -> int:
    return cmd_image(job, 'both')


def cmd_coxeter(n: int, k: int, grid: bool = False, fmt: str = 'text') -> int:
    if grid:
        table = coxeter_table(range(2, n + 1), range(1, k + 1))
        if fmt == 'json':
            print(json.dumps({str(i): {str(j): bool(v) for j, v in row.items()}
                              for i, row in table.iterrows()}, sort_keys=True, indent=2))
        else:
            labels = np.where(table.values, 'finite', 'infinite')
            print(pd.DataFrame(labels, index=table.index, columns=table.columns).to_string())
        return EXIT_OK
    finite = coxeter_finite(n, k)
    _print({'n': n, 'k': k, 'finite': finite}, fmt)
    return EXIT_OK


def cmd_filtration(path: str, fmt: str = 'text') -> int:
    spec, auts = from_filtration_file(path)
    report = check_filtration_lemma(spec, auts)
    payload = report.to_dict()
    _print(payload, fmt, results_frame(report.hypotheses))
    if fmt != 'json':
        print(f"order {report.order}, class {report.nilpotency_class}, bound N-1 = {report.N - 1}")
    return EXIT_OK if report.hypotheses_hold and report.class_bound_holds else EXIT_FAILED


def _variant(value: str) -> str:
    kind, _, name = value.rpartition(':')
    if kind not in ('', 'theta') or name not in THETA_VARIANTS:
        raise argparse.ArgumentTypeError(f"expected theta:standard or theta:printed, got {value!r}")
    return name


def _build_parser() -> argparse.ArgumentParser:
    example_text = """Example:
     tqd group info quaternion
     tqd selftest --group cyclic:2 --cocycle cyclic:1
     tqd image pure --group cyclic:2 --cocycle trivial -n 2
     tqd report --group cyclic:4 -n 2 --format json --cache ~/.cache/tqd
     tqd coxeter -n 3 -k 4
     tqd filtration z4.filt
     """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-o', '--loglevel', type=int, help='loglevel: 10, 20, 30, 40, 50', default=20)
    common.add_argument('--format', dest='fmt', choices=['text', 'json'], default='text',
                        help='output format')

    job = argparse.ArgumentParser(add_help=False)
    job.add_argument('--group', required=True, help='group spec, e.g. cyclic:4, product:cyclic:2,cyclic:2')
    job.add_argument('--cocycle', default='trivial', help='cocycle spec: trivial, cyclic:q, file:<path>')
    job.add_argument('-n', type=int, default=2, help='number of strands')
    job.add_argument('--max-elements', type=int, default=SETTINGS['max_elements'],
                     help='closure budget')
    job.add_argument('--cache', help='cache directory for reports')
    job.add_argument('--variant', type=_variant, help='theta:standard or theta:printed')

    parser = argparse.ArgumentParser(description='Braid group images from twisted quantum doubles',
                                     epilog=example_text,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest='command')

    p = sub.add_parser('group', parents=[common], help='group information')
    p.add_argument('action', choices=['info'])
    p.add_argument('spec', help='group spec')

    p = sub.add_parser('selftest', parents=[common, job], help='structure checks of the double')
    p.add_argument('--extended', action='store_true', help='add antipode and quasitriangularity (|G| <= 4)')

    sub.add_parser('arbiters', parents=[common], help='rerun the convention arbiters')

    p = sub.add_parser('rep', parents=[common, job], help='emit braid operators')
    p.add_argument('action', choices=['emit'])
    p.add_argument('--out', default='.', help='output directory for .monop files')
    p.add_argument('--pure', action='store_true', help='also emit the band generators A_ij')

    p = sub.add_parser('image', parents=[common, job], help='order and structure of an image group')
    p.add_argument('which', choices=['braid', 'pure'])

    sub.add_parser('report', parents=[common, job], help='full image report')

    p = sub.add_parser('coxeter', parents=[common], help='Coxeter finiteness criterion')
    p.add_argument('-n', type=int, required=True, help='number of strands')
    p.add_argument('-k', type=int, required=True, help='order of the generator image')
    p.add_argument('--grid', action='store_true', help='table for 2..n by 1..k')

    p = sub.add_parser('filtration', parents=[common], help='check the filtration lemma on a file')
    p.add_argument('file', help='filtration file')
    return parser


def _dispatch(args) -> int:
    if args.command == 'group':
        return cmd_group_info(args.spec, args.fmt)
    if args.command == 'coxeter':
        return cmd_coxeter(args.n, args.k, args.grid, args.fmt)
    if args.command == 'filtration':
        return cmd_filtration(args.file, args.fmt)
    if args.command == 'arbiters':
        return cmd_arbiters(args.fmt)
    job = JobSpec(group=args.group, cocycle=args.cocycle, n=args.n, max_elements=args.max_elements,
                  fmt=args.fmt, cache=args.cache, variant=args.variant)
    if args.command == 'selftest':
        return cmd_selftest(job, args.extended)
    if args.command == 'rep':
        return cmd_rep_emit(job, args.out, args.pure)
    if args.command == 'image':
        return cmd_image(job, args.which)
    return cmd_report(job)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_INPUT
    logzero.loglevel(args.loglevel)
    try:
        return _dispatch(args)
    except INPUT_ERRORS + (FiltrationFormatError, DimensionCapError, CacheLockedError, ValueError, IndexError) as e:
        logger.error(str(e))
        return EXIT_INPUT
    except BudgetExceededError as e:
        logger.warning(str(e))
        return EXIT_INCOMPLETE
    except Exception:
        logger.exception("unexpected failure")
        return EXIT_FAILED


def _main():
    if len(sys.argv) == 1:
        _build_parser().print_help(sys.stderr)
        sys.exit(1)
    sys.exit(main())


if __name__ == '__main__':
    _main()
