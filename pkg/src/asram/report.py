"""JSON and text rendering of results."""

from __future__ import annotations

import json
import math

from .asred import MValResult, trace_records
from .criterion import (RAMIFIED_NOT_TOTALLY, TOTALLY_RAMIFIED, GammaClassResult,
                        RamificationReport)
from .parsing import parse_element, parse_expression


def _val(x):
    return None if x is None or x == math.inf else int(x)


def mval_dict(res, trace=False):
    d = {'kind': res.kind, 'm': res.m,
         'witness_b': str(res.witness_b), 'witness_h': str(res.witness_h)}
    if trace:
        d['trace'] = trace_records(res)
    return d


def report_dict(report):
    return {
        'decision': report.decision,
        'ramification_index': report.ramification_index,
        'classes': [{'gamma': str(c.gamma),
                     'm': c.mval.m,
                     'kind': c.mval.kind,
                     'witness_b': str(c.mval.witness_b),
                     'generator': str(c.subextension_generator)} for c in report.per_gamma],
        'inertia_basis': [str(b) for b in report.inertia_basis],
    }


def report_from_dict(d, field):
    """Rebuild a RamificationReport from its JSON form (witness_h is not serialized)."""
    zero = parse_expression('0', field)
    classes = tuple(
        GammaClassResult(parse_element(c['gamma'], field),
                         MValResult(c['kind'], c['m'], parse_expression(c['witness_b'], field), zero),
                         parse_expression(c['generator'], field))
        for c in d['classes'])
    return RamificationReport(classes, d['decision'],
                              tuple(parse_element(b, field) for b in d['inertia_basis']),
                              d['ramification_index'])


def oracle_dict(scan):
    return {'oracle': {'best_valuation': _val(scan.best_val),
                       'witness_h': str(scan.witness_h),
                       'bound': scan.bound.B,
                       'achieved': [_val(x) for x in scan.achieved]}}


def to_json(d):
    return json.dumps(d, indent=2)


def decision_line(report, q):
    if report.decision == TOTALLY_RAMIFIED:
        return 'decision: totally ramified (e = q)'
    if report.decision == RAMIFIED_NOT_TOTALLY:
        return f'decision: ramified, not totally (e = {report.ramification_index} < q = {q})'
    return 'decision: unramified (e = 1)'


def report_text(report):
    F = report.per_gamma[0].gamma.field
    rows = [('gamma', 'kind', 'm', 'witness b')]
    for c in report.per_gamma:
        m = '' if c.mval.m is None else str(c.mval.m)
        rows.append((str(c.gamma), c.mval.kind, m, str(c.mval.witness_b)))
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    lines = ['  '.join(x.ljust(w) for x, w in zip(r[:3], widths)) + '  ' + r[3] for r in rows]
    lines.append(decision_line(report, F.q))
    lines.append(f'ramification index: {report.ramification_index}')
    lines.append('inertia basis: [' + ', '.join(map(str, report.inertia_basis)) + ']')
    return '\n'.join(lines)


def mval_text(res):
    m = '' if res.m is None else f' m = {res.m}'
    return f'kind: {res.kind}{m}\nwitness b: {res.witness_b}\nwitness h: {res.witness_h}'


def oracle_text(scan):
    best = 'inf' if scan.best_val == math.inf else scan.best_val
    achieved = ', '.join('inf' if x == math.inf else str(x) for x in scan.achieved)
    return (f'bound B = {scan.bound.B}, coset power {scan.bound.coset_power}, '
            f'{scan.candidates} shifts\n'
            f'best valuation: {best}\nwitness h: {scan.witness_h}\nachieved: {{{achieved}}}')


def emit_report(obj, mode='text', trace=False):
    """Render a RamificationReport, MValResult or ScanResult as text or JSON."""
    if isinstance(obj, RamificationReport):
        return to_json(report_dict(obj)) if mode == 'json' else report_text(obj)
    if isinstance(obj, MValResult):
        return to_json(mval_dict(obj, trace)) if mode == 'json' else mval_text(obj)
    return to_json(oracle_dict(obj)) if mode == 'json' else oracle_text(obj)
