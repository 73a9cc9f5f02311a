"""asram command-line interface.

    asram mval EXPR --place P
    asram ramify EXPR --place P
    asram subexts EXPR
    asram oracle EXPR --place P --bound B [--coset p|q]
    asram example {a|b} --d D --gamma G [--place P]

Common flags: --p, --r, --modulus, --json, --trace.
Exit codes: 0 success, 2 input error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from . import report as rep
from .asred import trace_log
from .criterion import (RAMIFIED_NOT_TOTALLY, TOTALLY_RAMIFIED, build_paper_example,
                        class_representative, classify_ramification,
                        minimal_subextension_generators)
from .errors import AsramError, InvariantViolation
from .gf import GF, hilbert90
from .asred import is_coprime_negative, m_value
from .oracle import SearchBound, coset_valuation_scan
from .parsing import parse_element, parse_expression, parse_modulus, parse_place
from .ratfunc import RatFunc

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 2, 3

_EXAMPLE_SEARCH = 10**6


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise AsramError(f'{self.prog}: {message}')


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--p', type=int, default=2, help='characteristic (default 2)')
    common.add_argument('--r', type=int, default=1, help='q = p^r (default 1)')
    common.add_argument('--modulus', help='defining polynomial of F_q in g, e.g. "g^2+g+1"')
    common.add_argument('--json', action='store_true', help='emit JSON')
    common.add_argument('--trace', action='store_true', help='include reduction steps')

    parser = _Parser(prog='asram', description='Ramification in Artin-Schreier extensions of F_q(t).')
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    p = sub.add_parser('mval', parents=[common], help='coset maximum m(a, v)')
    p.add_argument('expr')
    p.add_argument('--place', required=True)

    p = sub.add_parser('ramify', parents=[common], help='classify ramification of v in X^q - X - a')
    p.add_argument('expr')
    p.add_argument('--place', required=True)

    p = sub.add_parser('subexts', parents=[common], help='list minimal subextension generators')
    p.add_argument('expr')

    p = sub.add_parser('oracle', parents=[common], help='brute-force coset search')
    p.add_argument('expr')
    p.add_argument('--place', required=True)
    p.add_argument('--bound', type=int, required=True)
    p.add_argument('--coset', choices=['p', 'q'], default='p')

    p = sub.add_parser('example', parents=[common], help='reproduce the counterexample family')
    p.add_argument('variant', choices=['a', 'b'])
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--gamma', required=True)
    p.add_argument('--place', default='t')
    p.add_argument('--bound', type=int, help='oracle pole bound (default: largest <= 6 that is cheap)')
    return parser


def _field(args):
    modulus = parse_modulus(args.modulus, args.p) if args.modulus else None
    if modulus is not None and len(modulus) - 1 != args.r:
        raise AsramError(f'--modulus has degree {len(modulus) - 1} but --r is {args.r}')
    return GF(args.p, args.r, modulus)


def _default_bound(place):
    Q = place.residue_field.size
    B = 6
    while B > 1 and Q ** (B + 1) > _EXAMPLE_SEARCH:
        B -= 1
    return B


def run_example(args, F, out):
    gamma = parse_element(args.gamma, F)
    place = parse_place(args.place, F)
    a = build_paper_example(args.variant, F, args.d, gamma)
    report = classify_ramification(a, place)
    bound = SearchBound(args.bound or _default_bound(place), 'q')
    scan = coset_valuation_scan(a, place, bound)

    checks = {}
    t_adic = not place.is_infinite and place.pi == RatFunc.t(F).num
    if t_adic:
        ms = {c.mval.m for c in report.per_gamma}
        if args.variant == 'a':
            checks['decision_totally_ramified'] = report.decision == TOTALLY_RAMIFIED
            checks['distinct_class_values'] = ms == {-args.d, -1}
            checks['no_scanned_valuation_prime_to_p'] = not any(
                is_coprime_negative(x, F.p) for x in scan.achieved if x < 0)
        else:
            checks['decision_ramified_not_totally'] = report.decision == RAMIFIED_NOT_TOTALLY
            d0 = hilbert90(gamma)
            nonneg = [c.gamma for c in report.per_gamma if not c.mval.is_negative]
            checks['nonnegative_class_is_delta0_p'] = nonneg == [class_representative(d0.frob())]
            checks['scanned_max_negative'] = scan.best_val < 0

    if args.json:
        d = {'input': str(a), 'place': str(place), 'variant': args.variant,
             'report': rep.report_dict(report)}
        d.update(rep.oracle_dict(scan))
        d['checks'] = checks
        print(rep.to_json(d), file=out)
    else:
        print(f'a = {str(a)} over {F}, place {place}', file=out)
        print(rep.report_text(report), file=out)
        print(rep.oracle_text(scan), file=out)
        for name, ok in checks.items():
            print(f'check {name}: {"ok" if ok else "FAILED"}', file=out)
    if not all(checks.values()):
        raise InvariantViolation('example did not reproduce: ' +
                                 ', '.join(k for k, ok in checks.items() if not ok))


def run_command(argv, out=None, err=None):
    """Run one command; returns the process exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        F = _field(args)
        if args.command == 'example':
            run_example(args, F, out)
            return EXIT_OK
        a = parse_expression(args.expr, F)
        if args.command == 'mval':
            res = m_value(a, parse_place(args.place, F))
            mode = 'json' if args.json else 'text'
            print(rep.emit_report(res, mode, trace=args.trace), file=out)
            if args.trace and not args.json:
                print(trace_log(res), file=out)
        elif args.command == 'ramify':
            report = classify_ramification(a, parse_place(args.place, F))
            if args.json:
                d = rep.report_dict(report)
                if args.trace:
                    for c, res in zip(d['classes'], report.per_gamma):
                        c['trace'] = rep.trace_records(res.mval)
                print(rep.to_json(d), file=out)
            else:
                print(rep.report_text(report), file=out)
        elif args.command == 'subexts':
            pairs = minimal_subextension_generators(a)
            if args.json:
                print(rep.to_json([{'gamma': str(g), 'generator': str(b)} for g, b in pairs]), file=out)
            else:
                for g, b in pairs:
                    print(f'gamma = {g}: X^{F.p} - X - ({b})', file=out)
        elif args.command == 'oracle':
            scan = coset_valuation_scan(a, parse_place(args.place, F), SearchBound(args.bound, args.coset))
            print(rep.emit_report(scan, 'json' if args.json else 'text'), file=out)
        return EXIT_OK
    except InvariantViolation as e:
        print(f'asram: invariant violation: {e}', file=err)
        return EXIT_INVARIANT
    except (AsramError, ZeroDivisionError) as e:
        print(f'asram: error: {e}', file=err)
        return EXIT_INPUT


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == '__main__':
    main()
