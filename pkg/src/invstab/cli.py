"""Command-line front end.

Five subcommands, all pure functions of their flags (fixed seeds, no
timestamps), so output is reproducible byte for byte:

* ``check``     decide inverse stability for one xi (exit 0 stable,
                3 unstable)
* ``search``    decide for every xi in the field, one row each
* ``generate``  emit the denominator D_n, a certified irreducible of
                degree p^n when the seed is stable
* ``verify``    run the brute-force oracle suites (exit 1 on any
                disagreement)
* ``trace-table``  print the criterion table rows (n, a_n, c_n, d_n,
                a_n/c_n, trace)

Fields are selected with --p/--e and an optional --modulus (comma-separated
integer coefficients, constant first); without a modulus the deterministic
smallest irreducible is used.  Elements use the same comma encoding
(--xi 0,1 is the residue of X; a bare integer works in any field).  Output
goes to stdout or --out, as text, json (top-level "schema": 1) or csv.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from .criterion import STABLE, decide_inverse_stability, trace_rows
from .errors import InvstabError, NotGenerating
from .fields import (
    FieldElement,
    abs_trace,
    element_from_text,
    element_to_text,
    finite_field,
)
from .iteration import DEFAULT_DEGREE_CAP, denominator
from .polys import is_irreducible, poly_to_text
from .xcheck import (
    EquivalenceReport,
    criterion_vs_direct,
    irreducibility_trace_sweep,
    minpoly_trace_check,
    rel_trace_oracle,
)

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2
EXIT_UNSTABLE = 3

SCHEMA_VERSION = 1

#: exhaustive verify suites keep deg D_n = p^n at or below this
SWEEP_DEGREE_LIMIT = 256

_SUITES = ('criterion', 'irreducibility', 'traces', 'minpoly', 'all')


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='invstab',
        description='inverse stability of X^p - X + xi over finite fields')
    sub = parser.add_subparsers(dest='command', required=True)

    def common(sp):
        sp.add_argument('--p', type=int, required=True,
                        help='field characteristic (prime)')
        sp.add_argument('--e', type=int, default=1,
                        help='extension degree over the prime field')
        sp.add_argument('--modulus',
                        help='extension modulus: comma ints, constant first')
        sp.add_argument('--format', choices=('text', 'json', 'csv'),
                        default='text', help='output format')
        sp.add_argument('--out', help='write output to this path')
        sp.add_argument('--cap', type=int, default=DEFAULT_DEGREE_CAP,
                        help='bound on deg D_n = p^n')
        sp.add_argument('--quiet', action='store_true',
                        help='data rows only, no headers or summaries')

    sp = sub.add_parser('check', help='decide stability for one xi')
    common(sp)
    sp.add_argument('--xi', required=True, help='element text encoding')

    sp = sub.add_parser('search', help='decide stability for every xi')
    common(sp)

    sp = sub.add_parser('generate', help='emit the denominator iterate D_n')
    common(sp)
    sp.add_argument('--xi', required=True, help='element text encoding')
    sp.add_argument('--n', type=int, required=True, help='iterate index')
    sp.add_argument('--verify', action='store_true', dest='rabin_verify',
                    help='double-check irreducibility with Rabin')

    sp = sub.add_parser('verify', help='run oracle cross-check suites')
    common(sp)
    sp.add_argument('--suite', choices=_SUITES, default='all')
    sp.add_argument('--nmax', type=int,
                    help='iterate range for the criterion suite '
                         '(default: largest n with p^n <= 256)')

    sp = sub.add_parser('trace-table', help='print criterion table rows')
    common(sp)
    sp.add_argument('--xi', required=True, help='element text encoding')
    sp.add_argument('--nmax', type=int, required=True)

    return parser


def _make_ctx(args):
    modulus = None
    if args.modulus is not None:
        modulus = [int(s) for s in args.modulus.split(',')]
    return finite_field(args.p, args.e, modulus)


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + '\n'


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _table_text(header, rows, quiet: bool) -> str:
    cells = [[str(c) for c in row] for row in rows]
    if not quiet:
        cells.insert(0, [str(c) for c in header])
    if not cells:
        return ''
    widths = [max(len(row[i]) for row in cells)
              for i in range(len(cells[0]))]
    lines = ('  '.join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in cells)
    return '\n'.join(lines) + '\n'


def _opt(value):
    return '' if value is None else value


# ---------------------------------------------------------------------------
# subcommands

def _cmd_check(args) -> int:
    ctx = _make_ctx(args)
    xi = element_from_text(ctx, args.xi)
    verdict = decide_inverse_stability(xi)
    stable = verdict.outcome == STABLE
    if args.format == 'json':
        payload = {'schema': SCHEMA_VERSION, 'command': 'check'}
        payload.update(verdict.to_dict())
        _emit(args, _json_text(payload))
    elif args.format == 'csv':
        header = ('xi', 'outcome', 'witness_n', 'preperiod', 'period',
                  'state_steps')
        row = (element_to_text(xi), verdict.outcome, _opt(verdict.witness_n),
               _opt(verdict.preperiod), _opt(verdict.period),
               verdict.state_steps)
        _emit(args, _csv_text(header, [row]))
    else:
        lines = []
        if not args.quiet:
            field = ctx.describe()
            lines.append(f"field: GF({args.p}^{field['e']})"
                         f" modulus={field['modulus'] or '-'}"
                         f" xi={element_to_text(xi)}")
        if stable:
            lines.append(f"stable preperiod={verdict.preperiod}"
                         f" period={verdict.period}")
        else:
            lines.append(f"unstable witness_n={verdict.witness_n}")
        if not args.quiet:
            lines.append('')
            lines.append(_rows_text(verdict.trace_table, quiet=False).rstrip())
        _emit(args, '\n'.join(lines) + '\n')
    return EXIT_OK if stable else EXIT_UNSTABLE


def _rows_text(rows, quiet: bool) -> str:
    header = ('n', 'a', 'c', 'd', 'a/c', 'trace')
    table = [(r.n, element_to_text(r.a), element_to_text(r.c),
              element_to_text(r.d), element_to_text(r.ratio),
              element_to_text(r.trace)) for r in rows]
    return _table_text(header, table, quiet)


def _cmd_search(args) -> int:
    ctx = _make_ctx(args)
    rows = []
    for xi in ctx.elements():
        verdict = decide_inverse_stability(xi)
        rows.append({
            'xi': element_to_text(xi),
            'trace': element_to_text(abs_trace(xi)),
            'outcome': verdict.outcome,
            'witness_n': verdict.witness_n,
            'preperiod': verdict.preperiod,
            'period': verdict.period,
        })
    if args.format == 'json':
        payload = {'schema': SCHEMA_VERSION, 'command': 'search',
                   'field': ctx.describe(), 'results': rows}
        _emit(args, _json_text(payload))
        return EXIT_OK
    header = ('xi', 'trace', 'outcome', 'witness_n', 'preperiod', 'period')
    table = [(r['xi'], r['trace'], r['outcome'], _opt(r['witness_n']),
              _opt(r['preperiod']), _opt(r['period'])) for r in rows]
    if args.format == 'csv':
        _emit(args, _csv_text(header, table))
    else:
        _emit(args, _table_text(header, table, args.quiet))
    return EXIT_OK


def _cmd_generate(args) -> int:
    ctx = _make_ctx(args)
    xi = element_from_text(ctx, args.xi)
    if args.n < 1:
        raise ValueError("--n must be >= 1")
    den = denominator(xi, args.n, cap=args.cap).monic()
    verdict = decide_inverse_stability(xi)
    criterion_irr = (verdict.outcome == STABLE
                     or verdict.witness_n > args.n)
    rabin_irr = is_irreducible(den) if args.rabin_verify else None
    text = poly_to_text(den)
    if args.format == 'json':
        payload = {
            'schema': SCHEMA_VERSION, 'command': 'generate',
            'field': ctx.describe(), 'xi': element_to_text(xi),
            'n': args.n, 'degree': den.degree,
            'criterion_irreducible': criterion_irr,
            'rabin_irreducible': rabin_irr,
            'poly': text,
        }
        _emit(args, _json_text(payload))
    elif args.format == 'csv':
        header = ('xi', 'n', 'degree', 'criterion_irreducible',
                  'rabin_irreducible', 'poly')
        row = (element_to_text(xi), args.n, den.degree, criterion_irr,
               _opt(rabin_irr), text)
        _emit(args, _csv_text(header, [row]))
    else:
        lines = []
        if not args.quiet:
            lines.append(f"D_{args.n} degree={den.degree}"
                         f" criterion_irreducible={criterion_irr}"
                         + (f" rabin_irreducible={rabin_irr}"
                            if rabin_irr is not None else ''))
        lines.append(text)
        _emit(args, '\n'.join(lines) + '\n')
    return EXIT_OK


def _default_nmax(p: int) -> int:
    n = 1
    while p ** (n + 1) <= SWEEP_DEGREE_LIMIT:
        n += 1
    return n


def _trace_tuple_suite(ctx, count=500, seed=20240815) -> EquivalenceReport:
    """Seeded random Moebius tuples, c = 0 included, formula vs direct."""
    rng = random.Random(seed)
    nonzero_trace = [x for x in ctx.elements() if abs_trace(x).val != 0]
    pairs = []
    for i in range(count):
        xi = nonzero_trace[rng.randrange(len(nonzero_trace))]
        a = FieldElement(ctx, rng.randrange(ctx.order))
        b = FieldElement(ctx, rng.randrange(ctx.order))
        if i % 10 == 0:
            c = ctx.zero
            d = FieldElement(ctx, rng.randrange(1, ctx.order))
        else:
            while True:
                c = FieldElement(ctx, rng.randrange(ctx.order))
                d = FieldElement(ctx, rng.randrange(ctx.order))
                if c.val or d.val:
                    break
        chk = rel_trace_oracle(a, b, c, d, xi)
        pairs.append((i, element_to_text(chk.formula),
                      element_to_text(chk.direct)))
    return EquivalenceReport.build(
        'mobius_trace_vs_frobenius_sum', ctx.describe(), None, None, pairs)


def _minpoly_suite(ctx, count=100, seed=917) -> EquivalenceReport:
    """Minpoly-coefficient trace vs Frobenius sum over generating elements."""
    prime = ctx.prime_ctx
    pairs = []
    if ctx.order <= 512:
        candidates = range(ctx.order)
    else:
        rng = random.Random(seed)
        candidates = (rng.randrange(ctx.order) for _ in range(count))
    for v in candidates:
        alpha = FieldElement(ctx, v)
        try:
            chk = minpoly_trace_check(alpha, prime)
        except NotGenerating:
            continue
        pairs.append((element_to_text(alpha),
                      element_to_text(chk.from_minpoly),
                      element_to_text(chk.from_frobenius_sum)))
    return EquivalenceReport.build(
        'minpoly_coeff_vs_frobenius_sum', ctx.describe(), None, None, pairs)


def _cmd_verify(args) -> int:
    ctx = _make_ctx(args)
    n_max = args.nmax if args.nmax is not None else _default_nmax(args.p)
    if n_max < 1:
        raise ValueError("--nmax must be >= 1")
    reports = []
    if args.suite in ('criterion', 'all'):
        reports.extend(criterion_vs_direct(ctx, n_max, cap=args.cap))
    if args.suite in ('irreducibility', 'all'):
        reports.append(irreducibility_trace_sweep(ctx))
    if args.suite in ('traces', 'all'):
        reports.append(_trace_tuple_suite(ctx))
    if args.suite in ('minpoly', 'all'):
        reports.append(_minpoly_suite(ctx))
    all_agree = all(r.agree for r in reports)
    if args.format == 'json':
        payload = {'schema': SCHEMA_VERSION, 'command': 'verify',
                   'suite': args.suite, 'field': ctx.describe(),
                   'agree': all_agree,
                   'reports': [r.to_dict() for r in reports]}
        _emit(args, _json_text(payload))
    elif args.format == 'csv':
        header = ('label', 'params', 'n_max', 'pairs', 'agree',
                  'first_disagreement')
        table = [(r.label, _opt(r.params), _opt(r.n_max), len(r.pairs),
                  r.agree, _opt(r.first_disagreement)) for r in reports]
        _emit(args, _csv_text(header, table))
    else:
        lines = []
        for r in reports:
            tag = 'ok  ' if r.agree else 'FAIL'
            where = '' if r.first_disagreement is None else (
                f" first_disagreement={r.pairs[r.first_disagreement][0]}")
            params = f" params={r.params}" if r.params else ''
            lines.append(f"{tag} {r.label}{params}"
                         f" pairs={len(r.pairs)}{where}")
        if not args.quiet:
            verdict = 'agree' if all_agree else 'DISAGREE'
            lines.append(f"{len(reports)} report(s): {verdict}")
        _emit(args, '\n'.join(lines) + '\n')
    return EXIT_OK if all_agree else EXIT_DISAGREE


def _cmd_trace_table(args) -> int:
    ctx = _make_ctx(args)
    xi = element_from_text(ctx, args.xi)
    if args.nmax < 1:
        raise ValueError("--nmax must be >= 1")
    rows = trace_rows(xi, args.nmax)
    if args.format == 'json':
        payload = {
            'schema': SCHEMA_VERSION, 'command': 'trace-table',
            'field': ctx.describe(), 'xi': element_to_text(xi),
            'n_max': args.nmax,
            'rows': [{
                'n': r.n,
                'a': element_to_text(r.a),
                'c': element_to_text(r.c),
                'd': element_to_text(r.d),
                'ratio': element_to_text(r.ratio),
                'trace': element_to_text(r.trace),
            } for r in rows],
        }
        _emit(args, _json_text(payload))
    elif args.format == 'csv':
        header = ('n', 'a', 'c', 'd', 'ratio', 'trace')
        table = [(r.n, element_to_text(r.a), element_to_text(r.c),
                  element_to_text(r.d), element_to_text(r.ratio),
                  element_to_text(r.trace)) for r in rows]
        _emit(args, _csv_text(header, table))
    else:
        _emit(args, _rows_text(rows, args.quiet))
    return EXIT_OK


_HANDLERS = {
    'check': _cmd_check,
    'search': _cmd_search,
    'generate': _cmd_generate,
    'verify': _cmd_verify,
    'trace-table': _cmd_trace_table,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (InvstabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
