"""
Main entry point for the nilcoh command-line tool.
"""

import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass, field

from .data import Settings, parse_type_label
from .errors import ConfigError, NilcohError
from .lie import (build_root_system, coxeter_number, enumerate_weyl_group, inversion_set, poincare_polynomial,
                  chevalley_structure_constants, weil_restrict, jacobi_check, lie_lower_central_series)
from .homology import (build_ce_complex, cohomology, base_change_rank_check, FilteredComplex, pages,
                       gr_of_cohomology, collapse_certificate, weight_height_filtration)
from .checks import (kostant_predict, verify_kostant, highest_weight_check, parse_galois, corollary_report)
from .checks.multiplicity import arrangement_series
from .groups import (make_group, lower_central_series, gr_bracket_check, frattini_rank, matrix_model_check,
                     associativity_check, pbw_independence_check, augmentation_powers)
from .output import TextOutput, FileOutput

logger = logging.getLogger(__name__)

COMMANDS = ('roots', 'weyl', 'nilpotent', 'cohomology', 'basechange', 'kostant', 'multiplicity',
            'specseq', 'unipotent')
VERIFY_CHOICES = ('lcs', 'gr', 'pbw', 'matrix', 'laws')


@dataclass
class RunConfig:
    """Resolved and validated command-line configuration"""
    command: str
    type_label: str = None
    d: int = 1
    p: int = None
    k: int = 1
    degree: int = None
    nmax: int = 2
    galois: str = 'cyclic'
    oracle: int = None
    poly: str = 'x**2+x+1'
    verify: tuple = ('lcs', 'gr', 'pbw')
    method: str = 'auto'
    input_path: str = None
    up_to: int = None
    format: str = 'json'
    out: str = None
    jobs: int = 1
    settings: dict = field(default_factory=dict)

    def to_dict(self):
        data = asdict(self)
        data['verify'] = list(self.verify)
        return data


def _d_slot_algebra(type_label, d):
    rs = build_root_system(type_label)
    L = chevalley_structure_constants(rs)
    return rs, weil_restrict(L, d)


def _status(*reports):
    return 'fail' if any(r.get('status') == 'fail' for r in reports) else 'pass'


def analyze_roots(config):
    rs = build_root_system(config.type_label)
    rows = [{'index': i, 'coords': list(root.coords), 'height': root.height}
            for i, root in enumerate(rs.positive_roots)]
    return 'ok', {'root_system': 'rootsystem.build_root_system'}, {'root_system': rs.to_dict()}, [
        ('positive_roots', 'rootsystem.build_root_system', rows),
    ]


def analyze_weyl(config):
    rs = build_root_system(config.type_label)
    W = enumerate_weyl_group(rs)
    elements = [{'word': w.word_label(), 'length': w.length, 'dot_zero': list(W.dot_zero(w.index)),
                 'inversion_set': sorted(inversion_set(rs, w))} for w in W]
    payload = {'order': W.order, 'poincare': poincare_polynomial(W), 'elements': elements}
    provenance = {'elements': 'weyl.enumerate_weyl_group', 'poincare': 'weyl.poincare_polynomial'}
    return 'ok', provenance, payload, [('elements', 'weyl.enumerate_weyl_group', elements)]


def analyze_nilpotent(config):
    rs, L = _d_slot_algebra(config.type_label, config.d)
    jacobi = jacobi_check(L)
    series = lie_lower_central_series(L, config.p or 0)
    payload = {'algebra': L.to_dict(), 'jacobi': jacobi.to_dict(), 'lower_central_series': series}
    provenance = {'algebra': 'nilpotent.chevalley_structure_constants', 'jacobi': 'nilpotent.jacobi_check',
                  'lower_central_series': 'nilpotent.lie_lower_central_series'}
    rows = [{'i': b['i'], 'j': b['j'], 'terms': json.dumps(b['terms'], sort_keys=True)}
            for b in payload['algebra']['brackets']]
    status = 'pass' if jacobi.passed else 'fail'
    return status, provenance, payload, [('brackets', 'nilpotent.chevalley_structure_constants', rows),
                                         ('lower_central_series', 'nilpotent.lie_lower_central_series', series)]


def analyze_cohomology(config):
    rs, L = _d_slot_algebra(config.type_label, config.d)
    C = build_ce_complex(L)
    square = C.check_square_zero()
    result = cohomology(C, jobs=config.jobs)

    W = enumerate_weyl_group(rs)
    expected = arrangement_series(W, config.d)
    rank_law = {'status': 'pass' if result.ranks == expected else 'fail', 'expected': expected,
                'ranks': result.ranks}
    payload = {
        'cohomology': result.to_dict(),
        'ranks': result.ranks,
        'torsion_primes': result.torsion_primes(),
        'euler_characteristic': result.euler_characteristic(),
        'square_zero': square is None,
        'rank_law': rank_law,
    }
    provenance = {'cohomology': 'cecohomology.cohomology', 'rank_law': 'weyl.poincare_polynomial'}
    if config.p:
        payload['specialized'] = {str(n): v for n, v in result.specialize(config.p).items()}
        provenance['specialized'] = 'cecohomology.CohomologyResult.specialize'
    rows = [{'degree': n, 'weight': w['weight'], 'rank': w['rank']}
            for n, deg in payload['cohomology'].items() for w in deg['weights']]
    status = 'pass' if square is None and rank_law['status'] == 'pass' else 'fail'
    return status, provenance, payload, [('weights', 'cecohomology.cohomology', rows)]


def analyze_basechange(config):
    _, L = _d_slot_algebra(config.type_label, config.d)
    report = base_change_rank_check(L, config.poly)
    return report['status'], {'basechange': 'cecohomology.base_change_rank_check'}, {'basechange': report}, [
        ('degrees', 'cecohomology.base_change_rank_check', report['degrees']),
    ]


def analyze_kostant(config):
    if config.d != 1:
        raise ConfigError("kostant checks the single-slot algebra; use multiplicity for d > 1")
    rs, L = _d_slot_algebra(config.type_label, 1)
    W = enumerate_weyl_group(rs)
    C = build_ce_complex(L)
    result = cohomology(C, jobs=config.jobs)
    prediction = kostant_predict(rs, W)
    report = verify_kostant(prediction, result, coxeter_number(rs))
    highest = highest_weight_check(C, W, result)
    payload = {
        'coxeter': coxeter_number(rs),
        'prediction': prediction.to_dict(),
        'degrees': report['degrees'],
        'mismatches': report['mismatches'],
        'highest_weight': highest,
    }
    provenance = {'prediction': 'kostantcheck.kostant_predict', 'degrees': 'kostantcheck.verify_kostant',
                  'highest_weight': 'kostantcheck.highest_weight_check'}
    rows = [dict(degree=int(n), **row) for n, row in report['degrees'].items()]
    return _status(report, highest), provenance, payload, [('degrees', 'kostantcheck.verify_kostant', rows)]


def analyze_multiplicity(config):
    rs, L = _d_slot_algebra(config.type_label, config.d)
    W = enumerate_weyl_group(rs)
    galois = parse_galois(config.galois, config.d)
    if config.oracle is not None and config.galois != 'cyclic':
        raise ConfigError("The invariants oracle uses the cyclic slot rotation; drop --galois or --oracle")
    degree = config.degree if config.degree is not None else 1

    rank = None
    if L.dim <= Settings().cap('exterior'):
        result = cohomology(build_ce_complex(L), jobs=config.jobs)
        rank = result.ranks[degree] if degree < len(result.ranks) else 0
    else:
        logger.info("Skipping the cohomology comparison: dimension %d above the exterior cap", L.dim)

    report = corollary_report(rs, W, config.d, degree, galois, config.oracle, rank)
    provenance = {'characters': 'kostantcheck.corollary_report'}
    if config.oracle is not None:
        provenance['oracle'] = 'kostantcheck.galois_invariants_oracle'
    rows = [{'character': c['character'], 'arrangements': c['arrangements'], 'multiplicity': c['multiplicity'],
             'all_free': c['all_free'], 'oracle_rank': c.get('oracle_rank')} for c in report['characters']]
    return report['status'], provenance, {'multiplicity': report}, [
        ('characters', 'kostantcheck.corollary_report', rows),
    ]


def analyze_specseq(config):
    if config.input_path:
        try:
            with open(config.input_path) as f:
                doc = json.load(f)
        except (OSError, ValueError) as exc:
            raise ConfigError(f"Cannot read filtered complex from {config.input_path}: {exc}")
        C = FilteredComplex.from_json(doc)
    else:
        _, L = _d_slot_algebra(config.type_label, config.d)
        C = weight_height_filtration(build_ce_complex(L), config.p if config.p is not None else 7)

    result, stable_from = pages(C, config.up_to)
    limit = result[-1]
    homology = C.cohomology_dims()
    graded = gr_of_cohomology(C)
    e1_total = result[1].totals(C.top)
    certificate = collapse_certificate(e1_total, homology)
    convergence = limit.totals(C.top) == homology
    payload = {
        'pages': [page.to_dict() for page in result],
        'stable_from': stable_from,
        'e1_total': e1_total,
        'e_infinity_total': limit.totals(C.top),
        'homology': homology,
        'gr_matches_e_infinity': graded == limit.entries,
        'converges': convergence,
        'collapse': certificate,
    }
    provenance = {'pages': 'specseq.pages', 'gr': 'specseq.gr_of_cohomology',
                  'collapse': 'specseq.collapse_certificate'}
    rows = [dict(r=page.r, **entry) for page in result for entry in page.to_dict()['entries']]
    status = 'pass' if convergence and graded == limit.entries else 'fail'
    return status, provenance, payload, [('pages', 'specseq.pages', rows)]


def analyze_unipotent(config):
    rs = build_root_system(config.type_label)
    p = config.p if config.p is not None else 5
    group = make_group(rs, p, config.k, config.d)
    payload = {'group': group.to_dict()}
    provenance = {'group': 'unipotent.make_group'}
    sections = []
    reports = []

    if 'laws' in config.verify:
        payload['laws'] = associativity_check(group)
        provenance['laws'] = 'unipotent.associativity_check'
        reports.append(payload['laws'])
    if 'matrix' in config.verify:
        payload['matrix'] = matrix_model_check(group)
        provenance['matrix'] = 'unipotent.matrix_model_check'
        reports.append(payload['matrix'])
    if 'lcs' in config.verify:
        levels = lower_central_series(group)
        lcs = {'status': 'pass' if all(level['matches'] for level in levels) else 'fail',
               'levels': levels, 'frattini_rank': frattini_rank(group)}
        payload['lcs'] = lcs
        provenance['lcs'] = 'unipotent.lower_central_series'
        reports.append(lcs)
        sections.append(('lcs', 'unipotent.lower_central_series', levels))
    if 'gr' in config.verify:
        payload['gr'] = gr_bracket_check(group)
        provenance['gr'] = 'unipotent.gr_bracket_check'
        reports.append(payload['gr'])
    if 'pbw' in config.verify:
        pbw = pbw_independence_check(group, config.nmax)
        if config.method != 'auto':
            pbw['augmentation'] = augmentation_powers(group, config.nmax, config.method)
        payload['pbw'] = pbw
        provenance['pbw'] = 'unipotent.pbw_independence_check'
        reports.append(pbw)
        sections.append(('pbw', 'unipotent.pbw_independence_check', pbw['degrees']))
    return _status(*reports), provenance, payload, sections


ANALYZERS = {
    'roots': analyze_roots,
    'weyl': analyze_weyl,
    'nilpotent': analyze_nilpotent,
    'cohomology': analyze_cohomology,
    'basechange': analyze_basechange,
    'kostant': analyze_kostant,
    'multiplicity': analyze_multiplicity,
    'specseq': analyze_specseq,
    'unipotent': analyze_unipotent,
}


class _Parser(argparse.ArgumentParser):
    """Argument parser that reports usage errors as ConfigError"""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise ConfigError(message)


def build_parser():
    parser = _Parser(prog='nilcoh', description='Cohomology of nilpotent radicals and the theorems around it.')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    common = _Parser(add_help=False)
    common.add_argument('--type', dest='type_label', type=str, help='Type label such as A2, B3 or G2')
    common.add_argument('--d', type=int, default=1, help='Number of Galois slots (default: 1)')
    common.add_argument('--format', choices=('json', 'tsv'), default='json', help='Report format (default: json)')
    common.add_argument('--out', type=str, default=None, help='Write the report here instead of stdout')
    common.add_argument('--jobs', type=int, default=None, help='Worker threads for weight blocks')
    common.add_argument('-v', '--verbose', action='count', default=0, help='INFO with -v, DEBUG with -vv')

    helps = {
        'roots': 'Positive roots, Cartan matrix, rho and Coxeter number',
        'weyl': 'Weyl group elements, lengths and dot action',
        'nilpotent': 'Chevalley structure constants and Jacobi check',
        'cohomology': 'Integral Lie algebra cohomology by weight',
        'basechange': 'Rank check for coefficients extended to Z[x]/(f)',
        'kostant': "Verify Kostant's theorem",
        'multiplicity': 'Galois-orbit multiplicities of characters',
        'specseq': 'Spectral sequence of a filtered complex',
        'unipotent': 'Finite unipotent group checks',
    }
    commands = {name: sub.add_parser(name, parents=[common], help=helps[name]) for name in COMMANDS}
    for name in ('nilpotent', 'cohomology', 'specseq', 'unipotent'):
        commands[name].add_argument('--p', type=int, default=None, help='Prime')
    commands['basechange'].add_argument('--poly', type=str, default='x**2+x+1', help='Monic ring polynomial')
    commands['multiplicity'].add_argument('--degree', type=int, default=None, help='Cohomological degree n')
    commands['multiplicity'].add_argument('--galois', type=str, default='cyclic',
                                          help="'cyclic' or 'perm:(0 1);(0 2)'")
    commands['multiplicity'].add_argument('--oracle', type=int, default=None, help='Cyclotomic order m')
    commands['specseq'].add_argument('--input', dest='input_path', type=str, default=None,
                                     help='JSON filtered complex')
    commands['specseq'].add_argument('--from-weight-filtration', dest='weight_type', type=str, default=None,
                                     help='Type whose CE complex is filtered by height')
    commands['specseq'].add_argument('--pages', dest='up_to', type=int, default=None, help='Last page to compute')
    commands['unipotent'].add_argument('--k', type=int, default=1, help='Truncation exponent (default: 1)')
    commands['unipotent'].add_argument('--verify', type=str, default='lcs,gr,pbw',
                                       help=f"Comma separated subset of {','.join(VERIFY_CHOICES)}")
    commands['unipotent'].add_argument('--nmax', type=int, default=2, help='Largest augmentation degree')
    commands['unipotent'].add_argument('--method', choices=('auto', 'dense', 'dual'), default='auto',
                                       help='Group algebra engine for the augmentation dimensions')
    return parser


def resolve_config(args):
    """
    Validate parsed arguments into a RunConfig.

    Parameters:
    args (argparse.Namespace): Parsed arguments

    Returns:
    RunConfig: Validated configuration
    """
    settings = Settings()
    values = vars(args)
    type_label = values.get('type_label') or values.get('weight_type')
    if args.command == 'specseq':
        if bool(values.get('input_path')) == bool(type_label):
            raise ConfigError("specseq needs exactly one of --input and --from-weight-filtration")
    elif not type_label:
        raise ConfigError(f"{args.command} needs --type")
    if type_label:
        series, rank = parse_type_label(type_label, allow_exceptional=settings.allow_exceptional)
        type_label = f"{series}{rank}"

    verify = tuple(v.strip() for v in values.get('verify', 'lcs,gr,pbw').split(',') if v.strip())
    unknown = [v for v in verify if v not in VERIFY_CHOICES]
    if unknown:
        raise ConfigError(f"Unknown --verify entries {unknown}; choose from {', '.join(VERIFY_CHOICES)}")

    config = RunConfig(
        command=args.command,
        type_label=type_label,
        d=args.d,
        p=values.get('p'),
        k=values.get('k', 1),
        degree=values.get('degree'),
        nmax=values.get('nmax', 2),
        galois=values.get('galois', 'cyclic'),
        oracle=values.get('oracle'),
        poly=values.get('poly', 'x**2+x+1'),
        verify=verify,
        method=values.get('method', 'auto'),
        input_path=values.get('input_path'),
        up_to=values.get('up_to'),
        format=args.format,
        out=args.out,
        jobs=args.jobs or settings.jobs,
        settings=settings.to_dict(),
    )
    if config.d < 1 or config.k < 1 or config.nmax < 0 or config.jobs < 1:
        raise ConfigError("--d, --k and --jobs must be positive and --nmax non-negative")
    if config.degree is not None and config.degree < 0:
        raise ConfigError("--degree must be non-negative")
    if config.command == 'multiplicity':
        parse_galois(config.galois, config.d)
    return config


def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s', force=True)


def run(argv=None):
    """
    Run one command.

    Parameters:
    argv (list, optional): Arguments without the program name

    Returns:
    int: 0 on success or pass, 1 on a failed verification, 2 on usage or config errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ConfigError as exc:
        sys.stderr.write(f"nilcoh: error: {exc}\n")
        return 2
    except SystemExit as exc:
        return 0 if not exc.code else 2
    _configure_logging(args.verbose)

    try:
        config = resolve_config(args)
        status, provenance, payload, sections = ANALYZERS[config.command](config)
    except NilcohError as exc:
        logger.error("%s", exc)
        sys.stderr.write(f"nilcoh: error: {exc}\n")
        return 2

    text_output = TextOutput()
    if config.format == 'tsv':
        content = text_output.format_tsv(sections)
    else:
        report = text_output.build_report(config.command, config.to_dict(), status, provenance, payload)
        content = text_output.format_json(report)
    try:
        FileOutput(config.out).write(content)
    except OSError as exc:
        logger.error("Cannot write report: %s", exc)
        sys.stderr.write(f"nilcoh: error: {exc}\n")
        return 2

    if status == 'fail':
        logger.warning("%s finished with failed checks", config.command)
        return 1
    return 0


def main():
    """Command-line entry point"""
    sys.exit(run())


if __name__ == "__main__":
    main()
