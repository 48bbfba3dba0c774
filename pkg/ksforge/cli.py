"""Command-line front end of ksforge.

Exit codes: 0 success, 1 negative result, 2 malformed input, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from ksforge import config, fixtures
from ksforge.bases import derive_system, orthogonality_disagreements
from ksforge.catalog import build_catalog
from ksforge.diagram import (Diagram, DiagramSymbol, exhaustive_assignment_check, is_critical,
                             symbol, validate)
from ksforge.errors import CapExceededError, DiagramError, PauliParseError
from ksforge.formats import export
from ksforge.formats.diagram_file import read_diagram, to_dot, write_diagram
from ksforge.parity import CENSUS_COLUMNS, find_parity_proofs
from ksforge.search import DiagramSearch, SearchLimits

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_MALFORMED = 2
EXIT_CAP = 3


def _load(args: argparse.Namespace) -> Diagram:
    if args.fixture:
        return fixtures.load(args.fixture)
    if not args.diagram:
        raise DiagramError("give a diagram file or --fixture")
    return read_diagram(args.diagram)


def cmd_catalog(args: argparse.Namespace) -> int:
    catalog = build_catalog(args.qubits, args.sizes)
    print(export.catalog_summary(catalog))
    if args.output:
        export.write_catalog_json(args.output, catalog)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    d = _load(args)
    report = validate(d)
    if args.format == 'json':
        data = export.report_to_dict(d, report)
    else:
        answer = 'yes' if report.is_ks_proof else 'no'
        print(f"KS proof: {answer}; symbol {symbol(d)}")
        print(f"negative IDs: {report.negative_id_count}")
        if report.odd_observables:
            print(f"observables in an odd number of IDs: {', '.join(report.odd_observables)}")
    if args.assignments:
        result = exhaustive_assignment_check(d)
        if args.format == 'json':
            data['consistent_assignment_exists'] = result.consistent_assignment_exists
        else:
            found = 'yes' if result.consistent_assignment_exists else 'no'
            print(f"consistent +/-1 assignment: {found}")
    if args.critical and report.is_ks_proof:
        criticality = is_critical(d)
        if args.format == 'json':
            data['critical'] = criticality.is_critical
        else:
            print(f"critical: {'yes' if criticality.is_critical else 'no'}")
    if args.format == 'json':
        print(json.dumps(data, indent=2))
    return EXIT_OK if report.is_ks_proof else EXIT_NEGATIVE


def cmd_proofs(args: argparse.Namespace) -> int:
    d = _load(args)
    system = derive_system(d)
    print(f"projector system {system.brief_symbol}: {system.symbol}")
    if args.check_orthogonality:
        disagreements = list(orthogonality_disagreements(system.projectors))
        if disagreements:
            logger.error("signature rule and matrices disagree on %d pairs", len(disagreements))
            return EXIT_NEGATIVE
        print("orthogonality checked against exact matrices")
    result = find_parity_proofs(system, args.max_kernel_dim, args.type,
                                collect=bool(args.proofs), workers=args.workers)
    if result.census.empty:
        print("no parity proofs")
    else:
        print(result.census[CENSUS_COLUMNS].to_string(index=False))
    print(f"total: {result.total}")
    if args.system:
        export.write_system_json(args.system, system, vectors=args.vectors)
    if args.census:
        export.write_census_csv(args.census, result.census)
    if args.proofs:
        export.write_proofs_json(args.proofs, system, result.proofs)
    return EXIT_OK if result.total else EXIT_NEGATIVE


def cmd_search(args: argparse.Namespace) -> int:
    target = _target(args.symbol)
    limits = SearchLimits(args.max_diagrams, args.max_seconds, args.max_nodes)
    catalog = build_catalog(args.qubits, sizes=target.size_map())
    search = DiagramSearch(catalog, target, args.id4_overlap, limits)
    output = Path(args.output_dir) if args.output_dir else None
    if output:
        output.mkdir(parents=True, exist_ok=True)
    for number, d in enumerate(search.run(), start=1):
        print(f"diagram {number}: symbol {symbol(d)}")
        print(d)
        if output:
            write_diagram(output / f"diagram_{number:03d}.txt", d, f"found by search for {args.symbol}")
    outcome = search.outcome
    if outcome.found:
        return EXIT_OK
    if outcome.exhausted:
        print(f"no diagram with symbol {args.symbol} exists (search exhausted)")
    else:
        print(f"no diagram found before the {outcome.stop_reason}")
    return EXIT_NEGATIVE


def _target(text: str) -> DiagramSymbol:
    try:
        target = DiagramSymbol.parse(text)
    except ValueError as error:
        raise DiagramError(str(error)) from error
    if not target.is_consistent():
        raise DiagramError(f"symbol {text} violates the counting constraint")
    return target


def cmd_export_dot(args: argparse.Namespace) -> int:
    text = to_dot(_load(args))
    if args.output:
        Path(args.output).write_text(text, encoding='utf-8')
    else:
        print(text, end='')
    return EXIT_OK


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("diagram", nargs='?', help="diagram file")
    parser.add_argument("--fixture", choices=fixtures.names(), help="use a built-in diagram")


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='ksforge',
                                     description="Kochen-Specker proofs from the N-qubit Pauli group")
    parser.add_argument("--log-level", default=config.LOG_LEVEL, help="logging level")
    subparsers = parser.add_subparsers(dest='command', required=True)

    catalog = subparsers.add_parser('catalog', help="observables, maximal commuting sets and IDs")
    catalog.add_argument("-n", "--qubits", type=_positive_int, required=True)
    catalog.add_argument("--sizes", type=int, nargs='+', default=None, help="ID sizes to list")
    catalog.add_argument("-o", "--output", help="catalog JSON file")
    catalog.set_defaults(handler=cmd_catalog)

    verify = subparsers.add_parser('verify', help="check that a diagram is a KS proof")
    _add_input(verify)
    verify.add_argument("--format", choices=('text', 'json'), default='text')
    verify.add_argument("--assignments", action='store_true',
                        help="also search all +/-1 assignments")
    verify.add_argument("--critical", action='store_true', help="also test criticality")
    verify.set_defaults(handler=cmd_verify)

    proofs = subparsers.add_parser('proofs', help="projector system and parity-proof census")
    _add_input(proofs)
    proofs.add_argument("--type", help="keep one proof type, e.g. 36-11 or a detailed symbol")
    proofs.add_argument("--max-kernel-dim", type=_positive_int, default=None)
    proofs.add_argument("--workers", type=_positive_int, default=None)
    proofs.add_argument("--check-orthogonality", action='store_true',
                        help="compare the signature rule with exact matrix products")
    proofs.add_argument("--census", help="census CSV file")
    proofs.add_argument("--system", help="projector system JSON file")
    proofs.add_argument("--vectors", action='store_true',
                        help="add integer eigenspace vectors to the system file")
    proofs.add_argument("--proofs", help="proof list JSON file")
    proofs.set_defaults(handler=cmd_proofs)

    search = subparsers.add_parser('search', help="find diagrams with a given symbol")
    search.add_argument("-n", "--qubits", type=_positive_int, required=True)
    search.add_argument("--symbol", required=True, help="target symbol, e.g. 10_2-5_4")
    search.add_argument("--id4-overlap", type=int, default=None,
                        help="require two ID4s sharing this many observables")
    search.add_argument("--max-diagrams", type=_positive_int, default=None)
    search.add_argument("--max-seconds", type=_positive_float, default=None)
    search.add_argument("--max-nodes", type=_positive_int, default=None)
    search.add_argument("--output-dir", help="directory for the diagram files")
    search.set_defaults(handler=cmd_search)

    dot = subparsers.add_parser('dot', help="Graphviz rendering of a diagram")
    _add_input(dot)
    dot.add_argument("-o", "--output", help="DOT file")
    dot.set_defaults(handler=cmd_export_dot)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    config.setup_logging(args.log_level)
    try:
        return args.handler(args)
    except (DiagramError, PauliParseError, ValueError) as error:
        logger.error("%s", error)
        return EXIT_MALFORMED
    except CapExceededError as error:
        logger.error("%s", error)
        return EXIT_CAP
    except OSError as error:
        logger.error("%s", error)
        return EXIT_MALFORMED


if __name__ == '__main__':
    sys.exit(main())
