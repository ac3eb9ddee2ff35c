"""
Main Entry Point - multiqsym command line
"""

import argparse
import json
import sys
from typing import List, Optional

from pydantic import ValidationError

from src.algebra.errors import InputFormatError, MultiQSymError
from src.algebra.functionals import FUNCTIONAL_NAMES
from src.config.settings import config
from src.orchestrator import MultiQSymOrchestrator
from src.utils.logging_config import setup_logger

QSYM_BASES = ["M", "F", "P", "eta"]
NSYM_BASES = ["S", "Phi", "Upsilon"]
FAMILIES = ["m", "h", "p", "colored", "complete", "Phi", "Upsilon", "chi"]


def build_parser() -> argparse.ArgumentParser:
    """Verbs and their flags"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--pretty', action='store_true', help='Human-readable text instead of JSON')
    common.add_argument('--in', dest='inputs', action='append', metavar='JSON',
                        help='Input as JSON text or a file path ("-" for stdin); repeat for two operands')

    parser = argparse.ArgumentParser(
        prog='multiqsym',
        description='Exact computations in multigraded combinatorial Hopf algebras'
    )
    verbs = parser.add_subparsers(dest='verb', required=True, metavar='verb')

    for verb, text in (('mul', 'Product of two elements'),
                       ('comul', 'Coproduct of an element'),
                       ('antipode', 'Antipode of an element')):
        sub = verbs.add_parser(verb, parents=[common], help=text)
        sub.add_argument('--basis', choices=QSYM_BASES + NSYM_BASES,
                         help='Output basis (defaults to the input basis)')

    sub = verbs.add_parser('convert', parents=[common], help='Change of basis, or build a named element')
    sub.add_argument('--to', choices=QSYM_BASES + NSYM_BASES, help='Target basis')
    sub.add_argument('--family', choices=FAMILIES, help='Named element instead of --in')
    sub.add_argument('--index', help='JSON index of the named element')
    sub.add_argument('--level', type=int)

    verbs.add_parser('pair', parents=[common], help='Duality pairing of an NSym and a QSym element')

    sub = verbs.add_parser('eval-functional', parents=[common], help='Evaluate or inspect a functional')
    sub.add_argument('--name', choices=FUNCTIONAL_NAMES, required=True)
    sub.add_argument('--k', help='Threshold as JSON, "inf" for infinity')
    sub.add_argument('--level', type=int)
    sub.add_argument('--method', choices=['convolution', 'closed-form'], default='convolution')
    sub.add_argument('--degree', help='Print the component of this degree instead of evaluating')
    sub.add_argument('--basis', choices=NSYM_BASES, help='Basis for --degree output')
    sub.add_argument('--check', action='store_true', help='Test k-odd / k-even up to --bound')
    sub.add_argument('--bound', help='Degree bound for --check')

    sub = verbs.add_parser('theta', parents=[common], help='Theta maps, peak functions, eta/theta dictionary')
    sub.add_argument('action', choices=['apply', 'closed', 'peak', 'admissible', 'eta-to-theta', 'theta-to-eta'])
    sub.add_argument('--functional', choices=FUNCTIONAL_NAMES, default='nu-k')
    sub.add_argument('--k')
    sub.add_argument('--S', help='Peak set as a JSON array')
    sub.add_argument('--u', help='Color word, e.g. 010')
    sub.add_argument('--n', type=int, help='Word length for admissible')
    sub.add_argument('--index', help='Odd composition for eta-to-theta')
    sub.add_argument('--level', type=int)
    sub.add_argument('--basis', choices=QSYM_BASES)

    def subalgebra_flags(sub):
        sub.add_argument('--k')
        sub.add_argument('--level', type=int)
        sub.add_argument('--parity', choices=['odd', 'even'], default='odd')
        sub.add_argument('--max-weight', type=int)
        sub.add_argument('--mode', choices=['closed_form', 'enumerate', 'both'])

    sub = verbs.add_parser('subalg', parents=[common], help='Odd and even subalgebras')
    sub.add_argument('action', choices=['basis', 'generators', 'ideal', 'lyndon', 'member', 'hilbert'])
    subalgebra_flags(sub)
    sub.add_argument('--degree')
    sub.add_argument('--basis', choices=['P', 'eta'])
    sub.add_argument('--kind', choices=['Phi', 'Upsilon', 'Chi', 'S'])
    sub.add_argument('--order', choices=['lex', 'revlex'])
    sub.add_argument('--cross-check', action='store_true')

    sub = verbs.add_parser('hilbert', parents=[common], help='Hilbert series table')
    subalgebra_flags(sub)

    sub = verbs.add_parser('poset', parents=[common], help='Multigraded and colored posets')
    sub.add_argument('action', choices=['flag', 'f', 'mobius', 'eulerian', 'dehn-sommerville',
                                        'gamma', 'gamma-hat', 'extensions', 'j-map'])
    sub.add_argument('--k')
    sub.add_argument('--basis', choices=QSYM_BASES)

    sub = verbs.add_parser('fqsym', parents=[common], help='Colored free quasisymmetric functions')
    sub.add_argument('action', choices=['mul', 'comul', 'antipode', 's-embed', 'd-map'])
    sub.add_argument('--n', help='Multidegree for s-embed')
    sub.add_argument('--level', type=int)
    sub.add_argument('--basis', choices=QSYM_BASES, help='Output basis for d-map')

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    logger = setup_logger('src')

    try:
        # Validate configuration
        config.validate()
        orchestrator = MultiQSymOrchestrator()
        result = orchestrator.execute(args)
    except (InputFormatError, json.JSONDecodeError, ValidationError) as e:
        print(f"input error: {_one_line(e)}", file=sys.stderr)
        return 2
    except MultiQSymError as e:
        print(f"error: {_one_line(e)}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {_one_line(e)}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"input error: {_one_line(e)}", file=sys.stderr)
        return 2

    print(result.render(args.pretty))
    logger.debug(f"{args.verb} finished")
    return 0


def _one_line(error: Exception) -> str:
    return " ".join(str(error).split())


def main():
    """Main entry point"""
    sys.exit(run())


if __name__ == "__main__":
    main()
