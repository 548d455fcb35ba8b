#!/usr/bin/env python3
"""
# ArtinBD Toolkit - Artin groups of types B and D
# License: MIT

Word arithmetic, braid actions, semidirect coordinates, rank-2 automorphism
classification and exhaustive verification suites.

Usage:
    python main.py reduce u "u1 u1^-1"
    python main.py act --rep rhoB --n 3 a1 u2
    python main.py verify deltakey --n 3 --len 8
    python main.py rank2 --m 4 classify --alpha "b^-1" --beta "b a b"
    python main.py list

Exit codes: 0 success, 1 verification failure (or words not conjugate),
2 usage or parse error, 130 interrupted.
"""

import argparse
import sys
from pathlib import Path

# Add project root to Python path
project_root = str(Path(__file__).parent)
sys.path.insert(0, project_root)

from core.cli import ArtinCLI
from core.config import load_settings
from groups.errors import WordParseError
from groups.rank2 import SPECIAL_AUTOS
from utils.validation import InputValidator

SUITE_FLAGS = ('n', 'm', 'len', 'rep', 'flavor', 'samples', 'seed', 'jobs')


def common_flags(default=None) -> argparse.ArgumentParser:
    """
    Shared output and logging flags.

    Nested action parsers pass default=argparse.SUPPRESS so a flag given
    before the action is not reset by the action parser.
    """
    flags = argparse.ArgumentParser(add_help=False)
    switch = {} if default is None else {'default': default}
    flags.add_argument('--json', action='store_true', help='Machine-readable output', **switch)
    flags.add_argument('--stable', action='store_true', help='Omit wall time from reports', **switch)
    flags.add_argument('--config', help='Path to config.ini', **switch)
    flags.add_argument('--debug', action='store_true', help='Enable debug logging', **switch)
    return flags


def build_parser() -> argparse.ArgumentParser:
    common = common_flags()
    action_common = common_flags(argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog='artinbd',
        description="ArtinBD Toolkit - Artin groups of types B and D",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  artinbd reduce x "x1 x1 x2"
  artinbd conj u "u1 u2" "u2 u1"
  artinbd iso --flavor D --n 4 --phi "d1 d2"
  artinbd verify braid-relations --rep rhoDg --n 5
        """
    )
    parser.add_argument('--version', action='version', version='artinbd 1.0.0')
    commands = parser.add_subparsers(dest='command', required=True)

    reduce_cmd = commands.add_parser('reduce', parents=[common], help='Reduce a word')
    reduce_cmd.add_argument('family', help="Alphabet (u, v, g, xy, st, ab, std, presB, presD), x for K, a for braids")
    reduce_cmd.add_argument('word')
    reduce_cmd.add_argument('--n', type=int)

    act_cmd = commands.add_parser('act', parents=[common], help='Apply a braid to a fiber word')
    act_cmd.add_argument('--rep', required=True, help='rhoB, rhoDv, rhoDg or rhoPlus')
    act_cmd.add_argument('--n', type=int, required=True)
    act_cmd.add_argument('braid')
    act_cmd.add_argument('word')

    conj_cmd = commands.add_parser('conj', parents=[common], help='Conjugacy witness')
    conj_cmd.add_argument('family')
    conj_cmd.add_argument('first')
    conj_cmd.add_argument('second')
    conj_cmd.add_argument('--n', type=int)

    iso_cmd = commands.add_parser('iso', parents=[common], help='Presentation <-> semidirect coordinates')
    iso_cmd.add_argument('--flavor', required=True, help='B or D')
    iso_cmd.add_argument('--n', type=int, required=True)
    direction = iso_cmd.add_mutually_exclusive_group(required=True)
    direction.add_argument('--phi', dest='direction', action='store_const', const='phi')
    direction.add_argument('--psi', dest='direction', action='store_const', const='psi')
    iso_cmd.add_argument('text')

    verify_cmd = commands.add_parser('verify', parents=[common], help='Run a verification suite')
    verify_cmd.add_argument('suite')
    verify_cmd.add_argument('--n', type=int)
    verify_cmd.add_argument('--m', type=int)
    verify_cmd.add_argument('--len', type=int)
    verify_cmd.add_argument('--rep')
    verify_cmd.add_argument('--flavor')
    verify_cmd.add_argument('--samples', type=int)
    verify_cmd.add_argument('--seed', type=int)
    verify_cmd.add_argument('--jobs', type=int)

    rank2_cmd = commands.add_parser('rank2', parents=[common], help='Rank-2 Artin groups')
    rank2_cmd.add_argument('--m', type=int, required=True)
    actions = rank2_cmd.add_subparsers(dest='action', required=True)
    nf_cmd = actions.add_parser('nf', parents=[action_common], help='Central normal form')
    nf_cmd.add_argument('word')
    nf_cmd.add_argument('--std', action='store_true', help='Word is in alpha/beta')
    classify_cmd = actions.add_parser('classify', parents=[action_common], help='Classify an automorphism')
    classify_cmd.add_argument('--alpha', required=True)
    classify_cmd.add_argument('--beta', required=True)
    apply_cmd = actions.add_parser('apply', parents=[action_common], help='Apply a special automorphism')
    apply_cmd.add_argument('--auto', required=True, choices=SPECIAL_AUTOS)
    apply_cmd.add_argument('word')
    apply_cmd.add_argument('--std', action='store_true', help='Word is in alpha/beta')

    commands.add_parser('list', parents=[common], help='List verification suites')
    return parser


def dispatch(cli: ArtinCLI, args: argparse.Namespace) -> int:
    if args.command == 'reduce':
        return cli.cmd_reduce(args.family, args.word, args.n)
    if args.command == 'act':
        return cli.cmd_act(args.rep, args.n, args.braid, args.word)
    if args.command == 'conj':
        return cli.cmd_conj(args.family, args.first, args.second, args.n)
    if args.command == 'iso':
        return cli.cmd_iso(args.flavor, args.n, args.text, args.direction)
    if args.command == 'verify':
        options = {flag.upper(): getattr(args, flag) for flag in SUITE_FLAGS if flag != 'jobs'}
        options['JOBS'] = args.jobs
        return cli.cmd_verify(args.suite, options)
    if args.command == 'rank2':
        return cli.cmd_rank2(args.m, args.action, word=getattr(args, 'word', None),
                             std=getattr(args, 'std', False), alpha=getattr(args, 'alpha', None),
                             beta=getattr(args, 'beta', None), auto=getattr(args, 'auto', None))
    return cli.cmd_list()


def main(argv=None) -> int:
    """Main entry point for the toolkit."""
    args = build_parser().parse_args(argv)
    settings = load_settings(args.config)
    logger = InputValidator.setup_logging(settings.log_file,
                                          'DEBUG' if args.debug or settings.debug else settings.log_level)

    for text in (getattr(args, name, None) for name in ('word', 'first', 'second', 'text', 'alpha', 'beta')):
        if text is not None and not InputValidator.validate_word_text(text):
            print(f"[!] Invalid characters in word text: {InputValidator.sanitize_input(text, 40)}",
                  file=sys.stderr)
            return 2
    for name in ('n', 'm'):
        value = getattr(args, name, None)
        if value is not None and not InputValidator.validate_rank(value):
            print(f"[!] --{name} out of range: {value}", file=sys.stderr)
            return 2
    if args.command == 'verify' and not InputValidator.validate_suite_id(args.suite):
        print(f"[!] Invalid suite id: {InputValidator.sanitize_input(args.suite, 40)}", file=sys.stderr)
        return 2

    InputValidator.log_event("cli_startup", {"command": args.command, "debug_mode": args.debug}, logger)

    try:
        cli = ArtinCLI(settings, json_output=args.json, stable=args.stable)
        return dispatch(cli, args)
    except KeyboardInterrupt:
        print("\n[*] Interrupted by user", file=sys.stderr)
        InputValidator.log_event("cli_shutdown", {"reason": "user_interrupt"}, logger)
        return 130
    except WordParseError as e:
        print(f"[!] Parse error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"[!] {e}", file=sys.stderr)
        InputValidator.log_event("command_error", {"error": str(e)}, logger)
        if args.debug:
            import traceback
            traceback.print_exc()
        return 2


if __name__ == "__main__":
    sys.exit(main())
