"""
ArtinBD Toolkit - Command implementations
License: MIT

One method per subcommand. Methods print their result and return the process
exit code; group errors propagate to main, which maps them to exit code 2.
"""

import json
import logging
import re
from typing import Dict, Optional

try:
    from rich.console import Console
    from rich.table import Table
    RICH_AVAILABLE = True
except ImportError:
    RICH_AVAILABLE = False

from groups.braids import braid_text, parse_braid
from groups.errors import FlavorError, WordParseError
from groups.free_words import is_conjugate, parse_word, word_text
from groups.involutive_products import k_conjugate, k_text, parse_k_word
from groups.rank2 import Rank2Group, parse_images
from groups.representations import FIBER_ALPHABET, RepKind, act
from groups.semidirect import (PRESENTATION_ALPHABET, FlavorTag, GroupFlavor, element_text, parse_element,
                               phi, psi)
from groups.symbols import Alphabet

from .config import Settings
from .modules import SuiteManager, SuiteNotFoundError
from .report import VerifyReport, render_report

logger = logging.getLogger('artinbd.cli')

K_FAMILY = 'x'
BRAID_FAMILY = 'a'
INDEX_PATTERN = re.compile(r'[A-Za-z]+(\d+)')


class SimpleConsole:
    """Simple console fallback when Rich is not available."""

    plain = True

    def print(self, text=''):
        clean_text = str(text)
        for tag in ('red', 'green', 'yellow', 'cyan', 'bold'):
            clean_text = clean_text.replace(f'[{tag}]', '').replace(f'[/{tag}]', '')
        print(clean_text)


def max_index(text: str) -> int:
    """Largest generator index written in word text (0 when none)."""
    return max((int(match) for match in INDEX_PATTERN.findall(text)), default=0)


class ArtinCLI:
    """Command implementations behind the artinbd entry point."""

    def __init__(self, settings: Optional[Settings] = None, json_output: bool = False,
                 stable: bool = False):
        self.settings = settings or Settings()
        self.json_output = json_output
        self.stable = stable
        if RICH_AVAILABLE:
            self.console = Console(highlight=False, markup=False, emoji=False, soft_wrap=True,
                                   no_color=not self.settings.use_colors)
        else:
            self.console = SimpleConsole()
        self.suite_manager = SuiteManager()
        self.suite_manager.load_all_suites()

    def emit(self, text: str):
        self.console.print(text)

    def emit_json(self, data):
        self.emit(json.dumps(data, indent=self.settings.json_indent, sort_keys=True))

    # -- words ----------------------------------------------------------------------

    def cmd_reduce(self, family: str, text: str, n: Optional[int] = None) -> int:
        """Print the reduced form of a word in the given family."""
        if family == K_FAMILY:
            result = k_text(parse_k_word(text, n or max(max_index(text), 1)))
        elif family == BRAID_FAMILY:
            result = braid_text(parse_braid(text, n or max(max_index(text) + 1, 2)))
        else:
            result = word_text(parse_word(text, Alphabet.from_label(family)))
        if self.json_output:
            self.emit_json({'family': family, 'reduced': result})
        else:
            self.emit(result)
        return 0

    def _parse_fiber(self, kind: RepKind, text: str, n: int):
        if kind is RepKind.RHO_PLUS:
            return parse_k_word(text, n)
        return parse_word(text, FIBER_ALPHABET[kind])

    def cmd_act(self, rep_name: str, n: int, braid: str, word: str) -> int:
        """Print rho(b)(w)."""
        kind = RepKind.from_name(rep_name)
        b = parse_braid(braid, n)
        image = act(kind, b, self._parse_fiber(kind, word, n))
        result = k_text(image) if kind is RepKind.RHO_PLUS else word_text(image)
        if self.json_output:
            self.emit_json({'rep': kind.value, 'n': n, 'braid': braid_text(b), 'image': result})
        else:
            self.emit(result)
        return 0

    def cmd_conj(self, family: str, first: str, second: str, n: Optional[int] = None) -> int:
        """Print a witness c with c w1 c^-1 = w2; exit 1 when not conjugate."""
        if family == K_FAMILY:
            n = n or max(max_index(first), max_index(second), 1)
            witness = k_conjugate(parse_k_word(first, n), parse_k_word(second, n))
            witness_text = k_text(witness) if witness is not None else None
        else:
            alphabet = Alphabet.from_label(family)
            witness = is_conjugate(parse_word(first, alphabet), parse_word(second, alphabet))
            witness_text = word_text(witness) if witness is not None else None
        if self.json_output:
            self.emit_json({'conjugate': witness_text is not None, 'witness': witness_text})
        else:
            self.emit(witness_text if witness_text is not None else 'not conjugate')
        return 0 if witness_text is not None else 1

    def cmd_iso(self, flavor_name: str, n: int, text: str, direction: str) -> int:
        """phi: presentation word -> (fiber | braid); psi: the reverse."""
        flavor = GroupFlavor(FlavorTag.from_name(flavor_name), n)
        if flavor.tag not in PRESENTATION_ALPHABET:
            raise FlavorError(f"{flavor.tag.value} has no Artin presentation")
        if direction == 'phi':
            result = element_text(phi(parse_word(text, PRESENTATION_ALPHABET[flavor.tag]), flavor))
        else:
            result = word_text(psi(parse_element(text, flavor)))
        if self.json_output:
            self.emit_json({'flavor': flavor.tag.value, 'n': n, direction: result})
        else:
            self.emit(result)
        return 0

    # -- suites -----------------------------------------------------------------------

    def cmd_list(self) -> int:
        suites = self.suite_manager.list_suites()
        if self.json_output:
            self.emit_json(suites)
            return 0
        if RICH_AVAILABLE and not getattr(self.console, 'plain', False):
            table = Table(title="Verification Suites", show_header=True)
            table.add_column("Suite", style="cyan", no_wrap=True)
            table.add_column("Category", style="green")
            table.add_column("Description", style="white")
            for suite_id in suites:
                info = self.suite_manager.get_suite(suite_id)(self.settings).info
                table.add_row(suite_id, info['category'], info['description'])
            self.console.print(table)
        else:
            for suite_id in suites:
                info = self.suite_manager.get_suite(suite_id)(self.settings).info
                self.emit(f"{suite_id:<18} {info['description']}")
        return 0

    def run_suite(self, suite_id: str, options: Dict[str, Optional[str]]) -> VerifyReport:
        suite_class = self.suite_manager.get_suite(suite_id)
        if suite_class is None:
            raise SuiteNotFoundError(f"unknown suite '{suite_id}' (see 'artinbd list')")
        suite = suite_class(self.settings)
        for name, value in options.items():
            if value is None:
                continue
            if not suite.set_option(name, str(value)):
                logger.warning("suite %s ignores option %s", suite_id, name)
        return suite.execute()

    def cmd_verify(self, suite_id: str, options: Dict[str, Optional[str]]) -> int:
        """Run a suite: exit 0 on pass, 1 on counterexamples, 2 on error."""
        report = self.run_suite(suite_id, options)
        if self.json_output:
            self.emit(report.to_json(self.stable, self.settings.json_indent))
        else:
            render_report(report, self.console, self.stable)
        if report.error is not None:
            return 2
        return 0 if report.passed else 1

    # -- rank 2 -----------------------------------------------------------------------

    def cmd_rank2(self, m: int, action: str, word: Optional[str] = None, std: bool = False,
                  alpha: Optional[str] = None, beta: Optional[str] = None,
                  auto: Optional[str] = None) -> int:
        group = Rank2Group(m, self.settings.syllable_budget)
        if action == 'nf':
            w = parse_word(word or '', Alphabet.STD if std else Alphabet.AB)
            nf = group.normal_form(w)
            data = {'m': m, **nf.to_dict(group)}
            if self.json_output:
                self.emit_json(data)
            else:
                self.emit(f"c^{nf.c_exp} * {data['residue']}")
            return 0
        if action == 'classify':
            if alpha is None or beta is None:
                raise WordParseError("classify needs --alpha and --beta", 1)
            descriptor = group.classify_auto(parse_images(alpha, beta))
            if self.json_output:
                self.emit_json({'m': m, **descriptor.to_dict()})
            else:
                self.emit(str(descriptor))
            return 0
        if action == 'apply':
            w = parse_word(word or '', Alphabet.STD if std else Alphabet.AB)
            result = word_text(group.special_auto_apply(auto or '', w))
            if self.json_output:
                self.emit_json({'m': m, 'auto': auto, 'image': result})
            else:
                self.emit(result)
            return 0
        raise WordParseError(f"unknown rank2 action '{action}'", 1, action)
