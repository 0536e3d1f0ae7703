import re
import logging
from pathlib import Path
from typing import List, Optional, Tuple

from .errors import DuplicateProductionError, EmptyGrammarError, GrammarSyntaxError
from .model import END_MARKER, EPSILON, Grammar

logger = logging.getLogger(__name__)

# `->`, `|` and `;` are punctuation even when glued to a symbol; `#` starts a comment.
TOKEN_PATTERN = re.compile(r"(?P<arrow>->)|(?P<bar>\|)|(?P<semi>;)|(?P<symbol>(?:(?!->)[^\s|;#])+)")


class GrammarReader:
    """
    Reads grammars written as `LHS -> alt | alt ;` rules.
    """

    def __init__(self):
        pass

    def parse_file(self, path: str) -> Grammar:
        """
        Read and parse a grammar file.

        Args:
            path: Path to a UTF-8 grammar file

        Returns:
            Parsed grammar
        """
        logger.info(f"Reading grammar file: {path}")
        text = Path(path).read_text(encoding="utf-8")
        return self.parse_text(text)

    def parse_text(self, text: str) -> Grammar:
        """
        Parse grammar text into a Grammar.

        Rules may span lines. The first rule's lhs is the start symbol and
        production order follows source order.

        Args:
            text: Grammar source

        Returns:
            Parsed grammar
        """
        rules: List[Tuple[str, Tuple[str, ...]]] = []
        seen = set()

        lhs: Optional[str] = None
        expecting_arrow = False
        alternative: List[str] = []
        alternatives: List[Tuple[List[str], int, int]] = []
        rule_line = 0
        last_position = (1, 1)

        for line_number, line in enumerate(text.splitlines(), 1):
            body = line.split("#", 1)[0]
            for match in TOKEN_PATTERN.finditer(body):
                column = match.start() + 1
                last_position = (line_number, match.end() + 1)
                token = match.group()

                if lhs is None:
                    if match.lastgroup != "symbol":
                        raise GrammarSyntaxError(f"expected a nonterminal name, found {token!r}", line_number, column)
                    if token in (EPSILON, END_MARKER):
                        raise GrammarSyntaxError(f"{token!r} cannot be a nonterminal", line_number, column)
                    lhs = token
                    rule_line = line_number
                    expecting_arrow = True
                    continue

                if expecting_arrow:
                    if match.lastgroup != "arrow":
                        raise GrammarSyntaxError(f"expected '->' after {lhs!r}, found {token!r}", line_number, column)
                    expecting_arrow = False
                    alternative = []
                    alternatives = []
                    continue

                if match.lastgroup == "arrow":
                    raise GrammarSyntaxError("unexpected '->' (missing ';' after the previous rule?)", line_number, column)

                if match.lastgroup == "symbol":
                    if token == END_MARKER:
                        raise GrammarSyntaxError("'$' is reserved for the end marker", line_number, column)
                    alternative.append(token)
                    continue

                alternatives.append((alternative, line_number, column))
                alternative = []
                if match.lastgroup == "semi":
                    for symbols, alt_line, alt_column in alternatives:
                        rhs = self._alternative_rhs(symbols, alt_line, alt_column)
                        if (lhs, rhs) in seen:
                            raise DuplicateProductionError(lhs, rhs, alt_line)
                        seen.add((lhs, rhs))
                        rules.append((lhs, rhs))
                    logger.debug(f"Rule {lhs} (line {rule_line}): {len(alternatives)} alternatives")
                    lhs = None

        if lhs is not None:
            line_number, column = last_position
            raise GrammarSyntaxError(f"rule for {lhs!r} is missing its terminating ';'", line_number, column)
        if not rules:
            raise EmptyGrammarError("grammar text contains no rules")

        grammar = Grammar.from_rules(rules)
        logger.info(
            f"Parsed grammar: {len(grammar.productions)} productions, "
            f"{len(grammar.nonterminals)} nonterminals, {len(grammar.terminals)} terminals"
        )
        return grammar

    def _alternative_rhs(self, symbols: List[str], line: int, column: int) -> Tuple[str, ...]:
        """Turn one alternative's tokens into an rhs; `@eps` must stand alone."""
        if EPSILON in symbols:
            if len(symbols) > 1:
                raise GrammarSyntaxError("'@eps' must be the only symbol of its alternative", line, column)
            return ()
        return tuple(symbols)
