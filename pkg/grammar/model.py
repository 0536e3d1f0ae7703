"""
Grammar data model: an interned symbol table, ordered productions and a start symbol.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .errors import DuplicateProductionError, EmptyGrammarError, GrammarError

EPSILON = "@eps"
END_MARKER = "$"
END_ID = -1  # column / follow-set id of the end marker, never a symbol-table entry

TERMINAL = "terminal"
NONTERMINAL = "nonterminal"

RESERVED_NAMES = {EPSILON, END_MARKER, "->", "|", ";"}

Rule = Tuple[str, Tuple[str, ...]]


@dataclass(frozen=True)
class Symbol:
    name: str
    kind: str

    @property
    def is_terminal(self) -> bool:
        return self.kind == TERMINAL


@dataclass(frozen=True)
class Production:
    index: int
    lhs: int
    rhs: Tuple[int, ...]

    @property
    def is_epsilon(self) -> bool:
        return not self.rhs


@dataclass(frozen=True)
class Grammar:
    """
    Immutable context-free grammar.

    Symbol ids are dense indexes into `symbols` in order of first appearance.
    A symbol is a nonterminal exactly when it is the lhs of some production;
    the lhs of the first production is the start symbol. Build instances with
    `Grammar.from_rules` so these invariants always hold.
    """

    symbols: Tuple[Symbol, ...]
    productions: Tuple[Production, ...]
    start: int

    @classmethod
    def from_rules(cls, rules: Iterable[Tuple[str, Sequence[str]]]) -> "Grammar":
        """
        Build a grammar from (lhs name, rhs names) pairs.

        Args:
            rules: Productions in declaration order; an empty rhs is epsilon

        Returns:
            Grammar whose start symbol is the first lhs
        """
        rules = [(lhs, tuple(rhs)) for lhs, rhs in rules]
        if not rules:
            raise EmptyGrammarError("grammar has no productions")

        lhs_names = {lhs for lhs, _ in rules}
        ids: Dict[str, int] = {}
        order: List[str] = []
        for lhs, rhs in rules:
            for name in (lhs,) + rhs:
                if name in ids:
                    continue
                if not name or name in RESERVED_NAMES or any(ch.isspace() for ch in name):
                    raise GrammarError(f"invalid symbol name {name!r}")
                ids[name] = len(order)
                order.append(name)

        symbols = tuple(
            Symbol(name, NONTERMINAL if name in lhs_names else TERMINAL) for name in order
        )

        seen = set()
        productions = []
        for lhs, rhs in rules:
            if (lhs, rhs) in seen:
                raise DuplicateProductionError(lhs, rhs)
            seen.add((lhs, rhs))
            productions.append(Production(len(productions), ids[lhs], tuple(ids[n] for n in rhs)))

        return cls(symbols=symbols, productions=tuple(productions), start=ids[rules[0][0]])

    # -- lookups ---------------------------------------------------------

    @cached_property
    def _ids(self) -> Dict[str, int]:
        return {symbol.name: i for i, symbol in enumerate(self.symbols)}

    @cached_property
    def _by_lhs(self) -> Dict[int, Tuple[Production, ...]]:
        grouped: Dict[int, List[Production]] = {}
        for production in self.productions:
            grouped.setdefault(production.lhs, []).append(production)
        return {lhs: tuple(prods) for lhs, prods in grouped.items()}

    def name(self, symbol_id: int) -> str:
        if symbol_id == END_ID:
            return END_MARKER
        return self.symbols[symbol_id].name

    def id_of(self, name: str) -> int:
        if name == END_MARKER:
            return END_ID
        try:
            return self._ids[name]
        except KeyError:
            raise GrammarError(f"unknown symbol {name!r}") from None

    def has_symbol(self, name: str) -> bool:
        return name in self._ids

    def is_terminal(self, symbol_id: int) -> bool:
        return symbol_id != END_ID and self.symbols[symbol_id].is_terminal

    def is_nonterminal(self, symbol_id: int) -> bool:
        return symbol_id != END_ID and not self.symbols[symbol_id].is_terminal

    @property
    def start_name(self) -> str:
        return self.name(self.start)

    @cached_property
    def nonterminals(self) -> Tuple[int, ...]:
        """Nonterminals in lhs declaration order."""
        return tuple(self._by_lhs)

    @cached_property
    def terminals(self) -> Tuple[int, ...]:
        """Terminals in order of first appearance."""
        return tuple(i for i, symbol in enumerate(self.symbols) if symbol.is_terminal)

    def productions_for(self, nonterminal: int) -> Tuple[Production, ...]:
        return self._by_lhs.get(nonterminal, ())

    def find_production(self, lhs: int, rhs: Sequence[int]):
        rhs = tuple(rhs)
        for production in self.productions_for(lhs):
            if production.rhs == rhs:
                return production
        return None

    # -- rendering -------------------------------------------------------

    def rhs_text(self, production: Production) -> str:
        if production.is_epsilon:
            return EPSILON
        return " ".join(self.name(s) for s in production.rhs)

    def format_production(self, production: Production) -> str:
        """Render as `A->x y`, the action text of move traces."""
        return f"{self.name(production.lhs)}->{self.rhs_text(production)}"

    def rules(self) -> List[Rule]:
        return [
            (self.name(p.lhs), tuple(self.name(s) for s in p.rhs)) for p in self.productions
        ]

    # -- derived grammars ------------------------------------------------

    def with_rules(self, extra: Iterable[Tuple[str, Sequence[str]]]) -> "Grammar":
        """Return a grammar with `extra` productions appended after the existing ones."""
        return Grammar.from_rules(self.rules() + [(lhs, tuple(rhs)) for lhs, rhs in extra])

    def reachable(self) -> FrozenSet[int]:
        """Nonterminals reachable from the start symbol."""
        seen = {self.start}
        pending = [self.start]
        while pending:
            current = pending.pop()
            for production in self.productions_for(current):
                for symbol in production.rhs:
                    if self.is_nonterminal(symbol) and symbol not in seen:
                        seen.add(symbol)
                        pending.append(symbol)
        return frozenset(seen)
