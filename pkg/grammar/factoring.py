import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .model import Grammar, Rule

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrefixGroup:
    """Same-lhs productions that share a nonempty longest common prefix."""

    nonterminal: str
    prefix: Tuple[str, ...]
    productions: Tuple[int, ...]


def longest_common_prefix(sequences: Sequence[Tuple[str, ...]]) -> Tuple[str, ...]:
    prefix: List[str] = []
    for column in zip(*sequences):
        if any(symbol != column[0] for symbol in column):
            break
        prefix.append(column[0])
    return tuple(prefix)


class LeftFactorer:
    """
    Left factoring: A -> a b1 | a b2 becomes A -> a A1 and A1 -> b1 | b2.
    """

    def common_prefix_report(self, grammar: Grammar) -> List[PrefixGroup]:
        """
        List every maximal group of same-lhs productions sharing a prefix.

        Args:
            grammar: Grammar to inspect

        Returns:
            One PrefixGroup per group, in lhs declaration order
        """
        report = []
        rules = grammar.rules()
        for nonterminal in grammar.nonterminals:
            name = grammar.name(nonterminal)
            for positions in self._groups(rules, name):
                prefix = longest_common_prefix([rules[i][1] for i in positions])
                report.append(PrefixGroup(name, prefix, tuple(positions)))
        return report

    def left_factor(self, grammar: Grammar) -> Grammar:
        """
        Left factor a grammar to fixpoint.

        Each step takes the first group of same-lhs productions with a common
        first symbol, replaces it in place by A -> prefix A_k (prefix being the
        group's longest common prefix) and appends A_k -> residue for every
        member. A_k is A's name with the smallest unused positive suffix.

        Termination: count the unordered pairs of same-lhs productions that
        start with the same symbol. A step removes every pair inside its group
        (at least one) and leaves a single production for that first symbol.
        The residues cannot all start with one symbol, or the prefix would not
        have been the longest, so the new nonterminal gets strictly fewer pairs
        than were removed. The count falls on every step and stops at zero.

        Args:
            grammar: Grammar to factor

        Returns:
            Factored grammar; the input itself when nothing shares a prefix
        """
        rules: List[Rule] = grammar.rules()
        names: Set[str] = {symbol.name for symbol in grammar.symbols}
        steps = 0

        while True:
            positions = self._first_group(rules)
            if positions is None:
                break
            rules = self._factor_group(rules, positions, names)
            steps += 1

        if steps == 0:
            logger.info("Grammar has no common prefixes; nothing to factor")
            return grammar

        factored = Grammar.from_rules(rules)
        logger.info(f"Left factoring applied {steps} steps; {len(factored.productions)} productions now")
        return factored

    def _first_group(self, rules: List[Rule]) -> Optional[List[int]]:
        seen_lhs = []
        for lhs, _ in rules:
            if lhs not in seen_lhs:
                seen_lhs.append(lhs)
        for lhs in seen_lhs:
            for positions in self._groups(rules, lhs):
                return positions
        return None

    def _groups(self, rules: List[Rule], lhs: str) -> List[List[int]]:
        by_first: Dict[str, List[int]] = {}
        for position, (rule_lhs, rhs) in enumerate(rules):
            if rule_lhs == lhs and rhs:
                by_first.setdefault(rhs[0], []).append(position)
        return [positions for positions in by_first.values() if len(positions) >= 2]

    def _factor_group(self, rules: List[Rule], positions: List[int], names: Set[str]) -> List[Rule]:
        lhs = rules[positions[0]][0]
        members = [rules[i][1] for i in positions]
        prefix = longest_common_prefix(members)
        fresh = self._fresh_name(lhs, names)
        names.add(fresh)

        logger.debug(f"Factoring {lhs} -> {' '.join(prefix)} ... into {fresh} ({len(members)} productions)")

        dropped = set(positions[1:])
        result: List[Rule] = []
        for position, rule in enumerate(rules):
            if position == positions[0]:
                result.append((lhs, prefix + (fresh,)))
            elif position not in dropped:
                result.append(rule)
        result.extend((fresh, rhs[len(prefix):]) for rhs in members)
        return result

    def _fresh_name(self, base: str, names: Set[str]) -> str:
        suffix = 1
        while f"{base}{suffix}" in names:
            suffix += 1
        return f"{base}{suffix}"
