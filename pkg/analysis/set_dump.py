import re
import logging
from typing import Dict, FrozenSet, Iterable, List, Tuple

from grammar.model import END_MARKER, Grammar
from .sets import FirstSets, FollowSets

logger = logging.getLogger(__name__)

EPS_MEMBER = "eps"

LINE_PATTERN = re.compile(r"^(?P<kind>FIRST|FOLLOW)\((?P<name>[^()\s]+)\)\s*=\s*\{(?P<body>[^{}]*)\}\s*$")

DumpedSets = Dict[str, Tuple[FrozenSet[str], bool]]


class SetDumpError(ValueError):
    """A set dump line could not be read."""


def member_order(name: str):
    return (name == END_MARKER, name)


def format_set(members: Iterable[str], nullable: bool = False) -> str:
    """Render `{a, b}`; `$` sorts last and a nullable set ends with `eps`."""
    names = sorted(members, key=member_order)
    if nullable:
        names.append(EPS_MEMBER)
    return "{" + ", ".join(names) + "}"


class SetDumpFormatter:
    """
    Text dump of FIRST/FOLLOW sets, one `FIRST(A) = {...}` line per nonterminal.
    """

    def format(self, grammar: Grammar, first_sets: FirstSets, follow_sets: FollowSets) -> str:
        """
        Render both set families.

        FIRST lines come first, then a blank line, then FOLLOW lines, each in
        lhs declaration order.

        Args:
            grammar: Grammar the sets belong to
            first_sets: Its FIRST sets
            follow_sets: Its FOLLOW sets

        Returns:
            Dump text ending with a newline
        """
        lines: List[str] = []
        for nonterminal in grammar.nonterminals:
            members = [grammar.name(t) for t in first_sets.of(nonterminal)]
            rendered = format_set(members, first_sets.is_nullable(nonterminal))
            lines.append(f"FIRST({grammar.name(nonterminal)}) = {rendered}")
        lines.append("")
        for nonterminal in grammar.nonterminals:
            members = [grammar.name(t) for t in follow_sets.of(nonterminal)]
            lines.append(f"FOLLOW({grammar.name(nonterminal)}) = {format_set(members)}")
        return "\n".join(lines) + "\n"

    def parse(self, text: str) -> Tuple[DumpedSets, DumpedSets]:
        """
        Read a dump back; blank lines and `#` comments are skipped.

        Args:
            text: Dump text, possibly holding only FIRST or only FOLLOW lines

        Returns:
            (first, follow) dicts from nonterminal name to (members, has eps)
        """
        first: DumpedSets = {}
        follow: DumpedSets = {}
        for line_number, line in enumerate(text.splitlines(), 1):
            stripped = line.split("#", 1)[0].strip()
            if not stripped:
                continue
            match = LINE_PATTERN.match(stripped)
            if match is None:
                raise SetDumpError(f"line {line_number}: expected 'FIRST(A) = {{...}}' or 'FOLLOW(A) = {{...}}'")

            members = [m.strip() for m in match.group("body").split(",") if m.strip()]
            has_eps = EPS_MEMBER in members
            entry = (frozenset(m for m in members if m != EPS_MEMBER), has_eps)

            target = first if match.group("kind") == "FIRST" else follow
            name = match.group("name")
            if name in target:
                raise SetDumpError(f"line {line_number}: {match.group('kind')}({name}) given twice")
            target[name] = entry

        logger.debug(f"Read set dump: {len(first)} FIRST and {len(follow)} FOLLOW lines")
        return first, follow
