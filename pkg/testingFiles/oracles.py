"""
Brute-force references the property tests compare against.
"""

from itertools import permutations, product
from typing import Dict, FrozenSet, Sequence, Set, Tuple

from grammar.model import Grammar

Sentence = Tuple[str, ...]


def language_up_to(grammar: Grammar, max_length: int) -> FrozenSet[Sentence]:
    """
    Every terminal string of length <= max_length derivable from the start symbol.

    Least fixpoint of L(A) = union over A -> X1..Xn of L(X1)..L(Xn) concatenated
    and cut at max_length. The domain is finite, so iteration stops.
    """
    languages: Dict[int, Set[Sentence]] = {nt: set() for nt in grammar.nonterminals}

    def of(symbol: int) -> Set[Sentence]:
        if grammar.is_terminal(symbol):
            return {(grammar.name(symbol),)}
        return languages[symbol]

    changed = True
    while changed:
        changed = False
        for production in grammar.productions:
            strings: Set[Sentence] = {()}
            for symbol in production.rhs:
                strings = {
                    left + right
                    for left, right in product(strings, of(symbol))
                    if len(left) + len(right) <= max_length
                }
                if not strings:
                    break
            target = languages[production.lhs]
            before = len(target)
            target |= strings
            if len(target) != before:
                changed = True

    return frozenset(languages[grammar.start])


def derives(grammar: Grammar, tags) -> bool:
    return tuple(tags) in language_up_to(grammar, len(tags))


def left_recursive_nonterminals(grammar: Grammar) -> FrozenSet[str]:
    """
    Nonterminals A with A =>+ A ..., found by searching leftmost derivations.

    Forms are cut after their first terminal and repeated nonterminals are
    dropped, which keeps the search finite without changing which symbol can
    come first.
    """

    def reduce(form):
        kept, seen = [], set()
        for symbol in form:
            if grammar.is_terminal(symbol):
                kept.append(symbol)
                break
            if symbol not in seen:
                seen.add(symbol)
                kept.append(symbol)
        return tuple(kept)

    found = set()
    for nonterminal in grammar.nonterminals:
        frontier = [reduce(p.rhs) for p in grammar.productions_for(nonterminal)]
        visited = set(frontier)
        while frontier:
            form = frontier.pop()
            if not form or grammar.is_terminal(form[0]):
                continue
            if form[0] == nonterminal:
                found.add(grammar.name(nonterminal))
                break
            for production in grammar.productions_for(form[0]):
                successor = reduce(production.rhs + form[1:])
                if successor not in visited:
                    visited.add(successor)
                    frontier.append(successor)
    return frozenset(found)


def elementary_cycles(graph: Dict[int, list], order: Sequence[int]) -> FrozenSet[Tuple[int, ...]]:
    """
    Every elementary cycle of a small graph, found by trying each sequence of
    distinct nodes. A cycle is written from its earliest node in `order`.
    """
    rank = {node: i for i, node in enumerate(order)}
    cycles = set()
    for size in range(1, len(order) + 1):
        for nodes in permutations(order, size):
            if any(rank[node] < rank[nodes[0]] for node in nodes[1:]):
                continue
            closed = nodes[1:] + nodes[:1]
            if all(after in graph[before] for before, after in zip(nodes, closed)):
                cycles.add(nodes)
    return frozenset(cycles)
