import logging
from typing import Dict, List, Set

from .model import Grammar

logger = logging.getLogger(__name__)


class LeftRecursionDetector:
    """
    Finds immediate and indirect left recursion.

    A -> B is a left-corner edge when some production A -> g B d has every
    symbol of g nullable. Left recursion is any cycle of that relation. Every
    elementary cycle is reported, searched for only inside the strongly
    connected components that loop.
    """

    def left_corner_graph(self, grammar: Grammar) -> Dict[int, List[int]]:
        # analysis depends on grammar.model, so import here rather than at module load
        from analysis.set_analyzer import SetAnalyzer

        nullable = SetAnalyzer().compute_nullable(grammar)
        edges: Dict[int, List[int]] = {nt: [] for nt in grammar.nonterminals}
        for production in grammar.productions:
            for symbol in production.rhs:
                if grammar.is_terminal(symbol):
                    break
                if symbol not in edges[production.lhs]:
                    edges[production.lhs].append(symbol)
                if symbol not in nullable:
                    break
        return edges

    def detect(self, grammar: Grammar) -> List[List[str]]:
        """
        Report left-recursive cycles.

        Args:
            grammar: Grammar to check

        Returns:
            One list of nonterminal names per elementary cycle, following the
            left-corner edges from the cycle's earliest declared member.
            Cycles come ordered by that member, then in production order.
            Empty when the grammar has no left recursion.
        """
        edges = self.left_corner_graph(grammar)
        order = {nt: i for i, nt in enumerate(grammar.nonterminals)}

        component_of: Dict[int, int] = {}
        for number, component in enumerate(self._components(edges, grammar.nonterminals)):
            for member in component:
                component_of[member] = number

        cycles: List[List[int]] = []
        for start in grammar.nonterminals:
            allowed = {
                nt for nt in grammar.nonterminals
                if component_of[nt] == component_of[start] and order[nt] > order[start]
            }
            cycles.extend(self._cycles_through(start, edges, allowed))

        result = [[grammar.name(nt) for nt in cycle] for cycle in cycles]
        if result:
            logger.warning(f"Left recursion found in {len(result)} cycle(s): {result}")
        return result

    def _cycles_through(self, start: int, edges: Dict[int, List[int]], allowed: Set[int]) -> List[List[int]]:
        """Elementary cycles through start whose other members all lie in allowed."""
        found: List[List[int]] = []
        path = [start]
        on_path = {start}
        work = [iter(edges[start])]
        while work:
            child = next(work[-1], None)
            if child is None:
                work.pop()
                on_path.discard(path.pop())
                continue
            if child == start:
                found.append(list(path))
            elif child in allowed and child not in on_path:
                path.append(child)
                on_path.add(child)
                work.append(iter(edges[child]))
        return found

    def _components(self, edges: Dict[int, List[int]], nodes) -> List[List[int]]:
        """Tarjan's strongly connected components, iterative."""
        index: Dict[int, int] = {}
        low: Dict[int, int] = {}
        on_stack: Set[int] = set()
        stack: List[int] = []
        components: List[List[int]] = []
        counter = 0

        for root in nodes:
            if root in index:
                continue
            work = [(root, 0)]
            while work:
                node, child_pos = work.pop()
                if child_pos == 0:
                    index[node] = low[node] = counter
                    counter += 1
                    stack.append(node)
                    on_stack.add(node)
                children = edges[node]
                if child_pos < len(children):
                    work.append((node, child_pos + 1))
                    child = children[child_pos]
                    if child not in index:
                        work.append((child, 0))
                    elif child in on_stack:
                        low[node] = min(low[node], index[child])
                    continue
                if low[node] == index[node]:
                    component = []
                    while True:
                        member = stack.pop()
                        on_stack.discard(member)
                        component.append(member)
                        if member == node:
                            break
                    components.append(component)
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[node])
        return components
