"""
Analysis package: nullable/FIRST/FOLLOW fixpoints, brute-force oracles and the set dump format.
"""

from .sets import FirstSets, FollowSets
from .set_analyzer import SetAnalyzer
from .oracle import DerivationOracle, OracleBudgetError
from .set_dump import SetDumpError, SetDumpFormatter, format_set

__all__ = [
    'FirstSets', 'FollowSets', 'SetAnalyzer', 'DerivationOracle', 'OracleBudgetError',
    'SetDumpFormatter', 'SetDumpError', 'format_set',
]
