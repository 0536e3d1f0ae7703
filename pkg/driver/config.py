"""
Configuration settings for the predictive parser and its oracles.
"""

import os
import logging
from dotenv import load_dotenv

from analysis.oracle import FORM_CAP

load_dotenv()

logger = logging.getLogger(__name__)

DETERMINISTIC = "deterministic"
BACKTRACKING = "backtracking"


class ParserConfig:
    """
    Configuration class for parsing runs.
    """

    # Expansions allowed per parse before giving up with budget-exhausted
    STEP_BUDGET = int(os.getenv("LL1_STEP_BUDGET", "100000"))

    # deterministic takes the first entry of a conflicted cell, backtracking tries them all
    DEFAULT_MODE = DETERMINISTIC

    # Brute-force derivation oracles
    ORACLE_FORM_CAP = FORM_CAP
    ORACLE_DEPTH = 14

    @classmethod
    def set_step_budget(cls, budget: int):
        """Change the default step budget for later parses."""
        if budget < 1:
            raise ValueError(f"step budget must be positive, got {budget}")
        cls.STEP_BUDGET = budget
        logger.info(f"Step budget updated to: {budget}")

    @classmethod
    def set_default_mode(cls, mode: str):
        """Switch the default driver mode."""
        if mode not in (DETERMINISTIC, BACKTRACKING):
            raise ValueError(f"unknown driver mode {mode!r}")
        cls.DEFAULT_MODE = mode
        logger.info(f"Default driver mode: {mode}")
