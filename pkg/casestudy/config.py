"""
Configuration settings for the Bangla case-study fixtures.
"""

import os
import logging
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)


class CaseStudyConfig:
    """
    Configuration class for locating the case-study fixture files.
    """

    # Folder holding the fixtures; BANGLA_DATA_DIR points elsewhere
    DATA_FOLDER = Path(os.getenv("BANGLA_DATA_DIR", Path(__file__).parent / "data"))

    # Fixture file names
    GRAMMAR_FILE = "bangla_factored.grammar"
    PUBLISHED_TABLE_FILE = "bangla_published.table"
    PUBLISHED_FIRST_FILE = "published_first.sets"
    PUBLISHED_FOLLOW_FILE = "published_follow.sets"
    LEXICON_XML_FILE = "bangla_lexicon.xml"
    LEXICON_TSV_FILE = "bangla_lexicon.tsv"
    CORPUS_FILE = "bangla_corpus.tsv"

    TABLE_NAME = "bangla"

    @classmethod
    def path(cls, file_name: str) -> Path:
        return cls.DATA_FOLDER / file_name

    @classmethod
    def set_data_folder(cls, folder: str):
        """Read fixtures from another folder."""
        cls.DATA_FOLDER = Path(folder)
        logger.info(f"Case-study data folder set to: {folder}")
