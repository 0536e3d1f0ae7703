import re
import logging
from typing import List

logger = logging.getLogger(__name__)

DANDA = "।"
TERMINATORS = DANDA + "?!"
TERMINATOR_PATTERN = re.compile(f"[{re.escape(TERMINATORS)}]")


class SentenceSplitter:
    """
    Splits running Bangla text into sentences.
    """

    def split(self, text: str) -> List[str]:
        """
        Split text on the danda, `?` and `!`.

        Terminators are dropped and so are segments that are empty after
        trimming; text after the last terminator is still a sentence.

        Args:
            text: Raw text

        Returns:
            Sentences in order
        """
        sentences = [segment.strip() for segment in TERMINATOR_PATTERN.split(text)]
        sentences = [sentence for sentence in sentences if sentence]
        logger.debug(f"Split text into {len(sentences)} sentences")
        return sentences
