from __future__ import annotations

import pytest

from vocabtutor.content import Lexicon, WordItem
from vocabtutor.domain import CefrLevel


def make_lexicon(words_per_level: int = 3) -> Lexicon:
    """A tiny synthetic lexicon: words like 'b1w02' at every level."""
    items = {}
    for level in CefrLevel:
        for n in range(words_per_level):
            word = f"{level.label.lower()}w{n:02d}"
            items[word] = WordItem(
                word=word, level=level, image_ref=f"img/{level.label.lower()}{n:02d}.svg"
            )
    return Lexicon(items)


@pytest.fixture
def small_lexicon() -> Lexicon:
    return make_lexicon(3)
