"""Tokenizers: space-split words, normalized word runs, character n-grams."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

_WORD_RUN = re.compile(r"(?u)\b\w\w+\b")


class TokenMode(str, enum.Enum):
    WORDS = "words"
    NORMALIZED = "normalized"
    NGRAM = "ngram"


@dataclass(frozen=True)
class TokenizerSpec:
    mode: TokenMode = TokenMode.NGRAM
    n: int = 3
    lowercase: bool = False

    def __post_init__(self):
        object.__setattr__(self, "mode", TokenMode(self.mode))
        if self.mode is TokenMode.NGRAM and self.n < 1:
            raise ValueError(f"n-gram length must be >= 1, got {self.n}")

    def __call__(self, text: str) -> list[str]:
        return tokenize(text, self)


def tokenize_words(text: str) -> list[str]:
    return [tok for tok in text.split(" ") if tok]


def tokenize_normalized(text: str) -> list[str]:
    """Lowercase, then keep runs of word characters at least two long.

    Mirrors the default token pattern of common hashing vectorizers, which is
    what makes the HT golden values reproducible.
    """
    return _WORD_RUN.findall(text.lower())


def char_ngrams(text: str, n: int) -> list[str]:
    """All contiguous length-``n`` substrings of ``text``, in order.

    Operates on code points. Text shorter than ``n`` yields no n-grams.
    """
    if n < 1:
        raise ValueError(f"n-gram length must be >= 1, got {n}")
    return [text[i : i + n] for i in range(len(text) - n + 1)]


def tokenize(text: str, spec: TokenizerSpec) -> list[str]:
    if spec.lowercase:
        text = text.lower()
    if spec.mode is TokenMode.WORDS:
        return tokenize_words(text)
    if spec.mode is TokenMode.NORMALIZED:
        return tokenize_normalized(text)
    return char_ngrams(text, spec.n)
