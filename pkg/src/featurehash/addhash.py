"""Additive feature hashing.

Each token maps to a pseudo-random vector with entries +-1/sqrt(L) taken
from the bits of a SHAKE-256 digest; a document is the normalized sum of its
token vectors. Because the combiner is plain vector addition, replacing a
token only needs one subtraction and one addition.

Sums are kept as integer +-1 counts and scaled once, which makes encoding
exactly invariant under token reordering.
"""

from __future__ import annotations

import hashlib
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from featurehash.vecspace import FeatureVector, l2_normalize


@dataclass(frozen=True)
class RandomizerConfig:
    dim: int

    def __post_init__(self):
        if self.dim < 8 or self.dim % 8:
            raise ValueError(f"dimension must be a positive multiple of 8, got {self.dim}")


def _check_dim(dim: int) -> None:
    RandomizerConfig(dim)


@lru_cache(maxsize=1 << 18)
def token_signs(token: str, dim: int) -> np.ndarray:
    """The +-1 pattern for ``token``: bit 1 -> +1, bit 0 -> -1.

    Bits are read as if the digest were a little-endian integer written
    most-significant bit first and zero-filled to ``dim`` digits, i.e. the
    digest bytes reversed with each byte unpacked MSB first.
    """
    _check_dim(dim)
    digest = hashlib.shake_256(token.encode("utf-8")).digest(dim // 8)
    bits = np.unpackbits(np.frombuffer(digest[::-1], dtype=np.uint8))
    signs = bits.astype(np.int8) * 2 - 1
    signs.setflags(write=False)
    return signs


def randomize(token: str, cfg: RandomizerConfig | int) -> FeatureVector:
    dim = cfg.dim if isinstance(cfg, RandomizerConfig) else cfg
    return FeatureVector(token_signs(token, dim) / math.sqrt(dim), normalized=True)


def ah_counts(tokens: Iterable[str], dim: int) -> np.ndarray:
    """Integer sum of the +-1 token patterns (raw sum times sqrt(L))."""
    _check_dim(dim)
    acc = np.zeros(dim, dtype=np.int64)
    for tok, count in Counter(tokens).items():
        acc += count * token_signs(tok, dim)
    return acc


def ah_encode(tokens: Iterable[str], cfg: RandomizerConfig | int) -> FeatureVector:
    dim = cfg.dim if isinstance(cfg, RandomizerConfig) else cfg
    return l2_normalize(FeatureVector(ah_counts(tokens, dim) / math.sqrt(dim)))


@dataclass
class AhAccumulator:
    """Running unnormalized token-vector sum for incremental updates."""

    dim: int
    counts: np.ndarray = field(default=None, repr=False)
    token_count: int = 0

    def __post_init__(self):
        _check_dim(self.dim)
        if self.counts is None:
            self.counts = np.zeros(self.dim, dtype=np.int64)

    @classmethod
    def from_tokens(cls, tokens: Iterable[str], dim: int) -> "AhAccumulator":
        tokens = list(tokens)
        return cls(dim, ah_counts(tokens, dim), len(tokens))

    @property
    def raw_sum(self) -> np.ndarray:
        return self.counts / math.sqrt(self.dim)

    def vector(self) -> FeatureVector:
        return l2_normalize(FeatureVector(self.raw_sum))

    def copy(self) -> "AhAccumulator":
        return AhAccumulator(self.dim, self.counts.copy(), self.token_count)


class AccumulatorStateError(RuntimeError):
    pass


def ah_update(
    acc: AhAccumulator,
    remove: Optional[str] = None,
    add: Optional[str] = None,
) -> AhAccumulator:
    """Return a new accumulator with ``remove`` taken out and ``add`` put in.

    The caller guarantees ``remove`` was previously added; only the count is
    checked.
    """
    count = acc.token_count - (remove is not None) + (add is not None)
    if count < 0:
        raise AccumulatorStateError("token count would become negative")
    counts = acc.counts.copy()
    if remove is not None:
        counts -= token_signs(remove, acc.dim)
    if add is not None:
        counts += token_signs(add, acc.dim)
    return AhAccumulator(acc.dim, counts, count)
