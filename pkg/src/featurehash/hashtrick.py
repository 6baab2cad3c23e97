"""Classical hashing trick: token hash mod L selects the index to update."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from featurehash.vecspace import FeatureVector, l2_normalize

_C1 = 0xCC9E2D51
_C2 = 0x1B873593
_MASK = 0xFFFFFFFF


def _rotl32(x: int, r: int) -> int:
    return ((x << r) | (x >> (32 - r))) & _MASK


def murmur3_x86_32(data: bytes, seed: int = 0) -> int:
    """MurmurHash3 x86 32-bit, unsigned result."""
    h = seed & _MASK
    nblocks = len(data) // 4
    for i in range(nblocks):
        k = int.from_bytes(data[4 * i : 4 * i + 4], "little")
        k = (k * _C1) & _MASK
        k = _rotl32(k, 15)
        k = (k * _C2) & _MASK
        h ^= k
        h = _rotl32(h, 13)
        h = (h * 5 + 0xE6546B64) & _MASK

    tail = data[4 * nblocks :]
    if tail:
        k = int.from_bytes(tail, "little")
        k = (k * _C1) & _MASK
        k = _rotl32(k, 15)
        k = (k * _C2) & _MASK
        h ^= k

    h ^= len(data)
    h ^= h >> 16
    h = (h * 0x85EBCA6B) & _MASK
    h ^= h >> 13
    h = (h * 0xC2B2AE35) & _MASK
    h ^= h >> 16
    return h


@lru_cache(maxsize=1 << 20)
def murmur32_signed(token: str) -> int:
    """Seed-0 MurmurHash3 of the UTF-8 bytes as a signed 32-bit integer."""
    h = murmur3_x86_32(token.encode("utf-8"))
    return h - (1 << 32) if h & 0x80000000 else h


def bucket(token: str, dim: int) -> tuple[int, int]:
    """(index, sign) for a token. ``abs`` on a Python int never overflows,
    so -2**31 maps to 2**31 before the modulus."""
    h = murmur32_signed(token)
    return abs(h) % dim, (1 if h >= 0 else -1)


@dataclass(frozen=True)
class HashTrickConfig:
    dim: int
    signed: bool = True

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dim}")


def ht_counts(tokens: Iterable[str], cfg: HashTrickConfig) -> np.ndarray:
    """Unnormalized integer vector from Algorithm 1 or 2."""
    v = np.zeros(cfg.dim, dtype=np.int64)
    for tok, count in Counter(tokens).items():
        idx, sign = bucket(tok, cfg.dim)
        v[idx] += sign * count if cfg.signed else count
    return v


def ht_encode(tokens: Iterable[str], cfg: HashTrickConfig) -> FeatureVector:
    return l2_normalize(FeatureVector(ht_counts(tokens, cfg)))


def ht_encode_signed(tokens: Iterable[str], dim: int) -> FeatureVector:
    return ht_encode(tokens, HashTrickConfig(dim, signed=True))


def ht_encode_unsigned(tokens: Iterable[str], dim: int) -> FeatureVector:
    return ht_encode(tokens, HashTrickConfig(dim, signed=False))
