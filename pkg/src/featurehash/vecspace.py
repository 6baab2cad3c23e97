"""Dense fixed-dimension vectors, normalization, and similarity."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

ZERO_NORM = 1e-12


@dataclass(frozen=True)
class FeatureVector:
    values: np.ndarray
    normalized: bool = False
    dim: int = field(init=False)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 1 or values.size == 0:
            raise ValueError("feature vector must be a non-empty 1-d array")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "dim", values.size)

    @classmethod
    def zeros(cls, dim: int, normalized: bool = True) -> "FeatureVector":
        return cls(np.zeros(dim), normalized=normalized)

    @property
    def is_zero(self) -> bool:
        return not self.values.any()

    def norm(self) -> float:
        return float(np.linalg.norm(self.values))

    def tolist(self) -> list[float]:
        return self.values.tolist()


def l2_normalize(v: FeatureVector) -> FeatureVector:
    """Scale ``v`` to unit length. Near-zero vectors pass through unchanged."""
    norm = v.norm()
    if norm <= ZERO_NORM:
        return FeatureVector(v.values, normalized=True)
    return FeatureVector(v.values / norm, normalized=True)


def normalize_rows(matrix: np.ndarray) -> np.ndarray:
    """Row-wise L2 normalization with the same zero-row pass-through rule."""
    matrix = np.asarray(matrix, dtype=np.float64)
    norms = np.linalg.norm(matrix, axis=1)
    norms[norms <= ZERO_NORM] = 1.0
    return matrix / norms[:, None]


def dot(u: FeatureVector, v: FeatureVector) -> float:
    if u.dim != v.dim:
        raise ValueError(f"dimension mismatch: {u.dim} vs {v.dim}")
    return float(np.dot(u.values, v.values))


def cosine(u: FeatureVector, v: FeatureVector) -> float:
    """Dot product of two normalized vectors, clamped to [-1, 1]."""
    if not (u.normalized and v.normalized):
        u, v = l2_normalize(u), l2_normalize(v)
    return min(1.0, max(-1.0, dot(u, v)))


def raw_cosine(a: np.ndarray, b: np.ndarray) -> float:
    """Cosine between two unnormalized integer-valued count vectors.

    Works on exact integer sums, so identical inputs give exactly 1.0.
    Returns 0.0 if either vector is all-zero.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    na, nb = int(a @ a), int(b @ b)
    if na == 0 or nb == 0:
        return 0.0
    return min(1.0, max(-1.0, int(a @ b) / math.sqrt(na * nb)))


@dataclass(frozen=True)
class OrthogonalityStats:
    mean: float
    std: float
    pairs: int


def orthogonality_stats(
    tokens: Iterable[str],
    dim: int,
    encoder: Callable[[str, int], FeatureVector],
) -> OrthogonalityStats:
    """Mean and sample std of dot products over all distinct token pairs."""
    distinct = list(dict.fromkeys(tokens))
    if len(distinct) < 2:
        raise ValueError("need at least two distinct tokens")
    mat = np.stack([encoder(tok, dim).values for tok in distinct])
    gram = mat @ mat.T
    iu = np.triu_indices(len(distinct), k=1)
    dots = gram[iu]
    return OrthogonalityStats(
        mean=float(dots.mean()),
        std=float(dots.std(ddof=1)) if dots.size > 1 else 0.0,
        pairs=int(dots.size),
    )

