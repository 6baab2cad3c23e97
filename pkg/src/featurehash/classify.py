"""Nearest-neighbor classification by maximum dot product, and spam metrics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Hashable, Sequence

import numpy as np

from featurehash.vecspace import FeatureVector, normalize_rows

# (query rows x train rows) float64 block size kept under ~64 MB
_BLOCK_ELEMS = 8_000_000


@dataclass(frozen=True)
class Neighbor:
    label: Hashable
    score: float
    neighbor: int
    zero_query: bool = False


class VectorIndex:
    """Immutable matrix of L2-normalized training rows with their labels."""

    def __init__(self, matrix: np.ndarray, labels: Sequence[Hashable], normalize: bool = True):
        matrix = np.asarray(matrix, dtype=np.float64)
        if matrix.ndim != 2:
            raise ValueError("index matrix must be 2-d")
        if matrix.shape[0] != len(labels):
            raise ValueError(f"{matrix.shape[0]} rows but {len(labels)} labels")
        if matrix.shape[0] == 0:
            raise ValueError("index is empty")
        self.matrix = normalize_rows(matrix) if normalize else matrix.copy()
        self.matrix.setflags(write=False)
        self.labels = list(labels)

    @classmethod
    def from_vectors(cls, vectors: Sequence[FeatureVector], labels: Sequence[Hashable]) -> "VectorIndex":
        if not vectors:
            raise ValueError("index is empty")
        return cls(np.stack([v.values for v in vectors]), labels)

    @property
    def dim(self) -> int:
        return self.matrix.shape[1]

    def __len__(self) -> int:
        return self.matrix.shape[0]


def _as_array(query) -> np.ndarray:
    return query.values if isinstance(query, FeatureVector) else np.asarray(query, dtype=np.float64)


def nn_classify(query: FeatureVector, index: VectorIndex) -> Neighbor:
    """Label of the row with the highest dot product; lowest row wins ties."""
    q = _as_array(query)
    if q.shape != (index.dim,):
        raise ValueError(f"dimension mismatch: query {q.shape}, index {index.dim}")
    scores = index.matrix @ q
    best = int(np.argmax(scores))
    return Neighbor(index.labels[best], float(scores[best]), best, zero_query=not q.any())


def nn_classify_batch(queries: np.ndarray, index: VectorIndex) -> list[Neighbor]:
    """Classify each row of ``queries`` independently, in blocks."""
    queries = np.asarray(queries, dtype=np.float64)
    if queries.ndim != 2 or queries.shape[1] != index.dim:
        raise ValueError(f"dimension mismatch: queries {queries.shape}, index {index.dim}")
    step = max(1, _BLOCK_ELEMS // len(index))
    out: list[Neighbor] = []
    for start in range(0, queries.shape[0], step):
        block = queries[start : start + step]
        scores = block @ index.matrix.T
        best = np.argmax(scores, axis=1)
        top = scores[np.arange(len(block)), best]
        zero = ~block.any(axis=1)
        out.extend(
            Neighbor(index.labels[b], float(s), int(b), bool(z)) for b, s, z in zip(best, top, zero)
        )
    return out


@dataclass(frozen=True)
class MetricsReport:
    acc: float
    sc: float
    bh: float
    tp: int
    tn: int
    fp: int
    fn: int

    @property
    def sc_defined(self) -> bool:
        return not math.isnan(self.sc)

    @property
    def bh_defined(self) -> bool:
        return not math.isnan(self.bh)


def spam_metrics(
    predictions: Sequence[Hashable],
    truth: Sequence[Hashable],
    positive: Hashable = "spam",
) -> MetricsReport:
    """Accuracy, spam caught (recall on positives) and blocked hams (FP rate).

    SC is NaN when ``truth`` has no positives; BH is NaN when it has no
    negatives.
    """
    if len(predictions) != len(truth):
        raise ValueError(f"length mismatch: {len(predictions)} predictions, {len(truth)} labels")
    if not truth:
        raise ValueError("no labels")
    pred = np.array([p == positive for p in predictions])
    true = np.array([t == positive for t in truth])
    correct = np.array([p == t for p, t in zip(predictions, truth)])
    tp = int(np.sum(pred & true))
    fp = int(np.sum(pred & ~true))
    fn = int(np.sum(~pred & true))
    tn = int(np.sum(~pred & ~true))
    n_pos, n_neg = tp + fn, fp + tn
    return MetricsReport(
        acc=float(correct.mean()),
        sc=tp / n_pos if n_pos else math.nan,
        bh=fp / n_neg if n_neg else math.nan,
        tp=tp,
        tn=tn,
        fp=fp,
        fn=fn,
    )
