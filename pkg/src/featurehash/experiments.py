"""Experiment runners: synthetic similarity, language id, SMS spam.

Every runner returns a list of :class:`ResultRow` sorted by
(experiment, method, L, p, metric) so output bytes never depend on
scheduling.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import logging
import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from featurehash import addhash, hashtrick
from featurehash.classify import VectorIndex, nn_classify_batch, spam_metrics
from featurehash.datasets import (
    LabeledDataset,
    gen_random_string,
    load_sms,
    load_wili,
    make_rng,
    perturb,
    split_indices,
    wili_subset,
)
from featurehash.textseg import TokenizerSpec, TokenMode
from featurehash.vecspace import FeatureVector, normalize_rows, raw_cosine

log = logging.getLogger(__name__)

CSV_FIELDS = ("experiment", "method", "n", "L", "p", "metric", "value", "trials", "seed")
DEFAULT_P_GRID = tuple(i / 20 for i in range(21))


class Method(str, enum.Enum):
    AH = "ah"
    HT = "ht"
    HT_UNSIGNED = "ht-unsigned"


def encode_counts(tokens: Sequence[str], method: Method | str, dim: int) -> np.ndarray:
    """Unnormalized integer document vector for any method."""
    method = Method(method)
    if method is Method.AH:
        return addhash.ah_counts(tokens, dim)
    cfg = hashtrick.HashTrickConfig(dim, signed=method is Method.HT)
    return hashtrick.ht_counts(tokens, cfg)


def encode_document(tokens: Sequence[str], method: Method | str, dim: int) -> FeatureVector:
    """Normalized document vector for any method."""
    method = Method(method)
    if method is Method.AH:
        return addhash.ah_encode(tokens, dim)
    return hashtrick.ht_encode(tokens, hashtrick.HashTrickConfig(dim, signed=method is Method.HT))


def encode_matrix(
    texts: Iterable[str], tokenizer: TokenizerSpec, method: Method | str, dim: int
) -> np.ndarray:
    """Row-normalized float matrix, one row per text."""
    rows = [encode_counts(tokenizer(text), method, dim) for text in texts]
    if not rows:
        return np.zeros((0, dim))
    return normalize_rows(np.stack(rows).astype(np.float64))


@dataclass
class ExperimentConfig:
    methods: tuple[Method, ...] = (Method.AH, Method.HT)
    ngram: int = 3
    dim_exponents: tuple[int, ...] = (7, 8, 9, 10)
    trials: int = 100
    seed: int = 0
    string_length: int = 100
    p_grid: tuple[float, ...] = DEFAULT_P_GRID
    lowercase: bool = False
    data: Optional[Path] = None
    languages: int = 20
    per_class: int = 100
    full: bool = False
    split_fraction: float = 0.5

    def __post_init__(self):
        self.methods = tuple(Method(m) for m in self.methods)
        self.dim_exponents = tuple(int(e) for e in self.dim_exponents)
        if not self.methods:
            raise ValueError("no methods selected")
        if self.ngram < 1:
            raise ValueError(f"--ngram must be >= 1, got {self.ngram}")
        if self.trials < 1:
            raise ValueError(f"--trials must be >= 1, got {self.trials}")
        if not self.dim_exponents:
            raise ValueError("no dimensions selected")
        for e in self.dim_exponents:
            if e < 0 or e > 24:
                raise ValueError(f"dimension exponent out of range: {e}")
            if Method.AH in self.methods and e < 3:
                raise ValueError(f"additive hashing needs L = 2^l with l >= 3, got l={e}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if any(not 0.0 <= p <= 1.0 for p in self.p_grid):
            raise ValueError("p grid values must lie in [0, 1]")
        if self.languages < 1 or self.per_class < 1:
            raise ValueError("subset sizes must be positive")

    @property
    def dims(self) -> list[int]:
        return [2**e for e in self.dim_exponents]

    @property
    def tokenizer(self) -> TokenizerSpec:
        return TokenizerSpec(TokenMode.NGRAM, self.ngram, self.lowercase)


@dataclass(frozen=True)
class ResultRow:
    experiment: str
    method: str
    n: int
    L: int
    p: Optional[float]
    metric: str
    value: float
    trials: int
    seed: int

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"non-finite {self.metric} for {self.method} L={self.L}")

    def sort_key(self):
        return (self.experiment, self.method, self.L, -1.0 if self.p is None else self.p, self.metric)


def _sorted(rows: list[ResultRow]) -> list[ResultRow]:
    return sorted(rows, key=ResultRow.sort_key)


def run_synthetic(cfg: ExperimentConfig) -> list[ResultRow]:
    """Mean n-gram similarity between random strings and perturbed copies."""
    tokenizer = cfg.tokenizer
    # trial t draws its base string from seed + t and its perturbation at
    # grid point j from (seed + t, j), so every (t, p) pair is replayable
    pairs = []
    for t in range(cfg.trials):
        base = gen_random_string(cfg.string_length, make_rng(cfg.seed + t))
        changed = [perturb(base, p, make_rng([cfg.seed + t, j])) for j, p in enumerate(cfg.p_grid)]
        pairs.append((tokenizer(base), [tokenizer(c) for c in changed]))

    rows = []
    for method in cfg.methods:
        for dim in cfg.dims:
            sims = np.zeros((cfg.trials, len(cfg.p_grid)))
            for t, (base_tokens, changed_tokens) in enumerate(pairs):
                a = encode_counts(base_tokens, method, dim)
                for j, tokens in enumerate(changed_tokens):
                    sims[t, j] = raw_cosine(a, encode_counts(tokens, method, dim))
            for j, p in enumerate(cfg.p_grid):
                rows.append(
                    ResultRow("synthetic", method.value, cfg.ngram, dim, p, "similarity",
                              float(np.mean(sims[:, j])), cfg.trials, cfg.seed)
                )
    return _sorted(rows)


def _accuracy(predicted: Sequence, truth: Sequence) -> float:
    return float(np.mean([a == b for a, b in zip(predicted, truth)]))


def classify_split(
    train: LabeledDataset, test: LabeledDataset, tokenizer: TokenizerSpec, method: Method, dim: int
) -> list:
    index = VectorIndex(encode_matrix(train.texts, tokenizer, method, dim), train.labels, normalize=False)
    return [hit.label for hit in nn_classify_batch(encode_matrix(test.texts, tokenizer, method, dim), index)]


def run_wili(cfg: ExperimentConfig) -> list[ResultRow]:
    """Nearest-neighbor language identification accuracy per (method, L)."""
    if cfg.data is None:
        raise ValueError("--data DIR is required for wili")
    train, test = load_wili(cfg.data)
    if cfg.full:
        log.warning("running on the full WiLI-2018 corpus; this takes a long time")
    else:
        train = wili_subset(train, cfg.languages, cfg.per_class)
        test = wili_subset(test, cfg.languages, cfg.per_class)
    log.info("wili: %d train / %d test paragraphs, %d classes", len(train), len(test), len(train.classes))
    rows = []
    for method in cfg.methods:
        for dim in cfg.dims:
            predicted = classify_split(train, test, cfg.tokenizer, method, dim)
            acc = _accuracy(predicted, test.labels)
            log.info("wili %s L=%d acc=%.4f", method.value, dim, acc)
            rows.append(ResultRow("wili", method.value, cfg.ngram, dim, None, "acc", acc, 1, cfg.seed))
    return _sorted(rows)


def run_sms(cfg: ExperimentConfig) -> list[ResultRow]:
    """Mean ACC / SC / BH over ``cfg.trials`` seeded 50/50 splits."""
    if cfg.data is None:
        raise ValueError("--data FILE is required for sms")
    corpus = load_sms(cfg.data)
    log.info("sms: %d messages, %s", len(corpus), corpus.class_counts())
    # the split of trial t depends only on seed + t, shared by all methods and L
    splits = [split_indices(len(corpus), cfg.split_fraction, make_rng(cfg.seed + t)) for t in range(cfg.trials)]
    labels = np.array(corpus.labels, dtype=object)

    rows = []
    for method in cfg.methods:
        for dim in cfg.dims:
            matrix = encode_matrix(corpus.texts, cfg.tokenizer, method, dim)
            reports = []
            for train_idx, test_idx in splits:
                index = VectorIndex(matrix[train_idx], labels[train_idx].tolist(), normalize=False)
                hits = nn_classify_batch(matrix[test_idx], index)
                reports.append(spam_metrics([h.label for h in hits], labels[test_idx].tolist()))
            for metric in ("acc", "sc", "bh"):
                values = [getattr(r, metric) for r in reports]
                value = float(np.nanmean(values)) if not all(map(math.isnan, values)) else 0.0
                rows.append(ResultRow("sms", method.value, cfg.ngram, dim, None, metric, value,
                                      cfg.trials, cfg.seed))
            log.info("sms %s L=%d acc=%.4f", method.value, dim, rows[-3].value)
    return _sorted(rows)


def format_rows(rows: Iterable[ResultRow], fmt: str = "csv") -> str:
    buf = io.StringIO()
    if fmt == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for row in rows:
            d = asdict(row)
            writer.writerow(["" if d[k] is None else d[k] for k in CSV_FIELDS])
    elif fmt == "json":
        for row in rows:
            buf.write(json.dumps(asdict(row), sort_keys=False) + "\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return buf.getvalue()


def write_rows(rows: Iterable[ResultRow], out: Optional[Path], fmt: str = "csv") -> str:
    text = format_rows(rows, fmt)
    if out is not None:
        Path(out).write_text(text, encoding="utf-8")
    return text
