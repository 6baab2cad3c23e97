"""Synthetic strings, corpus loaders, and seeded splitting."""

from __future__ import annotations

import math
import string
from dataclasses import dataclass, field
from pathlib import Path
from typing import Hashable, Sequence

import numpy as np

LOWERCASE = string.ascii_lowercase
PRINTABLE_LO, PRINTABLE_HI = 33, 126
SMS_LABELS = ("ham", "spam")


class DataError(Exception):
    """Raised for missing or malformed corpus files."""


def make_rng(seed: int | Sequence[int]) -> np.random.Generator:
    """PCG64 generator; the same seed always yields the same stream."""
    return np.random.Generator(np.random.PCG64(seed))


@dataclass
class LabeledDataset:
    texts: list[str]
    labels: list[Hashable]
    classes: list[Hashable] = field(default_factory=list)

    def __post_init__(self):
        if len(self.texts) != len(self.labels):
            raise ValueError(f"{len(self.texts)} texts but {len(self.labels)} labels")
        if not self.classes:
            self.classes = sorted(set(self.labels), key=str)
        missing = set(self.labels) - set(self.classes)
        if missing:
            raise ValueError(f"labels not among classes: {sorted(missing, key=str)[:5]}")

    def __len__(self) -> int:
        return len(self.texts)

    def __iter__(self):
        return iter(zip(self.texts, self.labels))

    def subset(self, indices: Sequence[int]) -> "LabeledDataset":
        return LabeledDataset(
            [self.texts[i] for i in indices],
            [self.labels[i] for i in indices],
            list(self.classes),
        )

    def class_counts(self) -> dict[Hashable, int]:
        counts = dict.fromkeys(self.classes, 0)
        for label in self.labels:
            counts[label] += 1
        return counts


def gen_random_string(m: int, rng: np.random.Generator) -> str:
    if m < 1:
        raise ValueError(f"string length must be >= 1, got {m}")
    return "".join(LOWERCASE[i] for i in rng.integers(0, len(LOWERCASE), size=m))


def perturb(s: str, p: float, rng: np.random.Generator) -> str:
    """Replace each character with probability ``p`` by a different printable
    ASCII character (codes 33-126)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must be in [0, 1], got {p}")
    hit = rng.random(len(s)) < p
    out = list(s)
    for i in np.flatnonzero(hit):
        orig = ord(s[i])
        if PRINTABLE_LO <= orig <= PRINTABLE_HI:
            code = PRINTABLE_LO + int(rng.integers(0, PRINTABLE_HI - PRINTABLE_LO))
            if code >= orig:
                code += 1
        else:
            code = PRINTABLE_LO + int(rng.integers(0, PRINTABLE_HI - PRINTABLE_LO + 1))
        out[i] = chr(code)
    return "".join(out)


def _read_lines(path: Path) -> list[str]:
    if not path.is_file():
        raise DataError(f"missing file: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise DataError(f"{path}: not valid UTF-8 ({exc})") from exc
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return [line.rstrip("\r") for line in lines]


def _load_wili_split(root: Path, name: str) -> LabeledDataset:
    x_path, y_path = root / f"x_{name}.txt", root / f"y_{name}.txt"
    texts, labels = _read_lines(x_path), _read_lines(y_path)
    if len(texts) != len(labels):
        raise DataError(f"{y_path}: {len(labels)} labels for {len(texts)} paragraphs in {x_path.name}")
    return LabeledDataset(texts, labels)


def load_wili(root: str | Path) -> tuple[LabeledDataset, LabeledDataset]:
    """Load the WiLI-2018 train and test splits from ``root``."""
    root = Path(root)
    if not root.is_dir():
        raise DataError(f"not a directory: {root}")
    return _load_wili_split(root, "train"), _load_wili_split(root, "test")


def wili_subset(ds: LabeledDataset, languages: int, per_class: int) -> LabeledDataset:
    """First ``languages`` labels in sorted order, first ``per_class`` items
    of each in file order."""
    keep = set(sorted(set(ds.labels))[:languages])
    taken = dict.fromkeys(keep, 0)
    idx = []
    for i, label in enumerate(ds.labels):
        if label in keep and taken[label] < per_class:
            taken[label] += 1
            idx.append(i)
    sub = ds.subset(idx)
    sub.classes = sorted(keep)
    return sub


def load_sms(path: str | Path) -> LabeledDataset:
    """Load ``label<TAB>text`` lines, label being ``ham`` or ``spam``."""
    path = Path(path)
    texts, labels = [], []
    for lineno, line in enumerate(_read_lines(path), start=1):
        label, sep, text = line.partition("\t")
        if not sep:
            raise DataError(f"{path}:{lineno}: no tab separator")
        if label not in SMS_LABELS:
            raise DataError(f"{path}:{lineno}: unknown label {label!r}")
        texts.append(text)
        labels.append(label)
    return LabeledDataset(texts, labels, list(SMS_LABELS))


def split_indices(n: int, fraction: float, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    if not 0.0 < fraction < 1.0:
        raise ValueError(f"fraction must be in (0, 1), got {fraction}")
    if n < 1:
        raise ValueError("cannot split an empty dataset")
    order = rng.permutation(n)
    cut = math.ceil(fraction * n)
    return order[:cut], order[cut:]


def split(
    ds: LabeledDataset, fraction: float, rng: np.random.Generator
) -> tuple[LabeledDataset, LabeledDataset]:
    """Random permutation; the first ceil(fraction * N) items go to train."""
    train, test = split_indices(len(ds), fraction, rng)
    return ds.subset(train.tolist()), ds.subset(test.tolist())
