"""Corpus ingestion, cleaning, cutoff filtering and stratified splitting.

One record is a free-text BoQ line item plus its ICMS category code.
Cleaning lowercases, strips everything non-alphabetic, removes stop-words
and Porter-stems the remainder; the result is what every downstream
representation consumes.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import ConfigurationError, RowError, SchemaError
from .stem import stem_fixpoint

LABEL_PATTERN = re.compile(r"^\d\.\d{2}\.\d{3}$")

_NON_ALPHA = re.compile(r"[^a-z]+")


@dataclass(frozen=True)
class RawRecord:
    """One BoQ line item as read from disk."""

    description: str
    label: str
    project_id: str | None = None


@dataclass(frozen=True)
class CleanDoc:
    """A normalized record: stemmed tokens plus its class index."""

    tokens: tuple[str, ...]
    label_index: int


@dataclass(frozen=True)
class LabelSpace:
    """The surviving ICMS codes, lexicographically ordered, with counts."""

    labels: tuple[str, ...]
    counts: tuple[int, ...]

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def __len__(self) -> int:
        return len(self.labels)


@dataclass
class DatasetSplit:
    train: list[CleanDoc]
    test: list[CleanDoc]
    seed: int


def _load_stopwords() -> frozenset[str]:
    text = resources.files("boq").joinpath("data/stopwords.txt").read_text("utf-8")
    words = [w.strip() for w in text.splitlines()]
    return frozenset(w for w in words if w and not w.startswith("#"))


STOPWORDS = _load_stopwords()


def load_csv(path: str | Path) -> list[RawRecord]:
    """Read records from a UTF-8 CSV with columns description,label[,project_id]."""
    path = Path(path)
    with path.open("r", encoding="utf-8", newline="") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None:
            raise SchemaError(f"{path}: empty file, expected a header row")
        for column in ("description", "label"):
            if column not in reader.fieldnames:
                raise SchemaError(f"{path}: missing required column '{column}'")
        records: list[RawRecord] = []
        for line_no, row in enumerate(reader, start=2):
            description = (row.get("description") or "").strip()
            label = (row.get("label") or "").strip()
            if not description:
                raise RowError(line_no, "empty description")
            if not LABEL_PATTERN.match(label):
                raise RowError(line_no, f"label {label!r} does not match d.dd.ddd")
            records.append(RawRecord(description, label, row.get("project_id") or None))
    return records


def save_csv(records: list[RawRecord], path: str | Path) -> None:
    """Write records in the same schema load_csv reads."""
    with Path(path).open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["description", "label", "project_id"])
        for record in records:
            writer.writerow([record.description, record.label, record.project_id or ""])


def clean(text: str) -> tuple[str, ...]:
    """Normalize one description to its token form.

    Lowercase; strip digits, punctuation and special characters inside
    each whitespace token; drop stop-words; Porter-stem to a fixed point;
    sweep stop-words once more so the output is stable under re-cleaning.
    May legitimately return an empty tuple.
    """
    out = []
    for raw in text.lower().split():
        token = _NON_ALPHA.sub("", raw)
        if not token or token in STOPWORDS:
            continue
        stemmed = stem_fixpoint(token)
        if stemmed and stemmed not in STOPWORDS:
            out.append(stemmed)
    return tuple(out)


def clean_record(record: RawRecord) -> tuple[str, ...]:
    return clean(record.description)


def apply_cutoff(
    cleaned: list[tuple[tuple[str, ...], str]], cutoff: int
) -> tuple[list[CleanDoc], LabelSpace]:
    """Deduplicate on (tokens, label), drop classes below the cutoff.

    Duplicates are removed first (keeping the first occurrence), then any
    class left with fewer than `cutoff` samples is dropped entirely and
    the label space is rebuilt over the survivors.
    """
    if cutoff < 1:
        raise ConfigurationError(f"cutoff must be >= 1, got {cutoff}")
    seen: set[tuple[tuple[str, ...], str]] = set()
    deduped: list[tuple[tuple[str, ...], str]] = []
    for tokens, label in cleaned:
        key = (tokens, label)
        if key in seen:
            continue
        seen.add(key)
        deduped.append(key)

    counts: dict[str, int] = {}
    for _, label in deduped:
        counts[label] = counts.get(label, 0) + 1
    survivors = sorted(label for label, n in counts.items() if n >= cutoff)
    if not survivors:
        raise ConfigurationError(f"no class has >= {cutoff} samples after deduplication")
    index = {label: i for i, label in enumerate(survivors)}

    docs = [
        CleanDoc(tokens, index[label]) for tokens, label in deduped if label in index
    ]
    space = LabelSpace(
        labels=tuple(survivors),
        counts=tuple(counts[label] for label in survivors),
    )
    return docs, space


def split(docs: list[CleanDoc], fraction: float, seed: int) -> DatasetSplit:
    """Stratified train/test partition, deterministic for a given seed.

    Each class contributes round(fraction * class_count) test records,
    rounding half up. Record order inside each side follows the input.
    """
    if not 0.0 < fraction < 1.0:
        raise ConfigurationError(f"fraction must be in (0, 1), got {fraction}")
    by_class: dict[int, list[int]] = {}
    for position, doc in enumerate(docs):
        by_class.setdefault(doc.label_index, []).append(position)

    test_positions: set[int] = set()
    for label_index in sorted(by_class):
        positions = by_class[label_index]
        if len(positions) < 2:
            raise ConfigurationError(
                f"class index {label_index} has a single sample; raise the cutoff"
            )
        rng = np.random.default_rng(
            np.random.SeedSequence(entropy=seed, spawn_key=(label_index,))
        )
        order = rng.permutation(len(positions))
        n_test = int(np.floor(fraction * len(positions) + 0.5))
        test_positions.update(positions[i] for i in order[:n_test])

    train = [doc for i, doc in enumerate(docs) if i not in test_positions]
    test = [doc for i, doc in enumerate(docs) if i in test_positions]
    return DatasetSplit(train=train, test=test, seed=seed)


@dataclass
class PreparedCorpus:
    """Cleaned, cutoff-filtered corpus ready for vectorization."""

    docs: list[CleanDoc]
    label_space: LabelSpace
    n_raw: int = 0
    n_deduped: int = field(default=0)


def prepare(records: list[RawRecord], cutoff: int = 250) -> PreparedCorpus:
    """Full ingestion pipeline: clean every record, dedup, apply the cutoff."""
    cleaned = [(clean_record(r), r.label) for r in records]
    docs, space = apply_cutoff(cleaned, cutoff)
    return PreparedCorpus(docs=docs, label_space=space, n_raw=len(records), n_deduped=len(docs))
