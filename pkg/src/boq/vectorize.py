"""Term vocabulary and the two feature representations.

Bag-of-words sparse vectors (binary / tf / tf-idf) feed the classical
learners; fixed-length padded id sequences feed the neural models. Both
share the same cleaned token stream and a vocabulary built from the
training split only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .corpus import CleanDoc
from .errors import ConfigurationError, ContractError

PAD_INDEX = 0
UNK_INDEX = 1

WEIGHTING_SCHEMES = ("binary", "tf", "tfidf")


@dataclass
class Vocabulary:
    """Immutable term index with document frequencies.

    In "bow" mode indices run 0..|V|-1 over lexicographically sorted terms.
    In "sequence" mode index 0 is reserved for padding and 1 for unknown
    terms, so term indices start at 2.
    """

    terms: tuple[str, ...]
    doc_freq: np.ndarray
    n_docs: int
    mode: str
    min_df: int

    def __post_init__(self) -> None:
        self.term_to_index = {
            term: i + self.offset for i, term in enumerate(self.terms)
        }

    @property
    def offset(self) -> int:
        return 2 if self.mode == "sequence" else 0

    @property
    def dim(self) -> int:
        """Width of the index space (including pad/unk slots in sequence mode)."""
        return len(self.terms) + self.offset

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class SparseVector:
    indices: np.ndarray  # strictly increasing int32, all < dim
    values: np.ndarray  # parallel float64, nonzero
    dim: int


@dataclass(frozen=True)
class PaddedSequence:
    ids: np.ndarray  # int32, length L; 0 = padding
    mask: np.ndarray  # bool, length L; True = real token


def build_vocab(train_docs: list[CleanDoc], min_df: int = 1, mode: str = "bow") -> Vocabulary:
    """Index every training term with document frequency >= min_df.

    Terms are sorted lexicographically before indexing so rebuilding from
    the same split is bit-identical.
    """
    if mode not in ("bow", "sequence"):
        raise ContractError(f"mode must be 'bow' or 'sequence', got {mode!r}")
    if not train_docs:
        raise ConfigurationError("cannot build a vocabulary from zero documents")
    df: dict[str, int] = {}
    for doc in train_docs:
        for term in set(doc.tokens):
            df[term] = df.get(term, 0) + 1
    kept = sorted(term for term, n in df.items() if n >= min_df)
    if not kept:
        raise ConfigurationError(f"no term reaches min_df={min_df}")
    return Vocabulary(
        terms=tuple(kept),
        doc_freq=np.array([df[t] for t in kept], dtype=np.int64),
        n_docs=len(train_docs),
        mode=mode,
        min_df=min_df,
    )


def idf(vocab: Vocabulary) -> np.ndarray:
    """Smoothed inverse document frequency: ln((1+N)/(1+df)) + 1."""
    return np.log((1.0 + vocab.n_docs) / (1.0 + vocab.doc_freq.astype(np.float64))) + 1.0


def vectorize_bow(doc: CleanDoc, vocab: Vocabulary, scheme: str = "tf") -> SparseVector:
    """Bag-of-words vector under the given weighting scheme.

    Out-of-vocabulary terms are ignored. tfidf weights are tf x idf with
    the vector L2-normalized afterwards; an all-OOV document yields the
    empty (zero) vector.
    """
    if vocab.mode != "bow":
        raise ContractError("vectorize_bow requires a vocabulary built in bow mode")
    if scheme not in WEIGHTING_SCHEMES:
        raise ContractError(f"unknown weighting scheme {scheme!r}")
    counts: dict[int, float] = {}
    for term in doc.tokens:
        index = vocab.term_to_index.get(term)
        if index is not None:
            counts[index] = counts.get(index, 0.0) + 1.0
    if not counts:
        return SparseVector(
            indices=np.empty(0, dtype=np.int32),
            values=np.empty(0, dtype=np.float64),
            dim=vocab.dim,
        )
    indices = np.array(sorted(counts), dtype=np.int32)
    values = np.array([counts[i] for i in indices], dtype=np.float64)
    if scheme == "binary":
        values = np.ones_like(values)
    elif scheme == "tfidf":
        idf_all = idf(vocab)
        values = values * idf_all[indices]
        values = values / np.linalg.norm(values)
    return SparseVector(indices=indices, values=values, dim=vocab.dim)


def encode_sequence(doc: CleanDoc, vocab: Vocabulary, length: int = 160) -> PaddedSequence:
    """Left-aligned token ids right-padded with 0, truncated at `length`."""
    if vocab.mode != "sequence":
        raise ContractError("encode_sequence requires a vocabulary built in sequence mode")
    if length < 1:
        raise ContractError(f"sequence length must be >= 1, got {length}")
    ids = np.zeros(length, dtype=np.int32)
    mask = np.zeros(length, dtype=bool)
    for position, term in enumerate(doc.tokens[:length]):
        ids[position] = vocab.term_to_index.get(term, UNK_INDEX)
        mask[position] = True
    return PaddedSequence(ids=ids, mask=mask)


def to_csr(
    docs: list[CleanDoc], vocab: Vocabulary, scheme: str = "tf"
) -> tuple[np.ndarray, np.ndarray, np.ndarray, tuple[int, int]]:
    """Stack vectorize_bow over docs into CSR arrays (indptr, indices, data)."""
    indptr = np.zeros(len(docs) + 1, dtype=np.int64)
    index_parts: list[np.ndarray] = []
    value_parts: list[np.ndarray] = []
    for i, doc in enumerate(docs):
        vec = vectorize_bow(doc, vocab, scheme)
        index_parts.append(vec.indices)
        value_parts.append(vec.values)
        indptr[i + 1] = indptr[i] + len(vec.indices)
    indices = (
        np.concatenate(index_parts) if index_parts else np.empty(0, dtype=np.int32)
    ).astype(np.int32)
    data = (
        np.concatenate(value_parts) if value_parts else np.empty(0, dtype=np.float64)
    ).astype(np.float64)
    return indptr, indices, data, (len(docs), vocab.dim)


def to_padded_batch(
    docs: list[CleanDoc], vocab: Vocabulary, length: int = 160
) -> tuple[np.ndarray, np.ndarray]:
    """Stack encode_sequence over docs into (ids, mask) matrices."""
    ids = np.zeros((len(docs), length), dtype=np.int32)
    mask = np.zeros((len(docs), length), dtype=bool)
    for i, doc in enumerate(docs):
        seq = encode_sequence(doc, vocab, length)
        ids[i] = seq.ids
        mask[i] = seq.mask
    return ids, mask


def save_vocab(vocab: Vocabulary, path: str | Path) -> None:
    payload = {
        "terms": list(vocab.terms),
        "doc_freq": vocab.doc_freq.tolist(),
        "n_docs": vocab.n_docs,
        "mode": vocab.mode,
        "min_df": vocab.min_df,
    }
    Path(path).write_text(json.dumps(payload), encoding="utf-8")


def load_vocab(path: str | Path) -> Vocabulary:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    return Vocabulary(
        terms=tuple(payload["terms"]),
        doc_freq=np.array(payload["doc_freq"], dtype=np.int64),
        n_docs=int(payload["n_docs"]),
        mode=payload["mode"],
        min_df=int(payload["min_df"]),
    )
