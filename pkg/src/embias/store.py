"""Loading, saving, filtering, and indexing of static word embeddings.

File formats are plain UTF-8 text: embeddings are one ``word c1 ... cD``
record per line (whitespace separated); word lists are one word per line
with ``#`` comment lines ignored.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

FLOAT_FMT = "%.9g"


class EmbeddingFormatError(ValueError):
    """Raised when an embedding file cannot be parsed."""


@dataclass(frozen=True)
class WordList:
    """A named, ordered collection of unique words."""

    name: str
    words: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.words)) != len(self.words):
            raise ValueError(f"word list {self.name!r} contains duplicates")

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[str]:
        return iter(self.words)

    def __contains__(self, word: str) -> bool:
        return word in set(self.words)


@dataclass(frozen=True)
class Embedding:
    """An immutable vocabulary-indexed matrix of word vectors.

    ``matrix[i]`` is the vector for ``vocab[i]``.  The matrix is marked
    read-only so instances can be shared freely across threads.
    """

    vocab: tuple[str, ...]
    matrix: np.ndarray
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        matrix = np.ascontiguousarray(self.matrix, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] != len(self.vocab):
            raise ValueError(
                f"matrix shape {matrix.shape} does not match vocab size {len(self.vocab)}"
            )
        if matrix.size and not np.all(np.isfinite(matrix)):
            raise ValueError("embedding matrix contains non-finite components")
        index = {w: i for i, w in enumerate(self.vocab)}
        if len(index) != len(self.vocab):
            raise ValueError("vocabulary contains duplicate words")
        matrix.flags.writeable = False
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.vocab)

    def __contains__(self, word: str) -> bool:
        return word in self._index

    @property
    def d_emb(self) -> int:
        return self.matrix.shape[1]

    def index(self, word: str) -> int:
        """Vocabulary position of ``word`` (exact match only)."""
        return self._index[word]

    def lookup(self, word: str, lowercase_fallback: bool = True) -> np.ndarray:
        """Vector for ``word``.

        Lookup is exact-match first; on a miss the lowercased form is
        tried (test sentences contain capitalized pronouns and names).
        """
        i = self._index.get(word)
        if i is None and lowercase_fallback:
            i = self._index.get(word.lower())
        if i is None:
            raise KeyError(word)
        return self.matrix[i]

    def rows(self, words: Iterable[str], warn_label: str = "words") -> tuple[list[str], np.ndarray]:
        """Vectors for the subset of ``words`` present, dropped ones warned."""
        found, missing = [], 0
        for w in words:
            if w in self._index:
                found.append(w)
            else:
                missing += 1
        if missing:
            warnings.warn(f"{missing} {warn_label} missing from embedding vocabulary")
        idx = [self._index[w] for w in found]
        return found, self.matrix[idx]

    def replace_matrix(self, matrix: np.ndarray) -> "Embedding":
        """New embedding with the same vocabulary and a different matrix."""
        return Embedding(self.vocab, matrix)


def load_embeddings(path: str | Path, vocab_filter: WordList | None = None) -> Embedding:
    """Parse a text embedding file into an :class:`Embedding`.

    Every line must carry the same number of vector components; a
    malformed line aborts with its line number.  Duplicate words keep
    the first occurrence and a warning reports the count.  With
    ``vocab_filter``, only listed words are parsed (file order kept).
    """
    path = Path(path)
    keep = set(vocab_filter.words) if vocab_filter is not None else None
    vocab: list[str] = []
    seen: set[str] = set()
    rows: list[np.ndarray] = []
    d_emb: int | None = None
    duplicates = 0
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.split()
            if not parts:
                continue
            word = parts[0]
            if keep is not None and word not in keep:
                continue
            try:
                vec = np.array([float(tok) for tok in parts[1:]], dtype=np.float64)
            except ValueError as exc:
                raise EmbeddingFormatError(
                    f"{path}:{lineno}: non-numeric vector component ({exc})"
                ) from None
            if vec.size == 0:
                raise EmbeddingFormatError(f"{path}:{lineno}: no vector components")
            if d_emb is None:
                d_emb = vec.size
            elif vec.size != d_emb:
                raise EmbeddingFormatError(
                    f"{path}:{lineno}: expected {d_emb} components, found {vec.size}"
                )
            if word in seen:
                duplicates += 1
                continue
            seen.add(word)
            vocab.append(word)
            rows.append(vec)
    if d_emb is None:
        raise EmbeddingFormatError(f"{path}: no embedding records found")
    if duplicates:
        warnings.warn(f"{path}: dropped {duplicates} duplicate words (first kept)")
    return Embedding(tuple(vocab), np.vstack(rows))


def save_embeddings(emb: Embedding, path: str | Path) -> None:
    """Write ``emb`` in text format; values keep 9 significant digits."""
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        for word, row in zip(emb.vocab, emb.matrix):
            fh.write(word + " " + " ".join(FLOAT_FMT % x for x in row) + "\n")


def load_wordlist(path: str | Path, name: str | None = None) -> WordList:
    """Read a one-word-per-line file; duplicates keep first with a warning."""
    path = Path(path)
    words: list[str] = []
    seen: set[str] = set()
    duplicates = 0
    for line in path.read_text(encoding="utf-8").splitlines():
        word = line.strip()
        if not word or word.startswith("#"):
            continue
        if word in seen:
            duplicates += 1
            continue
        seen.add(word)
        words.append(word)
    if duplicates:
        warnings.warn(f"{path}: dropped {duplicates} duplicate words")
    return WordList(name or path.stem, tuple(words))


def save_wordlist(wl: WordList, path: str | Path) -> None:
    Path(path).write_text("\n".join(wl.words) + "\n", encoding="utf-8")


def _is_clean_token(token: str) -> bool:
    # Letters only: drops digit-bearing and punctuation-bearing tokens.
    return token.isalpha()


def build_target_vocab(
    emb_a: Embedding,
    emb_b: Embedding,
    gendered: WordList | Sequence[str],
    top_k: int,
    name: str = "target_vocab",
) -> WordList:
    """Neutral evaluation vocabulary from two embeddings' frequency prefixes.

    Takes the ``top_k`` prefix of each vocabulary (file order stands in
    for frequency order, which is how published embeddings are sorted),
    intersects them, and removes gendered words plus any token that is
    not purely alphabetic.  Order follows ``emb_a``.
    """
    if top_k > len(emb_a) or top_k > len(emb_b):
        warnings.warn(
            f"top_k={top_k} exceeds a vocabulary size "
            f"({len(emb_a)}, {len(emb_b)}); clamping"
        )
    top_a = emb_a.vocab[: min(top_k, len(emb_a))]
    top_b = set(emb_b.vocab[: min(top_k, len(emb_b))])
    excluded = set(gendered)
    words = tuple(
        w for w in top_a if w in top_b and w not in excluded and _is_clean_token(w)
    )
    return WordList(name, words)
