"""Vocabulary content: lexicon, embeddings, synonyms and answer checking.

Embeddings use the plain-text word2vec format: an optional "<count> <dim>"
header line followed by one "word v1 .. vdim" line per word. Synonyms for a
word are simply its top-k cosine neighbours in the embedding index, which may
include words outside the lexicon. Answer validation is deliberately dumb:
trim, lowercase, exact match against the word or one of its synonyms.
"""
from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .domain import CefrLevel

log = logging.getLogger(__name__)

DEFAULT_SYNONYM_K = 10


class EmbeddingFormatError(ValueError):
    """Base class for malformed embedding sources."""


class EmptySourceError(EmbeddingFormatError):
    """The embeddings source contained no vectors."""


class DimensionMismatchError(EmbeddingFormatError):
    """A row's arity disagreed with the established dimension."""


class UnknownWordError(KeyError):
    """Neighbour lookup for a word the index has never seen."""


@dataclass(frozen=True)
class WordItem:
    """One teachable word: spelling, CEFR level, image and accepted synonyms."""

    word: str
    level: CefrLevel
    image_ref: str
    synonyms: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        if self.word != self.word.strip().lower() or not self.word:
            raise ValueError(f"word must be non-empty lowercase, got {self.word!r}")
        bad = {s for s in self.synonyms if s != s.strip().lower() or not s}
        if bad:
            raise ValueError(f"synonyms must be non-empty lowercase, got {sorted(bad)}")
        if self.word in self.synonyms:
            raise ValueError(f"synonyms of {self.word!r} must not contain the word itself")


class EmbeddingIndex:
    """In-memory dense vectors with exact brute-force cosine search."""

    def __init__(self, vectors: dict[str, np.ndarray], dimension: int):
        self.dimension = dimension
        self.words: list[str] = list(vectors)
        self._matrix = np.array([vectors[w] for w in self.words], dtype=np.float64)
        norms = np.linalg.norm(self._matrix, axis=1)
        if np.any(norms == 0.0):
            zero = self.words[int(np.argmax(norms == 0.0))]
            raise EmbeddingFormatError(f"zero vector for word {zero!r}")
        self._unit = self._matrix / norms[:, None]
        self._row = {w: i for i, w in enumerate(self.words)}

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return word in self._row

    def vector(self, word: str) -> np.ndarray:
        try:
            return self._matrix[self._row[word]]
        except KeyError:
            raise UnknownWordError(word) from None

    def cosine(self, a: str, b: str) -> float:
        for w in (a, b):
            if w not in self._row:
                raise UnknownWordError(w)
        return float(np.dot(self._unit[self._row[a]], self._unit[self._row[b]]))

    def nearest(self, word: str, k: int) -> list[tuple[str, float]]:
        """Top-k cosine neighbours of word, query excluded.

        Descending similarity; exact ties break lexicographically. k larger
        than the remaining vocabulary just returns everything.
        """
        if k < 0:
            raise ValueError(f"k must be non-negative, got {k}")
        if word not in self._row:
            raise UnknownWordError(word)
        sims = self._unit @ self._unit[self._row[word]]
        ranked = sorted(
            (w for w in self.words if w != word),
            key=lambda w: (-sims[self._row[w]], w),
        )
        return [(w, float(sims[self._row[w]])) for w in ranked[:k]]

    def sha256(self) -> str | None:
        return getattr(self, "_source_sha256", None)


def _source_lines(text: str) -> list[tuple[int, str]]:
    return [(n, line) for n, line in enumerate(text.splitlines(), start=1) if line.strip()]


def load_embeddings(path: str | Path) -> EmbeddingIndex:
    """Parse a word2vec-style text file into an EmbeddingIndex.

    The header line is optional; duplicate words keep the first occurrence;
    a row with the wrong arity raises DimensionMismatchError naming its line.
    """
    path = Path(path)
    raw = path.read_bytes()
    lines = _source_lines(raw.decode("utf-8"))
    if not lines:
        raise EmptySourceError(f"no embedding rows in {path}")

    declared_dim: int | None = None
    first_no, first_line = lines[0]
    tokens = first_line.split()
    if len(tokens) == 2:
        try:
            int(tokens[0]), int(tokens[1])
        except ValueError:
            pass
        else:
            declared_dim = int(tokens[1])
            lines = lines[1:]
            if not lines:
                raise EmptySourceError(f"header but no embedding rows in {path}")

    vectors: dict[str, np.ndarray] = {}
    dim = declared_dim
    for line_no, line in lines:
        parts = line.split()
        word, values = parts[0], parts[1:]
        if dim is None:
            dim = len(values)
            if dim == 0:
                raise DimensionMismatchError(
                    f"{path} line {line_no}: row has no vector components"
                )
        if len(values) != dim:
            raise DimensionMismatchError(
                f"{path} line {line_no}: expected {dim} components, found {len(values)}"
            )
        if word in vectors:
            continue
        try:
            vec = np.array([float(v) for v in values], dtype=np.float64)
        except ValueError as exc:
            raise EmbeddingFormatError(f"{path} line {line_no}: {exc}") from None
        vectors[word] = vec

    if not vectors:
        raise EmptySourceError(f"no embedding rows in {path}")
    index = EmbeddingIndex(vectors, dim)
    index._source_sha256 = hashlib.sha256(raw).hexdigest()
    return index


def build_synonyms(
    index: EmbeddingIndex, words: list[str], k: int = DEFAULT_SYNONYM_K
) -> dict[str, frozenset[str]]:
    """Top-k neighbour sets for each word, lowercased, word itself removed.

    Words missing from the index get an empty set and a warning; k == 0 is a
    configuration error.
    """
    if k <= 0:
        raise ValueError(f"synonym k must be positive, got {k}")
    synonyms: dict[str, frozenset[str]] = {}
    for word in words:
        if word not in index:
            log.warning("word %r has no embedding; synonym set left empty", word)
            synonyms[word] = frozenset()
            continue
        neighbours = {n.lower() for n, _ in index.nearest(word, k)}
        neighbours.discard(word)
        synonyms[word] = frozenset(neighbours)
    return synonyms


def normalize_answer(text: str) -> str:
    return text.strip().lower()


def validate_answer(response: str, item: WordItem) -> bool:
    """Accept the word itself or any synonym, after trim+lowercase."""
    answer = normalize_answer(response)
    return answer == item.word or answer in item.synonyms


@dataclass
class Lexicon:
    """All teachable words, indexed by spelling and grouped by level."""

    items: dict[str, WordItem]
    by_level: dict[CefrLevel, list[str]] = field(init=False)

    def __post_init__(self) -> None:
        self.by_level = {level: [] for level in CefrLevel}
        for word in sorted(self.items):
            self.by_level[self.items[word].level].append(word)
        empty = [lvl.label for lvl in CefrLevel if not self.by_level[lvl]]
        if empty:
            raise ValueError(f"lexicon must cover every level; missing {empty}")

    def __len__(self) -> int:
        return len(self.items)

    def __contains__(self, word: str) -> bool:
        return word in self.items

    def __getitem__(self, word: str) -> WordItem:
        try:
            return self.items[word]
        except KeyError:
            raise UnknownWordError(word) from None

    def words_at(self, level: CefrLevel) -> list[str]:
        """Words at a level, sorted; callers rely on the stable order."""
        return self.by_level[level]


def load_lexicon(path: str | Path, synonyms: dict[str, frozenset[str]] | None = None) -> Lexicon:
    """Read a lexicon JSON array of {word, level, image_ref} objects."""
    path = Path(path)
    with open(path, "r", encoding="utf-8") as fh:
        rows = json.load(fh)
    if not isinstance(rows, list) or not rows:
        raise ValueError(f"{path}: expected a non-empty JSON array of word entries")
    items: dict[str, WordItem] = {}
    for row in rows:
        word = str(row["word"]).strip().lower()
        if word in items:
            raise ValueError(f"{path}: duplicate word {word!r}")
        items[word] = WordItem(
            word=word,
            level=CefrLevel.from_label(str(row["level"])),
            image_ref=str(row["image_ref"]),
            synonyms=(synonyms or {}).get(word, frozenset()),
        )
    return Lexicon(items)


# --- synonym cache -------------------------------------------------------

def write_synonym_cache(
    path: str | Path,
    synonyms: dict[str, frozenset[str]],
    embeddings_sha256: str,
    k: int,
) -> None:
    """Persist a synonym map keyed to the embeddings file that produced it."""
    doc = {
        "embeddings_sha256": embeddings_sha256,
        "k": k,
        "synonyms": {w: sorted(s) for w, s in sorted(synonyms.items())},
    }
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def read_synonym_cache(
    path: str | Path, embeddings_sha256: str, k: int
) -> dict[str, frozenset[str]] | None:
    """Load a cache if it matches the embeddings hash and k; else None."""
    path = Path(path)
    if not path.exists():
        return None
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError):
        return None
    if doc.get("embeddings_sha256") != embeddings_sha256 or doc.get("k") != k:
        return None
    return {w: frozenset(s) for w, s in doc.get("synonyms", {}).items()}


def load_content(
    lexicon_path: str | Path,
    embeddings_path: str | Path | None = None,
    cache_path: str | Path | None = None,
    k: int = DEFAULT_SYNONYM_K,
) -> Lexicon:
    """Load the lexicon, attaching synonyms from embeddings when provided.

    A cache file is honoured when its recorded embeddings hash matches, and
    refreshed on mismatch; without embeddings the lexicon loads bare.
    """
    if embeddings_path is None:
        return load_lexicon(lexicon_path)
    index = load_embeddings(embeddings_path)
    digest = index.sha256() or ""
    words = _lexicon_words(lexicon_path)
    synonyms = None
    if cache_path is not None:
        synonyms = read_synonym_cache(cache_path, digest, k)
        if synonyms is not None and set(synonyms) != set(words):
            synonyms = None
    if synonyms is None:
        synonyms = build_synonyms(index, words, k)
        if cache_path is not None:
            write_synonym_cache(cache_path, synonyms, digest, k)
    return load_lexicon(lexicon_path, synonyms)


def _lexicon_words(path: str | Path) -> list[str]:
    with open(path, "r", encoding="utf-8") as fh:
        rows = json.load(fh)
    return [str(row["word"]).strip().lower() for row in rows]
