"""Brute-force synonym oracle for the bundled fixture content.

Independent of the package on purpose: parses the embeddings text and
computes cosines with plain math so the committed expected output in
tests/data/synonyms_oracle.json cross-checks the numpy code path.

Run from the repo root:  python3 tools/gen_synonym_oracle.py
"""

import json
import math
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
EMBEDDINGS = ROOT / "src" / "vocabtutor" / "data" / "embeddings.txt"
LEXICON = ROOT / "src" / "vocabtutor" / "data" / "lexicon.json"
OUT = ROOT / "tests" / "data" / "synonyms_oracle.json"
K = 10


def read_vectors(path):
    vectors = {}
    with open(path, encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh if line.strip()]
    start = 0
    head = lines[0].split()
    if len(head) == 2 and all(p.lstrip("-").isdigit() for p in head):
        start = 1
    for line in lines[start:]:
        parts = line.split()
        word, comps = parts[0], [float(p) for p in parts[1:]]
        if word not in vectors:
            vectors[word] = comps
    return vectors


def cosine(a, b):
    dot = sum(x * y for x, y in zip(a, b))
    na = math.sqrt(sum(x * x for x in a))
    nb = math.sqrt(sum(x * x for x in b))
    return dot / (na * nb)


def main():
    vectors = read_vectors(EMBEDDINGS)
    with open(LEXICON, encoding="utf-8") as fh:
        words = sorted({str(row["word"]) for row in json.load(fh)})

    oracle = {}
    margins = []
    for word in words:
        ranked = sorted(
            ((-cosine(vectors[word], vec), other) for other, vec in vectors.items() if other != word),
        )
        oracle[word] = sorted(other for _neg, other in ranked[:K])
        if len(ranked) > K:
            margins.append((-ranked[K - 1][0]) - (-ranked[K][0]))

    OUT.parent.mkdir(parents=True, exist_ok=True)
    with open(OUT, "w", encoding="utf-8") as fh:
        json.dump(oracle, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print(f"wrote {len(oracle)} synonym sets to {OUT}")
    print(f"smallest rank-{K} margin: {min(margins):.6f}")


if __name__ == "__main__":
    main()
