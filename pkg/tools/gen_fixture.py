"""Regenerate the bundled demo lexicon and embedding fixture.

Synthetic 8-dim vectors: each concept cluster gets a random unit direction
and its member words sit near it, so nearest-neighbour synonym sets come out
looking plausible. Seeded; committed output only changes if this file does.

Run from the repo root:  python tools/gen_fixture.py
"""
from __future__ import annotations

import json
import math
import random
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parents[1] / "src" / "vocabtutor" / "data"
DIM = 8
SEED = 414243

# level -> words that appear in the lexicon
LEXICON_WORDS = {
    "A1": ["dog", "cat", "house", "water", "book", "sun", "apple", "chair", "fish"],
    "A2": ["bridge", "garden", "market", "letter", "mountain", "river", "window", "farmer", "cheese"],
    "B1": ["journey", "opinion", "solution", "effort", "culture", "average", "describe", "improve", "neighbour"],
    "B2": ["negotiate", "emphasis", "threshold", "adequate", "perceive", "diverse", "notion", "outcome", "undermine"],
    "C1": ["meticulous", "ambiguous", "resilient", "profound", "coherent", "scrutiny", "nuance", "viable", "adverse"],
    "C2": ["ubiquitous", "ephemeral", "obfuscate", "quintessential", "juxtapose", "perfunctory", "sycophant", "anachronism", "esoteric"],
}

# concept clusters; words not in the lexicon exist only as synonym candidates
CLUSTERS = [
    ["dog", "puppy", "hound"],
    ["cat", "kitten", "feline"],
    ["house", "home", "cottage", "window"],
    ["water", "river", "stream"],
    ["book", "letter", "describe"],
    ["sun", "sunshine"],
    ["apple", "cheese", "fruit"],
    ["chair", "bench"],
    ["fish", "trout"],
    ["bridge", "crossing"],
    ["garden", "farmer", "meadow"],
    ["market", "negotiate", "bargain"],
    ["mountain", "hill"],
    ["journey", "trip", "voyage"],
    ["opinion", "notion", "belief", "perceive"],
    ["solution", "improve", "outcome", "effort"],
    ["culture", "diverse", "neighbour"],
    ["average", "threshold", "adequate"],
    ["emphasis", "profound"],
    ["meticulous", "scrutiny", "careful"],
    ["ambiguous", "nuance", "esoteric", "obfuscate"],
    ["resilient", "viable", "adverse", "undermine"],
    ["coherent", "quintessential"],
    ["ephemeral", "fleeting", "anachronism"],
    ["ubiquitous", "everywhere"],
    ["juxtapose", "contrast"],
    ["perfunctory", "sycophant"],
]


def unit(vec: list[float]) -> list[float]:
    norm = math.sqrt(sum(v * v for v in vec))
    return [v / norm for v in vec]


def main() -> None:
    rng = random.Random(SEED)
    vectors: dict[str, list[float]] = {}
    for cluster in CLUSTERS:
        center = unit([rng.gauss(0.0, 1.0) for _ in range(DIM)])
        for word in cluster:
            if word in vectors:  # first cluster wins for shared words
                continue
            noisy = [c + rng.gauss(0.0, 0.18) for c in center]
            vectors[word] = [round(v, 4) for v in noisy]

    ordered_lexicon = [(lvl, w) for lvl, words in LEXICON_WORDS.items() for w in words]
    missing = [w for _, w in ordered_lexicon if w not in vectors]
    if missing:
        raise SystemExit(f"lexicon words without a cluster: {missing}")

    OUT_DIR.mkdir(parents=True, exist_ok=True)

    emb_lines = [f"{len(vectors)} {DIM}"]
    for word in vectors:  # insertion order: cluster order, stable under the seed
        emb_lines.append(word + " " + " ".join(f"{v:.4f}" for v in vectors[word]))
    (OUT_DIR / "embeddings.txt").write_text("\n".join(emb_lines) + "\n", encoding="utf-8")

    lexicon = [
        {"word": word, "level": level, "image_ref": f"img/w{n:03d}.svg"}
        for n, (level, word) in enumerate(ordered_lexicon, start=1)
    ]
    (OUT_DIR / "lexicon.json").write_text(
        json.dumps(lexicon, indent=2) + "\n", encoding="utf-8"
    )
    print(f"wrote {len(vectors)} vectors and {len(lexicon)} lexicon entries to {OUT_DIR}")


if __name__ == "__main__":
    main()
