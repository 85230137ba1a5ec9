"""Generate placeholder SVGs for every image_ref in the bundled lexicon.

The fixture content ships opaque image paths with no actual artwork, so the
browser client needs something to show. Each file is abstract geometry seeded
only by the image_ref string; nothing about the target word reaches the pixels.

Usage: python3 tools/gen_placeholder_images.py [--out frontend/public]
"""
from __future__ import annotations

import argparse
import hashlib
import json
import random
from pathlib import Path

PALETTE = [
    "#e8c1a0", "#a0c8e8", "#b5e8a0", "#e8a0c8", "#c8a0e8",
    "#e8e0a0", "#a0e8d8", "#d8b090", "#90b0d8", "#b8b8b8",
]

WIDTH = 200
HEIGHT = 140


def shape(rng: random.Random) -> str:
    color = rng.choice(PALETTE)
    kind = rng.choice(["circle", "rect", "tri"])
    x = rng.randint(20, WIDTH - 20)
    y = rng.randint(20, HEIGHT - 20)
    size = rng.randint(14, 46)
    if kind == "circle":
        return f'<circle cx="{x}" cy="{y}" r="{size // 2}" fill="{color}"/>'
    if kind == "rect":
        angle = rng.randint(0, 90)
        return (
            f'<rect x="{x - size // 2}" y="{y - size // 2}" width="{size}" height="{size}" '
            f'fill="{color}" transform="rotate({angle} {x} {y})"/>'
        )
    points = " ".join(
        f"{x + rng.randint(-size, size)},{y + rng.randint(-size, size)}" for _ in range(3)
    )
    return f'<polygon points="{points}" fill="{color}"/>'


def render(ref: str) -> str:
    seed = int.from_bytes(hashlib.sha256(ref.encode("utf-8")).digest()[:8], "big")
    rng = random.Random(seed)
    body = "".join(shape(rng) for _ in range(rng.randint(4, 7)))
    background = rng.choice(PALETTE)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}">'
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="{background}" opacity="0.35"/>'
        f"{body}</svg>\n"
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--lexicon", default="src/vocabtutor/data/lexicon.json")
    parser.add_argument("--out", default="frontend/public")
    args = parser.parse_args()

    data = json.loads(Path(args.lexicon).read_text(encoding="utf-8"))
    items = data["items"] if isinstance(data, dict) else data
    out_root = Path(args.out)
    count = 0
    for item in items:
        ref = item["image_ref"]
        target = out_root / ref
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(render(ref), encoding="utf-8")
        count += 1
    print(f"wrote {count} placeholder images under {out_root}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
