"""Command-line entry points: simulate, serve, build-synonyms."""
from __future__ import annotations

import argparse
import dataclasses
import logging
import os
import sys
from pathlib import Path

from .content import build_synonyms, load_content, load_embeddings, write_synonym_cache
from .paths import bundled_embeddings_path, bundled_lexicon_path
from .simulate import load_config, load_config_lexicon, run_simulation, write_outputs


def _env(name: str, default: str | None = None) -> str | None:
    return os.environ.get(f"VOCABTUTOR_{name}", default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vocabtutor",
        description="Adaptive vocabulary tutor: simulation harness and HTTP service.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run seeded tutor simulations and write CSV/SVG outputs")
    sim.add_argument("--config", required=True, help="TOML or JSON simulation config")
    sim.add_argument("--out", help="output directory (overrides config)")
    sim.add_argument("--seed", type=int, help="base seed (overrides config)")
    sim.add_argument("--runs", type=int, help="runs per student (overrides config)")
    sim.add_argument("--interactions", type=int, help="interactions per run (overrides config)")
    sim.add_argument("--quiet", action="store_true", help="suppress progress output")

    srv = sub.add_parser("serve", help="start the tutor HTTP service")
    srv.add_argument("--host", default=_env("HOST", "127.0.0.1"))
    srv.add_argument("--port", type=int, default=int(_env("PORT", "8000") or 8000))
    srv.add_argument("--data-dir", default=_env("DATA_DIR", "tutor-data"))
    srv.add_argument("--lexicon", default=_env("LEXICON"))
    srv.add_argument("--embeddings", default=_env("EMBEDDINGS"))
    srv.add_argument("--synonym-cache", default=_env("SYNONYM_CACHE"))
    srv.add_argument("--static-dir", default=_env("STATIC_DIR"))

    syn = sub.add_parser("build-synonyms", help="precompute the synonym cache for a lexicon")
    syn.add_argument("--lexicon", default=None)
    syn.add_argument("--embeddings", default=None)
    syn.add_argument("--out", required=True)
    syn.add_argument("--k", type=int, default=10)

    return parser


def cmd_simulate(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    overrides = {}
    if args.out is not None:
        overrides["output_dir"] = args.out
    if args.seed is not None:
        overrides["base_seed"] = args.seed
    if args.runs is not None:
        overrides["runs"] = args.runs
    if args.interactions is not None:
        overrides["interactions"] = args.interactions
    if overrides:
        config = dataclasses.replace(config, **overrides)

    lexicon = load_config_lexicon(config)
    if not args.quiet:
        print(
            f"simulating {len(config.students)} students x {config.runs} runs "
            f"x {config.interactions} interactions (seed {config.base_seed})"
        )
    result = run_simulation(config, lexicon)
    written = write_outputs(result, config.output_dir)
    if not args.quiet:
        for path in written:
            print(f"wrote {path}")
    if result.failures:
        for failure in result.failures:
            print(f"run failed: {failure}", file=sys.stderr)
        return 1
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    lexicon_path = Path(args.lexicon) if args.lexicon else bundled_lexicon_path()
    embeddings_path = Path(args.embeddings) if args.embeddings else bundled_embeddings_path()
    lexicon = load_content(
        lexicon_path,
        embeddings_path,
        cache_path=Path(args.synonym_cache) if args.synonym_cache else None,
    )
    static_dir = Path(args.static_dir) if args.static_dir else None
    app = create_app(lexicon, Path(args.data_dir), static_dir=static_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def cmd_build_synonyms(args: argparse.Namespace) -> int:
    lexicon_path = Path(args.lexicon) if args.lexicon else bundled_lexicon_path()
    embeddings_path = Path(args.embeddings) if args.embeddings else bundled_embeddings_path()
    index = load_embeddings(embeddings_path)
    words = sorted(item.word for item in load_content(lexicon_path).items)
    synonyms = build_synonyms(index, words, k=args.k)
    write_synonym_cache(args.out, synonyms, index.sha256() or "", args.k)
    print(f"wrote synonym cache for {len(words)} words to {args.out}")
    return 0


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        if args.command == "simulate":
            return cmd_simulate(args)
        if args.command == "serve":
            return cmd_serve(args)
        if args.command == "build-synonyms":
            return cmd_build_synonyms(args)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
