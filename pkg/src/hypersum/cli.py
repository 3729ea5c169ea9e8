"""Command-line driver.

Subcommands: summarize, evaluate, bench, ablate, stats. All outputs are
JSON lines whose first record embeds the exact run configuration, so any
output file can be replayed with ``--config <file>``. Flags override
HYPERSUM_* environment variables, which override built-in defaults. For
the report subcommands a PNG figure is rendered next to the JSONL output
(disable with --no-figures).

Exit status is 0 only if no document-level errors occurred; otherwise a
machine-readable error summary is printed to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from itertools import product
from pathlib import Path
from typing import Any, Sequence

from . import figures, pipeline
from .config import RunConfig, env_default, parse_k, parse_seeds
from .corpus import corpus_stats, load_corpus
from .embed import dump_embeddings
from .errors import HyperSumError

__all__ = ["main"]

_ABLATE_AXES = ("medoid", "scheme", "tokenizer")

_FLAG_PARSERS = {
    "dim": int,
    "scheme": str,
    "tokenizer": str,
    "medoid": str,
    "medoid_update": str,
    "seeds": parse_seeds,
    "k": parse_k,
    "max_iters": int,
    "restarts": int,
    "threads": int,
    "levels": int,
    "repeats": int,
    "format": str,
    "figures": lambda s: s.lower() in ("1", "true", "yes", "on"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypersum",
        description="Extractive summarization with hyperdimensional sentence "
                    "embeddings and k-medoids selection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, lists: bool = False) -> None:
        hint = " (comma-separated list for the ablation grid)" if lists else ""
        p.add_argument("--input", nargs="+", required=False, default=None,
                       help="input corpus file(s), JSONL")
        p.add_argument("--output", default=None, help="output JSONL path (default stdout)")
        p.add_argument("--config", default=None,
                       help="load configuration from a JSON file or a previous output")
        p.add_argument("--dim", type=int, default=None, help="hypervector dimension")
        p.add_argument("--scheme", default=None,
                       help="codebook scheme: thermometer|random|level|circular" + hint)
        p.add_argument("--tokenizer", default=None, help="tokenizer: word" + hint)
        p.add_argument("--medoid", default=None,
                       help="selector: alternating|fastpam|fasterpam|lead" + hint)
        p.add_argument("--medoid-update", dest="medoid_update", default=None,
                       help="medoid update rule: member-argmin|nearest-to-mean")
        p.add_argument("--seeds", type=parse_seeds, default=None,
                       help="comma-separated seed list")
        p.add_argument("--k", type=parse_k, default=None,
                       help="'oracle' (reference length) or a fixed integer")
        p.add_argument("--max-iters", dest="max_iters", type=int, default=None)
        p.add_argument("--restarts", type=int, default=None,
                       help="clustering restarts per document (best objective wins)")
        p.add_argument("--threads", type=int, default=None)
        p.add_argument("--levels", type=int, default=None,
                       help="level count for level/circular codebooks")
        p.add_argument("--format", default=None, help="output format (jsonl)")
        p.add_argument("--figures", action=argparse.BooleanOptionalAction, default=None,
                       help="render a PNG next to report outputs")

    ps = sub.add_parser("summarize", help="select summary utterances per document")
    add_common(ps)
    ps.add_argument("--dump-embeddings", default=None, metavar="DIR",
                    help="also write per-document embedding matrices (.npy)")

    pe = sub.add_parser("evaluate", help="summarize under each seed and score")
    add_common(pe)

    pb = sub.add_parser("bench", help="time the embed and cluster phases")
    add_common(pb)
    pb.add_argument("--repeats", type=int, default=None, help="timing repeats")

    pa = sub.add_parser("ablate", help="evaluate a grid of configurations")
    add_common(pa, lists=True)

    pst = sub.add_parser("stats", help="corpus statistics")
    add_common(pst)

    return parser


def _load_config_file(path: str) -> dict[str, Any]:
    with open(path, encoding="utf-8") as fp:
        first = ""
        for line in fp:
            if line.strip():
                first = line
                break
    raw = json.loads(first) if first else {}
    if isinstance(raw, dict) and raw.get("record") == "config":
        return raw["config"]
    if isinstance(raw, dict):
        return raw
    raise ValueError(f"{path} does not contain a configuration record")


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Merge CLI > --config file > environment > defaults."""
    base = RunConfig()
    file_values: dict[str, Any] = {}
    if args.config:
        # validation is deferred to the command so ablate axis lists survive
        file_values = RunConfig.from_dict(_load_config_file(args.config),
                                          check=False).to_dict()
        file_values["seeds"] = tuple(file_values["seeds"])
        file_values["input"] = tuple(file_values["input"])

    values: dict[str, Any] = {}
    for name, parse in _FLAG_PARSERS.items():
        cli_value = getattr(args, name, None)
        if cli_value is not None:
            values[name] = cli_value
            continue
        env_value = env_default(name)
        if env_value is not None:
            values[name] = parse(env_value)
        elif name in file_values:
            values[name] = file_values[name]
        else:
            values[name] = getattr(base, name)

    if args.input is not None:
        values["input"] = tuple(args.input)
    else:
        inputs = env_default("input")
        values["input"] = (tuple(inputs.split(",")) if inputs
                           else tuple(file_values.get("input", ())))
    values["output"] = args.output if args.output is not None else file_values.get("output")
    return RunConfig(**values)


def _write_records(records: list[dict], output: str | None) -> None:
    lines = [json.dumps(r, sort_keys=True, ensure_ascii=False) for r in records]
    if output is None:
        for line in lines:
            print(line)
    else:
        Path(output).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _config_record(cfg: RunConfig, command: str) -> dict:
    return {"record": "config", "command": command, "config": cfg.to_dict()}


def _finish(records: list[dict], cfg: RunConfig, render=None) -> int:
    _write_records(records, cfg.output)
    if cfg.figures and cfg.output and render is not None:
        render(Path(cfg.output).with_suffix(".png"))
    errors = [r for r in records if r["record"] == "error"]
    error_cells = [r for r in records if r["record"] == "cell" and r.get("error")]
    if errors or error_cells:
        kinds = Counter(e["error_type"] for e in errors)
        kinds.update({"cell": len(error_cells)} if error_cells else {})
        summary = {
            "errors": len(errors) + len(error_cells),
            "by_type": dict(kinds),
        }
        print(json.dumps(summary, sort_keys=True), file=sys.stderr)
        return 1
    return 0


def _require_single_input(cfg: RunConfig) -> str:
    if len(cfg.input) != 1:
        raise SystemExit("expected exactly one --input corpus for this command")
    for axis in _ABLATE_AXES:
        if "," in str(getattr(cfg, axis)):
            raise SystemExit(f"--{axis} accepts a list only under 'ablate'")
    return cfg.input[0]


def cmd_summarize(args: argparse.Namespace) -> int:
    cfg = resolve_config(args).validate()
    docs = load_corpus(_require_single_input(cfg))
    records = [_config_record(cfg, "summarize")]
    records += pipeline.summarize_corpus(docs, cfg, cfg.seeds[0])
    if args.dump_embeddings:
        _dump_all_embeddings(docs, cfg, args.dump_embeddings)
    return _finish(records, cfg)


def _dump_all_embeddings(docs, cfg: RunConfig, out_dir: str) -> None:
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    for idx, doc in enumerate(docs):
        try:
            embeddings = pipeline.document_embeddings(doc, cfg, cfg.seeds[0], idx)
        except HyperSumError:
            continue
        dump_embeddings(embeddings, str(directory / f"{doc.id}.npy"))


def cmd_evaluate(args: argparse.Namespace) -> int:
    cfg = resolve_config(args).validate()
    docs = load_corpus(_require_single_input(cfg))
    records = [_config_record(cfg, "evaluate")]
    records += pipeline.evaluate_corpus(docs, cfg)
    return _finish(records, cfg, lambda p: figures.evaluate_figure(records, p))


def cmd_bench(args: argparse.Namespace) -> int:
    cfg = resolve_config(args).validate()
    docs = load_corpus(_require_single_input(cfg))
    records = [_config_record(cfg, "bench"), pipeline.bench_corpus(docs, cfg)]
    return _finish(records, cfg, lambda p: figures.bench_figure(records[1], p))


def cmd_stats(args: argparse.Namespace) -> int:
    cfg = resolve_config(args).validate()
    if not cfg.input:
        raise SystemExit("stats needs at least one --input corpus")
    records = [_config_record(cfg, "stats")]
    for path in cfg.input:
        stats = corpus_stats(load_corpus(path))
        records.append({"record": "stats", "corpus": Path(path).stem,
                        **stats.to_dict()})
    return _finish(records, cfg, lambda p: figures.stats_figure(records, p))


def cmd_ablate(args: argparse.Namespace) -> int:
    cfg = resolve_config(args).validate_axes()
    if not cfg.input:
        raise SystemExit("ablate needs at least one --input corpus")
    corpora = {Path(p).stem: load_corpus(p) for p in cfg.input}
    axes = {axis: str(getattr(cfg, axis)).split(",") for axis in _ABLATE_AXES}
    records = [_config_record(cfg, "ablate")]
    for combo in product(*axes.values()):
        variant = dict(zip(axes.keys(), combo))
        label = "|".join(f"{k}={v}" for k, v in variant.items())
        for name, docs in corpora.items():
            cell: dict = {"record": "cell", "variant": variant,
                          "variant_label": label, "corpus": name}
            try:
                sub_cfg = cfg.with_overrides(output=None, **variant)
                results = pipeline.evaluate_corpus(docs, sub_cfg)
                macro = next((r for r in results if r["record"] == "corpus-macro"), None)
                errors = sum(1 for r in results if r["record"] == "error")
                if macro is None:
                    first = next(r for r in results if r["record"] == "error")
                    cell.update(rouge_l=None, error=first["error"], errors=errors)
                else:
                    cell.update(rouge_l=macro["rl"][2], errors=errors)
            except (HyperSumError, ValueError) as exc:
                cell.update(rouge_l=None, error=str(exc), errors=1)
            records.append(cell)
    _print_ablate_table(records)
    return _finish(records, cfg, lambda p: figures.ablate_figure(records, p))


def _print_ablate_table(records: list[dict]) -> None:
    cells = [r for r in records if r["record"] == "cell"]
    if not cells:
        return
    variants = list(dict.fromkeys(r["variant_label"] for r in cells))
    corpora = list(dict.fromkeys(r["corpus"] for r in cells))
    width = max(len(v) for v in variants) + 2
    header = "variant".ljust(width) + "".join(c.rjust(12) for c in corpora)
    print(header, file=sys.stderr)
    lookup = {(r["variant_label"], r["corpus"]): r for r in cells}
    for v in variants:
        row = v.ljust(width)
        for c in corpora:
            cell = lookup[(v, c)]
            row += (f"{cell['rouge_l']:.3f}".rjust(12) if cell.get("rouge_l") is not None
                    else "error".rjust(12))
        print(row, file=sys.stderr)


_COMMANDS = {
    "summarize": cmd_summarize,
    "evaluate": cmd_evaluate,
    "bench": cmd_bench,
    "ablate": cmd_ablate,
    "stats": cmd_stats,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except HyperSumError as exc:
        print(json.dumps({"fatal": str(exc), "type": type(exc).__name__}),
              file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
