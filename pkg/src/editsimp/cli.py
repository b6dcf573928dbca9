"""Command-line entry point: ``editsimp {simplify,evaluate,ccd-eval}``.

Exit statuses: 0 success, 2 invalid input or configuration, 3 I/O failure,
4 backend failure or backend contract violation.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import os
import random
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .backends.base import Backends
from .backends.mock import mock_backends, read_synonyms, read_wordlist
from .ccd import complex_word_predictions, detect
from .core import EngineConfig, Sentence, dump_config, load_config, tokenize
from .errors import BackendError, ContractViolation, ValidationError
from .metrics import corpus_sari, cwi_eval, fkgl, mean_length
from .search import parse_ops, simplify_corpus

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3
EXIT_BACKEND = 4

log = logging.getLogger("editsimp")


def parse_backend_spec(spec: str) -> dict:
    """``"mock:lexicon=a.txt,heads=2"`` -> ``{"kind": "mock", "lexicon": "a.txt", "heads": "2"}``."""
    kind, _, rest = spec.partition(":")
    kind = kind.strip()
    if kind not in ("mock", "adapter"):
        raise ValidationError(f"unknown backend kind {kind!r} (expected mock:... or adapter:...)")
    options = {"kind": kind}
    for item in filter(None, (p.strip() for p in rest.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise ValidationError(f"backend option {item!r} is not key=value")
        options[key.strip()] = value.strip()
    return options


_MOCK_KEYS = {"lexicon", "synonyms", "verbs", "heads", "dim"}
_ADAPTER_KEYS = {"simplicity", "acceptability", "paraphraser", "embedder", "parser", "device"}


def build_backends(spec: str) -> Backends:
    opts = parse_backend_spec(spec)
    kind = opts.pop("kind")
    if kind == "mock":
        unknown = set(opts) - _MOCK_KEYS
        if unknown:
            raise ValidationError(f"unknown mock backend options: {sorted(unknown)}")
        try:
            return mock_backends(
                lexicon=read_wordlist(opts["lexicon"]) if "lexicon" in opts else None,
                synonyms=read_synonyms(opts["synonyms"]) if "synonyms" in opts else None,
                verbs=read_wordlist(opts["verbs"]) if "verbs" in opts else None,
                heads=int(opts.get("heads", 3)),
                dim=int(opts.get("dim", 4096)),
            )
        except ValueError as exc:
            raise ValidationError(f"bad mock backend option: {exc}") from exc
    unknown = set(opts) - _ADAPTER_KEYS
    if unknown:
        raise ValidationError(f"unknown adapter backend options: {sorted(unknown)}")
    missing = {"simplicity", "acceptability", "paraphraser"} - set(opts)
    if missing:
        raise ValidationError(f"adapter backend needs {sorted(missing)}")
    from .backends.adapters import adapter_backends

    return adapter_backends(**opts)


@contextlib.contextmanager
def forbid_randomness():
    """Make any use of the stdlib or numpy global RNG raise during the block."""

    def refuse(*_a, **_k):
        raise RuntimeError("a randomness source was touched during a --seedless run")

    targets = [(random, n) for n in ("random", "seed", "randint", "randrange", "choice", "choices",
                                     "shuffle", "sample", "uniform", "gauss", "getrandbits")]
    targets += [(np.random, n) for n in ("seed", "default_rng", "rand", "randn", "random", "randint",
                                         "choice", "shuffle", "permutation", "RandomState")]
    saved = [(mod, name, getattr(mod, name)) for mod, name in targets]
    try:
        for mod, name, _ in saved:
            setattr(mod, name, refuse)
        yield
    finally:
        for mod, name, original in saved:
            setattr(mod, name, original)


def _resolve_config(path: str | None) -> tuple[EngineConfig, str | None]:
    path = path or os.environ.get("GRS_CONFIG")
    if not path:
        return EngineConfig(), None
    return load_config(path), path


def read_jsonl_sentences(path: str) -> tuple[list[Sentence], dict[tuple[str, ...], str]]:
    sentences, trees = [], {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValidationError(f"{path}:{lineno}: invalid JSON ({exc.msg})") from None
            if not isinstance(obj, dict) or "text" not in obj:
                raise ValidationError(f"{path}:{lineno}: expected an object with a 'text' field")
            s = tokenize(str(obj["text"]), id=str(obj.get("id", lineno)))
            sentences.append(s)
            if obj.get("tree"):
                trees[s] = obj["tree"]
    if not sentences:
        raise ValidationError(f"{path}: no sentences")
    return sentences, trees


def cmd_simplify(args) -> int:
    started = time.time()
    config, config_path = _resolve_config(args.config)
    ops = parse_ops(args.ops)
    sentences, trees = read_jsonl_sentences(args.input)
    backends = build_backends(args.backends)
    if trees:
        register = getattr(backends.parser, "register", None)
        if register is None:
            log.warning("input carries trees but the parser backend cannot use them")
        else:
            for s, tree in trees.items():
                register(s, tree)
    guard = forbid_randomness() if args.seedless else contextlib.nullcontext()
    with guard:
        traces = simplify_corpus(sentences, backends, config, ops, workers=args.workers)

    out_path = Path(args.output)
    with open(out_path, "w", encoding="utf-8") as fh:
        for t in traces:
            fh.write(t.to_json() + "\n")
    manifest = {
        "tool": "editsimp",
        "version": __version__,
        "config": config.to_dict(),
        "config_text": dump_config(config),
        "config_path": config_path,
        "ops": sorted(ops),
        "backends": backends.describe(),
        "backend_spec": args.backends,
        "input": str(args.input),
        "output": str(out_path),
        "sentences": len(sentences),
        "traces": len(traces),
        "workers": args.workers,
        "seedless": bool(args.seedless),
        "wall_clock_seconds": round(time.time() - started, 3),
    }
    manifest_path = out_path.with_name(out_path.name + ".manifest.json")
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    return EXIT_OK


def _read_lines(path: str) -> list[str]:
    with open(path, encoding="utf-8") as fh:
        return [line.rstrip("\n") for line in fh]


def cmd_evaluate(args) -> int:
    sources = _read_lines(args.source)
    outputs = _read_lines(args.output)
    ref_sets = [_read_lines(p) for p in args.refs.split(",") if p.strip()]
    if not ref_sets:
        raise ValidationError("--refs names no files")
    for name, lines in [("output", outputs)] + [(f"reference {i + 1}", r) for i, r in enumerate(ref_sets)]:
        if len(lines) != len(sources):
            raise ValidationError(f"{name} has {len(lines)} lines, source has {len(sources)}")
    result = corpus_sari(sources, outputs, ref_sets)
    report = result.to_dict()
    report["fkgl"] = fkgl(outputs)
    report["mean_len"] = mean_length(outputs)
    print(json.dumps(report))
    return EXIT_OK


def read_cwi(path: str) -> list[tuple[list[str], list[bool]]]:
    """``word<TAB>0|1`` per line, blank line between sentences."""
    sentences, words, tags = [], [], []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip():
                if words:
                    sentences.append((words, tags))
                    words, tags = [], []
                continue
            parts = line.split("\t")
            if len(parts) != 2 or parts[1].strip() not in ("0", "1") or not parts[0].strip():
                raise ValidationError(f"{path}:{lineno}: expected 'word<TAB>0|1', got {line!r}")
            words.append(parts[0].strip())
            tags.append(parts[1].strip() == "1")
    if words:
        sentences.append((words, tags))
    if not sentences:
        raise ValidationError(f"{path}: no tagged words")
    return sentences


def cmd_ccd_eval(args) -> int:
    gold_sents = read_cwi(args.gold)
    backends = build_backends(args.backends)
    predictions, gold = [], []
    rows = []
    for i, (words, tags) in enumerate(gold_sents):
        s = Sentence.from_tokens(words, id=str(i))
        marking = detect(backends.classify_simplicity(s).attention, s)
        pred = complex_word_predictions(marking, s)
        predictions.extend(pred)
        gold.extend(tags)
        rows.append([f"{w}\t{int(p)}" for w, p in zip(words, pred)])
    if args.predictions:
        Path(args.predictions).write_text("\n\n".join("\n".join(r) for r in rows) + "\n",
                                          encoding="utf-8")
    print(json.dumps(cwi_eval(predictions, gold).to_dict()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="editsimp", description="Iterative edit-based sentence simplification.",
                                     epilog="exit status: 0 ok, 2 invalid input or config, 3 I/O error, 4 backend error")
    parser.add_argument("--log-level", default="WARNING")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simplify", help="simplify a JSONL corpus into traces")
    p.add_argument("--input", required=True, help="JSONL with {id, text[, tree]} per line")
    p.add_argument("--output", required=True, help="trace JSONL to write")
    p.add_argument("--config", help="flat key = value config (falls back to $GRS_CONFIG)")
    p.add_argument("--ops", default="pa,dl", help="pa, dl or pa,dl")
    p.add_argument("--backends", default="mock", help="mock[:k=v,...] or adapter:k=v,...")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seedless", action="store_true",
                   help="fail if any global random number generator is used")
    p.set_defaults(func=cmd_simplify)

    p = sub.add_parser("evaluate", help="SARI / FKGL / length of a system output")
    p.add_argument("--source", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--refs", required=True, help="comma-separated reference files")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("ccd-eval", help="complex word identification with the detector")
    p.add_argument("--gold", required=True, help="word<TAB>0|1 lines, blank line between sentences")
    p.add_argument("--backends", default="mock")
    p.add_argument("--predictions", help="optional path for per-word predictions")
    p.set_defaults(func=cmd_ccd_eval)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (BackendError, ContractViolation) as exc:
        print(f"backend error: {exc}", file=sys.stderr)
        return EXIT_BACKEND


if __name__ == "__main__":
    sys.exit(main())
