"""Command-line pipeline: composable stages with file artifacts.

Stages communicate through files so any stage can be rerun or inspected
on its own.  Exit codes: 0 success, 1 pipeline error, 2 usage/config
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, data_path
from . import artifacts
from .classifier import JaccardClassifier
from .corpus import DEFAULT_PENN_MAP, parse_corpus, parse_penn_map
from .lexgen import DEFAULT_CREATION_VERBS, emit_html_index, emit_structured, generate_lexicon
from .matcher import match_corpus, pattern_recall
from .polyclasses import apply_exclusions, derive_classes, parse_exclusions
from .semtypes import parse_type_system
from .senses import parse_inventory
from .stemmer import PorterStemmer, parse_exceptions

EXIT_OK = 0
EXIT_PIPELINE = 1
EXIT_USAGE = 2

_INPUT_KEYS = ("inventory", "exclusions", "typesystem", "penn_map", "stem_exceptions", "corpus")

_DEFAULTS = {
    "inventory": data_path("inventory.tsv"),
    "exclusions": data_path("exclusions.tsv"),
    "typesystem": data_path("typesystem.json"),
    "penn_map": data_path("penn_map.tsv"),
    "stem_exceptions": data_path("stem_exceptions.tsv"),
    "corpus": data_path("demo_corpus.tsv"),
}


class ConfigError(Exception):
    pass


class Config:
    """Input paths and thresholds, merged from defaults, config file and flags."""

    def __init__(self, args: argparse.Namespace):
        file_cfg = {}
        if args.config:
            path = Path(args.config)
            if not path.is_file():
                raise ConfigError("config file not found: %s" % path)
            try:
                file_cfg = json.loads(path.read_text(encoding="utf-8"))
            except json.JSONDecodeError as exc:
                raise ConfigError("bad config file %s: %s" % (path, exc))
        self.paths = {}
        for key in _INPUT_KEYS:
            flag = getattr(args, key, None)
            self.paths[key] = Path(flag or file_cfg.get(key) or _DEFAULTS[key])
        self.outdir = Path(args.outdir or file_cfg.get("outdir") or "out")
        self.mi_floor = _pick(args, file_cfg, "mi_floor", 0.0)
        self.count_floor = int(_pick(args, file_cfg, "count_floor", 1))
        self.adv_window = int(_pick(args, file_cfg, "adv_window", 1))
        self.creation_verbs = tuple(
            file_cfg.get("creation_verbs", DEFAULT_CREATION_VERBS)
        )

    def require(self, *keys: str) -> None:
        for key in keys:
            if not self.paths[key].is_file():
                raise ConfigError("%s file not found: %s" % (key, self.paths[key]))

    def read(self, key: str) -> str:
        return self.paths[key].read_text(encoding="utf-8")


def _pick(args, file_cfg, key, default):
    flag = getattr(args, key, None)
    if flag is not None:
        return flag
    return file_cfg.get(key, default)


def _load_corpus(cfg: Config):
    penn = parse_penn_map(cfg.read("penn_map")) if cfg.paths["penn_map"].is_file() else dict(DEFAULT_PENN_MAP)
    exceptions = parse_exceptions(cfg.read("stem_exceptions")) if cfg.paths["stem_exceptions"].is_file() else {}
    stemmer = PorterStemmer(exceptions)
    return parse_corpus(cfg.read("corpus"), stemmer, penn)


def _write(cfg: Config, name: str, body: str, inputs: dict) -> Path:
    cfg.outdir.mkdir(parents=True, exist_ok=True)
    path = cfg.outdir / name
    artifacts.write_text(path, artifacts.header(inputs) + body)
    return path


# -- stages -------------------------------------------------------------------

def cmd_derive(cfg: Config) -> int:
    cfg.require("inventory", "exclusions")
    inventory = parse_inventory(cfg.read("inventory"))
    exclusions = parse_exclusions(cfg.read("exclusions"))
    classes = apply_exclusions(derive_classes(inventory), exclusions)
    path = _write(cfg, "classes.tsv", artifacts.classes_to_tsv(classes),
                  {k: cfg.paths[k] for k in ("inventory", "exclusions")})
    print("derive-classes: %d classes -> %s" % (len(classes), path))
    return EXIT_OK


def cmd_tag(cfg: Config) -> int:
    cfg.require("inventory", "typesystem")
    inventory = parse_inventory(cfg.read("inventory"))
    type_system = parse_type_system(cfg.read("typesystem"))
    assignments = type_system.assign_tags(inventory.profiles())
    path = _write(cfg, "assignments.tsv", artifacts.assignments_to_tsv(assignments),
                  {k: cfg.paths[k] for k in ("inventory", "typesystem")})
    print("tag: %d of %d lemmas tagged -> %s" % (len(assignments), len(inventory), path))
    return EXIT_OK


def cmd_match(cfg: Config) -> int:
    cfg.require("inventory", "typesystem", "corpus")
    inventory = parse_inventory(cfg.read("inventory"))
    type_system = parse_type_system(cfg.read("typesystem"))
    assignments = type_system.assign_tags(inventory.profiles())
    corpus = _load_corpus(cfg)
    corelex, full = match_corpus(corpus, assignments, type_system, cfg.adv_window)
    inputs = {k: cfg.paths[k] for k in ("inventory", "typesystem", "corpus")}
    path = _write(cfg, "tables.tsv", artifacts.tables_to_tsv(corelex, full), inputs)
    artifacts.write_text(cfg.outdir / "stats.json", artifacts.stats_to_json(corelex, full))
    recall = pattern_recall(corpus, full)
    print(
        "match: %d sentences, %d tagged rows, %d total rows, pattern recall %.3f -> %s"
        % (len(corpus), len(corelex.counts), len(full.counts), recall, path)
    )
    return EXIT_OK


def _fit_classifier(cfg: Config):
    type_system = parse_type_system(cfg.read("typesystem"))
    inventory = parse_inventory(cfg.read("inventory"))
    assignments = type_system.assign_tags(inventory.profiles())
    tsv = (cfg.outdir / "tables.tsv").read_text(encoding="utf-8")
    stats = (cfg.outdir / "stats.json").read_text(encoding="utf-8")
    tables = artifacts.tables_from_files(tsv, stats)
    clf = JaccardClassifier(mi_floor=cfg.mi_floor, count_floor=cfg.count_floor)
    clf.fit(tables, assignments)
    return clf, type_system


def cmd_classify(cfg: Config) -> int:
    cfg.require("inventory", "typesystem")
    _require_artifacts(cfg, "tables.tsv", "stats.json")
    clf, _ = _fit_classifier(cfg)
    results = clf.classify_all()
    path = _write(cfg, "classifications.tsv", artifacts.classifications_to_tsv(results),
                  {"tables": cfg.outdir / "tables.tsv"})
    assigned = sum(1 for c in results if c.assigned is not None)
    print("classify: %d of %d nouns assigned -> %s" % (assigned, len(results), path))
    return EXIT_OK


def cmd_evaluate(cfg: Config) -> int:
    cfg.require("inventory", "typesystem")
    _require_artifacts(cfg, "tables.tsv", "stats.json")
    clf, _ = _fit_classifier(cfg)
    report = clf.evaluate_holdout()
    inputs = {"tables": cfg.outdir / "tables.tsv"}
    path = _write(cfg, "evaluation.txt", report.summary(), inputs)
    _write(cfg, "evaluation_per_noun.tsv", artifacts.evaluation_to_tsv(report.per_noun), inputs)
    sys.stdout.write(report.summary())
    print("evaluate: report -> %s" % path)
    return EXIT_OK


def cmd_generate_lexicon(cfg: Config) -> int:
    cfg.require("inventory", "typesystem")
    _require_artifacts(cfg, "tables.tsv", "stats.json", "classifications.tsv")
    clf, type_system = _fit_classifier(cfg)
    classifications = artifacts.classifications_from_tsv(
        (cfg.outdir / "classifications.tsv").read_text(encoding="utf-8")
    )
    provenance = {
        "corpus": cfg.paths["corpus"].name,
        "corpus_sha256": artifacts.file_digest(cfg.paths["corpus"]),
        "typesystem": cfg.paths["typesystem"].name,
        "typesystem_sha256": artifacts.file_digest(cfg.paths["typesystem"]),
        "tool": "polylex %s" % __version__,
    }
    lexicon = generate_lexicon(
        clf.corelex_table_, clf.all_table_, clf.assignments_, classifications,
        type_system, cfg.creation_verbs, cfg.count_floor, provenance,
    )
    json_path = cfg.outdir / "lexicon.json"
    html_path = cfg.outdir / "lexicon.html"
    artifacts.write_text(json_path, emit_structured(lexicon))
    artifacts.write_text(html_path, emit_html_index(lexicon))
    print("generate-lexicon: %d entries -> %s, %s" % (len(lexicon.entries), json_path, html_path))
    return EXIT_OK


def cmd_pipeline(cfg: Config) -> int:
    for stage, fn in (
        ("derive-classes", cmd_derive),
        ("tag", cmd_tag),
        ("match", cmd_match),
        ("classify", cmd_classify),
        ("evaluate", cmd_evaluate),
        ("generate-lexicon", cmd_generate_lexicon),
    ):
        code = fn(cfg)
        if code != EXIT_OK:
            print("pipeline: stage %s failed" % stage, file=sys.stderr)
            return code
    return EXIT_OK


def _require_artifacts(cfg: Config, *names: str) -> None:
    for name in names:
        if not (cfg.outdir / name).is_file():
            raise ConfigError(
                "missing artifact %s in %s (run the earlier stages first)"
                % (name, cfg.outdir)
            )


_COMMANDS = {
    "derive-classes": cmd_derive,
    "tag": cmd_tag,
    "match": cmd_match,
    "classify": cmd_classify,
    "evaluate": cmd_evaluate,
    "generate-lexicon": cmd_generate_lexicon,
    "pipeline": cmd_pipeline,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polylex",
        description="Build and corpus-adapt an underspecified semantic lexicon.",
    )
    parser.add_argument("--version", action="version", version="polylex " + __version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", help="JSON config file; flags override it")
        for key in _INPUT_KEYS:
            p.add_argument("--" + key.replace("_", "-"), dest=key)
        p.add_argument("--outdir")
        p.add_argument("--mi-floor", dest="mi_floor", type=float)
        p.add_argument("--count-floor", dest="count_floor", type=int)
        p.add_argument("--adv-window", dest="adv_window", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = Config(args)
        return _COMMANDS[args.command](cfg)
    except ConfigError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # parse and validation failures
        print("error [%s]: %s" % (args.command, exc), file=sys.stderr)
        return EXIT_PIPELINE


if __name__ == "__main__":
    sys.exit(main())
