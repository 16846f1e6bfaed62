import json
from pathlib import Path

import pytest

from polylex.cli import EXIT_OK, EXIT_PIPELINE, EXIT_USAGE, main

from conftest import GOLDEN_DIR

ARTIFACTS = (
    "classes.tsv", "assignments.tsv", "tables.tsv", "stats.json",
    "classifications.tsv", "evaluation.txt", "lexicon.json", "lexicon.html",
)


def test_pipeline_matches_goldens(tmp_path, capsys):
    outdir = tmp_path / "out"
    assert main(["pipeline", "--outdir", str(outdir)]) == EXIT_OK
    for name in ARTIFACTS:
        produced = (outdir / name).read_bytes()
        assert produced == (GOLDEN_DIR / name).read_bytes(), name


def test_pipeline_is_deterministic(tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert main(["pipeline", "--outdir", str(out1)]) == EXIT_OK
    assert main(["pipeline", "--outdir", str(out2)]) == EXIT_OK
    for name in ARTIFACTS:
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()


def test_stage_commands_compose(tmp_path):
    outdir = tmp_path / "out"
    for stage in ("derive-classes", "tag", "match", "classify", "evaluate", "generate-lexicon"):
        assert main([stage, "--outdir", str(outdir)]) == EXIT_OK
    assert (outdir / "lexicon.json").is_file()


def test_unknown_command_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == EXIT_USAGE


def test_missing_input_is_usage_error(tmp_path):
    code = main([
        "derive-classes", "--outdir", str(tmp_path / "out"),
        "--inventory", str(tmp_path / "missing.tsv"),
    ])
    assert code == EXIT_USAGE


def test_bad_config_file_is_usage_error(tmp_path):
    bad = tmp_path / "cfg.json"
    bad.write_text("{not json", encoding="utf-8")
    assert main(["derive-classes", "--config", str(bad)]) == EXIT_USAGE


def test_broken_input_is_pipeline_error(tmp_path):
    inv = tmp_path / "inventory.tsv"
    inv.write_text("book\t1\n", encoding="utf-8")
    code = main([
        "derive-classes", "--outdir", str(tmp_path / "out"),
        "--inventory", str(inv),
    ])
    assert code == EXIT_PIPELINE


def test_config_file_overrides_defaults(tmp_path):
    inv = tmp_path / "inventory.tsv"
    inv.write_text("a\t1\tanm\na\t2\tfod\nb\t1\tanm\nb\t2\tfod\n", encoding="utf-8")
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"inventory": str(inv), "outdir": str(tmp_path / "out")}))
    assert main(["derive-classes", "--config", str(cfg)]) == EXIT_OK
    body = (tmp_path / "out" / "classes.tsv").read_text(encoding="utf-8")
    rows = [l for l in body.splitlines() if not l.startswith("#")]
    assert rows == ["anm fod\ta b"]


def test_tsv_artifacts_carry_digest_headers(tmp_path):
    outdir = tmp_path / "out"
    main(["pipeline", "--outdir", str(outdir)])
    for name in ("classes.tsv", "assignments.tsv", "tables.tsv", "classifications.tsv"):
        first = (outdir / name).read_text(encoding="utf-8").splitlines()[0]
        assert first.startswith("# generated by polylex")
    json.loads((outdir / "stats.json").read_text(encoding="utf-8"))
    json.loads((outdir / "lexicon.json").read_text(encoding="utf-8"))
