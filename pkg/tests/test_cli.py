import json

import pytest

from hilbcert.cli import main

X2Y2 = "field: QQ\nvars: x y\ngens:\nx^2\ny^2\n"


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def _gallery_file(tmp_path, capsys, name, *flags):
    assert main(["gallery", name, *flags]) == 0
    text = capsys.readouterr().out
    return _write(tmp_path, f"{name}.txt", text)


def test_hf_command(tmp_path, capsys):
    path = _gallery_file(tmp_path, capsys, "re", "--e", "3")
    assert main(["hf", path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["summary"] == "1+4T+10T^2+12T^3+8T^4; deg 35"
    assert report["degree"] == 35


def test_hf_rejects_positive_dimension(tmp_path, capsys):
    path = _write(tmp_path, "bad.txt", "field: QQ\nvars: x y\ngens:\nx^2\n")
    assert main(["hf", path]) == 4
    assert "zero-dimensional" in capsys.readouterr().err


def test_certify_exit_codes(tmp_path, capsys):
    neg = _write(tmp_path, "x2y2.txt", X2Y2)
    assert main(["certify", neg]) == 2
    capsys.readouterr()
    smooth = _gallery_file(tmp_path, capsys, "re", "--e", "2")
    assert main(["certify", smooth]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "smooth-elementary"
    assert report["dimension"] == 25


def test_certify_pair(tmp_path, capsys):
    small = _gallery_file(tmp_path, capsys, "re", "--e", "2")
    big = _gallery_file(tmp_path, capsys, "me", "--e", "2")
    assert main(["certify", small, "--pair", big]) == 3
    capsys.readouterr()
    assert main(["certify", small, "--pair", big, "--assert-M-smooth"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "relative-smooth-elementary"
    assert report["dimension"] == 25


def test_certify_graded_only(tmp_path, capsys):
    path = _gallery_file(tmp_path, capsys, "weighted_counterexample")
    assert main(["certify", path, "--graded-only"]) == 4


def test_parse_error_reports_location(tmp_path, capsys):
    path = _write(
        tmp_path, "bad.txt", "field: QQ\nvars: x y\ngens:\nx^2\nx + w\n"
    )
    assert main(["certify", path]) == 4
    err = capsys.readouterr().err
    assert "line 5" in err
    assert "w" in err


def test_gallery_verify(capsys):
    assert main(["gallery", "me", "--e", "2", "--verify"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["all_match"] is True
    assert report["dim_hom_actual"] == 36


def test_gallery_unknown(capsys):
    assert main(["gallery", "nope"]) == 4
    assert "available" in capsys.readouterr().err


def test_hunt_deterministic(tmp_path, capsys):
    args = [
        "hunt", "--vars", "4", "--socle", "2", "--codim", "3",
        "--count", "2", "--seed", "7", "--out", str(tmp_path / "hits"),
    ]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    assert first == second
    assert "seed 7:" in first
    assert (tmp_path / "hits" / "index.json").exists()


def test_hunt_bounds_error(capsys):
    assert main(["hunt", "--vars", "4", "--socle", "2", "--codim", "999"]) == 4
    assert "out of range" in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["certify", "/nonexistent/file.txt"]) == 4
