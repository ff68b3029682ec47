import json

import pytest

from grpbounds_exporter.cli import main, parse_ids, parse_orders


def test_parse_orders_range():
    assert parse_orders("1..4") == [1, 2, 3, 4]
    assert parse_orders("16") == [16]
    assert parse_orders("6,8") == [6, 8]
    assert parse_orders("") == []


def test_parse_orders_bad_range():
    with pytest.raises(ValueError):
        parse_orders("9..3")
    with pytest.raises(ValueError):
        parse_orders("0..4")


def test_parse_ids():
    assert parse_ids("64.189,32.19") == [(64, 189), (32, 19)]
    assert parse_ids("") == []


def test_export_happy_path(fake_cas, good_transcript, tmp_path, capsys):
    out = tmp_path / "six.jsonl"
    rc = main(["export", "--orders", "6", "--out", str(out),
               "--gap-cmd", fake_cas(good_transcript)])
    assert rc == 0
    assert "wrote 2 records" in capsys.readouterr().out
    lines = out.read_text().splitlines()
    assert [json.loads(s)["id"] for s in lines] == ["6.1", "6.2"]
    for s in lines:
        obj = json.loads(s)
        assert s == json.dumps(obj, sort_keys=True, separators=(",", ":"))


def test_export_validation_failure(fake_cas, good_transcript, tmp_path,
                                   capsys):
    bad = good_transcript.replace("#COUNT 6 2", "#COUNT 6 3")
    out = tmp_path / "six.jsonl"
    rc = main(["export", "--orders", "6", "--out", str(out),
               "--gap-cmd", fake_cas(bad)])
    assert rc == 1
    assert "expected 3" in capsys.readouterr().err
    assert not out.exists()


def test_export_missing_cas(tmp_path, capsys):
    rc = main(["export", "--orders", "6", "--out", str(tmp_path / "x"),
               "--gap-cmd", "no-such-cas-binary"])
    assert rc == 2
    assert "not found" in capsys.readouterr().err


def test_export_nothing_requested(tmp_path, capsys):
    rc = main(["export", "--out", str(tmp_path / "x")])
    assert rc == 2
    assert "nothing to export" in capsys.readouterr().err


def test_export_bad_range(tmp_path, capsys):
    rc = main(["export", "--orders", "9..3", "--out", str(tmp_path / "x")])
    assert rc == 2
    assert "bad order range" in capsys.readouterr().err


def test_export_ids_only(fake_cas, tmp_path):
    transcript = "#REC 64|189|10|%s|nilpotent,solvable\n" % ",".join(
        str(x) for x in [2, 1, 3, 4, 5, 6, 7, 8, 9, 10])
    out = tmp_path / "extras.jsonl"
    rc = main(["export", "--ids", "64.189", "--out", str(out),
               "--gap-cmd", fake_cas(transcript)])
    assert rc == 0
    rec = json.loads(out.read_text())
    assert rec["id"] == "64.189"
    assert rec["tags"] == ["nilpotent", "solvable"]
