import json

import pytest

from fibrous import (
    FiniteTopology,
    broken_metric_q,
    functor_G_mor,
    functor_G_obj,
    morphism_to_json,
    preorder_to_json,
    topology_to_json,
)
from fibrous.cli import main

SIERPINSKI = FiniteTopology(2, (0, 2, 3))


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


@pytest.fixture
def sierpinski_top(tmp_path):
    return write(tmp_path, "sierpinski.json", topology_to_json(SIERPINSKI))


@pytest.fixture
def sierpinski_g(tmp_path):
    gi = functor_G_obj(SIERPINSKI)
    return write(tmp_path, "sierpinski-g.json", preorder_to_json(gi.X, gi.w))


def test_from_top_then_check_passes(tmp_path, sierpinski_top, capsys):
    assert main(["from-top", sierpinski_top, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    fixture = write(tmp_path, "g.json", payload)
    assert main(["check", fixture]) == 0
    out = capsys.readouterr().out
    assert "F1-F6: pass" in out


def test_check_without_witness_reports_f1_f3(tmp_path, capsys):
    gi = functor_G_obj(SIERPINSKI)
    fixture = write(tmp_path, "bare.json", preorder_to_json(gi.X))
    assert main(["check", fixture]) == 0
    assert "F1-F3: pass" in capsys.readouterr().out


def test_check_corrupted_exits_one(tmp_path, capsys):
    gi = functor_G_obj(SIERPINSKI)
    obj = preorder_to_json(gi.X, gi.w)
    obj["d"] = [[a, b, (1 if (a, b) == (1, 1) else t)] for a, b, t in obj["d"]]
    fixture = write(tmp_path, "bad.json", obj)
    assert main(["check", fixture, "--json"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert not report["passed"]
    assert report["violations"][0]["axiom"] == "F1"


def test_to_top_recovers_topology(tmp_path, sierpinski_g, capsys):
    assert main(["to-top", sierpinski_g, "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == topology_to_json(SIERPINSKI)
    assert main(["to-top", sierpinski_g, "--algorithm", "brute", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == topology_to_json(SIERPINSKI)


def test_to_top_requires_witness(tmp_path, capsys):
    gi = functor_G_obj(SIERPINSKI)
    fixture = write(tmp_path, "bare.json", preorder_to_json(gi.X))
    assert main(["to-top", fixture]) == 2
    assert "required" in capsys.readouterr().err


def test_equiv_self_and_absent(tmp_path, sierpinski_g, capsys):
    assert main(["equiv", sierpinski_g, sierpinski_g, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["witness"]["phi"] == [0, 1, 2]
    gd = functor_G_obj(FiniteTopology(2, (0, 1, 2, 3)))
    gi = functor_G_obj(FiniteTopology(2, (0, 3)))
    da = write(tmp_path, "d.json", preorder_to_json(gd.X, gd.w))
    ia = write(tmp_path, "i.json", preorder_to_json(gi.X, gi.w))
    assert main(["equiv", da, ia]) == 1
    assert "no equivalence witness" in capsys.readouterr().out


def test_umap_present_and_absent(tmp_path, sierpinski_g, capsys):
    assert main(["umap", sierpinski_g, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["u"] == [1, 0]
    assert report["R0"] == [[0, 1], [1]]
    from fibrous import FinFibrousPreorder

    no_minimum = FinFibrousPreorder(
        3,
        4,
        (0, 0, 1, 2),
        (0b011, 0b101, 0b010, 0b100),
        {(0, 0): 0, (0, 1): 2, (1, 0): 1, (1, 2): 3, (2, 1): 2, (3, 2): 3},
    )
    fixture = write(tmp_path, "nomin.json", preorder_to_json(no_minimum))
    assert main(["umap", fixture]) == 1


def test_compose_cli(tmp_path, capsys):
    gs = functor_G_obj(SIERPINSKI)
    const1 = functor_G_mor((1, 1), SIERPINSKI, SIERPINSKI)
    xfile = write(tmp_path, "x.json", preorder_to_json(gs.X, gs.w))
    mfile = write(tmp_path, "m.json", morphism_to_json(const1))
    code = main(["compose", xfile, xfile, xfile, mfile, mfile])
    assert code == 0
    composed = json.loads(capsys.readouterr().out)
    assert composed["f"] == [1, 1]


def test_roundtrip_fg_all_n(capsys):
    assert main(["roundtrip", "--mode", "fg", "--all-n", "2", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["checked"] == 4 and report["failures"] == []


def test_roundtrip_gf_random_prints_seed(capsys):
    assert main(["roundtrip", "--mode", "gf", "--random", "3", "--seed", "5"]) == 0
    out = capsys.readouterr().out
    assert "seed: 5" in out and "3 verified" in out


def test_roundtrip_gf_file(tmp_path, sierpinski_g, capsys):
    assert main(["roundtrip", "--mode", "gf", sierpinski_g, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["checked"] == 1
    assert report["witnesses"][0]["phi"] == [0, 1, 2]


def test_enum_top(capsys):
    assert main(["enum-top", "2", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["count"] == 4
    assert {"nB": 2, "opens": [[], [1], [0, 1]]} in report["topologies"]


def test_sample_prints_seed_and_count(capsys):
    assert main(["sample", "padic:3", "--samples", "400", "--seed", "42"]) == 0
    out = capsys.readouterr().out
    assert "seed: 42" in out
    assert "no violations in 400 samples" in out


def test_sample_witness_out_on_failure(tmp_path, capsys, monkeypatch):
    import fibrous.cli as cli

    monkeypatch.setattr(cli, "named_instance", lambda name: broken_metric_q())
    out_file = tmp_path / "witness.json"
    code = main(
        ["sample", "metric-q", "--samples", "3000", "--seed", "0",
         "--witness-out", str(out_file), "--json"]
    )
    assert code == 1
    replay = json.loads(out_file.read_text())
    assert replay["seed"] == 0
    assert "round" in replay["witness"]


def test_modulus_check_cli(capsys):
    assert main(["modulus-check", "q-double", "--samples", "300"]) == 0
    assert main(["modulus-check", "q-double-bad", "--samples", "4000"]) == 1
    out = capsys.readouterr().out
    assert "falsified" in out


def test_malformed_json_reports_position(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"nB": 2,', encoding="utf-8")
    assert main(["check", str(path)]) == 2
    err = capsys.readouterr().err
    assert "line 1" in err and "column" in err


def test_schema_error_exits_two(tmp_path, capsys):
    fixture = write(tmp_path, "half.json", {"nB": 1, "nA": 1})
    assert main(["check", fixture]) == 2
    assert "missing key" in capsys.readouterr().err


def test_usage_errors(capsys):
    assert main(["no-such-verb"]) == 2
    assert main(["sample"]) == 2
    assert main(["roundtrip", "--mode", "fg"]) == 2  # needs input or --all-n
    capsys.readouterr()


def test_base_size_mismatch_exits_two(tmp_path, sierpinski_g, capsys):
    one = functor_G_obj(FiniteTopology(1, (0, 1)))
    other = write(tmp_path, "one.json", preorder_to_json(one.X, one.w))
    assert main(["equiv", sierpinski_g, other]) == 2
    assert "base sizes differ" in capsys.readouterr().err


def test_oversized_brute_exits_two(tmp_path, sierpinski_g, capsys):
    assert main(["to-top", sierpinski_g, "--algorithm", "brute", "--brute-limit", "1"]) == 2
    assert "brute algorithm limited" in capsys.readouterr().err


def test_stdin_input(monkeypatch, capsys):
    import io

    gi = functor_G_obj(SIERPINSKI)
    text = json.dumps(preorder_to_json(gi.X, gi.w))
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    assert main(["check", "-"]) == 0
    assert "F1-F6: pass" in capsys.readouterr().out


def test_json_reports_are_byte_identical(capsys, sierpinski_g):
    assert main(["sample", "cantor", "--samples", "200", "--seed", "1", "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["sample", "cantor", "--samples", "200", "--seed", "1", "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert main(["check", sierpinski_g, "--json"]) == 0
    a = capsys.readouterr().out
    assert main(["check", sierpinski_g, "--json"]) == 0
    b = capsys.readouterr().out
    assert a == b
