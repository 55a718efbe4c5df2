import json

import pytest

from svrkit.cli import main


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def _run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_decide_lsvr_exit_codes(tmp_path, capsys):
    reject = _write(tmp_path, "a.txt", "1 2 3 4 5 6 7\n1 3 2 7 5 6 4\n")
    accept = _write(tmp_path, "b.txt", "1 2 3 4 5 6\n2 1 6 4 5 3\n")
    code, out = _run(capsys, ["decide-lsvr", "--paths", reject])
    doc = json.loads(out)
    assert code == 1 and doc["exists"] is False and doc["drawing"] is None
    assert set(doc["violations"]) == {"SW", "SE", "NW", "NE"}
    code, out = _run(capsys, ["decide-lsvr", "--paths", accept])
    assert code == 0 and json.loads(out)["exists"]


def test_decide_lsvr_staircase_golden(tmp_path, capsys):
    paths = _write(tmp_path, "accept5.txt", "1 2 3 4 5\n4 3 5 2 1\n")
    svg = tmp_path / "accept5.svg"
    code, out = _run(capsys, ["decide-lsvr", "--paths", paths, "--svg", str(svg)])
    assert code == 0
    shapes = json.loads(out)["drawing"]["shapes"]
    corners = [(s["coords"]["l"], s["coords"]["b"], s["coords"]["w"], s["coords"]["h"]) for s in shapes]
    e = [1, 1]
    assert corners == [
        ([5, 0], [1, 0], e, e),
        ([4, 0], [0, 0], e, [3, 1]),
        ([0, 0], [3, 0], [3, 1], e),
        ([1, 0], [4, 0], e, e),
        ([3, 0], [5, 0], e, e),
    ]
    text = svg.read_text()
    assert text.startswith("<?xml") and text.count('stroke="red"') == 4 and text.count('stroke="blue"') == 4


def test_labels_are_preserved(tmp_path, capsys):
    paths = _write(tmp_path, "p.txt", "a b c\nc a b\n")
    code, out = _run(capsys, ["decide-lsvr", "--paths", paths])
    assert code == 0 and json.loads(out)["labels"] == ["a", "b", "c"]


def test_algorithm_a(tmp_path, capsys):
    ok = _write(tmp_path, "ok.txt", "1 2 3 4\n2 4 1 3\n")
    same = _write(tmp_path, "same.txt", "1 2 3\n1 2 3\n")
    one = _write(tmp_path, "one.txt", "1\n1\n")
    for fam in ("usq", "rect"):
        code, out = _run(capsys, ["algorithm-a", "--paths", ok, "--family", fam])
        assert code == 0 and json.loads(out)["report"]["valid"]
    code, out = _run(capsys, ["algorithm-a", "--paths", same])
    assert code == 1 and json.loads(out)["shared_edges"] == [[1, 2], [2, 3]]
    code, out = _run(capsys, ["algorithm-a", "--paths", one])
    assert code == 0 and len(json.loads(out)["drawing"]["shapes"]) == 1


NAE_CNF = "p cnf 4 3\n1 2 3 0\n4 1 2 0\n3 4 3 0\n"
SAT_CNF = "p cnf 3 3\n3 1 2 0\n-1 -2 1 0\n2 1 -3 0\n"


def test_reduce_verify_decode(tmp_path, capsys):
    cnf = _write(tmp_path, "nae.cnf", NAE_CNF)
    code, out = _run(capsys, ["reduce", "--mode", "nae-ussvr", "--cnf", cnf])
    assert code == 0 and "drawing" not in json.loads(out)
    code, out = _run(capsys, ["reduce", "--mode", "nae-ussvr", "--cnf", cnf, "--assign", "0101"])
    doc = json.loads(out)
    assert code == 0 and doc["report"]["valid"]
    drawing = _write(tmp_path, "d.json", json.dumps(doc["drawing"]))
    pair = _write(tmp_path, "p.json", json.dumps(doc["pair"]))
    index = _write(tmp_path, "i.json", json.dumps(doc["index"]))
    code, out = _run(capsys, ["verify", "--drawing", drawing, "--pair", pair])
    assert code == 0 and json.loads(out)["valid"]
    code, out = _run(capsys, ["decode", "--drawing", drawing, "--index", index])
    assert code == 0 and json.loads(out)["bits"] == "0101"
    # A drawing that does not realise the pair is refused.
    shapes = doc["drawing"]["shapes"]
    shapes[0], shapes[1] = shapes[1], shapes[0]
    bad = _write(tmp_path, "bad.json", json.dumps(doc["drawing"]))
    assert main(["verify", "--drawing", bad, "--pair", pair]) == 1
    assert main(["decode", "--drawing", bad, "--index", index]) == 1


def test_reduce_rsvr(tmp_path, capsys):
    cnf = _write(tmp_path, "sat.cnf", SAT_CNF)
    code, out = _run(capsys, ["reduce", "--mode", "3sat-rsvr", "--cnf", cnf, "--assign", "101"])
    assert code == 0 and json.loads(out)["report"]["valid"]


def test_input_errors(tmp_path, capsys):
    assert main(["reduce", "--mode", "nae-ussvr", "--cnf", _write(tmp_path, "x.cnf", SAT_CNF)]) == 2
    assert main(["reduce", "--mode", "nae-ussvr", "--cnf", _write(tmp_path, "y.cnf", NAE_CNF),
                 "--assign", "1111"]) == 2
    assert main(["reduce", "--mode", "nae-ussvr", "--cnf", _write(tmp_path, "z.cnf", NAE_CNF),
                 "--assign", "11"]) == 2
    assert main(["decide-lsvr", "--paths", _write(tmp_path, "p.txt", "1 2 3\n1 2\n")]) == 2
    assert main(["decide-lsvr", "--paths", _write(tmp_path, "q.txt", "1 2 3\n")]) == 2
    assert main(["decide-lsvr", "--paths", str(tmp_path / "missing.txt")]) == 2
    assert main(["verify", "--drawing", _write(tmp_path, "d.json", "{"), "--pair", "nope"]) == 2
    assert main(["verify", "--drawing", _write(tmp_path, "e.json", '{"shapes": [{"kind": "rect"}]}'),
                 "--pair", _write(tmp_path, "g.json", '{"n": 1, "ev": [], "eh": []}')]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    capsys.readouterr()


@pytest.mark.slow
def test_oracle_command(tmp_path, capsys):
    claw = _write(tmp_path, "claw.json", json.dumps({"n": 4, "ev": [[1, 2], [1, 3], [1, 4]],
                                                     "eh": [[2, 3], [3, 4]]}))
    code, out = _run(capsys, ["oracle", "--pair", claw, "--family", "usq"])
    assert code == 1 and json.loads(out)["status"] == "exhausted"
    code, out = _run(capsys, ["oracle", "--pair", claw, "--family", "usq", "--budget", "nodes=500"])
    assert code == 3 and json.loads(out)["status"] == "capped"
    free = _write(tmp_path, "free.json", json.dumps({"n": 4, "ev": [[1, 2], [1, 3], [1, 4]], "eh": []}))
    code, out = _run(capsys, ["oracle", "--pair", free, "--family", "usq", "--budget", "100000000"])
    assert code == 0 and json.loads(out)["drawing"]["family"] == "usq"
    assert main(["oracle", "--pair", free, "--family", "usq", "--budget", "speed=3"]) == 2


def test_lsvr_check_command(capsys):
    code, out = _run(capsys, ["lsvr-check", "--n-max", "3"])
    assert code == 0 and json.loads(out)["counts"]["3"]["agree"] == 6


def test_output_is_byte_identical(tmp_path, capsys):
    cnf = _write(tmp_path, "sat.cnf", SAT_CNF)
    outs = []
    for k in range(2):
        svg = tmp_path / f"o{k}.svg"
        _run(capsys, ["reduce", "--mode", "3sat-rsvr", "--cnf", cnf, "--assign", "101",
                      "--json", str(tmp_path / f"o{k}.json"), "--svg", str(svg)])
        outs.append(((tmp_path / f"o{k}.json").read_bytes(), svg.read_bytes()))
    assert outs[0] == outs[1]
