import json

import pytest

from symdet.cli import main
from symdet.cyclecount import Graph
from symdet.sdet import AlgMatrix


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None), out


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return p


def test_count_ham_k4(tmp_path, capsys):
    g = write(tmp_path, "k4.json", Graph.complete(4).to_json())
    code, data, _ = run(capsys, "count-ham", g)
    assert code == 0 and data == {"hamiltonian_cycles": 3}


def test_count_cycles(tmp_path, capsys):
    g = write(tmp_path, "k5.json", Graph.complete(5).to_json())
    code, data, _ = run(capsys, "count-cycles", g, "--k", 4)
    assert code == 0 and data == {"k": 4, "cycles": 15}
    code, _, _ = run(capsys, "count-cycles", g, "--k", 2)
    assert code == 1
    code, data, _ = run(capsys, "count-cycles", g, "--k", 2, "--diagnostics")
    assert data["diagnostic_value"] == "5"


def test_sdet_methods_byte_identical(tmp_path, capsys):
    code, m, _ = run(capsys, "random-matrix", "--algebra", "cycle:3", "--n", 3, "--seed", 4)
    path = write(tmp_path, "m.json", m)
    outputs = []
    for extra in (["--method", "naive"], ["--method", "fast"], ["--method", "rows"],
                  ["--method", "fast", "--threads", 2]):
        code, _, raw = run(capsys, "sdet", path, *extra)
        assert code == 0
        outputs.append(raw)
    assert len(set(outputs)) == 1


def test_pme_check_random_cycle3(tmp_path, capsys):
    _, m, _ = run(capsys, "random-matrix", "--algebra", "cycle:3", "--n", 3)
    code, data, _ = run(capsys, "pme-check", write(tmp_path, "m.json", m))
    assert code == 0 and data["holds"] is True
    assert data["sdet_m_plus_i"] == data["principal_minor_sum"]


def test_matrix_output_round_trips(tmp_path, capsys):
    _, m, _ = run(capsys, "random-matrix", "--algebra", "mat:2", "--n", 3)
    M = AlgMatrix.from_json(m)
    assert M.to_json("mat:2") == m


def test_hc_extract(tmp_path, capsys):
    g = write(tmp_path, "d.json", Graph.complete(4, directed=True).to_json())
    code, data, _ = run(capsys, "hc-extract", g)
    assert code == 0 and len(data["hc"]) == 6


def test_family_and_coeff(tmp_path, capsys):
    code, data, _ = run(capsys, "family", "--m", 2, "--n", 2)
    assert code == 0 and len(data["T"]) == 2 and len(data["T"][0]) == 2
    mono = write(tmp_path, "mono.json", {"factors": [[1, 1, 1, 2], [2, 2, 2, 1]], "k": 1, "l": 1})
    assert run(capsys, "coeff", mono)[1] == {"coefficient": "1/2"}
    mono3 = write(tmp_path, "m3.json",
                  {"factors": [[1, 1, 1, 1], [2, 2, 1, 2], [3, 3, 2, 1]], "k": 1, "l": 1})
    assert run(capsys, "coeff", mono3)[1] == {"coefficient": "1/2"}
    assert run(capsys, "coeff", mono3, "--exact")[1] == {"coefficient": "1/3"}


def test_gadget_commands(tmp_path, capsys):
    code, ros, _ = run(capsys, "gadget", "rosette", "--i", 3)
    assert code == 0 and ros["n"] == 10
    f = write(tmp_path, "f.json", {"op": "add", "args": [{"var": "x"}, {"var": "y"}]})
    code, G, _ = run(capsys, "gadget", "pipeline", f, "--sum", "y")
    code, hc, _ = run(capsys, "gadget", "hc-poly", write(tmp_path, "g.json", G))
    assert hc == {"hc": [["1", []], ["2", ["x"]]]}
    host = {"n": 4, "directed": True, "edges": [[1, 2], [2, 3], [3, 4], [4, 1]],
            "weights": {"1,2": [["1", ["a"]]], "2,3": [["1", ["b"]]], "3,4": [["1", ["c"]]]},
            "start": 1, "sink": 4}
    code, glued, _ = run(capsys, "gadget", "glue", write(tmp_path, "h.json", host),
                         "--e1", "1,2", "--e2", "3,4")
    assert code == 0 and glued["n"] == 12
    _, hc, _ = run(capsys, "gadget", "hc-poly", write(tmp_path, "glued.json", glued))
    assert hc == {"hc": [["1", ["b"]]]}


def test_check_algebra(tmp_path, capsys):
    code, data, _ = run(capsys, "check-algebra", "cycle:2")
    assert code == 0 and data["passed"]
    bad = {"dim": 2, "unit": {"1": "1"},
           "mul": [["1", "1", [["1", "1"]]], ["1", "2", [["2", "1"]]], ["2", "1", [["1", "1"]]],
                   ["2", "2", [["2", "1"]]]]}
    code, data, _ = run(capsys, "check-algebra", write(tmp_path, "bad.json", bad))
    assert code == 0 and not data["passed"]


def test_exit_codes(tmp_path, capsys):
    assert run(capsys, "count-ham", tmp_path / "missing.json")[0] == 1
    assert run(capsys, "count-ham", write(tmp_path, "bad.json", {"n": 3}))[0] == 1
    big = write(tmp_path, "k9.json", Graph.complete(9).to_json())
    assert run(capsys, "count-ham", big)[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["count-ham", "x.json", "--bogus"])
    assert exc.value.code == 1


def test_selftest_subset(capsys):
    code, data, _ = run(capsys, "selftest", "--only", "6,9")
    assert code == 0 and data["passed"]
    assert [c["criterion"] for c in data["criteria"]] == [6, 9]
