import json
from fractions import Fraction

import pytest

from dynkinstab.cli import run
from dynkinstab.charges import GQ, charge_from_json
from dynkinstab.cover import state_from_json


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(data if isinstance(data, str) else json.dumps(data))
    return str(p)


def test_roots(capsys):
    code, out, _ = call(capsys, "roots", "--diagram", "A2")
    assert code == 0 and len(json.loads(out)) == 6


def test_coxeter_check(capsys):
    code, out, _ = call(capsys, "coxeter-check", "--diagram", "A2")
    data = json.loads(out)
    assert code == 0 and data["pure_shift"] is True and data["ledger"] == -2


def test_regular_witness(capsys, tmp_path):
    f = write(tmp_path, "z.json", [{"re": "1", "im": "-1"}, {"re": "-1", "im": "1"}])
    code, out, _ = call(capsys, "regular", "--diagram", "A1~", "--charge", f)
    assert code == 0 and json.loads(out) == {"regular": False, "witness": [1, 1]}


@pytest.mark.parametrize("payload", [
    [{"re": "0.5", "im": "0"}],
    '[{"re": 0.5, "im": "0"}]',
    [{"re": "0", "im": "1"}, {"re": "0", "im": "1"}],
    "not json",
])
def test_bad_charge_files_exit_1(capsys, tmp_path, payload):
    f = write(tmp_path, "z.json", payload)
    code, _, err = call(capsys, "regular", "--diagram", "A1", "--charge", f)
    assert code == 1 and err.startswith("error:")


def test_missing_file_and_bad_diagram(capsys):
    assert call(capsys, "regular", "--diagram", "A1", "--charge", "/nonexistent.json")[0] == 1
    assert call(capsys, "roots", "--diagram", "Q7")[0] == 1
    assert call(capsys, "roots", "--diagram", "A1~")[0] == 1
    assert call(capsys, "frobnicate")[0] == 1


def test_lift_and_state_round_trip(capsys, tmp_path):
    path = [[{"re": "0", "im": "1"}, {"re": "0", "im": "1"}],
            [{"re": "0", "im": "1"}, {"re": "-1", "im": "-1/2"}]]
    f = write(tmp_path, "p.json", path)
    code, out, _ = call(capsys, "lift", "--diagram", "A2", "--path", f, "--check")
    data = json.loads(out)
    assert code == 0
    assert data["events"] == [{"segment": 0, "time": "2/3", "slot": 2, "direction": "ascending"}]
    st = state_from_json(data["state"])
    assert st.classes == ((1, 1), (0, -1)) and st.ledgers == (0, -1)
    assert charge_from_json(data["state"]["charge"]) == (GQ(0, 1), GQ(-1, Fraction(-1, 2)))
    # continue lifting from the dumped state: back to the start
    sfile = write(tmp_path, "s.json", data["state"])
    back = write(tmp_path, "b.json", path[::-1])
    code, out, _ = call(capsys, "lift", "--diagram", "A2", "--path", back, "--state", sfile)
    st2 = state_from_json(json.loads(out)["state"])
    assert code == 0 and st2.classes == ((1, 0), (0, 1)) and st2.ledgers == (0, 0)


def test_lift_non_generic_exit_2(capsys, tmp_path):
    path = [[{"re": "0", "im": "1"}, {"re": "0", "im": "1"}],
            [{"re": "0", "im": "-1"}, {"re": "0", "im": "1"}]]
    f = write(tmp_path, "p.json", path)
    assert call(capsys, "lift", "--diagram", "A2", "--path", f)[0] == 2


def test_monodromy_words(capsys):
    code, out, _ = call(capsys, "monodromy", "--diagram", "A2~", "--word=-0,1")
    data = json.loads(out)
    assert code == 0 and data["word"] == ["-0", 1]
    code, out, _ = call(capsys, "monodromy", "--diagram", "A1", "--word", "1,1")
    assert json.loads(out)["pure_shift"] and json.loads(out)["shift"] == -2


def test_rotate(capsys):
    code, out, _ = call(capsys, "rotate", "--diagram", "A2")
    data = json.loads(out)
    assert code == 0 and data["classes_restored"] and data["ledger_delta"] == [2, 2]
    assert call(capsys, "rotate", "--diagram", "A1~")[0] == 2


def test_normalize(capsys, tmp_path):
    f = write(tmp_path, "z.json", [{"re": "0", "im": "2"}, {"re": "-1", "im": "1"}])
    code, out, _ = call(capsys, "normalize", "--diagram", "A1~", "--charge", f)
    data = json.loads(out)
    assert code == 0 and set(data) == {"mu", "word", "normalized_charge", "state"}


def test_exchange_formats(capsys):
    code, out, _ = call(capsys, "exchange", "--diagram", "A1", "--depth", "3", "--format", "dot")
    assert code == 0 and out.startswith('digraph "A1"')
    code, out, _ = call(capsys, "exchange", "--diagram", "A1", "--depth", "3")
    assert len(json.loads(out)["nodes"]) == 2


def test_dot_unsupported(capsys):
    assert call(capsys, "roots", "--diagram", "A2", "--format", "dot")[0] == 1


def test_constellation(capsys):
    code, out, _ = call(capsys, "constellation", "--diagram", "A1~", "--theta", "1,-1")
    data = json.loads(out)
    assert code == 0 and data["semistable"] and data["rep"]["x"] == ["1", "0"]
    assert call(capsys, "constellation", "--diagram", "D4~", "--theta", "1,-1,0,0,0")[0] == 1
    assert call(capsys, "constellation", "--diagram", "A1~", "--theta", "1,1")[0] == 1


def test_verify_relations(capsys):
    code, out, _ = call(capsys, "verify-relations", "--max-rank", "8")
    data = json.loads(out)
    assert code == 0 and all(r["passed"] for r in data) and len(data) == 32


def test_coxeter_check_rejects_affine(capsys):
    assert call(capsys, "coxeter-check", "--diagram", "A2~")[0] == 1


def test_text_and_diagram(capsys):
    code, out, _ = call(capsys, "diagram", "--diagram", "D4~", "--format", "text")
    assert code == 0 and "marks (1, 1, 2, 1, 1)" in out
    code, out, _ = call(capsys, "diagram", "--diagram", "A1~", "--format", "dot")
    assert out.count("v0 -- v1") == 2
