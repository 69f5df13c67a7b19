import json
import subprocess
import sys

import pytest

from lieloop import cli

PAPER_GAMMA_JSON = json.dumps(
    [
        {"weight": [0, 0, 0, 2, 0, 0], "grade": 0},
        {"weight": [0, 1, 0, 1, 0, 0], "grade": 1},
        {"weight": [0, 2, 0, 0, 0, 0], "grade": 2},
        {"weight": [0, 0, 0, 1, 0, 0], "grade": 2},
        {"weight": [1, 0, 1, 0, 0, 0], "grade": 2},
        {"weight": [0, 1, 0, 0, 0, 0], "grade": 3},
        {"weight": [0, 0, 0, 0, 0, 0], "grade": 4},
    ]
)


def run_cli(capsys, *argv):
    status = cli.main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_dim(capsys):
    status, out, _ = run_cli(capsys, "dim", "A2", "[1,1]")
    assert status == 0
    assert json.loads(out) == 8


def test_roots_payload(capsys):
    status, out, _ = run_cli(capsys, "roots", "G2")
    assert status == 0
    data = json.loads(out)
    assert data["highest_root"] == [2, 3]
    assert len(data["positive_roots"]) == 6
    assert data["fundamental_group_order"] == 1
    assert data["form_matrix"][1][1] == "2/3"


def test_char_roundtrip_schema(capsys):
    status, out, _ = run_cli(capsys, "char", "A2", "[1,0]")
    assert status == 0
    data = json.loads(out)
    total = 0
    for key, mult in data.items():
        coords = json.loads(key)
        assert isinstance(coords, list) and len(coords) == 2
        assert isinstance(mult, int)
        total += mult
    assert total == 3


def test_tensor_roundtrip_schema(capsys):
    status, out, _ = run_cli(capsys, "tensor", "A1", "[1]", "[1]")
    assert status == 0
    assert json.loads(out) == {"[2]": 1, "[0]": 1}


def test_phi_psi_g2(capsys):
    status, out, _ = run_cli(capsys, "phi-psi", "G2", "[1,-1]")
    assert status == 0
    assert json.loads(out) == [[1, 0], [2, 3]]


def test_quiver_dot(capsys):
    status, out, _ = run_cli(
        capsys, "--format", "dot", "quiver", "D6", "--gamma", PAPER_GAMMA_JSON
    )
    assert status == 0
    assert out.count("[label=1]") == 8  # one multiplicity label per arrow
    assert out.count("->") == 8
    assert out.count("[label=\"(") == 7  # one label per vertex


def test_quiver_json_roundtrip(capsys):
    status, out, _ = run_cli(capsys, "quiver", "D6", "--gamma", PAPER_GAMMA_JSON)
    assert status == 0
    data = json.loads(out)
    assert len(data["vertices"]) == 7
    assert len(data["arrows"]) == 8
    assert all(a["multiplicity"] == 1 for a in data["arrows"])


def test_quiver_gamma_from_file(tmp_path, capsys):
    path = tmp_path / "gamma.json"
    path.write_text(PAPER_GAMMA_JSON, encoding="utf-8")
    status, out, _ = run_cli(capsys, "quiver", "D6", "--gamma", f"@{path}")
    assert status == 0
    assert len(json.loads(out)["arrows"]) == 8


def test_spectral_and_blocks(capsys):
    module = '[{"point":"1","weight":[1]}]'
    status, out, _ = run_cli(capsys, "spectral", "A1", module)
    assert status == 0
    assert json.loads(out) == {"1": [1]}
    status, out, _ = run_cli(
        capsys, "blocks", "A1", '[{"point":"1","weight":[2]}]',
        '[{"point":"5","weight":[4]}]'
    )
    assert status == 0
    assert json.loads(out) is True


def test_ext1_loop(capsys):
    status, out, _ = run_cli(
        capsys, "ext1-loop", "A1", "[]", '[{"point":"1","weight":[2]}]'
    )
    assert status == 0
    assert json.loads(out) == 1


def test_split_order(capsys):
    parts = '[{"point":"1","weight":[2]},{"point":"-1","weight":[2]}]'
    status, out, _ = run_cli(capsys, "split-order", "A1", parts)
    assert status == 0
    assert json.loads(out) == 2


def test_uplus(capsys):
    status, out, _ = run_cli(capsys, "uplus", "A1", "2")
    assert status == 0
    assert json.loads(out) == {"[4]": 1, "[2]": 1, "[0]": 1}


def test_lower_set(capsys):
    status, out, _ = run_cli(
        capsys, "lower-set", "A1", "[1]", '{"weight":[0],"grade":1}'
    )
    assert status == 0
    assert json.loads(out) == [
        {"weight": [2], "grade": 0},
        {"weight": [0], "grade": 1},
    ]


def test_affine_char_depth_flag(capsys):
    lam = '{"finite":[0],"level":1,"delta":0}'
    status, out, _ = run_cli(capsys, "--depth", "4", "affine-char", "A1", lam)
    assert status == 0
    data = json.loads(out)
    assert data[0] == {
        "weight": {"finite": [0], "level": 1, "delta": 0},
        "coefficient": 1,
    }
    deltas = [entry["weight"]["delta"] for entry in data]
    assert -2 in deltas


def test_garland_and_zform(capsys):
    status, out, _ = run_cli(capsys, "garland", "--order", "2")
    assert status == 0
    data = json.loads(out)
    assert {"monomial": [2], "coefficient": "-1/2"} in data
    status, out, _ = run_cli(capsys, "zform", "--r", "2", "--s", "1", "--N", "4")
    assert status == 0
    assert json.loads(out) is True


def test_unknown_type_is_domain_error(capsys):
    status, out, err = run_cli(capsys, "dim", "Q7", "[1]")
    assert status == 1
    assert json.loads(err)["error"] == "invalid-cartan-type"


def test_malformed_json_weight(capsys):
    status, _, err = run_cli(capsys, "dim", "A2", "[1,")
    assert status == 1
    assert json.loads(err)["error"] == "invalid-input"


def test_wrong_rank_weight(capsys):
    status, _, err = run_cli(capsys, "dim", "A2", "[1]")
    assert status == 1
    assert json.loads(err)["error"] == "invalid-input"


def test_cap_violation_error_code(capsys):
    status, _, err = run_cli(capsys, "--max-dim", "5", "char", "A2", "[3,3]")
    assert status == 1
    assert json.loads(err)["error"] == "cap-exceeded"


def test_non_dominant_error(capsys):
    status, _, err = run_cli(capsys, "dim", "A2", "[-1,0]")
    assert status == 1
    assert json.loads(err)["error"] == "not-dominant"


def test_dot_only_for_quiver(capsys):
    status, _, err = run_cli(capsys, "--format", "dot", "dim", "A2", "[1,1]")
    assert status == 1
    assert json.loads(err)["error"] == "invalid-input"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        cli.main(["definitely-not-a-verb"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        cli.main(["dim"])  # missing arguments
    assert info.value.code == 2


def test_env_override_and_flag_precedence(capsys, monkeypatch):
    monkeypatch.setenv("LIELOOP_MAX_DIM", "5")
    status, _, err = run_cli(capsys, "char", "A2", "[3,3]")
    assert status == 1
    assert json.loads(err)["error"] == "cap-exceeded"
    # explicit flag wins over the environment
    status, out, _ = run_cli(capsys, "--max-dim", "1000000", "char", "A2", "[3,3]")
    assert status == 0
    assert sum(json.loads(out).values()) == 64


GOLDEN_COMMANDS = [
    ["dim", "A2", "[1,1]"],
    ["char", "B2", "[1,0]"],
    ["tensor", "A2", "[1,0]", "[0,1]"],
    ["phi-psi", "C3", "[0,1,0]"],
    ["--depth", "4", "affine-char", "A1", '{"finite":[0],"level":1,"delta":0}'],
    ["garland", "--order", "4"],
]


@pytest.mark.parametrize("argv", GOLDEN_COMMANDS, ids=lambda a: a[0].lstrip("-"))
def test_byte_identical_across_processes(argv):
    runs = [
        subprocess.run(
            [sys.executable, "-m", "lieloop.cli", *argv],
            capture_output=True, check=True,
        ).stdout
        for _ in range(2)
    ]
    assert runs[0] == runs[1]
    assert runs[0].strip()
