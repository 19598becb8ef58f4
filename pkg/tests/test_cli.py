import json

import pytest

from fkit import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


DIAG100 = json.dumps(
    {"c": ["1", "0", "0"], "x": [{"coords": ["0"]}, {"coords": ["0"]}, {"coords": ["0"]}]}
)

W1001 = json.dumps(
    {
        "a": "1",
        "b": {"c": ["0", "0", "0"], "x": [{"coords": ["0"]}] * 3},
        "c": {"c": ["0", "0", "0"], "x": [{"coords": ["0"]}] * 3},
        "d": "1",
    }
)


def test_compute_rank_diag100(capsys):
    code, out, _ = run(
        capsys, "compute", "rank", "--field", "Q", "--algebra", "unarion", "--in", DIAG100
    )
    assert code == 0
    assert json.loads(out)["rank"] == 1


def test_compute_quartic(capsys):
    code, out, _ = run(
        capsys, "compute", "quartic", "--field", "Q", "--algebra", "unarion", "--in", W1001
    )
    assert code == 0
    assert json.loads(out)["q"] == "1"


def test_compute_norm_roundtrips(capsys):
    code, out, _ = run(
        capsys, "compute", "sharp", "--field", "Fp:5", "--algebra", "unarion",
        "--in", DIAG100,
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["sharp"]["c"] == ["0", "0", "0"]


def test_malformed_json_exit2(capsys):
    code, _, err = run(
        capsys, "compute", "rank", "--field", "Q", "--algebra", "unarion", "--in", "{oops"
    )
    assert code == 2


def test_missing_field_exit2(capsys):
    code, _, _ = run(capsys, "compute", "rank", "--in", DIAG100)
    assert code == 2


def test_act_n_generator(capsys):
    word = json.dumps([{"gen": "n", "x": json.loads(DIAG100)}])
    base = json.dumps(
        {
            "a": "1",
            "b": {"c": ["0", "0", "0"], "x": [{"coords": ["0"]}] * 3},
            "c": {"c": ["0", "0", "0"], "x": [{"coords": ["0"]}] * 3},
            "d": "0",
        }
    )
    code, out, _ = run(
        capsys, "act", "--field", "Q", "--algebra", "unarion", "--word", word, "--in", base
    )
    assert code == 0
    rep = json.loads(out)
    # n(diag(1,0,0)) sends the basepoint to (1, x, x#, N(x)) = (1, diag(1,0,0), 0, 0)
    assert rep["result"]["b"]["c"] == ["1", "0", "0"]
    assert rep["result"]["d"] == "0"
    assert rep["similitude_factor"] == "1"


def test_act_involution_twice_is_minus_one(capsys):
    word = json.dumps([{"gen": "iota"}, {"gen": "iota"}])
    code, out, _ = run(
        capsys, "act", "--field", "Q", "--algebra", "unarion", "--word", word, "--in", W1001
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["result"]["a"] == "-1"
    assert rep["result"]["d"] == "-1"


def test_act_s_lambda_zero_exit3(capsys):
    word = json.dumps([{"gen": "s", "lambda": "0"}])
    code, _, _ = run(
        capsys, "act", "--field", "Q", "--algebra", "unarion", "--word", word, "--in", W1001
    )
    assert code == 3


def test_verify_dimensions_suite(capsys):
    code, out, _ = run(capsys, "verify", "dimensions")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_verify_unknown_suite_exit2(capsys):
    code, _, _ = run(capsys, "verify", "no-such-suite")
    assert code == 2


def test_verify_composition_for_one_algebra(capsys):
    code, out, _ = run(
        capsys, "verify", "composition-law", "--field", "Fp:5",
        "--algebra", "binarion-split", "--exhaustive",
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["passed"]


def test_census_jordan_exhaustive(capsys):
    code, out, _ = run(
        capsys, "census", "jordan", "--field", "Fp:5", "--algebra", "binarion-split"
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["counts"]["0"] == 1
    assert rep["total"] == 5**9


def test_census_overflow_exit3(capsys):
    code, _, err = run(
        capsys, "census", "freudenthal", "--field", "Fp:5", "--algebra", "octonion-split"
    )
    assert code == 3


def test_census_sampled_prints_seed(capsys):
    code, out, _ = run(
        capsys, "census", "freudenthal", "sampled", "--field", "Fp:5",
        "--algebra", "unarion", "--trials", "500", "--seed", "11",
    )
    assert code == 0
    assert "seed: 11" in out
    payload = json.loads(out.split("\n", 1)[1])
    assert payload["seed"] == 11
    assert payload["total"] == 500


def test_census_fiber(capsys):
    xi = json.dumps(
        {
            "a": "1",
            "b": {"c": ["0", "0", "0"], "x": [{"coords": ["0"]}] * 3},
            "c": {"c": ["1", "1", "-1"], "x": [{"coords": ["0"]}] * 3},
            "d": "-2",
        }
    )
    code, out, _ = run(
        capsys, "census", "fiber", "--field", "Fp:5",
        "--algebra", "quaternion:1,1", "--xi", xi,
    )
    assert code == 0
    assert json.loads(out)["count"] == 120


def test_fiber_rank3(capsys):
    xi = json.dumps(
        {
            "a": "1",
            "b": {"c": ["0", "0", "0"], "x": [{"coords": ["0"]}] * 3},
            "c": {"c": ["1", "1", "-1"], "x": [{"coords": ["0"]}] * 3},
            "d": "-2",
        }
    )
    code, out, _ = run(
        capsys, "fiber", "--field", "Fp:5", "--algebra", "quaternion:1,1", "--xi", xi
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["status"] == "nonempty"
    assert rep["cardinality"] == 120


def test_algebra_info(capsys):
    code, out, _ = run(
        capsys, "algebra-info", "--field", "Q", "--algebra", "octonion:1,1,1"
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["dim"] == 8
    assert rep["dim_w"] == 56


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "compute", "rank", "--field", "Q", "--algebra", "unarion",
        "--in", DIAG100, "--out", str(target),
    )
    assert code == 0
    assert json.loads(target.read_text())["rank"] == 1
