import json

from heckesat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hecke_poly_gl2(capsys):
    code, out, _ = run(capsys, "--format", "json",
                       "hecke-poly", "--group", "GL2", "--mu", "1,0")
    assert code == 0
    report = json.loads(out)
    assert report["degree"] == 2 and report["d"] == 1
    assert report["vanishing_at_mu"] is True


def test_hecke_poly_aliases(capsys):
    code, out, _ = run(capsys, "--format", "json",
                       "hecke-poly", "--group", "GSO8", "--mu", "half-spin")
    assert code == 0
    report = json.loads(out)
    assert (report["degree"], report["d"]) == (8, 6)
    code, out, _ = run(capsys, "--format", "json",
                       "hecke-poly", "--group", "GSp4", "--mu", "siegel")
    assert (json.loads(out)["degree"], json.loads(out)["d"]) == (4, 3)


def test_hecke_poly_usage_errors(capsys):
    code, _, err = run(capsys, "hecke-poly", "--group", "GL2", "--mu", "2,0")
    assert code == 2 and "minuscule" in err
    code, _, err = run(capsys, "hecke-poly", "--group", "E8", "--mu", "1,0")
    assert code == 2


def test_convolve(capsys):
    code, out, _ = run(capsys, "--format", "json", "convolve",
                       "--n", "2", "--p", "2", "--types", "1,0", "1,0")
    assert code == 0
    report = json.loads(out)
    assert report["product"] == {"2,0": [1, 1], "1,1": [3, 1]}


def test_convolve_unit(capsys):
    code, out, _ = run(capsys, "--format", "json", "convolve",
                       "--n", "2", "--p", "3", "--types", "2,1", "0,0")
    assert code == 0
    assert json.loads(out)["product"] == {"2,1": [1, 1]}


def test_convolve_bound_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("HECKE_SAT_MAX_ENUM", "10")
    code, _, err = run(capsys, "convolve", "--n", "2", "--p", "2",
                       "--types", "9,0", "9,0")
    assert code == 3 and "bound" in err


def test_verify_suites_pass(capsys):
    for argv in (
        ["verify", "prop33", "--all-groups"],
        ["verify", "satake-hom", "--n", "2", "--p", "2",
         "--pairs", "5", "--seed", "7"],
        ["verify", "convolution", "--seed", "1"],
        ["verify", "corresp", "--seed", "2"],
        ["verify", "frobdemo", "--p", "5", "--exhaustive"],
    ):
        code, out, _ = run(capsys, "--format", "json", *argv)
        assert code == 0, argv
        report = json.loads(out)
        assert report["passed"] is True
        assert all(report["checks"].values())


def test_verify_seed_determinism(capsys):
    _, out1, _ = run(capsys, "--format", "json", "verify", "satake-hom",
                     "--pairs", "4", "--seed", "9")
    _, out2, _ = run(capsys, "--format", "json", "verify", "satake-hom",
                     "--pairs", "4", "--seed", "9")
    assert out1 == out2


def test_json_output_sorted(capsys):
    _, out, _ = run(capsys, "--format", "json", "hecke-poly",
                    "--group", "GL2", "--mu", "1,0")
    assert out == json.dumps(json.loads(out), sort_keys=True) + "\n"
