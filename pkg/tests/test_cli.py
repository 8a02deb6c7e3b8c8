import json

import pytest

from gradedfrob.cli import (EXIT_INCONCLUSIVE, EXIT_NO, EXIT_PARSE, EXIT_USAGE,
                            EXIT_YES, run_command)
from gradedfrob.fileformat import (ParseError, parse_algebra_text, parse_certificate,
                                   render_algebra, render_certificate)

KZ2_TEXT = """\
# the group algebra of Z2
field Q
group cyclic 2
dim 2
deg 0 0
deg 1 1
unit 1 0
sc 0 0 0 1
sc 0 1 1 1
sc 1 0 1 1
sc 1 1 0 1
"""


def run(argv):
    code, report, lines, as_json = run_command(argv)
    return code, report, "\n".join(lines)


def gen_to_file(tmp_path, name, *args):
    code, report, text = run(["gen", name, *args])
    assert code == EXIT_YES
    path = tmp_path / f"{name}.alg"
    path.write_text(text + "\n")
    return str(path)


# ---------------------------------------------------------------------------
# File format

def test_parse_kz2_by_hand():
    a = parse_algebra_text(KZ2_TEXT)
    assert a.dim == 2
    assert a.group.order == 2
    assert a.deg == (0, 1)


def test_missing_unit_rejected():
    text = "\n".join(l for l in KZ2_TEXT.splitlines() if not l.startswith("unit"))
    with pytest.raises(ParseError, match="unit"):
        parse_algebra_text(text)


def test_sc_out_of_range_reports_line():
    text = KZ2_TEXT + "sc 0 0 5 1\n"
    with pytest.raises(ParseError, match="line 12"):
        parse_algebra_text(text)


def test_invalid_algebra_reports_violations():
    # drop one unit-row product so the declared unit no longer acts as identity
    text = "\n".join(l for l in KZ2_TEXT.splitlines() if l != "sc 0 1 1 1")
    with pytest.raises(ParseError, match="identity"):
        parse_algebra_text(text)


def test_deg_defaults_to_neutral():
    text = "\n".join(l for l in KZ2_TEXT.splitlines() if not l.startswith("deg"))
    a = parse_algebra_text(text)
    assert a.deg == (0, 0)


def test_group_table_and_product_specs():
    table_text = KZ2_TEXT.replace("group cyclic 2", "group table 2 0 1 1 0")
    assert parse_algebra_text(table_text).group.order == 2
    prod = "field Q\ngroup product cyclic 2 x cyclic 2\ndim 1\nunit 1\nsc 0 0 0 1\n"
    assert parse_algebra_text(prod).group.order == 4
    bad = KZ2_TEXT.replace("group cyclic 2", "group table 2 0 0 1 1")
    with pytest.raises(ParseError, match="Latin"):
        parse_algebra_text(bad)


def test_algebra_render_parse_round_trip():
    a = parse_algebra_text(KZ2_TEXT)
    again = parse_algebra_text(render_algebra(a))
    assert again == a


def test_certificate_round_trip_text():
    from gradedfrob.frobenius import is_sigma_graded_frobenius
    import random
    a = parse_algebra_text(KZ2_TEXT)
    cert = is_sigma_graded_frobenius(a, 0, rng=random.Random(0)).certificate
    text = render_certificate(cert)
    parsed = parse_certificate(text)
    assert parsed.kind == cert.kind
    assert parsed.sigma == cert.sigma
    assert parsed.payload_matrix.data == cert.payload_matrix.data


# ---------------------------------------------------------------------------
# Commands and exit codes

def test_gen_parse_rerender_round_trip(tmp_path):
    for name, args in [
        ("nakayama-nesbitt", ["--u", "1", "--v", "2"]),
        ("group-algebra", ["--group", "cyclic 3"]),
        ("trivial-extension", ["--base", "kx2"]),
        ("split-trivial-extension", []),
        ("matrix-fine", ["--field", "F5"]),
        ("matrix-good", ["--group", "cyclic 2", "--degrees", "0,1"]),
        ("skew-group", ["--base", "kxk", "--action", "swap"]),
        ("random", ["--seed", "3"]),
    ]:
        code, report, text = run(["gen", name, *args])
        assert code == EXIT_YES, (name, report)
        first = parse_algebra_text(text)
        second = parse_algebra_text(render_algebra(first))
        assert first == second, name


def test_check_exit_codes(tmp_path):
    path = gen_to_file(tmp_path, "nakayama-nesbitt", "--u", "1", "--v", "2")
    code, report, text = run(["check", path, "--sigma", "3"])
    assert code == EXIT_YES
    assert report["verdicts"][0]["outcome"] == "yes"
    assert report["verdicts"][0]["certificate"]["kind"] == "bilinear_form"
    code, report, _ = run(["check", path, "--sigma", "0"])
    assert code == EXIT_NO
    code, report, _ = run(["check", path, "--sigma", "9"])
    assert code == EXIT_USAGE


def test_check_method_flag(tmp_path):
    path = gen_to_file(tmp_path, "nakayama-nesbitt", "--u", "1", "--v", "2")
    for method in ("iso", "form", "component"):
        code, report, _ = run(["check", path, "--sigma", "3", "--method", method])
        assert code == EXIT_YES
        assert report["verdicts"][0]["method"] == method


def test_scan_exit_and_table(tmp_path):
    split = gen_to_file(tmp_path, "split-trivial-extension")
    code, report, text = run(["scan", split])
    assert code == EXIT_NO
    assert report["yes_set"] == []
    assert all(v["outcome"] == "no" for v in report["verdicts"])
    nn = gen_to_file(tmp_path, "nakayama-nesbitt", "--u", "1", "--v", "2")
    code, report, _ = run(["scan", nn])
    assert code == EXIT_YES
    assert report["yes_set"] == [3]
    assert report["coset_ok"] is True


def test_symmetric_modes(tmp_path):
    nn11 = gen_to_file(tmp_path, "nakayama-nesbitt", "--u", "1", "--v", "1")
    code, _, _ = run(["symmetric", nn11, "--ungraded"])
    assert code == EXIT_YES
    code, _, _ = run(["symmetric", nn11, "--graded"])
    assert code == EXIT_NO
    code, _, _ = run(["symmetric", nn11])  # graded by default
    assert code == EXIT_NO


def test_frobenius_command(tmp_path):
    split = gen_to_file(tmp_path, "split-trivial-extension")
    code, report, _ = run(["frobenius", split])
    assert code == EXIT_YES
    assert report["verdicts"][0]["outcome"] == "yes"


def test_faithful_command(tmp_path):
    te = gen_to_file(tmp_path, "trivial-extension", "--base", "kx2")
    code, report, _ = run(["faithful", te, "--sigma", "0", "--side", "left"])
    assert code == EXIT_NO
    assert report["verdicts"][0]["refutation"]["witness_degree"] == 1
    code, _, _ = run(["faithful", te, "--sigma", "1", "--side", "left"])
    assert code == EXIT_YES
    code, _, _ = run(["faithful", te, "--sigma", "1", "--side", "right"])
    assert code == EXIT_YES


def test_inertia_command(tmp_path):
    ga = gen_to_file(tmp_path, "group-algebra", "--group", "cyclic 3")
    code, report, _ = run(["inertia", ga])
    assert code == EXIT_YES
    assert report["inertia"] == [0, 1, 2]


def test_validate_command(tmp_path):
    ga = gen_to_file(tmp_path, "group-algebra", "--group", "cyclic 3")
    code, report, _ = run(["validate", ga])
    assert code == EXIT_YES
    bad = tmp_path / "bad.alg"
    # g*g = g violates the grading: the target must sit in degree 1+1 = 0
    bad.write_text(KZ2_TEXT.replace("sc 1 1 0 1", "sc 1 1 1 1"))
    code, report, _ = run(["validate", str(bad)])
    assert code == EXIT_PARSE
    code, report, _ = run(["validate", str(tmp_path / "missing.alg")])
    assert code == EXIT_PARSE


def test_verify_command_and_tampering(tmp_path):
    nn = gen_to_file(tmp_path, "nakayama-nesbitt", "--u", "1", "--v", "2")
    cert_path = tmp_path / "nn.cert"
    code, _, _ = run(["check", nn, "--sigma", "3", "--cert-out", str(cert_path)])
    assert code == EXIT_YES
    code, report, _ = run(["verify", nn, str(cert_path)])
    assert code == EXIT_YES
    # tamper one payload entry inside the allowed degree block: associativity breaks
    text = cert_path.read_text()
    tampered = text.replace("row 0 0 0 1", "row 0 0 0 2")
    assert tampered != text
    bad_path = tmp_path / "bad.cert"
    bad_path.write_text(tampered)
    code, report, _ = run(["verify", nn, str(bad_path)])
    assert code == EXIT_NO
    assert "associativity violated at triple" in report["reason"]


def test_json_reports_deterministic(tmp_path):
    nn = gen_to_file(tmp_path, "nakayama-nesbitt", "--u", "1", "--v", "2")
    runs = []
    for _ in range(2):
        code, report, _ = run(["scan", nn, "--seed", "5"])
        runs.append(json.dumps(report))
    assert runs[0] == runs[1]
    code, report_other_seed, _ = run(["scan", nn, "--seed", "6"])
    assert json.loads(runs[0])["seed"] == 5
    assert report_other_seed["seed"] == 6


def test_json_report_keys(tmp_path):
    nn = gen_to_file(tmp_path, "nakayama-nesbitt", "--u", "1", "--v", "2")
    code, report, _ = run(["check", nn, "--sigma", "3", "--json"])
    assert list(report.keys())[:5] == ["command", "algebra", "verdicts", "seed", "budget"]
    assert report["algebra"] == {"dim": 4, "group": "cyclic 4", "field": "Q"}
    entry = report["verdicts"][0]
    assert entry["sigma"] == 3 and entry["outcome"] == "yes"


def test_usage_errors(tmp_path):
    code, _, _ = run(["unknown-command"])
    assert code == EXIT_USAGE
    code, _, _ = run(["check", "--sigma", "1"])  # missing file
    assert code == EXIT_USAGE


def test_budget_trials_flag(tmp_path):
    nn = gen_to_file(tmp_path, "nakayama-nesbitt", "--u", "1", "--v", "2")
    code, report, _ = run(["check", nn, "--sigma", "3", "--budget-trials", "7"])
    assert code == EXIT_YES
    assert report["budget"] == {"trials": 7}


def test_verify_ungraded_certificates(tmp_path):
    te = gen_to_file(tmp_path, "trivial-extension", "--base", "kx2")
    code, report, lines = run(["symmetric", te, "--ungraded", "--json"])
    assert code == EXIT_YES
    assert report["verdicts"][0]["graded"] is False
    payload = report["verdicts"][0]["certificate"]
    cert_text = "kind trace_functional\nsigma 0\nfield Q\nrow " + \
        " ".join(payload["payload"][0]) + "\n"
    cert_path = tmp_path / "sym.cert"
    cert_path.write_text(cert_text)
    # against the graded algebra the ungraded functional is rejected...
    code, report, _ = run(["verify", te, str(cert_path)])
    assert code == EXIT_NO
    # ...and accepted once the grading is forgotten
    code, report, _ = run(["verify", te, str(cert_path), "--ungraded"])
    assert code == EXIT_YES


def test_group_table_gen_round_trip(tmp_path):
    from gradedfrob.constructions import symmetric_group_3
    from gradedfrob.groups import render_group
    spec = render_group(symmetric_group_3())
    code, report, text = run(["gen", "group-algebra", "--group", spec])
    assert code == EXIT_YES
    a = parse_algebra_text(text)
    assert a.dim == 6
    assert parse_algebra_text(render_algebra(a)) == a


def test_internal_inconsistency_maps_to_exit_70(tmp_path, monkeypatch):
    from gradedfrob import cli
    from gradedfrob.frobenius import InternalInconsistencyError

    def explode(*args, **kwargs):
        raise InternalInconsistencyError("criteria disagree at sigma=0: fake")

    monkeypatch.setattr(cli, "is_sigma_graded_frobenius", explode)
    nn = gen_to_file(tmp_path, "nakayama-nesbitt", "--u", "1", "--v", "2")
    code, report, text = run(["check", nn, "--sigma", "0"])
    assert code == 70
    assert "inconsistency" in text
