import json

import numpy as np
import pytest

from projlogic import cli, operators as ops
from projlogic.families import spin_family
from projlogic.io import IngestionError, load_family, load_matrix, save_family, save_matrix
from projlogic.report import emit_report, load_report
from projlogic.suites import CheckRecord, SuiteConfig, run_suite


@pytest.fixture
def spin_file(tmp_path):
    path = tmp_path / "spin2.json"
    save_family([(e.label, "projector", e.generator) for e in spin_family()], path, 2)
    return path


def test_matrix_roundtrip(tmp_path, rng):
    a = ops.random_hermitian(3, 1, rng)
    save_matrix(a, tmp_path / "a.json")
    assert np.array_equal(load_matrix(tmp_path / "a.json"), a)


def test_bad_files(tmp_path):
    (tmp_path / "bad.json").write_text('{"dim": 2, "re": [[0, 1], [0, 0]], "im": [[0, 0], [0, 0]]}')
    with pytest.raises(Exception):
        load_matrix(tmp_path / "bad.json")
    (tmp_path / "fam.json").write_text('{"elements": [{"role": "projector", "file": "bad.json"}]}')
    with pytest.raises(Exception):
        load_family(tmp_path / "fam.json")
    with pytest.raises(IngestionError):
        load_matrix(tmp_path / "missing.json")


def test_family_by_reference(tmp_path):
    save_matrix(0.5 * np.eye(2), tmp_path / "half.json")
    (tmp_path / "fam.json").write_text(json.dumps(
        {"dim": 2, "elements": [{"label": "h", "role": "effect", "file": "half.json"}]}))
    (e,) = load_family(tmp_path / "fam.json")
    assert e.role == "effect" and np.allclose(e.matrix, 0.5 * np.eye(2))


def test_emit_report_exit_codes(tmp_path):
    assert emit_report([], tmp_path / "empty.json") == 0
    header, recs = load_report(tmp_path / "empty.json")
    assert recs == [] and header["artifact"] == "projlogic"
    bad = CheckRecord("x", "plumbing", 1, 1.0, 0.0, False, "")
    assert emit_report([bad], tmp_path / "bad.json") == 1
    assert emit_report([], tmp_path / "no_such_dir" / "r.json") == 2


def test_report_roundtrip(tmp_path):
    recs = run_suite(SuiteConfig(dim=2, seed=3, suites=["tnorm", "dynamics"]))
    emit_report(recs, tmp_path / "r.json")
    assert load_report(tmp_path / "r.json")[1] == recs


def test_star_suite_contains_identity_check(tmp_path):
    out = tmp_path / "r.json"
    assert cli.main(["verify", "star", "--dim", "2", "--report", str(out)]) == 0
    names = [r.name for r in load_report(out)[1]]
    assert "star_closed_vs_geometric" in names


def test_logic_with_family_reports_witness(tmp_path, spin_file):
    out = tmp_path / "r.json"
    assert cli.main(["verify", "logic", "--dim", "2", "--family", str(spin_file), "--report", str(out)]) == 0
    rec = next(r for r in load_report(out)[1] if r.name == "family_distributive_iff_all_compatible")
    assert "('e1', '+', '~+')" in rec.details


def test_operators_option(tmp_path, rng):
    save_matrix(ops.random_hermitian(2, 1, rng), tmp_path / "a.json")
    save_matrix(ops.random_hermitian(2, 1, rng), tmp_path / "b.json")
    out = tmp_path / "r.json"
    code = cli.main(["verify", "star", "--dim", "2", "--operators", str(tmp_path / "a.json"),
                     str(tmp_path / "b.json"), "--report", str(out)])
    assert code == 0
    assert any(r.name.startswith("operators0") for r in load_report(out)[1])


def test_usage_errors(tmp_path):
    assert cli.main(["verify", "nope"]) == 2
    assert cli.main(["verify", "tnorm", "--dim", "9"]) == 2
    assert cli.main(["verify", "tnorm", "--samples", "10"]) == 2
    assert cli.main(["verify", "tnorm", "--tol", "bogus=1"]) == 2
    assert cli.main(["verify", "logic", "--family", str(tmp_path / "missing.json")]) == 2


def test_tolerance_override_changes_verdict(tmp_path):
    out = tmp_path / "r.json"
    assert cli.main(["verify", "dynamics", "--tol", "transport=1e-20", "--report", str(out)]) == 1
    rec = next(r for r in load_report(out)[1] if r.name == "liouville_transport")
    assert rec.tolerance == 1e-20 and not rec.passed


def test_paper_refs_are_tags():
    from projlogic.suites import REFS
    recs = run_suite(SuiteConfig(dim=2, seed=1, n_samples=2000))
    assert all(r.paper_ref in REFS for r in recs)
