# tests/test_harness.py
# Sweeps, censuses, exports and the command-line surface

import json

import pytest

from errors import PreconditionError, UsageError
from grothendieck import groth
from involutions import Involution, binv, t_family
from ortho import almost_shifts
from permgroup import Permutation
from harness import (
    SWEEPS,
    Failure,
    Sweep,
    binv_plus_dot,
    binv_plus_json,
    equality_census,
    export_text,
    get_sweep,
    lnc_counts,
    main,
    run_census,
    run_sweep,
    values_table,
)
from harness.checks import check_almost, lensot_cases


class TestSweeps:
    def test_every_sweep_has_a_positive_default(self):
        assert len(SWEEPS) == 29
        assert all(s.default_n_max >= 1 for s in SWEEPS.values())

    def test_quasi_dominant_sweep(self):
        report = run_sweep("qd-thm", n_max=3, jobs=1)
        assert report.passed
        assert report.cases_checked == 3
        assert report.failures == []

    def test_arc_sweep_covers_all_involutions(self):
        report = run_sweep("arc-vex", n_max=4, jobs=1)
        assert report.passed
        assert report.cases_checked == 10

    @pytest.mark.parametrize("theorem_id", ["dom-thm", "ivex-thm", "lenart", "pieri", "prod-lem", "fkgsp"])
    def test_small_sweeps_pass(self, theorem_id):
        assert run_sweep(theorem_id, n_max=3, jobs=1).passed

    def test_defaults_reach_full_sweep_sizes(self):
        expected = {
            "qd-thm": 7, "ivex-thm": 7, "iG-thm": 5, "dom-thm": 6, "orth-rec": 6, "fkgsp": 6,
            "b+conj": 8, "supp-thm": 6, "shift-cor": 6, "supp-prop": 7, "arc-vex": 8,
            "lenart": 5, "lensot": 5, "1gr-lem": 5, "prod-lem": 6, "igrass-cor": 5,
        }
        assert {key: SWEEPS[key].default_n_max for key in expected} == expected

    def test_lensot_cases_reach_k4(self):
        assert {k for _, k, _ in lensot_cases(4)} == {1, 2, 3, 4}

    def test_almost_eq_shift_count(self):
        assert almost_shifts((4, 1), 4, 2) == 2
        assert almost_shifts((1,), 4, 2) == 1
        assert almost_shifts((), 1, 2) == 1

    def test_almost_eq_small(self):
        assert check_almost(((1,), 1)) is None
        assert check_almost(((2,), 2)) is None

    @pytest.mark.slow
    @pytest.mark.parametrize("mu", [(4, 1), (4, 2), (4, 3)])
    def test_almost_eq_with_full_first_row(self, mu):
        # lam_1 = 5 terms only appear after shifting
        assert check_almost((mu, 4)) is None

    @pytest.mark.slow
    @pytest.mark.parametrize("theorem_id, n_max", [
        ("1gr-lem", 5), ("prod-lem", 6), ("almost-eq", 4), ("lensot", 5),
    ])
    def test_sweeps_at_default_size(self, theorem_id, n_max):
        report = run_sweep(theorem_id, n_max=n_max, jobs=1)
        assert report.failures == []

    def test_unknown_sweep(self):
        with pytest.raises(UsageError):
            get_sweep("no-such-theorem")

    def test_bad_size(self):
        with pytest.raises(UsageError):
            run_sweep("qd-thm", n_max=0)

    def test_failures_are_collected(self, monkeypatch):
        def always_wrong(z):
            return Failure(z.render(), "right", "wrong")

        sweep = Sweep("qd-thm", "broken", SWEEPS["qd-thm"].cases, always_wrong, 3)
        monkeypatch.setitem(SWEEPS, "qd-thm", sweep)
        report = run_sweep("qd-thm", n_max=3, jobs=1)
        assert not report.passed
        assert len(report.failures) == 3
        assert "FAIL" in report.render()

    def test_errors_become_failures(self, monkeypatch):
        def raises(z):
            raise PreconditionError("not applicable")

        sweep = Sweep("qd-thm", "raising", SWEEPS["qd-thm"].cases, raises, 3)
        monkeypatch.setitem(SWEEPS, "qd-thm", sweep)
        report = run_sweep("qd-thm", n_max=3, jobs=1)
        assert len(report.failures) == 3
        assert report.failures[0].actual == "PreconditionError: not applicable"

    def test_observational_sweep_passes_with_findings(self, monkeypatch):
        def notice(z):
            return Failure(z.render(), "a", "b")

        sweep = Sweep("wij-conj", "notes", SWEEPS["qd-thm"].cases, notice, 3, observational=True)
        monkeypatch.setitem(SWEEPS, "wij-conj", sweep)
        report = run_sweep("wij-conj", n_max=3, jobs=1)
        assert report.passed
        assert len(report.observations) == 3
        assert "observations" in report.to_json()

    def test_json_without_time(self):
        payload = run_sweep("qd-thm", n_max=3, jobs=1).to_json(include_time=False)
        assert "wall_time" not in payload
        assert payload["theorem"] == "qd-thm"


class TestCensus:
    def test_values_table(self):
        table = values_table(4)
        assert table.columns == ["n", "values"]
        assert table.rows[-1] == [4, [1, 2, 3, 4, 6]]
        assert [row[0] for row in table.rows] == [1, 2, 3, 4]

    @pytest.mark.slow
    def test_values_table_six(self):
        assert values_table(6).rows[-1] == [6, [1, 2, 3, 4, 6, 8, 9, 10, 12, 18, 20]]

    def test_long_rows_need_opt_in(self):
        with pytest.raises(UsageError):
            values_table(7)
        with pytest.raises(UsageError):
            equality_census(7)

    def test_lnc_counts(self):
        table = lnc_counts(4)
        assert table.rows == [[1, 1, 1], [2, 2, 2], [3, 4, 4], [4, 9, 8]]

    @pytest.mark.slow
    def test_lnc_counts_to_seven(self):
        table = lnc_counts(7)
        assert [row[1] for row in table.rows] == [1, 2, 4, 9, 20, 47, 109]
        assert [row[2] for row in table.rows] == [1, 2, 4, 8, 17, 36, 77]

    def test_equality_census_totals(self):
        table = equality_census(4, jobs=1)
        rows = {row[0]: row for row in table.rows}
        assert rows["vexillary"][3] == 9
        for _, _, equal, total in table.rows:
            assert 0 <= equal <= total

    def test_unknown_census(self):
        with pytest.raises(UsageError):
            run_census("histogram", 3)


class TestExport:
    def test_dot_layout(self):
        z = t_family(4)
        text = binv_plus_dot(z)
        lines = text.splitlines()
        assert lines[0] == "digraph binv_plus {"
        assert lines[-1] == "}"
        assert sum(1 for line in lines if "->" in line) == 9
        assert sum(1 for line in lines if "[label=" in line) == 8
        assert sum(1 for line in lines if "color = blue" in line) == len(binv(z))

    def test_dot_is_deterministic(self):
        z = Involution.parse("(1,3)")
        assert binv_plus_dot(z) == binv_plus_dot(z)

    def test_json_graph(self):
        payload = binv_plus_json(t_family(4))
        assert len(payload["nodes"]) == 8
        assert len(payload["edges"]) == 9
        assert payload["connected"] is True
        assert all(node["gc"] >= 0 for node in payload["nodes"])

    def test_poly_needs_input(self):
        with pytest.raises(UsageError):
            export_text("poly_json")

    def test_unknown_export(self):
        with pytest.raises(UsageError):
            export_text("png", z=Involution.parse("(1,2)"))


class TestCli:
    def test_compute_gco(self, capsys):
        assert main(["compute", "gco", "--z", "(1,2)"]) == 0
        out = capsys.readouterr().out
        assert "2*G[21] + b^1*G[312]" in out
        assert "312: 1" in out

    def test_compute_json(self, capsys):
        assert main(["compute", "groth", "--w", "132", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["w"] == [1, 3, 2]
        assert payload["poly"] == groth(Permutation.parse("132")).to_json()

    def test_malformed_involution(self, capsys):
        assert main(["compute", "ortho", "--z", "(9,9)"]) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_missing_argument(self):
        assert main(["compute", "groth"]) == 2

    def test_precondition_exit_code(self):
        assert main(["compute", "ortho", "--z", "(1,2)(3,4)"]) == 1

    def test_dot_only_for_export(self):
        assert main(["compute", "gco", "--z", "(1,2)", "--format", "dot"]) == 2

    def test_unknown_command(self):
        assert main(["plot"]) == 2

    def test_verify_json(self, capsys):
        assert main(["verify", "qd-thm", "--n-max", "3", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["passed"] is True
        assert "wall_time" not in payload

    def test_census_needs_long_run(self):
        assert main(["census", "values_table", "--n", "7"]) == 2

    def test_census_text(self, capsys):
        assert main(["census", "lnc_counts", "--n", "3"]) == 0
        assert capsys.readouterr().out.splitlines()[0].split() == ["n", "locally_noncrossing", "fixing_one"]

    def test_export_poly(self, capsys):
        assert main(["export", "poly_json", "--w", "321"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == groth(Permutation.parse("321")).to_json()

    def test_out_and_metrics_files(self, tmp_path):
        out = tmp_path / "t14.dot"
        metrics = tmp_path / "metrics.prom"
        code = main([
            "export", "binv_plus_dot", "--z", "(1,4)",
            "--out", str(out), "--metrics-out", str(metrics),
        ])
        assert code == 0
        assert out.read_text().startswith("digraph binv_plus {")
        assert "groth_compute_requests_total" in metrics.read_text()

    def test_bad_jobs(self):
        assert main(["verify", "qd-thm", "--n-max", "3", "--jobs", "0"]) == 2
