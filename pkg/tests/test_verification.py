import pytest
from pydantic import ValidationError

from app.partitions import Partition, enumerate_partitions, partition_count, size
from app.schemas.report import Counterexample, VerificationReport
from app.services import verification_service
from app.services.verification_service import (
    CHECKS,
    DEFAULT_E_SET,
    DEFAULT_MAX_N,
    IDENTITY_CHECKS,
    LEMMA_CHECKS,
    Check,
    check_census,
    check_main_theorem,
    evaluate_chunk,
    reports_to_json,
    run_check,
    run_suite,
)


def _failures(reports):
    return [(r.check_id, r.e, r.counterexamples[:1]) for r in reports if not r.passed]


class TestMainTheorem:
    def test_holds_for_small_sizes(self):
        reports = check_main_theorem(7, [2, 3, 4])
        assert _failures(reports) == []
        assert [r.e for r in reports] == [2, 3, 4]

    def test_every_partition_is_checked(self):
        report = run_check("main", 6, 3)
        assert report.instances_checked == sum(partition_count(n) for n in range(7))
        assert report.elapsed == report.instances_checked
        assert report.n_range == (0, 6)

    def test_census_matches(self):
        reports = check_census(8, [2, 3, 5])
        assert _failures(reports) == []
        for report in reports:
            assert [row.n for row in report.census] == list(range(9))
            assert all(row.l_partitions == row.mg_equals_gt for row in report.census)

    def test_census_size_zero(self):
        (report,) = check_census(0, [3])
        assert report.census[0].l_partitions == 1
        assert report.instances_checked == 1


class TestSuites:
    def test_boxthm(self):
        assert _failures(run_suite("boxthm", 7, [2, 3, 4])) == []

    def test_lemmas(self):
        reports = run_suite("lemmas", 6, [2, 3, 4])
        assert _failures(reports) == []
        assert {r.check_id for r in reports} == set(LEMMA_CHECKS)

    def test_identities(self):
        reports = run_suite("identities", 6, [2, 3, 5])
        assert _failures(reports) == []
        assert {r.check_id for r in reports} == set(IDENTITY_CHECKS)

    def test_e_restricted_checks_are_skipped(self):
        ids = {r.check_id for r in run_suite("lemmas", 3, [2])}
        assert "ssss" not in ids
        assert "rggr" in ids
        ids = {r.check_id for r in run_suite("identities", 3, [3])}
        assert "mullineux-e2-identity" not in ids

    def test_all_contains_every_family(self):
        ids = {r.check_id for r in run_suite("all", 3, [3])}
        assert {"main", "census", "boxthm", "zlemma", "hooks"} <= ids

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("everything", 3, [2])

    @pytest.mark.parametrize("n_max, e_set", [(-1, [2]), (3, [1, 2])])
    def test_bad_bounds(self, n_max, e_set):
        with pytest.raises(ValueError):
            run_suite("main", n_max, e_set)

    def test_reports_do_not_depend_on_workers(self):
        serial = reports_to_json(run_suite("lemmas", 6, [3], workers=1))
        pooled = reports_to_json(run_suite("lemmas", 6, [3], workers=2))
        assert serial == pooled


class TestHarness:
    def test_counterexamples_are_collected(self, monkeypatch):
        check = Check("size-three", lambda la, e: "size three" if size(la) == 3 else None)
        monkeypatch.setitem(CHECKS, check.check_id, check)
        report = run_check(check.check_id, 4, 2)
        assert not report.passed
        assert [c.partition for c in report.counterexamples] == [[3], [2, 1], [1, 1, 1]]

    def test_exceptions_become_counterexamples(self, monkeypatch):
        check = Check("explodes", lambda la, e: 1 // 0)
        monkeypatch.setitem(CHECKS, check.check_id, check)
        result = evaluate_chunk(check.check_id, 2, [(Partition((1,)),)])
        assert result.checked == 1
        assert result.counterexamples == [([1], "ZeroDivisionError: integer division or modulo by zero")]

    def test_raising_instances_are_counted_once(self, monkeypatch):
        def explode_on_size_two(la, e):
            return 1 // 0 if size(la) == 2 else None

        check = Check("explodes-on-two", explode_on_size_two)
        monkeypatch.setitem(CHECKS, check.check_id, check)
        report = run_check(check.check_id, 3, 2)
        assert report.instances_checked == report.elapsed == 7
        assert [c.partition for c in report.counterexamples] == [[2], [1, 1]]

    def test_raising_hypothesis_is_counted_once(self, monkeypatch):
        check = Check("bad-hypothesis", lambda la, e: None, hypothesis=lambda la, e: 1 // 0)
        monkeypatch.setitem(CHECKS, check.check_id, check)
        result = evaluate_chunk(check.check_id, 2, [(Partition((1,)),), (Partition((2,)),)])
        assert result.checked == result.scanned == 2
        assert len(result.counterexamples) == 2

    def test_hypothesis_filters_instances(self, monkeypatch):
        check = Check("even", lambda la, e: None, hypothesis=lambda la, e: size(la) % 2 == 0)
        monkeypatch.setitem(CHECKS, check.check_id, check)
        report = run_check(check.check_id, 4, 2)
        assert report.instances_checked == 1 + 2 + 5
        assert report.elapsed == 1 + 1 + 2 + 3 + 5

    def test_size_cap(self):
        report = run_check("cggc", 20, 3)
        assert report.n_range == (0, verification_service.PAIR_SIZE_CAP)


class TestReportSchema:
    def test_pass_alias(self):
        report = run_check("main", 2, 2)
        data = report.to_json_dict()
        assert data["pass"] is True
        assert "passed" not in data
        assert "census" not in data

    def test_pass_must_match_counterexamples(self):
        with pytest.raises(ValidationError):
            VerificationReport(
                check_id="main",
                e=2,
                n_range=(0, 1),
                instances_checked=1,
                counterexamples=[Counterexample(partition=[1], details="x")],
                elapsed=1,
                passed=True,
            )


@pytest.fixture(scope="module")
def default_reports():
    return run_suite("all", DEFAULT_MAX_N, DEFAULT_E_SET)


def _report(reports, check_id, e):
    (report,) = [r for r in reports if r.check_id == check_id and r.e == e]
    return report


def _no_part_divisible_by(e, n_max):
    # equinumerous with the e-regular partitions
    return sum(
        all(part % e for part in la)
        for n in range(n_max + 1)
        for la in enumerate_partitions(n)
    )


class TestDefaultRun:
    def test_everything_passes(self, default_reports):
        assert _failures(default_reports) == []
        assert len(default_reports) == 101

    @pytest.mark.parametrize("e", DEFAULT_E_SET)
    def test_main_covers_every_partition(self, default_reports, e):
        assert _report(default_reports, "main", e).instances_checked == 272

    @pytest.mark.parametrize("e", DEFAULT_E_SET)
    def test_census_rows_agree(self, default_reports, e):
        rows = _report(default_reports, "census", e).census
        assert [row.n for row in rows] == list(range(DEFAULT_MAX_N + 1))
        assert all(row.l_partitions == row.mg_equals_gt for row in rows)
        if e == 2:
            assert [row.l_partitions for row in rows] == [partition_count(n) for n in range(DEFAULT_MAX_N + 1)]

    @pytest.mark.parametrize("check_id", ["boxthm", "xuv", "mullineux-involution", "truncated-rim"])
    @pytest.mark.parametrize("e", DEFAULT_E_SET)
    def test_regular_hypothesis_count(self, default_reports, check_id, e):
        expected = _no_part_divisible_by(e, DEFAULT_MAX_N)
        assert _report(default_reports, check_id, e).instances_checked == expected

    @pytest.mark.parametrize("check_id", ["gse-1", "shallowsteep", "ssss", "srow", "equiv"])
    @pytest.mark.parametrize("e", [3, 4, 5, 6])
    def test_l_partition_hypothesis_count(self, default_reports, check_id, e):
        census = _report(default_reports, "census", e).census
        expected = sum(row.mg_equals_gt for row in census)
        assert _report(default_reports, check_id, e).instances_checked == expected

    def test_characterisation_skips_only_the_empty_partition(self, default_reports):
        for e in DEFAULT_E_SET:
            expected = _no_part_divisible_by(e, DEFAULT_MAX_N) - 1
            assert _report(default_reports, "characterization", e).instances_checked == expected

    def test_identical_with_a_worker_pool(self, default_reports):
        pooled = run_suite("all", DEFAULT_MAX_N, DEFAULT_E_SET, workers=2)
        assert reports_to_json(pooled) == reports_to_json(default_reports)
