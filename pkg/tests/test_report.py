import math

import pytest
import yaml
from filelock import Timeout

from elliptic_duality.exceptions import LockAcquisitionError, ReportFormatError
from elliptic_duality.identities.runner import replay_fixture, run_trials
from elliptic_duality.models.report import (
    IdentityReport,
    ParamSample,
    TrialConfig,
    TrialRecord,
    load_fixtures,
    save_suite,
)
from elliptic_duality.utils.locking import report_lock


@pytest.fixture(scope="module")
def passing_report():
    return run_trials("kernel-c1", TrialConfig(seed=3, trials=2, case="trig"))


@pytest.fixture(scope="module")
def failing_report():
    return run_trials("kernel-c1", TrialConfig(seed=3, trials=2, case="trig", tolerance=1e-300))


def test_report_dict_round_trip(passing_report):
    data = passing_report.to_dict()
    assert data['pass'] is True
    assert data['version'] == 1
    restored = IdentityReport.from_dict(data)
    assert restored.residuals == passing_report.residuals
    assert restored.sizes == {}
    assert restored.passed


def test_report_save_and_load(tmp_path, passing_report):
    path = str(tmp_path / "reports" / "kernel.yaml")
    passing_report.save(path)
    assert IdentityReport.from_file(path).to_dict() == passing_report.to_dict()


def test_report_rejects_other_versions(passing_report):
    data = passing_report.to_dict()
    data['version'] = 2
    with pytest.raises(ReportFormatError):
        IdentityReport.from_dict(data)


def test_report_rejects_an_inconsistent_pass_flag(passing_report):
    data = passing_report.to_dict()
    data['pass'] = False
    with pytest.raises(ReportFormatError):
        IdentityReport.from_dict(data)


def test_report_rejects_missing_fields(passing_report):
    data = passing_report.to_dict()
    del data['residuals']
    with pytest.raises(ReportFormatError):
        IdentityReport.from_dict(data)


def test_failures_replay_as_passing_at_default_tolerance(failing_report):
    assert len(failing_report.failures) == 2
    for fixture in failing_report.failures:
        replayed = replay_fixture(fixture)
        assert replayed.passed
        assert replayed.case == "trig"


def test_replay_of_an_unbalanced_sample_fails(failing_report):
    fixture = yaml.safe_load(yaml.safe_dump(failing_report.failures[0]))
    fixture['sample']['values']['a'][0] = "0.45+0.01i"
    replayed = replay_fixture(fixture)
    assert math.isinf(replayed.max_residual)
    assert not replayed.passed
    assert len(replayed.failures) == 1


def test_load_fixtures_from_every_document_kind(tmp_path, failing_report, passing_report):
    report_path = str(tmp_path / "report.yaml")
    failing_report.save(report_path)
    assert len(load_fixtures(report_path)) == 2

    suite_path = str(tmp_path / "suite.yaml")
    save_suite(suite_path, [passing_report, failing_report])
    assert len(load_fixtures(suite_path)) == 2

    single_path = tmp_path / "fixture.yaml"
    single_path.write_text(yaml.safe_dump(failing_report.failures[1]))
    assert load_fixtures(str(single_path))[0]['identity'] == "kernel-c1"


def test_load_fixtures_rejects_other_documents(tmp_path):
    path = tmp_path / "other.yaml"
    path.write_text("hello: world\n")
    with pytest.raises(ReportFormatError):
        load_fixtures(str(path))
    path.write_text("- just\n- a list\n")
    with pytest.raises(ReportFormatError):
        load_fixtures(str(path))
    with pytest.raises(ReportFormatError):
        load_fixtures(str(tmp_path / "missing.yaml"))


def test_sample_round_trip_keeps_extended_digits(extended_ctx):
    third = extended_ctx.scalar(1) / 3
    sample = ParamSample(case="elliptic", precision="extended", delta=extended_ctx.delta,
                         quad_coeff=extended_ctx.quad_coeff, tau=extended_ctx.tau, values={'x': third})
    restored = ParamSample.from_dict(sample.to_dict())
    ctx = restored.context()
    assert abs(ctx.scalar(restored.values["x"]) - third) < 1e-45


def test_sample_digest_is_stable():
    first = ParamSample(case="rational", precision="double", delta=0.3, quad_coeff=0.0, values={"x": 0.1j})
    second = ParamSample.from_dict(first.to_dict())
    assert first.digest() == second.digest()
    assert len(first.digest()) == 12


def test_malformed_sample():
    with pytest.raises(ReportFormatError):
        ParamSample.from_dict({'precision': "double"})


def test_trial_record_life_cycle():
    record = TrialRecord(index=0)
    record.mark_started()
    sample = ParamSample(case="rational", precision="double", delta=0.3, quad_coeff=0)
    record.mark_completed(1e-15, 2.0, sample)
    assert record.residual == 1e-15
    assert record.duration_seconds >= 0.0
    assert record.error is None


def test_report_lock_gives_up(tmp_path, mocker):
    lock = mocker.patch("elliptic_duality.utils.locking.FileLock").return_value
    lock.acquire.side_effect = Timeout("busy")
    sleep = mocker.patch("elliptic_duality.utils.locking.time.sleep")
    with pytest.raises(LockAcquisitionError):
        with report_lock(str(tmp_path / "report.yaml"), attempts=3):
            pass
    assert lock.acquire.call_count == 3
    assert sleep.call_count == 2
    lock.release.assert_not_called()


def test_report_lock_is_released(tmp_path):
    with report_lock(str(tmp_path / "out" / "report.yaml")) as lock:
        assert lock.is_locked
    assert not lock.is_locked
