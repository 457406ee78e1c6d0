import json

import pytest

from conftest import synthetic_dataset
from hhfs.dataset import Dataset
from hhfs.evaluation import CvProtocol, FitnessEvaluator
from hhfs.experiment import (DatasetConfig, ExperimentSpec,
                             full_feature_baseline, load_config,
                             render_comparison, run_experiment, summary_text,
                             verify_report)
from hhfs.mask import FeatureMask
from hhfs.supervisor import SupervisorConfig


def write_dataset_csv(path, n_instances=24, n_features=5, seed=0):
    d = synthetic_dataset(n_instances=n_instances, n_features=n_features,
                          n_informative=2, seed=seed)
    rows = []
    for x, y in zip(d.features, d.labels):
        rows.append(",".join(f"{v:.6f}" for v in x) + f",{'AB'[int(y)]}")
    path.write_text("\n".join(rows) + "\n")
    return path


def write_config(tmp_path, body):
    path = tmp_path / "experiment.ini"
    path.write_text(body)
    return path


@pytest.fixture
def tiny_spec(tmp_path):
    csv_a = write_dataset_csv(tmp_path / "alpha.csv", seed=1)
    csv_b = write_dataset_csv(tmp_path / "beta.csv", seed=2)
    return ExperimentSpec(
        datasets=(
            DatasetConfig(name="alpha", path=str(csv_a)),
            DatasetConfig(name="beta", path=str(csv_b)),
        ),
        runs=2,
        supervisor=SupervisorConfig(population_size=4, generations=2),
        cv_folds=3,
        search_repeats=1,
        report_repeats=(2, 1),
        master_seed=5,
        out_dir=str(tmp_path / "out"),
    )


class TestLoadConfig:
    def test_full_round_trip(self, tmp_path):
        csv_path = write_dataset_csv(tmp_path / "alpha.csv")
        cfg = write_config(tmp_path, f"""
[experiment]
runs = 3
master_seed = 9
out_dir = {tmp_path / 'results'}

[supervisor]
population_size = 8
generations = 4
p_crossover = 0.6
p_mutation = 0.2
elitism = 2
mutn_rate = 0.05

[cv]
folds = 4
search_repeats = 1
report_repeats = 2, 1

[datasets.alpha]
path = {csv_path}
label_column = -1
""")
        spec = load_config(cfg)
        assert spec.runs == 3
        assert spec.master_seed == 9
        assert spec.supervisor.population_size == 8
        assert spec.supervisor.generations == 4
        assert spec.supervisor.p_crossover == 0.6
        assert spec.supervisor.elitism == 2
        assert spec.cv_folds == 4
        assert spec.report_repeats == (2, 1)
        assert spec.datasets[0].name == "alpha"
        assert spec.primary_label() == "2x4"

    def test_defaults_follow_benchmark_parameters(self, tmp_path):
        csv_path = write_dataset_csv(tmp_path / "a.csv")
        cfg = write_config(tmp_path, f"[datasets.a]\npath = {csv_path}\n")
        spec = load_config(cfg)
        assert spec.runs == 10
        assert spec.supervisor.generations == 200
        assert spec.supervisor.p_crossover == 0.7
        assert spec.supervisor.p_mutation == 0.1
        assert spec.cv_folds == 10
        assert spec.report_repeats == (10, 5)

    def test_label_column_by_name(self, tmp_path):
        cfg = write_config(tmp_path, "[datasets.x]\npath = x.csv\nlabel_column = klass\n")
        spec = load_config(cfg)
        assert spec.datasets[0].label_column == "klass"

    def test_missing_file_and_missing_sections(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_config(tmp_path / "nope.ini")
        cfg = write_config(tmp_path, "[supervisor]\ngenerations = 5\n")
        with pytest.raises(ValueError, match="datasets"):
            load_config(cfg)
        cfg2 = write_config(tmp_path, "[datasets.x]\nlabel_column = 3\n")
        with pytest.raises(ValueError, match="path"):
            load_config(cfg2)


class TestRunSeeds:
    def test_per_run_seeds_are_master_plus_index(self, tiny_spec):
        assert [tiny_spec.run_seed(r) for r in range(3)] == [5, 6, 7]


class TestFullFeatureBaseline:
    def test_perfectly_separable_toy(self):
        d = Dataset.from_arrays("toy", [[0.0, 1.0], [0.1, 0.9], [1.0, 0.0],
                                        [0.9, 0.1]], [0, 0, 1, 1])
        assert full_feature_baseline(d, CvProtocol(folds=2, base_seed=0)) == 1.0

    def test_equals_fitness_of_all_ones_mask(self, small_dataset):
        proto = CvProtocol(folds=5, repeats=2, base_seed=3)
        ev = FitnessEvaluator(small_dataset, proto)
        assert full_feature_baseline(small_dataset, proto) == ev(
            FeatureMask.ones(small_dataset.n_features))


class TestRunExperiment:
    def test_reports_files_and_consistency(self, tiny_spec, tmp_path):
        reports = run_experiment(tiny_spec)
        assert len(reports) == 2
        out = tmp_path / "out"
        assert (out / "summary.csv").exists()
        for report in reports:
            name = report["dataset"]
            assert (out / name / "report.json").exists()
            assert (out / name / "history.csv").exists()
            assert (out / name / "timings.csv").exists()
            verify_report(report)
            assert len(report["runs"]) == 2
            for label in ("2x3", "1x3"):
                agg = report["aggregate"][label]
                accs = [r["accuracy"][label] for r in report["runs"]]
                assert agg["best"] == max(accs)
                assert agg["mean"] == sum(accs) / len(accs)
            # round trip through the file
            loaded = json.loads((out / name / "report.json").read_text())
            assert loaded == report

    def test_single_run_best_equals_mean(self, tiny_spec):
        import dataclasses
        spec = dataclasses.replace(tiny_spec, runs=1,
                                   datasets=tiny_spec.datasets[:1])
        report = run_experiment(spec)[0]
        agg = report["aggregate"]["2x3"]
        assert agg["best"] == agg["mean"]
        assert agg["best_m"] == agg["mean_m"]

    def test_byte_identical_reports_for_identical_specs(self, tiny_spec, tmp_path):
        import dataclasses
        spec1 = dataclasses.replace(tiny_spec, out_dir=str(tmp_path / "o1"))
        spec2 = dataclasses.replace(tiny_spec, out_dir=str(tmp_path / "o2"))
        run_experiment(spec1)
        run_experiment(spec2)
        for name in ("alpha", "beta"):
            a = (tmp_path / "o1" / name / "report.json").read_bytes()
            b = (tmp_path / "o2" / name / "report.json").read_bytes()
            assert a == b

    def test_failed_dataset_does_not_abort_others(self, tiny_spec, tmp_path):
        import dataclasses
        spec = dataclasses.replace(
            tiny_spec,
            datasets=(DatasetConfig(name="ghost", path=str(tmp_path / "ghost.csv")),)
            + tiny_spec.datasets[1:])
        reports = run_experiment(spec)
        assert "error" in reports[0]
        assert "error" not in reports[1]
        assert "FAILED" in summary_text(reports, spec)

    def test_verify_report_catches_tampering(self, tiny_spec):
        report = run_experiment(tiny_spec)[0]
        verify_report(report)
        report["aggregate"]["2x3"]["best"] += 0.01
        with pytest.raises(ValueError, match="inconsistent"):
            verify_report(report)

    def test_incumbent_history_non_decreasing_in_reports(self, tiny_spec):
        for report in run_experiment(tiny_spec):
            for run in report["runs"]:
                fits = [row[2] for row in run["history"]]
                assert all(b >= a for a, b in zip(fits, fits[1:]))


class TestRenderComparison:
    def make_report(self, best_10x10, best_5x10):
        return {
            "dataset": "ionosphere",
            "aggregate": {
                "10x10": {"best": best_10x10, "best_m": 12,
                          "mean": best_10x10 - 0.01, "mean_m": 14.5, "best_run": 0},
                "5x10": {"best": best_5x10, "best_m": 12,
                         "mean": best_5x10 - 0.01, "mean_m": 14.5, "best_run": 0},
            },
        }

    def test_engine_marked_when_row_max(self):
        text = render_comparison(self.make_report(0.9433, 0.9419))
        lines = text.splitlines()
        ten_fold = [ln for ln in lines if "this engine (10x10)" in ln][0]
        assert "94.33" in ten_fold and ten_fold.rstrip().endswith("*")

    def test_engine_not_marked_against_stronger_reference(self):
        text = render_comparison(self.make_report(0.9433, 0.9419))
        five_fold_engine = [ln for ln in text.splitlines()
                            if "this engine (5x10)" in ln][0]
        assert not five_fold_engine.rstrip().endswith("*")
        reference = [ln for ln in text.splitlines() if "DF-TS3-1NN" in ln][0]
        assert "95.01" in reference and reference.rstrip().endswith("*")

    def test_single_method_is_trivially_row_max(self):
        report = {"dataset": "nowhere",
                  "aggregate": {"10x10": {"best": 0.5, "best_m": 1,
                                          "mean": 0.5, "mean_m": 1, "best_run": 0}}}
        text = render_comparison(report, references={})
        engine = [ln for ln in text.splitlines() if "this engine" in ln][0]
        assert engine.rstrip().endswith("*")

    def test_fraction_rendered_as_percent(self):
        text = render_comparison(self.make_report(0.9433, 0.9419))
        assert "94.33" in text
