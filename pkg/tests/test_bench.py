import importlib.util
from pathlib import Path

from matroid_dd import kernels


def test_benchmark_runs(capsys):
    path = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    before = kernels.get_backend()
    mod.main(["--n", "6", "--repeat", "1"])
    out = capsys.readouterr().out
    assert "rank_table" in out and "pathwidth_table" in out
    assert kernels.get_backend() == before
