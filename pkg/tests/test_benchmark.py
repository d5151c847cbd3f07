import runpy
from pathlib import Path

SCRIPT = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"


def test_benchmark_runs_and_backends_agree(capsys):
    main = runpy.run_path(str(SCRIPT))["main"]
    assert main(["--orders", "5", "7", "--repeat", "1"]) == 0
    out = capsys.readouterr().out
    assert "table zir" in out and "slice connectivity" in out
