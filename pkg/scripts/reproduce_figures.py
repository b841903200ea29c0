"""Write the CSV data behind the three figures and the comparison tables.

    python scripts/reproduce_figures.py [OUTDIR]
"""
import sys
from pathlib import Path

from chebkit.cli import main

RUNS = {
    "fig1_tabulate.csv": ["tabulate", "--n", "5", "--samples", "401"],
    "fig2_septic_chebyshev_N7.csv": ["approx", "--target", "preset:septic", "--n", "7", "--samples", "401"],
    "fig2_septic_fourier_N10.csv": ["approx", "--target", "preset:septic", "--n", "10", "--method", "fourier", "--samples", "401"],
    "fig2_septic_fourier_N20.csv": ["approx", "--target", "preset:septic", "--n", "20", "--method", "fourier", "--samples", "401"],
    "fig3_step_chebyshev_N20.csv": ["approx", "--target", "preset:unit_step", "--n", "20", "--samples", "401"],
    "fig3_step_fourier_N10.csv": ["approx", "--target", "preset:unit_step", "--n", "10", "--method", "fourier", "--samples", "401"],
    "compare_septic.csv": ["compare", "--target", "preset:septic", "--n", "20"],
    "compare_step.csv": ["compare", "--target", "preset:unit_step", "--n", "40"],
    "parseval_step.csv": ["parseval", "--target", "preset:unit_step", "--ns", "5,10,20,40"],
}


def run(outdir: Path) -> int:
    outdir.mkdir(parents=True, exist_ok=True)
    for name, argv in RUNS.items():
        code = main(argv + ["--out", str(outdir / name)])
        if code:
            print(f"{name}: exit {code}", file=sys.stderr)
            return code
        print(outdir / name)
    return 0


if __name__ == "__main__":
    sys.exit(run(Path(sys.argv[1] if len(sys.argv) > 1 else "results")))
