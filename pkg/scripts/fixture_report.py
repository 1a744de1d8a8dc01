"""Survey the fixture words and time each row.

    python3 scripts/fixture_report.py [--words tests/data/fixtures.txt] [--jobs N]
"""

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from wavekit.cli import TSV_COLUMNS, _read_lines, survey_row

ROOT = Path(__file__).resolve().parents[1]


@dataclass
class ReportConfig:
    words: Path = ROOT / "tests" / "data" / "fixtures.txt"


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--words", type=Path, default=ReportConfig.words)
    cfg = ReportConfig(p.parse_args().words)
    print("\t".join(TSV_COLUMNS + ("seconds",)))
    total = 0.0
    for line in _read_lines(cfg.words):
        t = time.perf_counter()
        row = survey_row(line)
        dt = time.perf_counter() - t
        total += dt
        print(f"{row.tsv()}\t{dt:.3f}")
    print(f"# total {total:.2f}s")


if __name__ == "__main__":
    main()
