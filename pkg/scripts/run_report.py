"""Run the verification report and write text and JSON copies.

usage: python3 scripts/run_report.py [--ranks 3,4,5] [--seed 0] [--out-dir reports]
"""

import argparse
import time
from pathlib import Path

from artinaut.harness import ReportConfig, run_report


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--ranks", default="3,4,5")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out-dir", default="reports")
    args = ap.parse_args()

    cfg = ReportConfig(ranks=[int(x) for x in args.ranks.split(",")], seed=args.seed)
    start = time.perf_counter()
    report = run_report(cfg)
    elapsed = time.perf_counter() - start

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"report_r{'-'.join(map(str, cfg.ranks))}_s{cfg.seed}"
    (out / f"{stem}.txt").write_text(report.to_text(), encoding="utf-8")
    (out / f"{stem}.json").write_text(report.to_json(), encoding="utf-8")
    s = report.summary
    print(f"{len(report.checks)} checks in {elapsed:.2f}s: "
          f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped -> {out}/{stem}.*")
    return 0 if report.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
