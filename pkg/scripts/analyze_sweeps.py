#!/usr/bin/env python
import sys
from pathlib import Path as _P
ROOT_DIR = _P(__file__).resolve().parents[1]
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))
import argparse
import csv
import json
from collections import Counter
from pathlib import Path

from pydantic import ValidationError

from sturmbrick.schemas import SweepRecord


def main() -> None:
    parser = argparse.ArgumentParser(description="Summarize sweep JSONL files")
    parser.add_argument("--sweep-jsonl", action="append", required=True, help="Output of a sweep script (repeatable)")
    parser.add_argument("--out-dir", required=True, help="Directory for summary.json and mismatches.csv")
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    totals = Counter()
    disagreements = Counter()
    skipped = 0
    bad_rows = []
    for path in args.sweep_jsonl:
        with open(path, "r", encoding="utf-8") as f:
            for line in f:
                line = line.strip()
                if not line:
                    continue
                try:
                    record = SweepRecord.model_validate_json(line)
                except ValidationError:
                    skipped += 1
                    continue
                key = record.algebra or Path(path).stem
                totals[key] += 1
                if not record.agree:
                    disagreements[key] += 1
                    bad_rows.append(record)

    summary = {
        "files": len(args.sweep_jsonl),
        "records": sum(totals.values()),
        "skipped": skipped,
        "by_algebra": {k: {"records": totals[k], "mismatches": disagreements[k]} for k in sorted(totals)},
        "mismatches": sum(disagreements.values()),
    }
    with (out_dir / "summary.json").open("w", encoding="utf-8") as f:
        json.dump(summary, f, indent=2)

    with (out_dir / "mismatches.csv").open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["id", "algebra", "left", "right", "expected", "observed", "notes"])
        for r in bad_rows:
            writer.writerow([r.id, r.algebra, r.left, r.right or "", r.expected, r.observed, r.notes or ""])

    print(f"Records: {summary['records']} (skipped {skipped})")
    for k, v in summary["by_algebra"].items():
        print(f"  {k}: {v['records']} records, {v['mismatches']} mismatches")
    print(f"Wrote: {out_dir / 'summary.json'}")
    print(f"Wrote: {out_dir / 'mismatches.csv'}")


if __name__ == "__main__":
    main()
