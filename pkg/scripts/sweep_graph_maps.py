#!/usr/bin/env python
import sys
from pathlib import Path as _P
ROOT_DIR = _P(__file__).resolve().parents[1]
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))
import argparse
import random
from pathlib import Path

from tqdm import tqdm

from sturmbrick import load_settings
from sturmbrick.gentle import GentleAlgebra, format_string, random_string
from sturmbrick.modules import graph_maps, hom_dim_oracle
from sturmbrick.schemas import SweepRecord


def main() -> None:
    parser = argparse.ArgumentParser(description="Compare graph-map counts with the Hom dimension on random string pairs")
    parser.add_argument("--algebra", action="append", required=True, help="Algebra JSON file (repeatable)")
    parser.add_argument("--pairs", type=int, default=200, help="Random pairs per algebra")
    parser.add_argument("--max-len", type=int, default=12)
    parser.add_argument("--seed", type=int, default=None, help="Defaults to STURMBRICK_SEED")
    parser.add_argument("--out-jsonl", required=True)
    args = parser.parse_args()

    settings = load_settings()
    rng = random.Random(args.seed if args.seed is not None else settings.seed)
    out_path = Path(args.out_jsonl)
    out_path.parent.mkdir(parents=True, exist_ok=True)

    total = 0
    mismatches = 0
    with out_path.open("w", encoding="utf-8") as out:
        for path in args.algebra:
            A = GentleAlgebra.from_file(path)
            for i in tqdm(range(args.pairs), desc=A.name, unit="pair", disable=not settings.progress):
                u = random_string(A, args.max_len, rng)
                v = random_string(A, args.max_len, rng)
                observed = len(graph_maps(u, v))
                expected = hom_dim_oracle(u, v, A)
                record = SweepRecord(
                    id=f"{A.name}-{i}",
                    algebra=A.name,
                    left=format_string(u),
                    right=format_string(v),
                    expected=expected,
                    observed=observed,
                    agree=observed == expected,
                )
                out.write(record.model_dump_json() + "\n")
                total += 1
                mismatches += 0 if record.agree else 1

    print(f"Pairs: {total}")
    print(f"Mismatches: {mismatches}")
    print(f"Wrote: {out_path}")
    if mismatches:
        sys.exit(1)


if __name__ == "__main__":
    main()
