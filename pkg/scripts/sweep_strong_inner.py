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
from sturmbrick.bridge import double_kronecker, strong_inner_witness_ab, strong_inner_witness_generic
from sturmbrick.schemas import SweepRecord


def main() -> None:
    parser = argparse.ArgumentParser(description="Compare ab-level strong inner witnesses with generic graph maps")
    parser.add_argument("--words", type=int, default=1000)
    parser.add_argument("--max-len", type=int, default=30)
    parser.add_argument("--seed", type=int, default=None, help="Defaults to STURMBRICK_SEED")
    parser.add_argument("--out-jsonl", required=True)
    args = parser.parse_args()

    settings = load_settings()
    rng = random.Random(args.seed if args.seed is not None else settings.seed)
    dk = double_kronecker()
    out_path = Path(args.out_jsonl)
    out_path.parent.mkdir(parents=True, exist_ok=True)

    disagreements = 0
    with out_path.open("w", encoding="utf-8") as out:
        for i in tqdm(range(args.words), desc="ab-words", unit="word", disable=not settings.progress):
            n = rng.randint(1, args.max_len)
            word = "".join(rng.choice("ab") for _ in range(n))
            x = strong_inner_witness_ab(word)
            gm = strong_inner_witness_generic(word, dk)
            expected = None if x is None else 2 * len(x)
            observed = None if gm is None else len(gm.pattern)
            record = SweepRecord(
                id=f"word-{i}",
                algebra="double-kronecker",
                left=word,
                expected=expected,
                observed=observed,
                agree=expected == observed,
                notes="" if x is None else f"x={x}",
            )
            out.write(record.model_dump_json() + "\n")
            disagreements += 0 if record.agree else 1

    print(f"Words: {args.words}")
    print(f"Disagreements: {disagreements}")
    print(f"Wrote: {out_path}")
    if disagreements:
        sys.exit(1)


if __name__ == "__main__":
    main()
