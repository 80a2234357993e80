"""Random sweep: draw finitely generated subgroups, run and verify the pipeline.

Reports how often each status occurs, the index of the normal core, and
witness lengths. Any verification failure aborts with the counterexample.

    python scripts/random_sweep.py --samples 200 --seed 1
"""
import argparse
import random
import statistics
from collections import Counter

from fgwitness.errors import CoreTooLarge, WitnessTooLong
from fgwitness.witness import PipelineConfig, Status, run_pipeline
from fgwitness.words import reduce, render_word


def random_subgroup(rng, rank, max_gens, max_len):
    letters = [s * (g + 1) for g in range(rank) for s in (1, -1)]
    n = rng.randint(1, max_gens)
    return [reduce([rng.choice(letters) for _ in range(rng.randint(1, max_len))], rank) for _ in range(n)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--rank", type=int, default=2)
    ap.add_argument("--max-gens", type=int, default=3)
    ap.add_argument("--max-len", type=int, default=5)
    ap.add_argument("--max-cosets", type=int, default=2000)
    # normality verification costs ~ |members| * |test words| * m * |witness|
    ap.add_argument("--max-witness-length", type=int, default=5_000)
    ap.add_argument("--depth-disjoint", type=int, default=4)
    ap.add_argument("--depth-normal", type=int, default=2)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    cfg = PipelineConfig(
        max_cosets=args.max_cosets,
        verify_depth_disjoint=args.depth_disjoint,
        verify_depth_normal=args.depth_normal,
        max_witness_length=args.max_witness_length,
    )
    statuses = Counter()
    core_sizes, witness_lengths = [], []
    for _ in range(args.samples):
        gens = random_subgroup(rng, args.rank, args.max_gens, args.max_len)
        try:
            report = run_pipeline(gens, args.rank, cfg)
        except CoreTooLarge:
            statuses["core_too_large"] += 1
            continue
        except WitnessTooLong:
            statuses["witness_too_long"] += 1
            continue
        statuses[report.status.value] += 1
        if report.status is Status.WITNESS:
            core_sizes.append(report.i_index)
            witness_lengths.append(len(report.witness))
    for status, n in sorted(statuses.items()):
        print(f"{status:<26}{n:>6}")
    if core_sizes:
        print(f"[F:I]   median {statistics.median(core_sizes):>8}   max {max(core_sizes)}")
        print(f"|w|     median {statistics.median(witness_lengths):>8}   max {max(witness_lengths)}")


if __name__ == "__main__":
    main()
