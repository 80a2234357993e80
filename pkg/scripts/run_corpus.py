"""Run the full construction on a fixed corpus and print one row per subgroup.

    python scripts/run_corpus.py [--depth-disjoint 6] [--depth-normal 4]
"""
import argparse
import time

from fgwitness.witness import PipelineConfig, Status, run_pipeline
from fgwitness.words import parse_word

CORPUS = [
    ["aa", "ab"],
    ["a"],
    ["ab", "ba"],
    ["aa", "bb", "abab"],
    ["abA"],
    ["aaa", "aba"],
    ["a", "baB", "bb"],
    [],
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rank", type=int, default=2)
    ap.add_argument("--depth-disjoint", type=int, default=6)
    ap.add_argument("--depth-normal", type=int, default=4)
    args = ap.parse_args()
    cfg = PipelineConfig(
        verify_depth_disjoint=args.depth_disjoint, verify_depth_normal=args.depth_normal
    )
    header = f"{'H':<18}{'status':<26}{'[F:K]':>6}{'[F:I]':>6}{'|w|':>6}{'disj':>8}{'norm':>8}{'sec':>7}"
    print(header)
    print("-" * len(header))
    for gens in CORPUS:
        t0 = time.perf_counter()
        report = run_pipeline([parse_word(g, args.rank) for g in gens], args.rank, cfg)
        dt = time.perf_counter() - t0
        label = "<" + ",".join(gens) + ">"
        if report.status is Status.FINITE_INDEX:
            print(f"{label:<18}{report.status.value:<26}{report.k_index:>6}{'-':>6}{'-':>6}{'-':>8}{'-':>8}{dt:>7.2f}")
            continue
        v = report.verification
        print(
            f"{label:<18}{report.status.value:<26}{report.k_index:>6}{report.i_index:>6}"
            f"{len(report.witness):>6}{v.counts['disjointness']:>8}{v.counts['normality']:>8}{dt:>7.2f}"
        )


if __name__ == "__main__":
    main()
