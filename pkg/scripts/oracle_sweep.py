"""Compare Laufer's algorithm with exhaustive enumeration on all small weighted trees.

    python scripts/oracle_sweep.py --max-vertices 5 --weights -2 -3 -4
"""
import argparse
import time
from collections import Counter

from scmkit.cycles import fundamental_cycle
from scmkit.gen import brute_force_fundamental_cycle, small_tree_corpus


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-vertices", type=int, default=5)
    parser.add_argument("--weights", type=int, nargs="+", default=[-2, -3, -4])
    args = parser.parse_args()
    start = time.perf_counter()
    graphs = small_tree_corpus(args.max_vertices, tuple(args.weights))
    mismatches = [g for g in graphs if fundamental_cycle(g) != brute_force_fundamental_cycle(g)]
    heights = Counter(int(max(fundamental_cycle(g).coeffs)) for g in graphs)
    print(f"{len(graphs)} rational graphs, {len(mismatches)} mismatches, "
          f"{time.perf_counter() - start:.2f}s")
    print("max coefficient of Z_f:", dict(sorted(heights.items())))


if __name__ == "__main__":
    main()
