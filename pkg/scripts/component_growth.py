"""Number of stable AR components for the repeated-block rational tree.

    python scripts/component_growth.py --max-m 10
"""
import argparse

from scmkit.gen import paper_family
from scmkit.stable import gorenstein_partners


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-m", type=int, default=8)
    args = parser.parse_args()
    print(f"{'m':>3} {'vertices':>8} {'components':>10}  types")
    for m in range(1, args.max_m + 1):
        g = paper_family(m)
        types = gorenstein_partners(g)
        print(f"{m:>3} {len(g):>8} {len(types):>10}  {' '.join(types)}")


if __name__ == "__main__":
    main()
