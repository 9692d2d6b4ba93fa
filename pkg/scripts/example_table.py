"""Print the reconstruction quiver and stable AR quiver of the three example graphs.

    python scripts/example_table.py [--dot]
"""
import argparse

from scmkit.cycles import canonical_cycle, fundamental_cycle
from scmkit.gen import example_graphs
from scmkit.stable import gorenstein_partners, stable_ar_quiver
from scmkit.recon import reconstruction_quiver


def arrow_line(q):
    parts = []
    for (a, b), n in sorted(q.arrows.items()):
        tag = " (extra)" if (a, b) in q.extra else ""
        parts.append(f"{a}->{b} x{n}{tag}")
    return ", ".join(parts)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--dot", action="store_true")
    args = parser.parse_args()
    for name, g in example_graphs().items():
        q, s = reconstruction_quiver(g), stable_ar_quiver(g)
        if args.dot:
            print(q.to_dot(f"{name}_recon"))
            print(s.to_dot(f"{name}_stable"))
            continue
        print(f"{name}: weights {dict(g.vertices)}")
        print(f"  Z_f = {fundamental_cycle(g).to_json()}")
        print(f"  Z_K = {canonical_cycle(g).to_json()}")
        print(f"  reconstruction quiver: {arrow_line(q)}")
        print(f"  stable AR quiver:      {arrow_line(s) or '(no arrows)'} on {list(s.vertices)}")
        print(f"  Gorenstein partners:   {gorenstein_partners(g)}")


if __name__ == "__main__":
    main()
