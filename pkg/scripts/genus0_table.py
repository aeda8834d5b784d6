#!/usr/bin/env python3
"""Tabulate genus-zero curve counts with their lattice data.

Prints one row per class in the support of the genus-zero counts, up to a
given anticanonical degree: the class vector, anticanonical degree, number
of point constraints, self-intersection, arithmetic genus, and the count.

    python3 scripts/genus0_table.py --surface blp2:k=2 --max-anticanonical 10
    python3 scripts/genus0_table.py --surface p1xp1 --max-anticanonical 12 --cache /tmp/q.json
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from delpezzo import GwTable, Surface, load_cache, n0, save_cache, support_enumerate


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--surface", default="blp2:k=0", help="blp2:k=N or p1xp1")
    parser.add_argument("--max-anticanonical", type=int, default=9, metavar="N")
    parser.add_argument("--cache", help="optional genus-zero cache file to reuse/extend")
    args = parser.parse_args()

    surface = Surface.parse(args.surface)
    if args.cache and os.path.exists(args.cache):
        table = load_cache(args.cache)
    else:
        table = GwTable(surface=surface)

    rows = support_enumerate(surface, args.max_anticanonical, table)
    print(f"# {surface.descriptor}, anticanonical degree <= {args.max_anticanonical}")
    print(f"{'class':>14} {'deg':>4} {'delta':>5} {'sq':>4} {'genus':>5} {'n0':>14}")
    for beta, count in rows:
        print(
            f"{str(beta):>14} {surface.anticanonical_degree(beta):>4}"
            f" {surface.delta(beta):>5} {surface.self_intersection(beta):>4}"
            f" {surface.genus(beta):>5} {count:>14}"
        )
    assert all(n0(surface, beta, table) == count for beta, count in rows)

    if args.cache:
        save_cache(table, args.cache)
        print(f"# cache written to {args.cache}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
