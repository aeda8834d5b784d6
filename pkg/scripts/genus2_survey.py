#!/usr/bin/env python3
"""Survey the genus-two quantities across the support of a surface.

For every class with a nonzero genus-zero count, at least one point
constraint, and anticanonical degree within the bound, print the full
bundle: genus-zero count, symplectic sum, cusp and two-component counts,
both correction-term variants, and the genus-two count itself.  Classes
where the derivation's positivity hypotheses fail are flagged with ``*``
(the values are still exact; the flag marks where the closed form is used
outside its comfort zone, which is exactly where the vanishing checks
live).

    python3 scripts/genus2_survey.py --surface blp2:k=0 --max-anticanonical 15
    python3 scripts/genus2_survey.py --surface p1xp1 --max-anticanonical 12 --nonzero-only
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from delpezzo import GwTable, Surface, genus2_report, support_enumerate


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--surface", default="blp2:k=0", help="blp2:k=N or p1xp1")
    parser.add_argument("--max-anticanonical", type=int, default=12, metavar="N")
    parser.add_argument("--aut", type=int, default=2, help="automorphism order (even)")
    parser.add_argument(
        "--nonzero-only", action="store_true", help="only rows with a nonzero genus-two count"
    )
    args = parser.parse_args()

    surface = Surface.parse(args.surface)
    table = GwTable(surface=surface)

    print(f"# {surface.descriptor}, aut order {args.aut}")
    header = f"{'class':>12} {'n0':>10} {'rt2':>12} {'cusp':>8} {'v2':>10} {'crL':>10} {'crP':>10} {'n2j':>12}"
    print(header)
    for beta, _ in support_enumerate(surface, args.max_anticanonical, table):
        if surface.delta(beta) < 1:
            continue
        report = genus2_report(surface, beta, table, args.aut)
        if args.nonzero_only and report.n2j == 0:
            continue
        flag = "*" if report.warnings else " "
        print(
            f"{str(beta):>12} {report.n0:>10} {report.rt2:>12} {report.cusp:>8}"
            f" {report.two_comp:>10} {str(report.cr_lemma):>10} {str(report.cr_proof):>10}"
            f" {report.n2j:>12}{flag}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
