"""Report, for each Temperley-Lieb datum r and odd prime p, the generator of
J_p modulo p and whether the congruence is vacuous (J_p the unit ideal).

    python scripts/vacuity_scan.py [--r 3 4 5 6] [--p 3 5 7 11 13]
"""

from __future__ import annotations

import argparse

from periodic_rt import jp_generator, make_tl_datum


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--r", type=int, nargs="+", default=[3, 4, 5, 6])
    parser.add_argument("--p", type=int, nargs="+", default=[3, 5, 7, 11, 13])
    args = parser.parse_args()
    print(f"{'r':>2} {'n':>3} {'p':>3} {'deg Phi':>7} {'deg g':>5}  status")
    for r in args.r:
        datum = make_tl_datum(r)
        for p in args.p:
            J = jp_generator(p, datum.dims, datum.field)
            deg_g = len(J.g) - 1
            status = "vacuous" if J.vacuous else ("J_p = (p)" if deg_g == datum.field.degree else "proper")
            print(f"{r:>2} {datum.n:>3} {p:>3} {datum.field.degree:>7} {deg_g:>5}  {status}")


if __name__ == "__main__":
    main()
