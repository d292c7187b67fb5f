#!/usr/bin/env python3
"""Tabulate how truncation a -> a + m^d moves the fpt enclosure.

Adding the d-th power of the maximal ideal changes the threshold by at most
n/d, so the enclosures must stay within that distance (up to their widths).
Prints one row per (p, d) and checks the bound exactly.

Usage:
    python3 scripts/run_truncation_table.py
    python3 scripts/run_truncation_table.py --gens "x^3+y^4" --primes 5,11 --dmax 10
"""

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fthresholds.exact import format_rational
from fthresholds.experiment import largest_exponent
from fthresholds.frobenius import fpt_enclosure
from fthresholds.reduction import IntegerIdeal, reduce_mod_p, truncate_ideal


@dataclass
class TruncationConfig:
    gens: str = "x^2 + y^3"
    n: int = 2
    primes: str = "7,13"
    q_max: int = 10**4
    d_min: int = 3
    d_max: int = 8


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    cfg = TruncationConfig()
    parser.add_argument("--gens", default=cfg.gens)
    parser.add_argument("-n", type=int, default=cfg.n)
    parser.add_argument("--primes", default=cfg.primes)
    parser.add_argument("--qmax", type=int, default=cfg.q_max)
    parser.add_argument("--dmin", type=int, default=cfg.d_min)
    parser.add_argument("--dmax", type=int, default=cfg.d_max)
    args = parser.parse_args()

    model = IntegerIdeal.from_strings(args.gens, args.n)
    all_ok = True
    print(f"{'p':>4} {'e':>2} {'d':>3} {'base low':>14} {'trunc low':>14} "
          f"{'gap':>12} {'bound n/d':>10} {'ok':>3}")
    for p_text in args.primes.split(","):
        p = int(p_text)
        e = largest_exponent(p, args.qmax)
        if e is None:
            continue
        base_ideal = reduce_mod_p(model, p)
        base = fpt_enclosure(base_ideal, e)
        for d in range(args.dmin, args.dmax + 1):
            trunc = fpt_enclosure(truncate_ideal(base_ideal, d), e)
            gap = max(trunc.low - base.high, base.low - trunc.high, Fraction(0))
            bound = Fraction(args.n, d)
            ok = gap <= bound
            all_ok = all_ok and ok
            print(f"{p:>4} {e:>2} {d:>3} {format_rational(base.low):>14} "
                  f"{format_rational(trunc.low):>14} {format_rational(gap):>12} "
                  f"{format_rational(bound):>10} {'y' if ok else 'N'}")
    return 0 if all_ok else 3


if __name__ == "__main__":
    sys.exit(main())
