#!/usr/bin/env python3
"""Run every verification pass over the catalog and the standard families.

Sections: stored-table reproduction, classification cross-check, the two
size bounds, and the derived-size ladder.  Exits nonzero if any check
fails, so the script doubles as a one-shot regression gate.
"""

import argparse
import sys
import time

from superstem.build import direct_sum, heisenberg_even, heisenberg_odd, tower
from superstem.catalog import entries, get, verify_classification, verify_table1
from superstem.core import validate
from superstem.derivations import idstar_bound_check
from superstem.invariants import proposition_audit, schur_bound_check


def family_corpus(max_heisenberg: int, max_tower: int):
    algs = [e.algebra for e in entries()]
    algs += [
        heisenberg_even(m, s - m)
        for s in range(1, max_heisenberg + 1)
        for m in range(s + 1)
    ]
    algs += [heisenberg_odd(m) for m in range(1, max_heisenberg + 1)]
    algs += [tower(t) for t in range(1, max_tower + 1)]
    sample = ("(4|0)_2", "(2|2)_6", "(1|3)_1", "(3|2)_13", "(2|3)_18")
    algs += [direct_sum(get(a).algebra, get(b).algebra) for a in sample for b in sample]
    return algs


def section(title: str):
    print(f"\n== {title} ==")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-heisenberg", type=int, default=4,
                        help="largest m+n for H(m,n) and largest m for H_m (default 4)")
    parser.add_argument("--max-tower", type=int, default=6,
                        help="largest tower parameter t (default 6)")
    args = parser.parse_args(argv)

    failures = 0
    started = time.perf_counter()

    section("stored catalog rows")
    table = verify_table1()
    bad_rows = [r for r in table.rows if not r.ok]
    print(f"{len(table.rows)} rows recomputed, {len(bad_rows)} mismatches")
    for row in bad_rows:
        print(f"  MISMATCH {row.name}: stored {row.stored} computed {row.computed}")
    failures += len(bad_rows)

    section("classification cross-check")
    cls = verify_classification()
    bad_checks = [c for c in cls.checks if not c.ok]
    print(f"{len(cls.checks)} checks run, {len(bad_checks)} failed")
    for check in bad_checks:
        print(f"  MISMATCH {check.description}: computed st={check.computed_st}")
    failures += len(bad_checks)

    corpus = family_corpus(args.max_heisenberg, args.max_tower)

    section("bracket laws")
    lawless = [alg.name for alg in corpus if not validate(alg).ok]
    print(f"{len(corpus)} algebras validated, {len(lawless)} violations")
    for name in lawless:
        print(f"  VIOLATION {name}")
    failures += len(lawless)

    section("central quotient bound")
    broken = [r.name for r in map(schur_bound_check, corpus) if not r.holds]
    print(f"{len(corpus)} algebras checked, {len(broken)} violations")
    failures += len(broken)

    section("ID* bound")
    broken = [r.name for r in map(idstar_bound_check, corpus) if not r.holds]
    print(f"{len(corpus)} algebras checked, {len(broken)} violations")
    failures += len(broken)

    section("derived-size ladder")
    broken = [a.name for a in map(proposition_audit, corpus) if not a.ok]
    print(f"{len(corpus)} algebras audited, {len(broken)} violations")
    failures += len(broken)

    elapsed = time.perf_counter() - started
    print(f"\n{'ALL CLEAR' if failures == 0 else f'{failures} FAILURES'} in {elapsed:.2f}s")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
