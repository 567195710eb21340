#!/usr/bin/env python3
"""Run every scripted derivation and print the step-by-step logs."""
import argparse

from symcube.registry import load_profile
from symcube.replay import replay

SCRIPTS = ("lemma21", "lemma22", "theoremA", "corollaryB")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--profile", default=None, help="builtin name or JSON file")
    args = ap.parse_args()

    for script in SCRIPTS:
        profile = args.profile or ("corollaryB" if script == "corollaryB" else "theoremA")
        reg = load_profile(profile)
        log = replay(script, reg)
        print(f"== {script} (profile {reg.name}) ==")
        for s in log.steps:
            print(f"  [{s.justification:21s}] {s.identity_id}: "
                  f"{s.lhs}  =  {s.rhs}  (dim {s.dimension_lhs}/{s.dimension_rhs})")
            for n in s.discrepancy_notes:
                print(f"      note: {n}")
        for f in log.facts:
            print(f"  fact: {f}")
        print(f"  conclusion: {log.conclusion}")
        print()


if __name__ == "__main__":
    main()
