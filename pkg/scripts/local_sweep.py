#!/usr/bin/env python3
"""Cross-check every numbered identity against the exact local Euler oracle."""
import argparse

from symcube.euler_local import verify_local_identity
from symcube.identities import LOCAL_IDENTITY_IDS, local_identity


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=25)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    failures = 0
    for identity_id in LOCAL_IDENTITY_IDS:
        family, _, _ = local_identity(identity_id)
        ok = verify_local_identity(identity_id, seed=args.seed, samples=args.samples)
        failures += 0 if ok else 1
        print(f"[{'ok' if ok else 'FAIL'}] {identity_id:8s} "
              f"family={family:8s} samples={args.samples}")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
