#!/usr/bin/env python3
"""Print the exact character table of the binary icosahedral group."""
from symcube import icosa


def main() -> None:
    rows = icosa.table()
    cols = list(rows[0])
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
    header = "  ".join(c.ljust(widths[c]) for c in cols)
    print(header)
    print("-" * len(header))
    for r in rows:
        print("  ".join(str(r[c]).ljust(widths[c]) for c in cols))
    print()
    for name, ok, detail in icosa.verify_suite():
        print(f"[{'ok' if ok else 'FAIL'}] {name}" + (f" -- {detail}" if detail else ""))


if __name__ == "__main__":
    main()
