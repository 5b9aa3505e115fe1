#!/usr/bin/env python3
"""Write the standard JSON and DOT exports into a directory (default out/).

Covers the subalgebra lattice, the congruence lattice, the hom-set
lattices for powers 1 and 2, and the cube-with-hairs posets for
dimensions 1 to 3.
"""

import argparse
from pathlib import Path

from hairycube.render import RENDERABLES, dumps


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("out"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    jobs = []
    for target, (payload_fn, dot_fn, needs_n) in sorted(RENDERABLES.items()):
        stem = target.replace("-", "_")
        if not needs_n:
            jobs.append((stem, payload_fn, dot_fn, ()))
        elif target == "chi":
            jobs.extend((f"{stem}_n{n}", payload_fn, dot_fn, (n,)) for n in (1, 2))
        else:
            jobs.extend((f"{stem}_n{n}", payload_fn, dot_fn, (n,)) for n in (1, 2, 3))

    for stem, payload_fn, dot_fn, fn_args in jobs:
        json_path = args.out / f"{stem}.json"
        json_path.write_text(dumps(payload_fn(*fn_args)), encoding="utf-8")
        print(json_path)
        dot_path = args.out / f"{stem}.dot"
        dot_path.write_text(dot_fn(*fn_args), encoding="utf-8")
        print(dot_path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
