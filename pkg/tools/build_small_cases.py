"""Regenerate src/multfree/data/small_cases.json by brute force.

These are the parameter values below the range where the closed forms for
products with PGammaL(2,8) (and the k=1 intersection for AGL(1,5)) apply.

    python3 tools/build_small_cases.py > src/multfree/data/small_cases.json
"""

from __future__ import annotations

import json
import sys

from multfree.induction import brute_force


def cases():
    yield "AGL15/cap_alt/1", "alt(prod(S1,named:AGL(1,5)))"
    for k in range(1, 5):
        yield f"PGammaL28/S/{k}", f"prod(S{k},named:PGammaL(2,8))"
    for k in range(1, 11):
        yield f"PGammaL28/A/{k}", f"prod(A{k},named:PGammaL(2,8))"


def main() -> None:
    out = {key: str(brute_force(spec).vector) for key, spec in cases()}
    json.dump(out, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
