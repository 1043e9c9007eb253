"""On-disk cache of exact decompositions, one JSON object per line.

Keyed by (coefficient list, r, v) with coefficients in "p/q" form, so a
reloaded combination is exactly equal to a fresh computation (rationals
round-trip losslessly).  Appends take an exclusive file lock; reads are
lock-free (JSON lines are atomic enough at these sizes, and the last entry
for a key wins).
"""

from __future__ import annotations

import fcntl
import json
import os
from pathlib import Path

from .decomp import ZetaCombination
from .polys import Poly
from .serialize import poly_to_strings

__all__ = ["DecompositionCache", "cache_path_from_env"]

ENV_VAR = "ZETALAB_CACHE"


def cache_path_from_env() -> str | None:
    return os.environ.get(ENV_VAR)


def _key(poly: Poly, r: int, v: int) -> str:
    return json.dumps({"coeffs": poly_to_strings(poly), "r": r, "v": v}, sort_keys=True)


class DecompositionCache:
    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._entries: dict[str, ZetaCombination] | None = None

    def _load(self) -> dict[str, ZetaCombination]:
        if self._entries is None:
            self._entries = {}
            if self.path.exists():
                for line in self.path.read_text().splitlines():
                    line = line.strip()
                    if not line:
                        continue
                    rec = json.loads(line)
                    key = json.dumps(rec["key"], sort_keys=True)
                    self._entries[key] = ZetaCombination.from_json_dict(rec["combo"])
        return self._entries

    def get(self, poly: Poly, r: int, v: int) -> ZetaCombination | None:
        return self._load().get(_key(poly, r, v))

    def put(self, poly: Poly, r: int, v: int, combo: ZetaCombination) -> None:
        rec = {
            "key": {"coeffs": poly_to_strings(poly), "r": r, "v": v},
            "combo": combo.to_json_dict(),
        }
        line = json.dumps(rec, sort_keys=True) + "\n"
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX)
            try:
                fh.write(line)
                fh.flush()
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)
        self._load()[_key(poly, r, v)] = combo
