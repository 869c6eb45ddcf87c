"""On-disk cache of gate results.

One line-delimited JSON record per gate, keyed by the four integers
(family, m, t, u).  All numbers are exact decimal strings (the quotient as
"p/q"); records are append-only and deduplicated on read (a key always maps
to the same value, so last-wins is safe).  The store directory comes from
the DESIGNGATE_STORE environment variable, defaulting to ./designgate_store.
"""

from __future__ import annotations

import json
import os
import threading
from fractions import Fraction
from pathlib import Path

from .gate import GateResult

ENV_VAR = "DESIGNGATE_STORE"
DEFAULT_DIRNAME = "designgate_store"
_FILENAME = "gates.jsonl"

Key = tuple[int, int, int, int]


def result_to_record(res: GateResult) -> dict:
    return {
        "family": res.family,
        "m": res.m,
        "t": res.t,
        "u": res.u,
        "F": str(res.F),
        "quotient": f"{res.quotient.numerator}/{res.quotient.denominator}",
        "verdict": res.verdict,
    }


def record_to_result(rec: dict) -> GateResult:
    p, q = rec["quotient"].split("/")
    return GateResult(
        family=int(rec["family"]),
        m=int(rec["m"]),
        t=int(rec["t"]),
        u=int(rec["u"]),
        F=int(rec["F"]),
        quotient=Fraction(int(p), int(q)),
        integral=rec["verdict"] == "PASS",
        verdict=rec["verdict"],
    )


class ResultStore:
    """Append-only JSONL store of gate results."""

    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)
        self.path = self.directory / _FILENAME
        self._lock = threading.Lock()
        self._cache: dict[Key, GateResult] = {}
        self._loaded = False

    @staticmethod
    def from_env() -> "ResultStore":
        return ResultStore(os.environ.get(ENV_VAR, Path.cwd() / DEFAULT_DIRNAME))

    def _load(self) -> None:
        if self._loaded:
            return
        if self.path.exists():
            with open(self.path, encoding="ascii") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    rec = json.loads(line)
                    res = record_to_result(rec)
                    self._cache[(res.family, res.m, res.t, res.u)] = res
        self._loaded = True

    def get(self, family: int, m: int, t: int, u: int) -> GateResult | None:
        with self._lock:
            self._load()
            return self._cache.get((family, m, t, u))

    def put(self, res: GateResult) -> None:
        with self._lock:
            self._load()
            key = (res.family, res.m, res.t, res.u)
            if key in self._cache:
                return
            self._cache[key] = res
            self.directory.mkdir(parents=True, exist_ok=True)
            line = json.dumps(result_to_record(res), sort_keys=False)
            with open(self.path, "a", encoding="ascii") as fh:
                fh.write(line + "\n")

    def __len__(self) -> int:
        with self._lock:
            self._load()
            return len(self._cache)
