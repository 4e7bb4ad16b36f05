"""Append-only JSON-lines record of verified scan cells.

One record per ``(m, n, flags)``; when a key repeats, the last line wins.
``MODPART_CACHE_DIR`` overrides the default location.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterable

from .report import CellResult

CACHE_FILE = "scan.jsonl"


def cache_dir() -> Path:
    env = os.environ.get("MODPART_CACHE_DIR")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "modpart"


def counts_hash(cells: Iterable[CellResult]) -> str:
    """Stable digest of ``(type, p_count, q_count)`` over the cells of one ``n``."""
    rows = sorted((list(c.type), c.p_count, c.q_count) for c in cells)
    blob = json.dumps(rows, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def _flags_key(flags: dict[str, Any]) -> str:
    return json.dumps(flags, sort_keys=True, separators=(",", ":"))


@dataclass
class ScanRecord:
    m: int
    n: int
    status: str
    counts_hash: str
    flags: dict[str, Any]
    version: str
    timestamp: str

    @classmethod
    def make(cls, m: int, n: int, cells: list[CellResult], flags: dict[str, Any], version: str) -> "ScanRecord":
        status = "verified" if all(c.status == "verified" for c in cells) else "mismatch"
        now = datetime.now(timezone.utc).isoformat(timespec="seconds")
        return cls(m, n, status, counts_hash(cells), dict(flags), version, now)

    @property
    def key(self) -> tuple[int, int, str]:
        return (self.m, self.n, _flags_key(self.flags))


class ScanCache:
    def __init__(self, directory: Path | str | None = None):
        self.path = Path(directory if directory is not None else cache_dir()) / CACHE_FILE
        self._records: dict[tuple[int, int, str], ScanRecord] | None = None

    def records(self) -> dict[tuple[int, int, str], ScanRecord]:
        if self._records is None:
            self._records = {}
            if self.path.exists():
                with self.path.open() as fh:
                    for line in fh:
                        line = line.strip()
                        if not line:
                            continue
                        try:
                            rec = ScanRecord(**json.loads(line))
                        except (ValueError, TypeError):
                            continue  # torn or foreign line
                        self._records[rec.key] = rec
        return self._records

    def lookup(self, m: int, n: int, flags: dict[str, Any]) -> ScanRecord | None:
        return self.records().get((m, n, _flags_key(flags)))

    def is_verified(self, m: int, n: int, flags: dict[str, Any], version: str) -> bool:
        rec = self.lookup(m, n, flags)
        return rec is not None and rec.status == "verified" and rec.version == version

    def append(self, records: Iterable[ScanRecord]) -> None:
        records = list(records)
        if not records:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            for rec in records:
                fh.write(json.dumps(asdict(rec), sort_keys=True) + "\n")
                self.records()[rec.key] = rec
