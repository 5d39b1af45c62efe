"""Persistent result cache: a single JSON file keyed by (s, tau, grid, version).

Hits are returned only on exact key matches, so changing tau, grid or the
package version never reuses stale results.  Writes go through an atomic
replace; concurrent writers are not coordinated beyond that (the CLI is the
single writer in practice).
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from . import __version__
from .linform import format_rational
from .report import BoundReport, report_from_json_dict, report_to_json_dict


def cache_key(s: int, tau: Fraction, grid: Fraction, version: str = __version__) -> str:
    return f"s={s};tau={format_rational(tau)};grid={format_rational(grid)};v={version}"


@dataclass(frozen=True)
class CacheEntry:
    key: str
    report: BoundReport
    timestamp: str


class ResultCache:
    def __init__(self, path: str | os.PathLike[str]):
        self.path = Path(path)
        self._entries: dict[str, dict] = {}
        if self.path.exists():
            try:
                data = json.loads(self.path.read_text())
                self._entries = dict(data.get("entries", {}))
            except (json.JSONDecodeError, OSError):
                self._entries = {}  # unreadable cache is treated as empty

    def get(self, s: int, tau: Fraction, grid: Fraction) -> BoundReport | None:
        raw = self._entries.get(cache_key(s, tau, grid))
        if raw is None:
            return None
        return report_from_json_dict(raw["report"])

    def entry(self, key: str) -> CacheEntry | None:
        raw = self._entries.get(key)
        if raw is None:
            return None
        return CacheEntry(key, report_from_json_dict(raw["report"]), raw["timestamp"])

    def put(self, report: BoundReport, tau: Fraction, grid: Fraction) -> CacheEntry:
        key = cache_key(report.s, tau, grid)
        stamp = datetime.now(timezone.utc).isoformat()
        self._entries[key] = {
            "report": report_to_json_dict(report),
            "timestamp": stamp,
        }
        self._save()
        return CacheEntry(key, report, stamp)

    def _save(self) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        payload = json.dumps(
            {"version": __version__, "entries": self._entries},
            sort_keys=True,
            indent=1,
        )
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".cache-")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(payload)
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def default_cache_path() -> Path:
    env = os.environ.get("WALDLINES_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "waldlines" / "results.json"
