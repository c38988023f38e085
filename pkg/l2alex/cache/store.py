"""Append-only JSON-lines cache of computed torsions, keyed by content hash."""

import json
import logging
from pathlib import Path
from typing import Dict, Optional, Union

from pydantic import BaseModel, ConfigDict, ValidationError

from l2alex.config.settings import settings
from l2alex.dsl.printer import cache_key, print_link
from l2alex.models.exponent import ExponentExpr
from l2alex.models.link import LinkSpec
from l2alex.models.torsion import TorsionClass

logger = logging.getLogger(__name__)


class CacheEntry(BaseModel):
    """One cached symbolic torsion."""

    model_config = ConfigDict(frozen=True)

    key: str
    expr: str
    zero: bool
    exponent: Optional[ExponentExpr] = None
    trace_digest: str

    @property
    def torsion(self) -> TorsionClass:
        return TorsionClass(exponent=None if self.zero else self.exponent)

    @classmethod
    def for_spec(cls, spec: LinkSpec, torsion: TorsionClass, trace_digest: str) -> "CacheEntry":
        return cls(
            key=cache_key(spec),
            expr=print_link(spec),
            zero=torsion.is_zero,
            exponent=torsion.exponent,
            trace_digest=trace_digest,
        )


class TorsionCache:
    """Best-effort cache; IO problems are logged and never raised."""

    def __init__(self, path: Optional[Union[str, Path]] = None):
        self.path = Path(path) if path is not None else settings.cache.path

    def _read(self) -> Dict[str, CacheEntry]:
        entries: Dict[str, CacheEntry] = {}
        try:
            if not self.path.exists():
                return entries
            with self.path.open("r", encoding="utf-8") as handle:
                for number, line in enumerate(handle, start=1):
                    if not line.strip():
                        continue
                    try:
                        entry = CacheEntry.model_validate_json(line)
                    except (ValidationError, ValueError):
                        logger.warning("Skipping corrupt cache line %d in %s", number, self.path)
                        continue
                    entries.setdefault(entry.key, entry)
        except OSError as exc:
            logger.error("Could not read cache %s: %s", self.path, exc)
        return entries

    def lookup(self, key: str) -> Optional[CacheEntry]:
        """Return the entry stored under ``key``, if any."""
        entry = self._read().get(key)
        logger.debug("Cache %s for %s", "hit" if entry else "miss", key[:12])
        return entry

    def store(self, entry: CacheEntry) -> None:
        """Append ``entry`` unless its key is already present."""
        if entry.key in self._read():
            return
        line = json.dumps(entry.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            prefix = ""
            if self.path.exists() and self.path.stat().st_size > 0:
                with self.path.open("rb") as handle:
                    handle.seek(-1, 2)
                    if handle.read(1) != b"\n":
                        prefix = "\n"
            with self.path.open("a", encoding="utf-8") as handle:
                handle.write(prefix + line + "\n")
        except OSError as exc:
            logger.error("Could not write cache %s: %s", self.path, exc)
