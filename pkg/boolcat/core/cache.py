"""
JSON file cache for exact preimage and class counts
"""
import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Optional

from boolcat.core.config import get_settings

logger = logging.getLogger(__name__)

settings = get_settings()


class CountCache:
    """
    Cache manager for counts keyed by (class, n, method)

    Values are stored as decimal strings. A missing or unreadable file is a
    cold cache, never an error.
    """

    def __init__(self, path: Optional[str] = None):
        self.path = Path(path or settings.cache_path)
        self._entries: Optional[Dict[str, str]] = None

    def _make_key(self, class_key: str, n: int, method: str) -> str:
        """Generate cache key for class+n+method"""
        return f"{class_key}|{n}|{method}"

    def _load(self) -> Dict[str, str]:
        if self._entries is not None:
            return self._entries
        self._entries = {}
        try:
            if self.path.exists():
                data = json.loads(self.path.read_text(encoding="utf-8"))
                self._entries = {str(k): str(v) for k, v in data.get("counts", {}).items()}
                logger.info(f"Loaded {len(self._entries)} cached counts from {self.path}")
        except Exception as e:
            logger.error(f"Error reading count cache {self.path}: {e}")
            self._entries = {}
        return self._entries

    def get_count(self, class_key: str, n: int, method: str) -> Optional[int]:
        """Get a cached count, or None on a miss"""
        raw = self._load().get(self._make_key(class_key, n, method))
        if raw is None:
            return None
        try:
            return int(raw)
        except ValueError:
            logger.error(f"Ignoring malformed cached count {raw!r} for {class_key} n={n} {method}")
            return None

    def set_count(self, class_key: str, n: int, method: str, value: int) -> bool:
        """Store a count and write the cache file through"""
        entries = self._load()
        entries[self._make_key(class_key, n, method)] = str(value)
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            data = {
                "counts": dict(sorted(entries.items())),
                "written_at": int(datetime.now(timezone.utc).timestamp()),
            }
            self.path.write_text(json.dumps(data, indent=2), encoding="utf-8")
            return True
        except Exception as e:
            logger.error(f"Error writing count cache {self.path}: {e}")
            return False

    def stats(self) -> Dict[str, Any]:
        return {"path": str(self.path), "entries": len(self._load())}


class NullCache(CountCache):
    """Stand-in used when caching is bypassed"""

    def __init__(self):
        super().__init__(path=None)
        self._entries = {}

    def get_count(self, class_key: str, n: int, method: str) -> Optional[int]:
        return None

    def set_count(self, class_key: str, n: int, method: str, value: int) -> bool:
        return False


def open_cache(path: Optional[str] = None, enabled: bool = True) -> CountCache:
    return CountCache(path) if enabled else NullCache()
