# registry.py ------------------------------------------------
import logging
from pathlib import Path
from threading import RLock
from typing import Dict, Optional

from .cache import load_table, save_table
from .errors import CacheFormatError
from .factor_table import FactorTable, build_factor_table

logger = logging.getLogger(__name__)


class TableRegistry:
    """Process-wide store of factor tables.

    ``get_table(limit)`` hands back the smallest registered table that covers
    ``limit``; otherwise it loads one from ``cache_path`` (when set and large
    enough) or sieves a new one and, with a cache path, writes it back.
    """

    _tables: Dict[int, FactorTable] = {}
    _lock: RLock = RLock()
    cache_path: Optional[Path] = None

    @classmethod
    def configure(cls, *, cache_path: Optional[Path] = None) -> None:
        with cls._lock:
            cls.cache_path = Path(cache_path) if cache_path is not None else None

    @classmethod
    def register(cls, table: FactorTable) -> FactorTable:
        with cls._lock:
            cls._tables[table.limit] = table
        return table

    @classmethod
    def get_table(cls, limit: int) -> FactorTable:
        with cls._lock:
            covering = [t for t in cls._tables.values() if t.limit >= limit]
            if covering:
                return min(covering, key=lambda t: t.limit)
            table = cls._load_or_build(max(limit, 2))
            cls._tables[table.limit] = table
            return table

    @classmethod
    def clear(cls) -> None:
        with cls._lock:
            cls._tables.clear()

    @classmethod
    def _load_or_build(cls, limit: int) -> FactorTable:
        path = cls.cache_path
        if path is not None and path.exists():
            try:
                cached = load_table(path)
            except CacheFormatError as exc:
                logger.warning("ignoring unreadable cache %s: %s", path, exc)
            else:
                if cached.limit >= limit:
                    logger.info("loaded factor table %d from %s", cached.limit, path)
                    return cached
        table = build_factor_table(limit)
        if path is not None:
            save_table(table, path)
            logger.info("cached factor table %d at %s", limit, path)
        return table
