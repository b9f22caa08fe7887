# cache.py ---------------------------------------------------
"""Portable binary cache for FactorTable.

Layout (all little-endian):

    offset  size        field
    0       4           magic  b"SMFT"
    4       4  (u32)    version
    8       8  (u64)    limit
    16      4·limit     largest[1..limit]  (u32)
    16+4·L  4·limit     smallest[1..limit] (u32)
"""

from pathlib import Path
from typing import Union

import numpy as np

from .errors import CacheFormatError, CapacityError
from .factor_table import MAX_TABLE_LIMIT, FactorTable

MAGIC = b"SMFT"
VERSION = 1

HEADER = np.dtype([("magic", "S4"), ("version", "<u4"), ("limit", "<u8")])
ENTRY = np.dtype("<u4")


def save_table(table: FactorTable, path: Union[str, Path]) -> Path:
    path = Path(path)
    header = np.array([(MAGIC, VERSION, table.limit)], dtype=HEADER)
    try:
        with path.open("wb") as fh:
            header.tofile(fh)
            table.largest[1:].astype(ENTRY).tofile(fh)
            table.smallest[1:].astype(ENTRY).tofile(fh)
    except OSError as exc:
        raise OSError(f"cannot write factor table cache {path}: {exc}") from exc
    return path


def load_table(path: Union[str, Path]) -> FactorTable:
    path = Path(path)
    try:
        with path.open("rb") as fh:
            header = np.fromfile(fh, dtype=HEADER, count=1)
            if header.size != 1 or header["magic"][0] != MAGIC:
                raise CacheFormatError(f"{path}: not an SMFT factor table cache")
            version = int(header["version"][0])
            if version != VERSION:
                raise CacheFormatError(
                    f"{path}: unsupported cache version {version} (expected {VERSION})"
                )
            limit = int(header["limit"][0])
            if limit < 2 or limit > MAX_TABLE_LIMIT:
                raise CapacityError(f"{path}: cached limit {limit} out of range")
            largest = np.fromfile(fh, dtype=ENTRY, count=limit)
            smallest = np.fromfile(fh, dtype=ENTRY, count=limit)
    except OSError as exc:
        raise OSError(f"cannot read factor table cache {path}: {exc}") from exc

    if largest.size != limit or smallest.size != limit:
        raise CacheFormatError(f"{path}: truncated cache for limit {limit}")

    def _with_zero(arr: np.ndarray) -> np.ndarray:
        return np.concatenate((np.zeros(1, dtype=np.uint32), arr.astype(np.uint32)))

    return FactorTable(limit=limit, largest=_with_zero(largest), smallest=_with_zero(smallest))
