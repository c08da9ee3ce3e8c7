"""
Plain-text cache for q-series expansions.

    #qseries v1 label=<label> nmax=<N>
    0<TAB>c0
    ...
    N<TAB>cN
    #end crc32=<hex crc32 of the body lines>
"""

from __future__ import annotations

import logging
import re
import zlib
from pathlib import Path

from padic_hyper.errors import CorruptCache, VersionMismatch
from padic_hyper.qseries.series import QSeries

logger = logging.getLogger(__name__)

CACHE_VERSION = 1
_HEADER = re.compile(r"^#qseries v(\d+) label=(\S+) nmax=(\d+)$")
_TRAILER = re.compile(r"^#end crc32=([0-9a-f]{8})$")


def cache_file(directory: str | Path, label: str) -> Path:
    return Path(directory) / f"{label}.qseries"


def _checksum(body: str) -> str:
    return f"{zlib.crc32(body.encode('ascii')) & 0xFFFFFFFF:08x}"


def cache_store(path: str | Path, label: str, series: QSeries) -> Path:
    if not re.fullmatch(r"\S+", label):
        raise ValueError(f"cache labels cannot contain whitespace: {label!r}")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    body = "".join(f"{n}\t{c}\n" for n, c in enumerate(series.tolist()))
    text = f"#qseries v{CACHE_VERSION} label={label} nmax={series.nmax}\n{body}#end crc32={_checksum(body)}\n"
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(text, encoding="ascii")
    tmp.replace(path)
    logger.info("cached %s to q^%d at %s", label, series.nmax, path)
    return path


def _corrupt(path: Path, reason: str) -> CorruptCache:
    logger.error("q-series cache %s is corrupt: %s", path, reason)
    return CorruptCache(f"{path}: {reason}")


def cache_load(path: str | Path, label: str) -> QSeries:
    path = Path(path)
    try:
        lines = path.read_text(encoding="ascii").splitlines()
    except UnicodeDecodeError as exc:
        raise _corrupt(path, "not ASCII text") from exc
    if len(lines) < 2:
        raise _corrupt(path, "missing header or trailer")

    header = _HEADER.match(lines[0])
    if header is None:
        raise _corrupt(path, "bad header")
    version, stored_label, nmax = int(header[1]), header[2], int(header[3])
    if version != CACHE_VERSION:
        logger.error("q-series cache %s has version %d, expected %d", path, version, CACHE_VERSION)
        raise VersionMismatch(f"{path}: cache version {version}, expected {CACHE_VERSION}")
    if stored_label != label:
        raise _corrupt(path, f"label {stored_label!r}, expected {label!r}")

    trailer = _TRAILER.match(lines[-1])
    if trailer is None:
        raise _corrupt(path, "missing #end trailer (truncated file?)")
    rows = lines[1:-1]
    if len(rows) != nmax + 1:
        raise _corrupt(path, f"{len(rows)} coefficient lines for nmax={nmax}")
    body = "".join(f"{row}\n" for row in rows)
    if _checksum(body) != trailer[1]:
        raise _corrupt(path, "checksum mismatch")

    coeffs = []
    for expected, row in enumerate(rows):
        try:
            n, value = row.split("\t")
            n, value = int(n), int(value)
        except ValueError as exc:
            raise _corrupt(path, f"unreadable line {row!r}") from exc
        if n != expected:
            raise _corrupt(path, f"exponent {n} where {expected} was expected")
        coeffs.append(value)
    return QSeries.from_coeffs(coeffs, nmax)
