"""
Persistent factor cache for Mersenne numbers 2^k - 1.

File format (ASCII, LF line endings), one entry per line:

    <k> <p1>^<e1> <p2>^<e2> ...

with primes strictly ascending and single spaces between fields. Lines
starting with ``#`` are comments. Every entry is re-verified (exact
reconstruction of 2^k - 1, primality of each prime) when loaded, so the
format doubles as the ingestion path for published factor tables.
"""

import logging
import os
import re
import tempfile
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterator, Optional, Set, Tuple, Union

from ..arith.model import Factorization
from ..errors import CacheParseError, IntegrityError
from .core import verify_factorization

logger = logging.getLogger(__name__)

BUNDLED_CACHE_PATH = Path(__file__).parent / "data" / "mersenne.txt"

_ENTRY = re.compile(r"^(\d+)((?: \d+\^\d+)*)$")


@dataclass
class FactorCache:
    """Verified factorizations of 2^k - 1 keyed by k."""

    entries: Dict[int, Factorization] = field(default_factory=dict)
    source_path: str = field(default="", compare=False)

    def __contains__(self, k: int) -> bool:
        return k in self.entries

    def __getitem__(self, k: int) -> Factorization:
        return self.entries[k]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.entries))

    def add(self, k: int, f: Factorization) -> None:
        """Verify and store an entry for 2^k - 1."""
        try:
            verify_factorization(f, (1 << k) - 1)
        except IntegrityError as e:
            raise IntegrityError(f"factor cache entry k={k}: {e}") from e
        self.entries[k] = f

    def primes_of_multiples(self, d: int) -> Set[int]:
        """Primes of every stored 2^k - 1 with d | k."""
        return {
            p for k, f in self.entries.items() if k % d == 0 for p in f.primes()
        }

    def max_k(self) -> int:
        return max(self.entries, default=0)


def _parse_line(
    line: str, number: int, path: Optional[Path]
) -> Tuple[int, Factorization]:
    match = _ENTRY.match(line)
    if not match:
        raise CacheParseError("malformed entry", number, line, path)
    k = int(match.group(1))
    if k < 1:
        raise CacheParseError("exponent k must be >= 1", number, line, path)
    pairs = []
    for term in match.group(2).split():
        p, e = term.split("^")
        pairs.append((int(p), int(e)))
    try:
        return k, Factorization(tuple(pairs))
    except ValueError as e:
        raise CacheParseError(str(e), number, line, path) from e


def parse_cache(text: str, path: Optional[Path] = None) -> FactorCache:
    """Parse and verify cache text."""
    if "\r" in text:
        raise CacheParseError("CR line endings are not accepted", 1, "", path)
    cache = FactorCache(source_path=str(path) if path else "")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for number, line in enumerate(lines, start=1):
        if line.startswith("#"):
            continue
        k, f = _parse_line(line, number, path)
        if k in cache:
            raise CacheParseError(
                f"duplicate entry for k={k}", number, line, path
            )
        cache.add(k, f)
    logger.debug(f"loaded {len(cache)} cache entries from {path or '<text>'}")
    return cache


def cache_load(path: Union[str, Path]) -> FactorCache:
    path = Path(path)
    with open(path, "r", encoding="ascii", newline="") as fh:
        return parse_cache(fh.read(), path)


def format_cache(cache: FactorCache) -> str:
    lines = ["# k followed by the factorization of 2^k - 1"]
    for k in cache:
        terms = cache[k].cache_terms()
        lines.append(f"{k} {terms}" if terms else str(k))
    return "\n".join(lines) + "\n"


def cache_store(cache: FactorCache, path: Union[str, Path]) -> None:
    """Write the cache atomically; callers serialize concurrent writers."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
            fh.write(format_cache(cache))
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


@lru_cache(maxsize=1)
def bundled_cache() -> FactorCache:
    """The shipped table of 2^k - 1 for 2 <= k <= 127."""
    return cache_load(BUNDLED_CACHE_PATH)
