"""Symbol-to-hypervector codebooks.

Four construction schemes:

* ``thermometer`` - symbol i's vector is -1 below a per-symbol index and
  +1 from it on, so similarity falls off linearly with index distance.
  Indices are sampled uniformly without replacement, which caps the
  vocabulary at D distinct symbols.
* ``random`` - each new symbol gets an independent random vector
  (pseudo-orthogonal to all others, effectively unbounded capacity).
* ``level`` - m vectors interpolating between two random endpoints;
  nearby levels are similar, distance grows with level separation.
* ``circular`` - like ``level`` but the flip schedule wraps, so
  similarity depends on circular distance around the level ring.

Lookups are stable: within one codebook a symbol always maps to the same
vector. Level/circular symbols are assigned levels round-robin by first
appearance, so more than m symbols will share vectors.
"""

from __future__ import annotations

import sys
from typing import IO

import numpy as np
from numpy.typing import NDArray

from .errors import InvalidLevelsError, VocabularyExhaustedError
from .hypervector import HV, derive_rng, random_hypervector

__all__ = [
    "SCHEMES",
    "Codebook",
    "circular_vector",
    "level_vector",
    "thermometer_vector",
]

SCHEMES = ("thermometer", "random", "level", "circular")

DEFAULT_LEVELS = 256


def thermometer_vector(index: int, dim: int) -> HV:
    """Vector that is -1 at components below ``index`` and +1 from it on."""
    if not 0 <= index < dim:
        raise VocabularyExhaustedError(symbol=f"index {index}", capacity=dim)
    v = np.ones(dim, dtype=np.int8)
    v[:index] = -1
    return v


def _blockwise(level: int, m: int, a: HV, b: HV, order: NDArray[np.intp], block: int,
               start: int, stop: int) -> HV:
    # Copy endpoint A, then overwrite the selected block range of the
    # coordinate ordering with endpoint B's values.
    v = a.copy()
    coords = order[start * block : stop * block]
    v[coords] = b[coords]
    return v


def _check_level_args(level: int, m: int, a: HV, b: HV) -> None:
    if m < 2:
        raise InvalidLevelsError(f"need at least 2 levels, got {m}")
    if m > a.shape[0]:
        raise InvalidLevelsError(f"level count {m} exceeds dimension {a.shape[0]}")
    if not 0 <= level < m:
        raise ValueError(f"level {level} outside [0, {m})")
    if a.shape != b.shape:
        raise ValueError("endpoint dimensions differ")


def level_vector(level: int, m: int, a: HV, b: HV,
                 order: NDArray[np.intp] | None = None) -> HV:
    """Linear interpolation code: level 0 is A, level m-1 is (nearly) B.

    Each successive level rewrites the next block of ``order`` (size
    floor(D/(m-1))) from A's values to B's, so Hamming distance between
    two levels grows monotonically with their separation.
    """
    _check_level_args(level, m, a, b)
    dim = a.shape[0]
    if order is None:
        order = np.arange(dim)
    block = dim // (m - 1)
    return _blockwise(level, m, a, b, order, block, 0, level)


def circular_vector(level: int, m: int, a: HV, b: HV,
                    order: NDArray[np.intp] | None = None) -> HV:
    """Ring interpolation code: similarity depends on circular distance.

    The first half of the ring rewrites successive blocks from A toward B;
    the second half rewrites them back, so level m-1 sits one block away
    from level 0. Exact for even m; odd m closes the ring with one
    double-width step at the seam.
    """
    _check_level_args(level, m, a, b)
    dim = a.shape[0]
    if order is None:
        order = np.arange(dim)
    nblocks = (m + 1) // 2
    block = dim // nblocks
    if level <= nblocks:
        return _blockwise(level, m, a, b, order, block, 0, level)
    return _blockwise(level, m, a, b, order, block, level - nblocks, nblocks)


class Codebook:
    """Lazily-populated mapping from symbols to hypervectors.

    All random draws come from a stream derived from ``seed``, so a
    codebook's assignments are a pure function of (seed, scheme, symbol
    arrival order).
    """

    def __init__(self, scheme: str, dim: int, seed: int, levels: int = DEFAULT_LEVELS):
        if scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {scheme!r}, expected one of {SCHEMES}")
        if scheme in ("level", "circular"):
            if levels < 2:
                raise InvalidLevelsError(f"need at least 2 levels, got {levels}")
            if levels > dim:
                raise InvalidLevelsError(f"level count {levels} exceeds dimension {dim}")
        self.scheme = scheme
        self.dim = dim
        self.levels = levels
        self.entries: dict[str, HV] = {}
        self._marks: dict[str, int] = {}  # thermometer index / level / arrival rank
        rng = derive_rng(seed, 0)
        if scheme == "thermometer":
            self.capacity: int | None = dim
            self._index_order = rng.permutation(dim)
        elif scheme == "random":
            self.capacity = None
            self._rng = rng
        else:
            self.capacity = levels
            self._endpoint_a = random_hypervector(dim, rng)
            self._endpoint_b = random_hypervector(dim, rng)
            self._coord_order = rng.permutation(dim)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.entries

    def assign(self, symbol: str) -> HV:
        """Return the symbol's vector, drawing it on first sight."""
        got = self.entries.get(symbol)
        if got is not None:
            return got
        rank = len(self.entries)
        if self.scheme == "thermometer":
            if rank >= self.dim:
                raise VocabularyExhaustedError(symbol=symbol, capacity=self.dim)
            mark = int(self._index_order[rank])
            v = thermometer_vector(mark, self.dim)
        elif self.scheme == "random":
            mark = rank
            v = random_hypervector(self.dim, self._rng)
        else:
            mark = rank % self.levels
            maker = level_vector if self.scheme == "level" else circular_vector
            v = maker(mark, self.levels, self._endpoint_a, self._endpoint_b,
                      self._coord_order)
        v.setflags(write=False)
        self.entries[symbol] = v
        self._marks[symbol] = mark
        return v

    def dump(self, fp: IO[str] = sys.stdout) -> None:
        """Debug dump, one tab-separated line per symbol (not a stable format)."""
        for symbol, mark in self._marks.items():
            fp.write(f"{symbol}\t{self.scheme}\t{mark}\n")
