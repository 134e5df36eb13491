"""Maximal exact matches (MEMs) above a length threshold.

Strings may be given as ``str`` (encoded as Latin-1) or ``bytes``. Positions
are 0-based; a MEM is ``{"start", "length"}`` in pattern coordinates, plus
``"interval"`` and ``"occurrences"`` (0-based text positions) when requested.
"""

from __future__ import annotations

from typing import Union

from . import _core
from ._core import IndexFormatError, InputError, __version__

BytesLike = Union[str, bytes]

__all__ = [
    "TextIndex",
    "InputError",
    "IndexFormatError",
    "match_pointers",
    "brute_force_mems",
    "run_experiment",
    "__version__",
]


def _b(s: BytesLike) -> bytes:
    return s.encode("latin-1") if isinstance(s, str) else bytes(s)


class TextIndex:
    """FM-indexes of a text and its reverse, ready for MEM queries."""

    def __init__(self, text: BytesLike, sample_rate: int = 32, *, _core_index=None):
        self._ix = _core_index if _core_index is not None else _core.TextIndex(_b(text), sample_rate)

    @classmethod
    def load(cls, prefix) -> "TextIndex":
        return cls(b"", _core_index=_core.TextIndex.load(str(prefix)))

    def save(self, prefix) -> None:
        self._ix.save(str(prefix))

    @property
    def size(self) -> int:
        return self._ix.size

    @property
    def sigma(self) -> int:
        return self._ix.sigma

    def find_mems(self, pattern: BytesLike, min_length: int = 1, *, backend: str = "fm",
                  lce: str = "fingerprint", all: bool = False, locate: bool = False,
                  seed: int = 0x9E3779B97F4A7C15) -> dict:
        return self._ix.find_mems(_b(pattern), min_length, backend, lce, all, locate, seed)

    def longest_common_substring(self, pattern: BytesLike, locate: bool = False) -> dict:
        return self._ix.longest_common_substring(_b(pattern), locate)


def match_pointers(text: BytesLike, pattern: BytesLike):
    return _core.match_pointers(_b(text), _b(pattern))


def brute_force_mems(text: BytesLike, pattern: BytesLike, min_length: int = 1):
    return _core.brute_force_mems(_b(text), _b(pattern), min_length)


def run_experiment(**kwargs) -> dict:
    return _core.run_experiment(**kwargs)
