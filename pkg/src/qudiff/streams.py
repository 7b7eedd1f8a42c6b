"""Keyed, splittable random streams.

Every stochastic operation in the package draws from a stream derived from a
master seed plus a structured key path, e.g. ``substream(seed, "haar", t, i)``.
Streams with different paths are statistically independent, and the stream for
a given path never depends on how many other paths are in use, so enlarging an
ensemble does not reshuffle earlier samples.
"""

from __future__ import annotations

import zlib

import numpy as np

__all__ = ["substream", "key_to_words"]


def key_to_words(*path) -> tuple[int, ...]:
    """Map a mixed str/int key path to a tuple of unsigned 32-bit words."""
    words = []
    for part in path:
        if isinstance(part, str):
            words.append(zlib.crc32(part.encode("utf-8")))
        elif isinstance(part, (int, np.integer)):
            if part < 0:
                raise ValueError(f"stream key parts must be non-negative, got {part}")
            words.append(int(part))
        else:
            raise TypeError(f"stream key parts must be str or int, got {type(part)!r}")
    return tuple(words)


def substream(seed: int, *path) -> np.random.Generator:
    """Return the random stream for ``path`` under the given master seed.

    Uses a spawn-key construction, so the stream is a pure function of
    ``(seed, path)`` and safe to create concurrently.
    """
    seq = np.random.SeedSequence(entropy=int(seed), spawn_key=key_to_words(*path))
    return np.random.Generator(np.random.PCG64(seq))
