"""Streaming quantile summary with a deterministic rank-error guarantee.

The summary keeps an ordered list of tuples ``(value, g, delta)`` where
``value`` is an observed sample, ``g`` is the gap between the minimum rank
of this value and the minimum rank of its predecessor, and ``delta`` bounds
the spread between the value's minimum and maximum possible rank.  After
``n`` insertions every tuple satisfies ``g + delta <= floor(2 * epsilon * n)``
(once ``n >= 1 / (2 * epsilon)``), which is exactly what makes any rank
query answerable within ``epsilon * n`` ranks while holding far fewer than
``n`` tuples in memory.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from operator import itemgetter

from .errors import EmptySummaryError, ValidationError

__all__ = ["QuantileSketch"]


def _band(delta: int, p: int) -> int:
    """Age class of a tuple: 0 for the newest (delta == p), growing as
    capacity ``p - delta`` grows.  Merges only fold newer tuples into
    older ones, which keeps the summary size logarithmic in ``n``."""
    capacity = max(p - delta, 0) + 1
    return capacity.bit_length() - 1


class QuantileSketch:
    """Bounded-memory quantile summary over a stream of reals.

    ``epsilon`` is the additive rank-error budget as a fraction of the
    stream length: ``query(p)`` returns an inserted value whose rank in
    the sorted stream is within ``epsilon * count`` of ``ceil(p * count)``.
    """

    def __init__(self, epsilon: float) -> None:
        if not (isinstance(epsilon, float) and math.isfinite(epsilon)):
            raise ValidationError(f"epsilon must be a finite real, got {epsilon!r}")
        if not 0.0 < epsilon <= 0.5:
            raise ValidationError(f"epsilon must be in (0, 0.5], got {epsilon!r}")
        self._epsilon = epsilon
        self._count = 0
        self._tuples: list[tuple[float, int, int]] = []
        self._compress_period = math.floor(1.0 / (2.0 * epsilon))

    @property
    def epsilon(self) -> float:
        return self._epsilon

    @property
    def count(self) -> int:
        """Number of values inserted so far."""
        return self._count

    @property
    def tuples(self) -> tuple[tuple[float, int, int], ...]:
        """Current ``(value, g, delta)`` summary, ordered by value."""
        return tuple(self._tuples)

    def insert(self, x: float) -> None:
        """Add one observation to the stream.

        Non-finite values are rejected: they have no rank, and silently
        dropping them would desynchronise ``count`` from the data.
        """
        x = float(x)
        if not math.isfinite(x):
            raise ValidationError(f"observation must be finite, got {x!r}")
        n = self._count
        tuples = self._tuples
        if not tuples or x < tuples[0][0]:
            tuples.insert(0, (x, 1, 0))
        elif x >= tuples[-1][0]:
            tuples.append((x, 1, 0))
        else:
            pos = bisect_right(tuples, x, key=itemgetter(0))
            delta = max(math.floor(2.0 * self._epsilon * n) - 1, 0)
            tuples.insert(pos, (x, 1, delta))
        self._count = n + 1
        if self._count % self._compress_period == 0:
            self._compress()

    def _compress(self) -> None:
        """Merge adjacent tuples whose combined rank uncertainty stays
        within ``floor(2 * epsilon * count)``.

        Walks right to left, folding a tuple together with its block of
        newer left neighbours (those with larger delta) into the tuple to
        its right.  The extreme tuples are never removed, so the exact
        minimum and maximum always survive.
        """
        tuples = self._tuples
        if len(tuples) < 3:
            return
        p = math.floor(2.0 * self._epsilon * self._count)
        out = [tuples[-1]]
        i = len(tuples) - 2
        while i >= 1:
            value, g, delta = tuples[i]
            head_value, head_g, head_delta = out[-1]
            if _band(delta, p) <= _band(head_delta, p):
                g_block = g
                j = i - 1
                while j >= 1 and tuples[j][2] > delta:
                    g_block += tuples[j][1]
                    j -= 1
                if g_block + head_g + head_delta <= p:
                    out[-1] = (head_value, head_g + g_block, head_delta)
                    i = j
                    continue
            out.append((value, g, delta))
            i -= 1
        out.append(tuples[0])
        out.reverse()
        self._tuples = out

    def query(self, p: float) -> float:
        """Return a value whose rank is within ``epsilon * count`` of
        ``ceil(p * count)``.  ``p=0`` yields the exact minimum and ``p=1``
        the exact maximum."""
        p = float(p)
        if not 0.0 <= p <= 1.0:
            raise ValidationError(f"probability must be in [0, 1], got {p!r}")
        if not self._tuples:
            raise EmptySummaryError("cannot query an empty summary")
        target = math.ceil(p * self._count)
        if target <= 0:
            return self._tuples[0][0]
        allowed = self._epsilon * self._count
        min_rank = 0
        best = self._tuples[0][0]
        for value, g, delta in self._tuples:
            min_rank += g
            if min_rank + delta > target + allowed:
                return best
            best = value
        return best
