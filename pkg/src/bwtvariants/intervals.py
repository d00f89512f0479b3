"""Interesting intervals: where separator-based transforms can disagree.

An interesting interval is the rank range [b, e] of rotations that begin
with U followed by a separator, where U is a suffix of at least two input
strings and the symbols preceding those occurrences are not all equal.
When U is an entire string, its preceding symbol is the separator itself
(the '$' pseudo-symbol below). Coordinates are taken in the rotation
order of {T_i $}, which all separator-based variants share outside the
intervals, so [b, e] is variant-independent.
"""

from __future__ import annotations

import warnings
from array import array
from dataclasses import dataclass
from fractions import Fraction

from ._fmt import fmt
from .collection import SEP_BYTE, Collection
from .errors import ValidationError
from .kernels import shared_suffix_mask, suffix_array
from .ordering import lex_order

SEP_SYMBOL = "$"


@dataclass(frozen=True)
class InterestingInterval:
    b: int
    e: int
    shared_suffix: bytes
    parikh: dict[str, int]
    members: tuple[int, ...]  # 1-based input indexes in rank order

    @property
    def length(self) -> int:
        return self.e - self.b + 1


@dataclass(frozen=True)
class IntervalReport:
    intervals: tuple[InterestingInterval, ...]
    count_intervals: int
    total_interval_length: int
    fraction_positions: Fraction
    variability: Fraction

    def fraction_text(self) -> str:
        return fmt(self.fraction_positions, 3)

    def variability_text(self) -> str:
        return fmt(self.variability, 3)

    def to_tsv(self) -> str:
        lines = ["b\te\tlength\tsuffix\tparikh"]
        for iv in self.intervals:
            suffix = iv.shared_suffix.decode("latin-1") or "(empty)"
            parikh = ",".join(f"{s}:{iv.parikh[s]}" for s in sorted(iv.parikh))
            lines.append(f"{iv.b}\t{iv.e}\t{iv.length}\t{suffix}\t{parikh}")
        return "\n".join(lines) + "\n"


def _rotation_scan(c: Collection):
    """Rotation order of {T_i $}: returns (sa, ulen, owner, lsym, mask)
    over flat positions; ulen is the length of the string suffix each
    rotation starts with, owner its 1-based input index, lsym the display
    symbol preceding the rotation."""
    seqs = c.seqs()
    k = len(seqs)
    order = lex_order(seqs)
    shift = k + 1
    data = array("i")
    collapsed = bytearray()
    ulen = array("i")
    owner = array("i")
    for rank_pos, orig in enumerate(order, start=1):
        s = seqs[orig]
        m = len(s)
        for off in range(m):
            ulen.append(m - off)
            owner.append(orig + 1)
        ulen.append(0)
        owner.append(orig + 1)
        collapsed.extend(s)
        collapsed.append(SEP_BYTE)
        data.extend([b + shift for b in s])
        data.append(rank_pos)
    sa = suffix_array(data, shift + 256)
    n = len(data)
    lsym = bytearray(n)
    for r in range(n):
        p = sa[r]
        v = data[p - 1] if p else data[n - 1]
        lsym[r] = SEP_BYTE if v <= k else v - shift
    mask = shared_suffix_mask(bytes(collapsed), sa, ulen)
    return sa, ulen, owner, lsym, mask


def interesting_intervals(c: Collection) -> IntervalReport:
    c.require_valid()
    seqs = c.seqs()
    sa, ulen, owner, lsym, mask = _rotation_scan(c)
    n = len(sa)
    intervals: list[InterestingInterval] = []
    r = 0
    while r < n:
        end = r
        while end < n - 1 and mask[end]:
            end += 1
        if end > r:
            parikh: dict[str, int] = {}
            for t in range(r, end + 1):
                sym = SEP_SYMBOL if lsym[t] == SEP_BYTE else chr(lsym[t])
                parikh[sym] = parikh.get(sym, 0) + 1
            if len(parikh) >= 2:
                p = sa[r]
                seq = seqs[owner[p] - 1]
                suffix = seq[len(seq) - ulen[p]:] if ulen[p] else b""
                intervals.append(
                    InterestingInterval(
                        b=r + 1,
                        e=end + 1,
                        shared_suffix=suffix,
                        parikh=parikh,
                        members=tuple(owner[sa[t]] for t in range(r, end + 1)),
                    )
                )
        r = end + 1
    total = sum(iv.length for iv in intervals)
    fraction = Fraction(total, n) if n else Fraction(0)
    if intervals:
        var = Fraction(sum(max_runs_bound(iv.parikh) for iv in intervals), total)
    else:
        warnings.warn(
            "collection has no interesting intervals; variability is 0 by convention",
            stacklevel=2,
        )
        var = Fraction(0)
    return IntervalReport(
        intervals=tuple(intervals),
        count_intervals=len(intervals),
        total_interval_length=total,
        fraction_positions=fraction,
        variability=var,
    )


def max_runs_bound(parikh: dict) -> int:
    """Largest run count any arrangement of the multiset can reach: with
    n_a the most frequent symbol's count and N_a the rest, every symbol
    can alternate when n_a - 1 <= N_a; otherwise the rare symbols cut the
    frequent one into at most 2 N_a + 1 runs."""
    if not parikh:
        raise ValidationError("empty symbol counts")
    counts = list(parikh.values())
    if any(not isinstance(v, int) or v < 1 for v in counts):
        raise ValidationError("symbol counts must be positive integers")
    total = sum(counts)
    biggest = max(counts)
    rest = total - biggest
    return total if biggest - 1 <= rest else 2 * rest + 1


def variability(c: Collection) -> Fraction:
    return interesting_intervals(c).variability


def hamming_upper_bound(c: Collection) -> int:
    """Positions where two separator-based transforms may differ."""
    return interesting_intervals(c).total_interval_length
