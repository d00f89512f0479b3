"""Brute-force reference implementations used as ground truth.

Everything here materializes rotations explicitly or enumerates whole
search spaces; nothing is shared with the efficient builders, so the two
sides can check each other. Quadratic memory in the collection size:
guarded, and meant for small inputs only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .collection import Collection, SEP_BYTE, TERM_BYTE
from .errors import GuardError, ValidationError
from .ordering import RotationRef, colex_order
from .permutations import Perm
from .runs import count_runs
from .transforms import Transform, Variant, mdol_bwt

SEP_TEXT_CH = "$"
TERM_TEXT_CH = "#"


@dataclass(frozen=True)
class RotationMatrix:
    variant: Variant
    rows: tuple[tuple[RotationRef, str, str], ...]  # (ref, rotation, last)


def _cycle(ints, upto):
    reps = -(-upto // len(ints))
    return tuple(ints * reps)[:upto]


def _local_rows(seqs, sentinel_of, display_of, key_upto=None):
    """Rows for per-string rotation sorting. Each string is extended by
    its sentinel ints (empty for plain conjugates); every rotation is
    keyed either by itself (a sentinel makes rotations prefix-free) or
    by its cyclic extension when key_upto is set."""
    entries = []
    for i, seq in enumerate(seqs, start=1):
        ints = [int(b) for b in seq] + sentinel_of(i)
        m = len(ints)
        for j in range(1, m + 1):
            rot = ints[j - 1:] + ints[:j - 1]
            key = _cycle(rot, key_upto) if key_upto else tuple(rot)
            entries.append((key + (i, j), RotationRef(i, j), rot))
    entries.sort(key=lambda e: e[0])
    rows = []
    last_ints = []
    for _, ref, rot in entries:
        rows.append((ref, "".join(display_of(v) for v in rot), display_of(rot[-1])))
        last_ints.append(rot[-1])
    return rows, last_ints


def naive_rotation_sort(v: Variant, c: Collection, max_n: int = 4000):
    """Sort every rotation explicitly and read off the last column.

    Returns (RotationMatrix, Transform). Matrix rows hold the rotation's
    full wrap-around content; multidollar variants show per-string
    rotations (the distinct sentinels make these sort identically to the
    rotations of the whole concatenation) with sentinels displayed as
    '$_i'. The concatenation variant keys rows by absolute position,
    RotationRef(0, position), and includes the terminator row: its
    transform is the raw, unnormalized one.
    """
    c.require_valid()
    if c.total_length > max_n:
        raise GuardError(
            f"collection length {c.total_length} exceeds oracle guard {max_n}"
        )
    seqs = c.seqs()
    k = c.k
    maxlen = max(len(s) for s in seqs)

    def plain(iv: int) -> str:
        return chr(iv)

    if v in (Variant.EBWT, Variant.SINGLE_BWT):
        if v is Variant.SINGLE_BWT and k != 1:
            raise ValidationError("single-string transform needs exactly one string")
        rows, last = _local_rows(
            seqs, lambda i: [], plain, key_upto=2 * maxlen
        )
        symbols = bytes(last)
        normalized = True
    elif v is Variant.DOL_EBWT:
        def disp(iv: int) -> str:
            return SEP_TEXT_CH if iv == SEP_BYTE else chr(iv)

        rows, last = _local_rows(
            seqs, lambda i: [SEP_BYTE], disp, key_upto=2 * (maxlen + 1)
        )
        symbols = bytes(last)
        normalized = True
    elif v in (Variant.MDOL_BWT, Variant.COLEX_BWT):
        local = seqs
        if v is Variant.COLEX_BWT:
            local = [seqs[i] for i in colex_order(seqs)]
        # letters shifted above the k dollar codes so $_1 < ... < $_k < alphabet
        encoded = [[b + k + 1 for b in seq] for seq in local]

        def disp_md(iv: int) -> str:
            return f"$_{iv}" if iv <= k else chr(iv - k - 1)

        rows, last = _local_rows(
            encoded,
            lambda i: [i],
            disp_md,
            key_upto=None,  # distinct sentinels: rotations are prefix-free
        )
        symbols = bytes(SEP_BYTE if x <= k else x - k - 1 for x in last)
        normalized = True
    elif v is Variant.CONC_BWT:
        ints: list[int] = []
        for seq in seqs:
            ints.extend(seq)
            ints.append(SEP_BYTE)
        ints.append(TERM_BYTE)
        n = len(ints)

        def disp_c(iv: int) -> str:
            if iv == TERM_BYTE:
                return TERM_TEXT_CH
            if iv == SEP_BYTE:
                return SEP_TEXT_CH
            return chr(iv)

        entries = []
        for p in range(1, n + 1):
            rot = ints[p - 1:] + ints[:p - 1]
            entries.append((tuple(rot), RotationRef(0, p), rot))
        entries.sort(key=lambda e: e[0])
        rows = []
        last = []
        for _, ref, rot in entries:
            rows.append((ref, "".join(disp_c(x) for x in rot), disp_c(rot[-1])))
            last.append(rot[-1])
        symbols = bytes(last)
        normalized = False
    else:
        raise ValidationError(f"unknown variant {v!r}")

    t = Transform(
        variant=v,
        symbols=symbols,
        source_k=k,
        source_n=c.total_length,
        normalized=normalized,
    )
    return RotationMatrix(v, tuple(rows)), t


def format_rotation_matrix(m: RotationMatrix) -> str:
    def idx(ref: RotationRef) -> str:
        if ref.string_index == 0:
            return str(ref.offset)
        return f"({ref.string_index},{ref.offset})"

    cells = [(idx(r), last, rot) for r, rot, last in m.rows]
    w0 = max(len("index"), max(len(a) for a, _, _ in cells))
    w1 = max(len("last"), max(len(b) for _, b, _ in cells))
    lines = [f"{'index':>{w0}} | {'last':>{w1}} | rotation"]
    for a, b, rot in cells:
        lines.append(f"{a:>{w0}} | {b:>{w1}} | {rot}")
    return "\n".join(lines) + "\n"


def brute_force_optimal_runs(c: Collection, max_k: int = 8) -> tuple[int, Perm]:
    """Minimum run count over all k! input orders, with the
    lexicographically least order attaining it."""
    c.require_valid()
    if c.k > max_k:
        raise GuardError(f"k={c.k} exceeds brute-force guard {max_k}")
    best_runs = None
    best_perm = None
    for p in permutations(range(c.k)):
        r = count_runs(mdol_bwt(c.reordered(list(p)))).r
        if best_runs is None or r < best_runs:
            best_runs = r
            best_perm = p
    return best_runs, Perm(tuple(i + 1 for i in best_perm))


def brute_force_interval_max_runs(parikh: dict, max_total: int = 12) -> int:
    """Maximum run count over every arrangement of a symbol multiset,
    by exhaustive depth-first enumeration."""
    if not parikh:
        raise ValidationError("empty symbol multiset")
    for sym, cnt in parikh.items():
        if not isinstance(cnt, int) or cnt < 1:
            raise ValidationError(f"count for {sym!r} must be a positive integer")
    total = sum(parikh.values())
    if total > max_total:
        raise GuardError(f"multiset size {total} exceeds guard {max_total}")
    syms = sorted(parikh)
    counts = [parikh[s] for s in syms]

    best = 0

    def walk(remaining: int, last: int, runs: int) -> None:
        nonlocal best
        if remaining == 0:
            best = max(best, runs)
            return
        for idx in range(len(syms)):
            if counts[idx] == 0:
                continue
            counts[idx] -= 1
            walk(remaining - 1, idx, runs + (idx != last))
            counts[idx] += 1

    walk(total, -1, 0)
    return best
