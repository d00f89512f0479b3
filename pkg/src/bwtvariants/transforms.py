"""Builders and inverters for the BWT variants.

Five variants for a collection M = (T_1, ..., T_k), plus the classic
single-string BWT:

  ebwt        last symbols of all conjugates of all T_i in omega order;
              length N, no sentinels, independent of input order.
  dol_ebwt    ebwt of {T_i $}: one shared separator per string; equal to
              the multidollar BWT of the lexicographically sorted
              collection, which is how it is built here.
  mdol_bwt    BWT of T_1 $_1 T_2 $_2 ... T_k $_k with distinct separators
              ordered $_1 < $_2 < ...; output shows them as one symbol.
  conc_bwt    BWT of T_1 $ T_2 $ ... T_k $ # with equal separators and a
              final terminator smaller than everything. The raw transform
              has length N+k+1; normalization drops the first symbol
              (always a separator) and rewrites # to $, giving N+k.
  colex_bwt   mdol_bwt of the collection sorted colexicographically.
  single_bwt  rotation-sort BWT of a single string, no sentinel.

Internally separators are byte 0x01 and the terminator byte 0x00; the
text form renders them '$' and '#'.
"""

from __future__ import annotations

import enum
from array import array
from dataclasses import dataclass

from .collection import SEP_BYTE, TERM_BYTE, Collection, from_seqs
from .errors import TransformError, ValidationError
from .kernels import conjugate_sort, suffix_array
from .ordering import colex_order, lex_order


class Variant(enum.Enum):
    EBWT = "ebwt"
    DOL_EBWT = "dol_ebwt"
    MDOL_BWT = "mdol_bwt"
    CONC_BWT = "conc_bwt"
    COLEX_BWT = "colex_bwt"
    SINGLE_BWT = "single_bwt"

    @property
    def separator_based(self) -> bool:
        return self in _SEPARATOR_BASED

    @classmethod
    def from_name(cls, name: str) -> "Variant":
        key = name.strip().lower().replace("-", "_")
        try:
            return _VARIANT_NAMES[key]
        except KeyError:
            raise ValidationError(f"unknown variant {name!r}") from None


_SEPARATOR_BASED = frozenset(
    {Variant.DOL_EBWT, Variant.MDOL_BWT, Variant.CONC_BWT, Variant.COLEX_BWT}
)

_VARIANT_NAMES = {v.value: v for v in Variant}
_VARIANT_NAMES.update(
    {
        "dol": Variant.DOL_EBWT,
        "dolebwt": Variant.DOL_EBWT,
        "mdol": Variant.MDOL_BWT,
        "mdolbwt": Variant.MDOL_BWT,
        "conc": Variant.CONC_BWT,
        "concbwt": Variant.CONC_BWT,
        "colex": Variant.COLEX_BWT,
        "colexbwt": Variant.COLEX_BWT,
        "single": Variant.SINGLE_BWT,
        "bwt": Variant.SINGLE_BWT,
    }
)


@dataclass(frozen=True)
class Transform:
    variant: Variant
    symbols: bytes
    source_k: int
    source_n: int
    normalized: bool = True

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def text(self) -> str:
        return to_text(self)


def to_text(t: Transform) -> str:
    return (
        t.symbols.replace(TERM_BYTE.to_bytes(1, "big"), b"#")
        .replace(SEP_BYTE.to_bytes(1, "big"), b"$")
        .decode("latin-1")
    )


def from_text(text: str, variant: Variant) -> Transform:
    """Parse the display form ('$' separator, '#' terminator) back into a
    Transform, inferring k and the normalization state from the content."""
    raw = text.strip().encode("latin-1")
    symbols = raw.replace(b"$", SEP_BYTE.to_bytes(1, "big")).replace(
        b"#", TERM_BYTE.to_bytes(1, "big")
    )
    if not symbols:
        raise TransformError("empty transform text")
    k = symbols.count(SEP_BYTE)
    terms = symbols.count(TERM_BYTE)
    if variant in _SEPARATOR_BASED:
        if terms and variant is not Variant.CONC_BWT:
            raise TransformError("terminator symbol only occurs in raw conc_bwt")
        if variant is Variant.CONC_BWT and terms > 1:
            raise TransformError("raw conc_bwt contains exactly one terminator")
        if k == 0:
            raise TransformError("separator-based transform without separators")
        normalized = terms == 0
        return Transform(variant, symbols, k, len(symbols) - k - terms, normalized)
    if k or terms:
        raise TransformError(f"{variant.value} transform must not contain sentinels")
    if variant is Variant.SINGLE_BWT:
        return Transform(variant, symbols, 1, len(symbols))
    # ebwt: the string count equals the number of LF cycles
    return Transform(variant, symbols, _count_lf_cycles(symbols), len(symbols))


# ---------------------------------------------------------------------------
# builders


def _mdol_symbols(seqs: list[bytes]) -> bytes:
    """Last column of the sorted rotations of T_1 $_1 ... T_k $_k.

    Separators are encoded 1..k so rotation order equals suffix order
    (the largest separator is unique and final); letters are shifted past
    them. Output collapses every separator to SEP_BYTE.
    """
    k = len(seqs)
    shift = k + 1
    data = array("i")
    for i, s in enumerate(seqs, start=1):
        data.extend([b + shift for b in s])
        data.append(i)
    sa = suffix_array(data, shift + 256)
    n = len(data)
    out = bytearray(n)
    for r in range(n):
        p = sa[r]
        v = data[p - 1] if p else data[n - 1]
        out[r] = SEP_BYTE if v <= k else v - shift
    return bytes(out)


def mdol_bwt(c: Collection) -> Transform:
    c.require_valid()
    return Transform(
        Variant.MDOL_BWT, _mdol_symbols(c.seqs()), c.k, c.total_length
    )


def dol_ebwt(c: Collection) -> Transform:
    # With one shared separator below the alphabet, the omega order of the
    # rotations of {T_i $} ties exactly where rotations share a string
    # suffix; the tie resolves by the following strings, i.e. by the
    # lexicographic order of the T_i. Distinct separators indexed by lex
    # rank reproduce that resolution, so this is mdol of the sorted input.
    c.require_valid()
    seqs = c.seqs()
    order = lex_order(seqs)
    return Transform(
        Variant.DOL_EBWT,
        _mdol_symbols([seqs[i] for i in order]),
        c.k,
        c.total_length,
    )


def colex_bwt(c: Collection) -> Transform:
    c.require_valid()
    seqs = c.seqs()
    order = colex_order(seqs)
    return Transform(
        Variant.COLEX_BWT,
        _mdol_symbols([seqs[i] for i in order]),
        c.k,
        c.total_length,
    )


def conc_bwt(c: Collection, normalize: bool = False) -> Transform:
    """Transform of T_1·SEP·...·T_k·SEP·TERM. Raw by default: length
    N+k+1 with the terminator symbol still present."""
    c.require_valid()
    data = array("i")
    for s in c.seqs():
        data.extend([b + 3 for b in s])
        data.append(2)  # separator
    data.append(1)  # terminator, unique and smallest
    sa = suffix_array(data, 259)
    n = len(data)
    out = bytearray(n)
    for r in range(n):
        p = sa[r]
        v = data[p - 1] if p else data[n - 1]
        out[r] = TERM_BYTE if v == 1 else SEP_BYTE if v == 2 else v - 3
    raw = Transform(
        Variant.CONC_BWT, bytes(out), c.k, c.total_length, normalized=False
    )
    return normalize_conc(raw) if normalize else raw


def normalize_conc(t: Transform) -> Transform:
    if t.variant is not Variant.CONC_BWT:
        raise TransformError("normalize_conc applies to conc_bwt transforms")
    if t.normalized:
        raise TransformError("transform is already normalized")
    symbols = t.symbols
    if symbols[0] != SEP_BYTE or symbols.count(TERM_BYTE) != 1:
        raise TransformError("malformed raw conc_bwt")
    trimmed = symbols[1:].replace(
        TERM_BYTE.to_bytes(1, "big"), SEP_BYTE.to_bytes(1, "big")
    )
    return Transform(Variant.CONC_BWT, trimmed, t.source_k, t.source_n)


def _conjugate_last_column(seqs: list[bytes]) -> bytes:
    order = conjugate_sort(seqs)
    data = b"".join(seqs)
    n = len(data)
    start_of = array("i", [0]) * n
    slen = array("i", [0]) * n
    base = 0
    for s in seqs:
        m = len(s)
        for j in range(m):
            start_of[base + j] = base
            slen[base + j] = m
        base += m
    out = bytearray(n)
    for r in range(n):
        p = order[r]
        out[r] = data[p - 1] if p > start_of[p] else data[p + slen[p] - 1]
    return bytes(out)


def ebwt(c: Collection) -> Transform:
    c.require_valid()
    return Transform(
        Variant.EBWT, _conjugate_last_column(c.seqs()), c.k, c.total_length
    )


def single_bwt(c: Collection) -> Transform:
    c.require_valid()
    if c.k != 1:
        raise TransformError("single_bwt takes a one-string collection")
    return Transform(
        Variant.SINGLE_BWT, _conjugate_last_column(c.seqs()), 1, c.total_length
    )


_BUILDERS = {
    Variant.EBWT: ebwt,
    Variant.DOL_EBWT: dol_ebwt,
    Variant.MDOL_BWT: mdol_bwt,
    Variant.CONC_BWT: conc_bwt,
    Variant.COLEX_BWT: colex_bwt,
    Variant.SINGLE_BWT: single_bwt,
}


def build(variant: Variant, c: Collection) -> Transform:
    """Dispatch to the variant's builder. The concatenation variant
    comes back raw; apply normalize_conc for the comparable form."""
    return _BUILDERS[variant](c)


# ---------------------------------------------------------------------------
# inversion


def _lf_table(symbols: bytes) -> array:
    counts = [0] * 256
    for b in symbols:
        counts[b] += 1
    first = [0] * 256
    acc = 0
    for v in range(256):
        first[v] = acc
        acc += counts[v]
    lf = array("i", [0]) * len(symbols)
    seen = [0] * 256
    for r, b in enumerate(symbols):
        lf[r] = first[b] + seen[b]
        seen[b] += 1
    return lf


def invert_separator_based(t: Transform) -> Collection:
    """Recover the k strings by walking the LF mapping left from each of
    the first k rows (the rotations that start with a separator).

    Output order is the variant's separator order: input order for
    mdol_bwt, lexicographic for dol_ebwt, colexicographic for colex_bwt,
    and the induced dollar order for normalized conc_bwt. Ids are not
    stored in a transform, so the result carries fresh numeric ids.
    """
    if t.variant not in _SEPARATOR_BASED:
        raise TransformError(f"{t.variant.value} is not separator-based")
    if not t.normalized:
        raise TransformError("normalize the conc_bwt transform before inverting")
    symbols = t.symbols
    if TERM_BYTE in symbols:
        raise TransformError("unexpected terminator symbol")
    k = symbols.count(SEP_BYTE)
    if k == 0:
        raise TransformError("no separators to anchor the inversion")
    n = len(symbols)
    lf = _lf_table(symbols)
    seqs: list[bytes] = []
    recovered = 0
    for row in range(k):
        out = bytearray()
        r = row
        steps = 0
        while symbols[r] != SEP_BYTE:
            out.append(symbols[r])
            r = lf[r]
            steps += 1
            if steps > n:
                raise TransformError("malformed transform: LF walk does not close")
        if not out:
            raise TransformError("malformed transform: empty sequence recovered")
        out.reverse()
        seqs.append(bytes(out))
        recovered += len(out)
    if recovered + k != n:
        raise TransformError("malformed transform: symbols left over after inversion")
    return from_seqs(seqs)


def _count_lf_cycles(symbols: bytes) -> int:
    lf = _lf_table(symbols)
    seen = bytearray(len(symbols))
    cycles = 0
    for s in range(len(symbols)):
        if seen[s]:
            continue
        cycles += 1
        r = s
        while not seen[r]:
            seen[r] = 1
            r = lf[r]
    return cycles


def least_rotation(s: bytes) -> bytes:
    """Booth's algorithm; linear time."""
    if not s:
        return s
    b = s + s
    n = len(s)
    f = [-1] * len(b)
    least = 0
    for j in range(1, len(b)):
        sj = b[j]
        i = f[j - least - 1]
        while i != -1 and sj != b[least + i + 1]:
            if sj < b[least + i + 1]:
                least = j - i - 1
            i = f[i]
        if sj != b[least + i + 1]:
            if sj < b[least]:
                least = j
            f[j - least] = -1
        else:
            f[j - least] = i + 1
    return b[least:least + n]


def invert_ebwt(t: Transform) -> list[bytes]:
    """Decompose the LF permutation into cycles; every cycle spells one
    primitive string. Each is emitted as its least rotation and the list
    is sorted, so inputs are recovered up to rotation, with non-primitive
    inputs collapsing to copies of their root."""
    if t.variant not in (Variant.EBWT, Variant.SINGLE_BWT):
        raise TransformError("invert_ebwt applies to ebwt / single_bwt transforms")
    symbols = t.symbols
    if SEP_BYTE in symbols or TERM_BYTE in symbols:
        raise TransformError("ebwt transform must not contain sentinels")
    lf = _lf_table(symbols)
    seen = bytearray(len(symbols))
    words: list[bytes] = []
    for s in range(len(symbols)):
        if seen[s]:
            continue
        chars = bytearray()
        r = s
        while not seen[r]:
            seen[r] = 1
            chars.append(symbols[r])
            r = lf[r]
        chars.reverse()
        words.append(least_rotation(bytes(chars)))
    words.sort()
    return words
