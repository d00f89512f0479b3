"""Efficient builders against the rotation-sorting reference, broadly."""

from hypothesis import given, settings, strategies as st

from bwtvariants import Variant, build, from_seqs, normalize_conc, to_text
from bwtvariants.oracle import naive_rotation_sort

VARIANTS = (
    Variant.EBWT,
    Variant.DOL_EBWT,
    Variant.MDOL_BWT,
    Variant.CONC_BWT,
    Variant.COLEX_BWT,
)

collections = st.lists(
    st.binary(min_size=1, max_size=10).map(lambda b: bytes(65 + (x % 4) for x in b)),
    min_size=1,
    max_size=7,
).map(from_seqs)


@settings(max_examples=150, deadline=None)
@given(collections)
def test_builders_equal_oracle(c):
    for variant in VARIANTS:
        _, want = naive_rotation_sort(variant, c)
        got = build(variant, c)
        assert got.symbols == want.symbols, variant
        assert got.normalized == want.normalized


@settings(max_examples=60, deadline=None)
@given(collections.filter(lambda c: c.k == 1))
def test_single_bwt_equals_oracle(c):
    _, want = naive_rotation_sort(Variant.SINGLE_BWT, c)
    assert build(Variant.SINGLE_BWT, c).symbols == want.symbols


def test_builders_equal_oracle_on_corpus(corpus):
    for c in corpus:
        for variant in VARIANTS:
            _, want = naive_rotation_sort(variant, c)
            assert build(variant, c).symbols == want.symbols, (variant, c.seqs())


def test_normalization_against_oracle(corpus):
    # dropping the terminator row of the raw rotation table is the same
    # as the normalize step on the transform
    for c in corpus[:40]:
        matrix, raw = naive_rotation_sort(Variant.CONC_BWT, c)
        norm = normalize_conc(build(Variant.CONC_BWT, c))
        assert len(raw.symbols) == len(norm.symbols) + 1
        assert to_text(norm) == to_text(raw)[1:].replace("#", "$")
