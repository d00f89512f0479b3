"""Synthetic collection generator: determinism and knob behavior."""

import warnings

import pytest

from bwtvariants import GenSpec, ValidationError, generate, interesting_intervals
from bwtvariants.synth import _Stream


def test_stream_reference_values():
    # splitmix64 sequence from seed 0
    s = _Stream(0)
    assert s.next64() == 0xE220A8397B1DCDAF
    assert s.next64() == 0x6E789E6AA1B965F4
    assert s.next64() == 0x06C45D188009454F


def test_below_and_chance_bounds():
    s = _Stream(42)
    draws = [s.below(7) for _ in range(200)]
    assert all(0 <= d < 7 for d in draws)
    assert set(draws) == set(range(7))
    s = _Stream(43)
    assert not any(s.chance(0.0) for _ in range(50))
    assert all(s.chance(1.0) for _ in range(50))


def test_generate_is_deterministic():
    spec = GenSpec(seed=11, k=6, length=(5, 30), mutation_rate=0.1, suffix_bias=0.4)
    a = generate(spec)
    b = generate(spec)
    assert a.seqs() == b.seqs()
    c = generate(GenSpec(seed=12, k=6, length=(5, 30), mutation_rate=0.1, suffix_bias=0.4))
    assert a.seqs() != c.seqs()


def test_generate_shapes():
    c = generate(GenSpec(seed=1, k=4, length=25))
    assert c.k == 4
    assert all(len(s) == 25 for s in c.seqs())
    c = generate(GenSpec(seed=2, k=40, length=(3, 9)))
    lens = [len(s) for s in c.seqs()]
    assert all(3 <= ln <= 9 for ln in lens)
    assert len(set(lens)) > 1
    c.require_valid()


def test_zero_rates_give_identical_copies():
    c = generate(GenSpec(seed=5, k=5, length=12, mutation_rate=0.0, suffix_bias=0.0))
    seqs = c.seqs()
    assert len(set(seqs)) == 1


def test_variable_lengths_without_mutation_share_suffixes():
    c = generate(GenSpec(seed=5, k=5, length=(4, 12)))
    seqs = sorted(c.seqs(), key=len)
    longest = seqs[-1]
    assert all(longest.endswith(s) for s in seqs)


def test_full_mutation_changes_every_position():
    base = generate(GenSpec(seed=9, k=2, length=30, mutation_rate=0.0)).seqs()[0]
    mutated = generate(GenSpec(seed=9, k=2, length=30, mutation_rate=1.0)).seqs()
    for s in mutated:
        assert all(a != b for a, b in zip(s, base))


def test_single_symbol_alphabet():
    c = generate(GenSpec(seed=3, k=3, length=8, alphabet=b"A", mutation_rate=0.7))
    assert c.seqs() == [b"A" * 8] * 3


def test_custom_alphabet():
    c = generate(GenSpec(seed=4, k=3, length=20, alphabet=b"xy", mutation_rate=0.5))
    assert set(b"".join(c.seqs())) <= {ord("x"), ord("y")}


def test_suffix_bias_plants_long_shared_suffixes():
    # random 4-letter strings rarely share a suffix of length 3 or more,
    # so the planted copies dominate that statistic
    def mean_long_intervals(bias):
        total = 0
        for seed in range(30):
            c = generate(
                GenSpec(seed=seed, k=8, length=40, mutation_rate=1.0, suffix_bias=bias)
            )
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                rep = interesting_intervals(c)
            total += sum(1 for iv in rep.intervals if len(iv.shared_suffix) >= 3)
        return total / 30

    assert mean_long_intervals(1.0) > mean_long_intervals(0.0) + 1.5


def test_generate_validation():
    with pytest.raises(ValidationError):
        generate(GenSpec(seed=0, k=0))
    with pytest.raises(ValidationError):
        generate(GenSpec(seed=0, k=1, alphabet=b""))
    with pytest.raises(ValidationError):
        generate(GenSpec(seed=0, k=1, alphabet=b"AA"))
    with pytest.raises(ValidationError, match="reserved"):
        generate(GenSpec(seed=0, k=1, alphabet=b"A$"))
    with pytest.raises(ValidationError):
        generate(GenSpec(seed=0, k=1, mutation_rate=1.5))
    with pytest.raises(ValidationError):
        generate(GenSpec(seed=0, k=1, suffix_bias=-0.1))
    with pytest.raises(ValidationError):
        generate(GenSpec(seed=0, k=1, length=0))
    with pytest.raises(ValidationError):
        generate(GenSpec(seed=0, k=1, length=(5, 2)))
