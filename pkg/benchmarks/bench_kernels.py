"""Timing comparison of the compiled kernels against the pure-Python
fallback. Run directly:

    python3 benchmarks/bench_kernels.py [--size N]

The same functions are loaded twice, once from each backend, so the
numbers are directly comparable on this machine.
"""

from __future__ import annotations

import argparse
import time
from array import array

from bwtvariants import _fallback
from bwtvariants.synth import GenSpec, generate

try:
    from bwtvariants import _native
except ImportError:
    _native = None


def _timed(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=200_000,
                    help="total collection length for the array benchmarks")
    args = ap.parse_args()

    if _native is None:
        print("compiled backend not built; showing fallback only")

    c = generate(GenSpec(seed=42, k=max(2, args.size // 100), length=100,
                         alphabet=b"ACGT", mutation_rate=0.02, suffix_bias=0.3))
    seqs = c.seqs()
    flat = array("i")
    for s in seqs:
        flat.extend(b + 1 for b in s)
        flat.append(1)
    a = bytes(flat[i] % 251 for i in range(len(flat)))
    b = bytearray(a)
    for i in range(0, len(b), 97):
        b[i] = (b[i] + 1) % 251
    b = bytes(b)
    edit_a, edit_b = a[:3000], b[:3000]

    cases = [
        ("suffix_array", lambda m: m.suffix_array(flat, 260)),
        ("conjugate_sort", lambda m: m.conjugate_sort(seqs)),
        ("feasible k=9", lambda m: m.feasible_image_size(9)),
        ("hamming", lambda m: m.hamming(a, b)),
        ("edit_distance 3k", lambda m: m.edit_distance(edit_a, edit_b)),
    ]

    width = max(len(n) for n, _ in cases)
    header = f"{'kernel':<{width}}  {'pure':>10}  {'native':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, call in cases:
        t_pure, ref = _timed(call, _fallback)
        if _native is not None:
            t_nat, got = _timed(call, _native)
            same = list(got) == list(ref) if hasattr(ref, "__iter__") else got == ref
            flag = "" if same else "  !! MISMATCH"
            print(f"{name:<{width}}  {t_pure:>9.4f}s  {t_nat:>9.4f}s  "
                  f"{t_pure / t_nat:>7.1f}x{flag}")
        else:
            print(f"{name:<{width}}  {t_pure:>9.4f}s  {'-':>10}  {'-':>8}")


if __name__ == "__main__":
    main()
