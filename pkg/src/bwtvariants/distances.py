"""Pairwise distances between transforms of the same collection."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal

from . import kernels
from ._fmt import fmt
from .errors import GuardError, ValidationError
from .transforms import Transform, Variant


def hamming(a: Transform, b: Transform) -> int:
    """Positional mismatch count. Defined only for equal-length
    transforms, which in practice means the separator-based ones."""
    if len(a) != len(b):
        raise ValidationError(
            f"Hamming distance needs equal lengths, got {len(a)} and {len(b)}"
        )
    return kernels.hamming(a.symbols, b.symbols)


def edit_distance(a: Transform, b: Transform, max_cells: int = 10**8) -> int:
    """Unit-cost Levenshtein distance between the symbol strings."""
    if (len(a) + 1) * (len(b) + 1) > max_cells:
        raise GuardError(
            f"edit distance table {len(a)}x{len(b)} exceeds {max_cells} cells"
        )
    return kernels.edit_distance(a.symbols, b.symbols)


@dataclass(frozen=True)
class DistanceMatrix:
    kind: str  # "hamming" or "edit"
    labels: tuple[str, ...]
    absolute: tuple[tuple[int, ...], ...]
    normalized: tuple[tuple[Decimal, ...], ...]  # distance / max length, 5 dp

    def to_tsv(self) -> str:
        lines = ["\t".join([self.kind] + list(self.labels))]
        for i, lab in enumerate(self.labels):
            row = [lab]
            for j in range(len(self.labels)):
                if j < i:
                    row.append(str(self.normalized[i][j]))
                elif j == i:
                    row.append("0")
                else:
                    row.append(str(self.absolute[i][j]))
            lines.append("\t".join(row))
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "labels": list(self.labels),
            "absolute": [list(r) for r in self.absolute],
            "normalized": [[str(x) for x in r] for r in self.normalized],
        }


def distance_matrix(
    ts: list[Transform], kind: str = "hamming", max_cells: int = 10**8
) -> DistanceMatrix:
    """All-pairs distances; normalized entries divide by the longer
    operand and are rounded half-up to five decimals."""
    if not ts:
        raise ValidationError("no transforms given")
    if kind not in ("hamming", "edit"):
        raise ValidationError(f"unknown distance kind {kind!r}")
    if kind == "hamming":
        bad = [t.variant.value for t in ts if not t.variant.separator_based]
        if bad:
            raise ValidationError(
                "Hamming matrix is defined on separator-based transforms only, got "
                + ", ".join(bad)
            )
    m = len(ts)
    absolute = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if kind == "hamming":
                d = hamming(ts[i], ts[j])
            else:
                d = edit_distance(ts[i], ts[j], max_cells=max_cells)
            absolute[i][j] = absolute[j][i] = d
    normalized = [
        [
            Decimal(fmt(0, 5)) if i == j
            else Decimal(fmt(absolute[i][j] / Decimal(max(len(ts[i]), len(ts[j]))), 5))
            for j in range(m)
        ]
        for i in range(m)
    ]
    return DistanceMatrix(
        kind=kind,
        labels=tuple(t.variant.value for t in ts),
        absolute=tuple(tuple(r) for r in absolute),
        normalized=tuple(tuple(r) for r in normalized),
    )
