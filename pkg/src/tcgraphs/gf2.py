"""GF(2) linear algebra on int bitsets (bit j of row i = entry (i, j))."""

from __future__ import annotations

from dataclasses import dataclass


def _lowbit_index(x: int) -> int:
    return (x & -x).bit_length() - 1


@dataclass(frozen=True)
class BitMatrix:
    rows: int
    cols: int
    bits: tuple[int, ...]  # one bitset per row, row-major

    def __post_init__(self):
        if len(self.bits) != self.rows:
            raise ValueError("row count mismatch")
        mask = (1 << self.cols) - 1 if self.cols else 0
        for r in self.bits:
            if r & ~mask:
                raise ValueError("row has bits beyond cols")

    @classmethod
    def from_rows(cls, rows: list[int], cols: int) -> "BitMatrix":
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def from_dense(cls, entries: list[list[int]]) -> "BitMatrix":
        cols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            acc = 0
            for j, v in enumerate(row):
                if v & 1:
                    acc |= 1 << j
            rows.append(acc)
        return cls(len(entries), cols, tuple(rows))

    def transpose(self) -> "BitMatrix":
        out = [0] * self.cols
        for i, row in enumerate(self.bits):
            while row:
                low = row & -row
                out[low.bit_length() - 1] |= 1 << i
                row ^= low
        return BitMatrix(self.cols, self.rows, tuple(out))


def _echelon(rows: list[int]) -> list[tuple[int, int]]:
    """Incremental row reduction; returns sorted (pivot_col, row) pairs."""
    basis: list[tuple[int, int]] = []
    for row in rows:
        for pivot, b in basis:
            if (row >> pivot) & 1:
                row ^= b
        if row:
            basis.append((_lowbit_index(row), row))
            basis.sort()
    return basis


def reduce_vector(vec: int, basis: list[tuple[int, int]]) -> int:
    for pivot, b in basis:
        if (vec >> pivot) & 1:
            vec ^= b
    return vec


def rank_of_rows(rows: list[int]) -> int:
    return len(_echelon(list(rows)))


def rank(m: BitMatrix) -> int:
    return rank_of_rows(list(m.bits))


def kernel_basis(m: BitMatrix) -> list[int]:
    """Basis of {x : M x = 0}, vectors as bitsets over the column space.

    Works on the transpose with a combination tracker: column j of m is
    reduced against previous columns while the tracker records which
    columns were combined; a column that reduces to zero yields a kernel
    vector.
    """
    t = m.transpose()
    echelon: list[tuple[int, int, int]] = []  # (pivot, reduced col, combo)
    kernel = []
    for j, col in enumerate(t.bits):
        combo = 1 << j
        for pivot, red, c in echelon:
            if (col >> pivot) & 1:
                col ^= red
                combo ^= c
        if col == 0:
            kernel.append(combo)
        else:
            echelon.append((_lowbit_index(col), col, combo))
            echelon.sort()
    return kernel


def row_space_basis(rows: list[int]) -> list[int]:
    return [b for _, b in _echelon(list(rows))]


def in_row_span(vec: int, rows: list[int]) -> bool:
    return reduce_vector(vec, _echelon(list(rows))) == 0


def quotient_basis(cycles: list[int], boundaries: list[int]) -> list[int]:
    """Representatives of a basis of span(cycles) / span(boundaries).

    Raises ValueError unless the boundaries lie inside the cycle span.
    """
    cycle_ech = _echelon(list(cycles))
    for b in boundaries:
        if reduce_vector(b, cycle_ech) != 0:
            raise ValueError("boundaries not contained in cycle span")
    ech = _echelon(list(boundaries))
    reps = []
    for v in cycles:
        red = reduce_vector(v, ech)
        if red:
            reps.append(v)
            ech.append((_lowbit_index(red), red))
            ech.sort()
    return reps


def bits_to_indices(vec: int) -> tuple[int, ...]:
    out = []
    while vec:
        low = vec & -vec
        out.append(low.bit_length() - 1)
        vec ^= low
    return tuple(out)


def indices_to_bits(indices) -> int:
    acc = 0
    for i in indices:
        acc |= 1 << i
    return acc
