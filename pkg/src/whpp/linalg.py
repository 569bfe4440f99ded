"""Exact integer linear algebra: rank over Q and Smith normal form over Z.

Everything runs on Python integers; there is no floating point in this module.
Matrices are stored as sparse rows (``{col: value}``), which suits the relation
matrices (four or five nonzeros per row) and keeps elimination cheap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

import numpy as np


@dataclass
class IntegerMatrix:
    rows: int
    cols: int
    data: list[dict[int, int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.data:
            self.data = [{} for _ in range(self.rows)]
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        for row in self.data:
            for c, v in row.items():
                if not 0 <= c < self.cols:
                    raise ValueError(f"column {c} out of range for {self.cols} columns")
        self.data = [{c: v for c, v in row.items() if v} for row in self.data]

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        if cols is None:
            cols = len(dense[0]) if dense else 0
        data = [{c: int(v) for c, v in enumerate(row) if v} for row in dense]
        return cls(len(dense), cols, data)

    def to_dense(self) -> list[list[int]]:
        out = []
        for row in self.data:
            dense = [0] * self.cols
            for c, v in row.items():
                dense[c] = v
            out.append(dense)
        return out

    def transpose(self) -> "IntegerMatrix":
        data: list[dict[int, int]] = [{} for _ in range(self.cols)]
        for i, row in enumerate(self.data):
            for c, v in row.items():
                data[c][i] = v
        return IntegerMatrix(self.cols, self.rows, data)

    def dump(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines.extend(" ".join(map(str, row)) for row in self.to_dense())
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "IntegerMatrix":
        tokens = text.split()
        rows, cols = int(tokens[0]), int(tokens[1])
        values = [int(t) for t in tokens[2:]]
        if len(values) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, found {len(values)}")
        dense = [values[i * cols:(i + 1) * cols] for i in range(rows)]
        return cls.from_dense(dense, cols)


@dataclass(frozen=True)
class AbelianInvariants:
    """``Z^free_rank + Z/d1 + ... + Z/dk`` with ``d1 | d2 | ... | dk``, each ``di >= 2``."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self):
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) or "0"


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _combine(a: dict[int, int], x: int, b: dict[int, int], y: int) -> dict[int, int]:
    """Return ``x*a + y*b`` with zeros dropped."""
    out = {c: x * v for c, v in a.items()} if x != 1 else dict(a)
    for c, v in b.items():
        s = out.get(c, 0) + y * v
        if s:
            out[c] = s
        else:
            out.pop(c, None)
    return out


def echelon_rows(rows: Iterable[dict[int, int]]) -> dict[int, dict[int, int]]:
    """Integer-preserving reduced echelon basis of the row space.

    Returns ``{pivot column: row}``; every pivot row is zero on every other
    pivot column, so an incoming row is reduced in a single pass. Rows are
    kept primitive (content 1) to bound growth.
    """
    pivots: dict[int, dict[int, int]] = {}
    for original in rows:
        row = dict(original)
        for c in [c for c in row if c in pivots]:
            a = row.get(c)
            if not a:
                continue
            p = pivots[c]
            b = p[c]
            g = gcd(a, b)
            row = _combine(row, b // g, p, -(a // g))
        if not row:
            continue
        row = _primitive(row)
        c = min(row)
        if row[c] < 0:
            row = {k: -v for k, v in row.items()}
        lead = row[c]
        for k, p in list(pivots.items()):
            a = p.get(c)
            if a:
                g = gcd(a, lead)
                pivots[k] = _primitive(_combine(p, lead // g, row, -(a // g)))
        pivots[c] = row
    return pivots


def rank_rational(A: IntegerMatrix) -> int:
    """Rank over Q by exact fraction-free elimination."""
    return len(echelon_rows(A.data))


def nullity_rational(A: IntegerMatrix) -> int:
    return A.cols - rank_rational(A)


def bareiss_rank(dense: Sequence[Sequence[int]]) -> int:
    """Dense Bareiss elimination; an independent route to the rank."""
    M = [list(r) for r in dense]
    if not M:
        return 0
    rows, cols = len(M), len(M[0])
    rank = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][c]
        for i in range(rank + 1, rows):
            f = M[i][c]
            row_i, row_r = M[i], M[rank]
            for j in range(c, cols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def bareiss_det(dense: Sequence[Sequence]) -> object:
    """Determinant of a square matrix over Z (or Q, entries as Fractions)."""
    M = [list(r) for r in dense]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = num // prev if isinstance(num, int) else num / prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rank_modular(A: IntegerMatrix, p: int) -> int:
    """Rank over GF(p); ``p`` must be a prime below 2**31."""
    if A.rows == 0 or A.cols == 0:
        return 0
    M = np.zeros((A.rows, A.cols), dtype=np.int64)
    for i, row in enumerate(A.data):
        for c, v in row.items():
            M[i, c] = v % p
    rank = 0
    for c in range(A.cols):
        nz = np.nonzero(M[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            M[[rank, piv]] = M[[piv, rank]]
        inv = pow(int(M[rank, c]), -1, p)
        M[rank] = (M[rank] * inv) % p
        idx = rank + 1 + np.nonzero(M[rank + 1:, c])[0]
        if idx.size:
            M[idx] = (M[idx] - np.outer(M[idx, c], M[rank])) % p
        rank += 1
        if rank == A.rows:
            break
    return rank


_WORD_PRIMES = (2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549)


def random_word_primes(k: int, seed: int = 0) -> list[int]:
    return random.Random(seed).sample(_WORD_PRIMES, k)


# --- Smith normal form -----------------------------------------------------


def _dense_diagonalize(M: list[list[int]]) -> list[int]:
    """Diagonalize by unimodular row/column ops with minimal-|pivot| selection."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    diag = []
    t = 0
    while t < rows and t < cols:
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = M[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        M[t], M[i] = M[i], M[t]
        for row in M:
            row[t], row[j] = row[j], row[t]
        while True:
            p = M[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if M[i][t]:
                    q = M[i][t] // p
                    if q:
                        row_i, row_t = M[i], M[t]
                        for j in range(t, cols):
                            row_i[j] -= q * row_t[j]
                    if M[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if M[t][j]:
                    q = M[t][j] // p
                    if q:
                        for row in M[t:]:
                            row[j] -= q * row[t]
                    if M[t][j]:
                        dirty = True
            if not dirty:
                break
            # move the smallest leftover in row/column t to the pivot
            cand = [(abs(M[i][t]), i, t) for i in range(t + 1, rows) if M[i][t]]
            cand += [(abs(M[t][j]), t, j) for j in range(t + 1, cols) if M[t][j]]
            _, i, j = min(cand)
            if j == t:
                M[t], M[i] = M[i], M[t]
            else:
                for row in M:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(M[t][t]))
        t += 1
    return diag


def _normalize_chain(diag: list[int]) -> list[int]:
    """Turn any nonzero diagonal into invariant factors d1 | d2 | ..."""
    d = sorted(diag)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                g = gcd(d[i], d[j])
                if g != d[i]:
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        d.sort()
    return d


def invariant_factors(A: IntegerMatrix) -> list[int]:
    """All nonzero diagonal entries of the Smith normal form, in divisibility order."""
    rows = [dict(r) for r in A.data if r]
    col_rows: dict[int, set[int]] = {}
    for i, row in enumerate(rows):
        for c in row:
            col_rows.setdefault(c, set()).add(i)
    alive = set(range(len(rows)))
    units = 0

    # unit pivots: clear the pivot column by row ops, then the pivot row
    # can be cleared by column ops without touching any other row
    while True:
        best = None
        for i in alive:
            row = rows[i]
            for c, v in row.items():
                if v == 1 or v == -1:
                    cost = (len(row) - 1) * (len(col_rows[c]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, c)
                        if cost == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, i, c = best
        piv = rows[i]
        u = piv[c]
        for k in list(col_rows[c]):
            if k == i:
                continue
            row = rows[k]
            f = row[c] * u
            for cc, v in piv.items():
                s = row.get(cc, 0) - f * v
                if s:
                    if cc not in row:
                        col_rows[cc].add(k)
                    row[cc] = s
                else:
                    if cc in row:
                        del row[cc]
                        col_rows[cc].discard(k)
            if not row:
                alive.discard(k)
        for cc in piv:
            col_rows[cc].discard(i)
        alive.discard(i)
        rows[i] = {}
        units += 1

    residual = [rows[i] for i in sorted(alive) if rows[i]]
    if not residual:
        return [1] * units
    used_cols = sorted({c for row in residual for c in row})
    pos = {c: j for j, c in enumerate(used_cols)}
    dense = []
    for row in residual:
        d = [0] * len(used_cols)
        for c, v in row.items():
            d[pos[c]] = v
        dense.append(d)
    return [1] * units + _normalize_chain(_dense_diagonalize(dense))


def smith_normal_form(A: IntegerMatrix) -> AbelianInvariants:
    """Invariants of the abelian group with ``A.cols`` generators and the rows of A as relations."""
    factors = invariant_factors(A)
    return AbelianInvariants(
        free_rank=A.cols - len(factors),
        torsion=tuple(d for d in factors if d > 1),
    )
