"""Matroid constructions: uniform, graphic, column matroids, finite geometries."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import lcm
from typing import Sequence

from sympy import isprime

from .errors import InvalidRank, UnsupportedFieldOrder
from .linalg import bareiss_det, echelon_rows
from .matroid import Matroid, UnionFind, _canonical, from_bases, from_bases_unchecked, to_mask


@dataclass(frozen=True)
class GFMatrix:
    p: int
    entries: tuple[tuple[int, ...], ...]

    def __init__(self, p: int, entries: Sequence[Sequence[int]]):
        if not isprime(p):
            raise UnsupportedFieldOrder(f"{p} is not prime")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "entries", tuple(tuple(int(v) % p for v in row) for row in entries))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0


@dataclass(frozen=True)
class RationalMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __init__(self, entries: Sequence[Sequence]):
        object.__setattr__(self, "entries", tuple(tuple(Fraction(v) for v in row) for row in entries))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def integer_rows(self) -> list[list[int]]:
        """Each row scaled by the lcm of its denominators (same column matroid)."""
        out = []
        for row in self.entries:
            m = lcm(*(v.denominator for v in row)) if row else 1
            out.append([int(v * m) for v in row])
        return out

    def columns(self, cols) -> list[list[Fraction]]:
        return [[row[c] for c in cols] for row in self.entries]


def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise InvalidRank(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    return Matroid(n, r, _canonical(n, (to_mask(c) for c in combinations(range(n), r))))


def graphic(edges: Sequence[tuple[int, int]], num_vertices: int | None = None) -> Matroid:
    """Cycle matroid of a multigraph; element i is edge ``edges[i]``."""
    edges = [tuple(e) for e in edges]
    vertices = sorted({v for e in edges for v in e})
    if num_vertices is not None:
        vertices = sorted(set(vertices) | set(range(num_vertices)))
    pos = {v: i for i, v in enumerate(vertices)}
    uf = UnionFind(len(vertices))
    for u, v in edges:
        uf.union(pos[u], pos[v])
    rank = len(vertices) - len({uf.find(i) for i in range(len(vertices))})
    bases = []
    for combo in combinations(range(len(edges)), rank):
        forest = UnionFind(len(vertices))
        for i in combo:
            a, b = pos[edges[i][0]], pos[edges[i][1]]
            ra, rb = forest.find(a), forest.find(b)
            if ra == rb:
                break
            forest.union(ra, rb)
        else:
            bases.append(to_mask(combo))
    return Matroid(len(edges), rank, _canonical(len(edges), bases))


# --- column matroids -------------------------------------------------------


def _row_basis_mod_p(rows: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    M = [[v % p for v in row] for row in rows]
    cols = len(M[0]) if M else 0
    out = []
    for c in range(cols):
        piv = next((i for i in range(len(M)) if M[i][c]), None)
        if piv is None:
            continue
        prow = M.pop(piv)
        inv = pow(prow[c], -1, p)
        prow = [v * inv % p for v in prow]
        for row in M:
            f = row[c]
            if f:
                for j in range(c, cols):
                    row[j] = (row[j] - f * prow[j]) % p
        out.append(prow)
    return out


def _det_mod_p(M: list[list[int]], p: int) -> int:
    M = [list(r) for r in M]
    n = len(M)
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det = det * M[c][c] % p
        inv = pow(M[c][c], -1, p)
        for i in range(c + 1, n):
            f = M[i][c] * inv % p
            if f:
                for j in range(c, n):
                    M[i][j] = (M[i][j] - f * M[c][j]) % p
    return det % p


def _column_matroid(basis_rows: list[list[int]], ncols: int, nonzero_det) -> Matroid:
    k = len(basis_rows)
    bases = []
    for combo in combinations(range(ncols), k):
        sub = [[row[c] for c in combo] for row in basis_rows]
        if k == 0 or nonzero_det(sub):
            bases.append(to_mask(combo))
    return from_bases_unchecked(ncols, bases)


def from_matrix(rep: GFMatrix | RationalMatrix) -> Matroid:
    """Column matroid of a matrix over GF(p) or Q."""
    if isinstance(rep, GFMatrix):
        p = rep.p
        rows = _row_basis_mod_p(rep.entries, p)
        return _column_matroid(rows, rep.cols, lambda sub: _det_mod_p(sub, p) != 0)
    int_rows = rep.integer_rows()
    pivots = echelon_rows({c: v for c, v in enumerate(row) if v} for row in int_rows)
    rows = [[row.get(c, 0) for c in range(rep.cols)] for _, row in sorted(pivots.items())]
    return _column_matroid(rows, rep.cols, lambda sub: bareiss_det(sub) != 0)


def _require_prime(q: int) -> None:
    if not isprime(q):
        raise UnsupportedFieldOrder(f"only prime field orders are supported, got q={q}")


def projective_points(m: int, q: int) -> list[tuple[int, ...]]:
    """Points of PG(m, q) as vectors whose first nonzero coordinate is 1."""
    _require_prime(q)
    pts = []
    for vec in product(range(q), repeat=m + 1):
        lead = next((v for v in vec if v), 0)
        if lead == 1:
            pts.append(vec)
    return pts


def projective_geometry(m: int, q: int) -> Matroid:
    if m < 1:
        raise InvalidRank("projective dimension must be at least 1")
    pts = projective_points(m, q)
    cols = [list(col) for col in zip(*pts)]
    return from_matrix(GFMatrix(q, cols))


def affine_geometry(m: int, q: int) -> Matroid:
    if m < 1:
        raise InvalidRank("affine dimension must be at least 1")
    _require_prime(q)
    pts = [(1,) + x for x in product(range(q), repeat=m)]
    cols = [list(col) for col in zip(*pts)]
    return from_matrix(GFMatrix(q, cols))


def from_nonbases(n: int, r: int, nonbases) -> Matroid:
    """Matroid whose bases are all r-subsets except the listed ones."""
    excluded = {to_mask(s) for s in nonbases}
    return from_bases(n, [m for m in map(to_mask, combinations(range(n), r)) if m not in excluded])


def rank3_from_lines(n: int, lines) -> Matroid:
    """Simple rank-3 matroid given its lines with three or more points."""
    return from_nonbases(n, 3, (t for line in lines for t in combinations(line, 3)))


def free_extension(M: Matroid) -> Matroid:
    """Add element ``n`` in general position: I + n is a basis for every independent (r-1)-set I."""
    new = list(M.bases)
    top = 1 << M.n
    for combo in combinations(range(M.n), M.r - 1):
        mask = to_mask(combo)
        if M.is_independent(mask):
            new.append(mask | top)
    return from_bases(M.n + 1, new)
