"""Degenerate quadrangles and the relation matrices they generate.

A degenerate quadrangle is a prefix S with two disjoint pairs {i, j}, {k, l}
outside S such that S+ik, S+il, S+jl, S+jk are all bases while at most one of
S+ij, S+kl is. Each one gives the multiplicative relation
``a(B1) a(B3) = a(B2) a(B4)`` on stable weightings, hence one row
``+1, -1, +1, -1`` of the plain relation matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Union

from .linalg import IntegerMatrix
from .matroid import Matroid, _bits, elements_of, to_mask


@dataclass(frozen=True, order=True)
class DegenerateQuadrangle:
    """Canonical form: ``i < j``, ``k < l`` and ``(i, j) < (k, l)``."""

    prefix: tuple[int, ...]
    i: int
    j: int
    k: int
    l: int  # noqa: E741

    @property
    def diag1(self) -> tuple[int, int]:
        return (self.i, self.j)

    @property
    def diag2(self) -> tuple[int, int]:
        return (self.k, self.l)

    def cycle(self) -> tuple[int, int, int, int]:
        """Bitmasks of (B1, B2, B3, B4) = (S+ik, S+il, S+jl, S+jk)."""
        s = to_mask(self.prefix)
        i, j, k, l = (1 << self.i), (1 << self.j), (1 << self.k), (1 << self.l)
        return (s | i | k, s | i | l, s | j | l, s | j | k)

    def basis_indices(self, M: Matroid) -> tuple[int, int, int, int]:
        return tuple(M.index[b] for b in self.cycle())

    def epsilon(self) -> int:
        """Parity (mod 2) of the sorting permutations of the four tuples, signs +,-,+,-."""
        s = list(self.prefix)
        total = 0
        for a, b in ((self.i, self.k), (self.i, self.l), (self.j, self.l), (self.j, self.k)):
            total += permutation_parity(s + [a, b])
        return total % 2


def permutation_parity(seq) -> int:
    """Parity of the permutation that sorts ``seq`` (distinct entries)."""
    inversions = 0
    for x in range(len(seq)):
        for y in range(x + 1, len(seq)):
            if seq[x] > seq[y]:
                inversions += 1
    return inversions % 2


def is_degenerate(M: Matroid, q: DegenerateQuadrangle) -> bool:
    """Check the full predicate directly against the basis set."""
    s = to_mask(q.prefix)
    pts = (q.i, q.j, q.k, q.l)
    if len(set(pts)) != 4 or any(s >> e & 1 for e in pts) or len(q.prefix) != M.r - 2:
        return False
    if not all(M.is_basis(b) for b in q.cycle()):
        return False
    d1 = M.is_basis(s | 1 << q.i | 1 << q.j)
    d2 = M.is_basis(s | 1 << q.k | 1 << q.l)
    return not (d1 and d2)


def _canonical_quad(prefix: int, a: tuple[int, int], b: tuple[int, int]) -> DegenerateQuadrangle:
    a, b = tuple(sorted(a)), tuple(sorted(b))
    if b < a:
        a, b = b, a
    return DegenerateQuadrangle(elements_of(prefix), a[0], a[1], b[0], b[1])


def enumerate_degenerate_quadrangles(M: Matroid) -> list[DegenerateQuadrangle]:
    """All degenerate quadrangles, canonical and sorted.

    Prefixes are the sets B - {x, y}; for each prefix the exchange graph on
    E - S has an edge ab iff S+ab is a basis, and every 4-cycle i-k-j-l with at
    most one chord is emitted.
    """
    if M.r < 2:
        return []
    graphs: dict[int, dict[int, int]] = {}
    for b in M.bases:
        elems = elements_of(b)
        for x, y in combinations(elems, 2):
            adj = graphs.setdefault(b & ~(1 << x | 1 << y), {})
            adj[x] = adj.get(x, 0) | 1 << y
            adj[y] = adj.get(y, 0) | 1 << x
    found = []
    for prefix, adj in graphs.items():
        verts = sorted(adj)
        for i, j in combinations(verts, 2):
            common = adj[i] & adj[j]
            if popcount_at_least_two(common):
                ij_edge = bool(adj[i] >> j & 1)
                nbrs = [c.bit_length() - 1 for c in _bits(common)]
                for k, l in combinations(nbrs, 2):
                    # each pair of diagonals is seen twice; keep the lex-first
                    if (k, l) < (i, j):
                        continue
                    if ij_edge and adj[k] >> l & 1:
                        continue
                    found.append(DegenerateQuadrangle(elements_of(prefix), i, j, k, l))
    found.sort()
    return found


def popcount_at_least_two(mask: int) -> bool:
    return bool(mask & (mask - 1))


def enumerate_quadrangles_brute_force(M: Matroid) -> list[DegenerateQuadrangle]:
    """Reference enumeration over every (S, i, j, k, l); exponential, small inputs only."""
    if M.r < 2:
        return []
    out = set()
    for prefix in combinations(range(M.n), M.r - 2):
        rest = [e for e in range(M.n) if e not in prefix]
        for i, j, k, l in _ordered_quadruples(rest):
            q = DegenerateQuadrangle(prefix, i, j, k, l)
            if is_degenerate(M, q):
                out.add(_canonical_quad(to_mask(prefix), (i, j), (k, l)))
    return sorted(out)


def _ordered_quadruples(rest):
    for quad in combinations(rest, 4):
        yield from permutations(quad)


# --- relation matrices -----------------------------------------------------

EPSILON_ORDER = "epsilon-order"


@dataclass
class RelationMatrix:
    matrix: IntegerMatrix
    provenance: list[Union[DegenerateQuadrangle, str]]
    signed: bool = False

    @property
    def num_cols(self) -> int:
        return self.matrix.cols


def relation_matrix(M: Matroid, quads: list[DegenerateQuadrangle] | None = None) -> RelationMatrix:
    """One row per quadrangle: +1 at B1, B3 and -1 at B2, B4."""
    if quads is None:
        quads = enumerate_degenerate_quadrangles(M)
    rows = []
    for q in quads:
        b1, b2, b3, b4 = q.basis_indices(M)
        rows.append({b1: 1, b2: -1, b3: 1, b4: -1})
    return RelationMatrix(IntegerMatrix(len(rows), M.basis_count, rows), list(quads))


def signed_tutte_relations(
    M: Matroid, quads: list[DegenerateQuadrangle] | None = None
) -> RelationMatrix:
    """Presentation of the Tutte group on basis generators plus epsilon (last column)."""
    if quads is None:
        quads = enumerate_degenerate_quadrangles(M)
    eps_col = M.basis_count
    rows = []
    for q in quads:
        b1, b2, b3, b4 = q.basis_indices(M)
        row = {b1: 1, b2: -1, b3: 1, b4: -1}
        if q.epsilon():
            row[eps_col] = 1
        rows.append(row)
    rows.append({eps_col: 2})
    provenance: list = list(quads) + [EPSILON_ORDER]
    return RelationMatrix(IntegerMatrix(len(rows), eps_col + 1, rows), provenance, signed=True)


def format_quadrangle(M: Matroid, q: DegenerateQuadrangle) -> str:
    prefix = ",".join(map(str, q.prefix))
    idx = ",".join(map(str, q.basis_indices(M)))
    return (
        f"S={{{prefix}}} diag={{{q.i},{q.j}}}/{{{q.k},{q.l}}} "
        f"bases={idx} eps={q.epsilon()}"
    )


def dump_quadrangles(M: Matroid, quads: list[DegenerateQuadrangle] | None = None) -> str:
    if quads is None:
        quads = enumerate_degenerate_quadrangles(M)
    return "".join(format_quadrangle(M, q) + "\n" for q in quads)
