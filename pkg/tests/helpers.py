"""Shared generators for the test suite."""

from __future__ import annotations

import random
from itertools import combinations

from whpp.builders import RationalMatrix, graphic, uniform
from whpp.errors import ExchangeAxiomViolation
from whpp.matroid import (
    Matroid,
    _cooccurrence,
    _signatures,
    direct_sum,
    from_bases,
    is_isomorphic,
    relabel,
    to_mask,
)


def _key(M: Matroid):
    return (M.r, M.basis_count, tuple(sorted(_signatures(_cooccurrence(M)))))


def _dedupe(candidates) -> list[Matroid]:
    buckets: dict = {}
    out = []
    for M in candidates:
        bucket = buckets.setdefault(_key(M), [])
        if all(is_isomorphic(M, N) is None for N in bucket):
            bucket.append(M)
            out.append(M)
    return out


def small_matroids(n_max: int) -> dict[int, list[Matroid]]:
    """One representative per isomorphism class on n = 0..n_max elements.

    Deleting the last element e either leaves a coloop extension or a matroid
    of the same rank whose bases are those of M - e plus {I + e} for some
    family of independent (r-1)-sets I; every such family is tried.
    """
    levels = {0: [from_bases(0, [0])]}
    for n in range(1, n_max + 1):
        top = 1 << (n - 1)
        candidates = []
        for N in levels[n - 1]:
            candidates.append(from_bases(n, [b | top for b in N.bases]))
            if N.r == 0:
                candidates.append(from_bases(n, N.bases))
                continue
            indep = [
                to_mask(c)
                for c in combinations(range(n - 1), N.r - 1)
                if N.is_independent(to_mask(c))
            ]
            for size in range(len(indep) + 1):
                for family in combinations(indep, size):
                    try:
                        candidates.append(from_bases(n, list(N.bases) + [i | top for i in family]))
                    except ExchangeAxiomViolation:
                        pass
        levels[n] = _dedupe(candidates)
    return levels


def random_relabel(M: Matroid, rng: random.Random) -> Matroid:
    perm = list(range(M.n))
    rng.shuffle(perm)
    return relabel(M, perm)


def random_uniform_sum(rng: random.Random, parts: int = 3, n_max: int = 4) -> Matroid:
    M = None
    for _ in range(rng.randint(1, parts)):
        n = rng.randint(1, n_max)
        U = uniform(rng.randint(0, n), n)
        M = U if M is None else direct_sum(M, U)
    return M


def random_graph(rng: random.Random, v_max: int = 6, e_max: int = 9) -> list[tuple[int, int]]:
    nv = rng.randint(2, v_max)
    edges = []
    for _ in range(rng.randint(1, e_max)):
        u, v = rng.randrange(nv), rng.randrange(nv)
        edges.append((u, v))
    return edges


def random_graphic(rng: random.Random) -> Matroid:
    return graphic(random_graph(rng))


def random_full_rank_matrix(rng: random.Random, r: int, cols: int) -> RationalMatrix:
    """Random rational r x cols matrix of rank r (small entries, some zeros)."""
    from whpp.linalg import IntegerMatrix, rank_rational

    while True:
        rows = [
            [rng.choice([0, 0, 1, -1, 2, 3]) * rng.choice([1, 1, 2]) for _ in range(cols)]
            for _ in range(r)
        ]
        if rank_rational(IntegerMatrix.from_dense(rows, cols)) == r:
            den = rng.randint(1, 3)
            from fractions import Fraction

            return RationalMatrix([[Fraction(v, den) for v in row] for row in rows])
