"""Matroids stored by their bases.

Elements are the integers ``0..n-1`` and every basis is an ``int`` bitmask.
The canonical basis order is lexicographic on the sorted element tuples; all
row/column indexing downstream (relation matrices, weight files, dumps) uses
this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

from .errors import (
    DependentContraction,
    ElementOutOfRange,
    EmptyBases,
    ExchangeAxiomViolation,
    NotACircuitHyperplane,
    OverlappingSets,
    UnequalCardinality,
)


def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


@dataclass(frozen=True, eq=False)
class Matroid:
    """A matroid on ``{0, ..., n-1}`` given by its bases (bitmasks, canonical order)."""

    n: int
    r: int
    bases: tuple[int, ...]

    @cached_property
    def index(self) -> dict[int, int]:
        return {b: i for i, b in enumerate(self.bases)}

    @cached_property
    def basis_set(self) -> frozenset[int]:
        return frozenset(self.bases)

    @property
    def basis_count(self) -> int:
        return len(self.bases)

    @property
    def ground_mask(self) -> int:
        return (1 << self.n) - 1

    def is_basis(self, elements) -> bool:
        mask = elements if isinstance(elements, int) else to_mask(elements)
        return mask in self.basis_set

    def basis_tuples(self) -> list[tuple[int, ...]]:
        return [elements_of(b) for b in self.bases]

    def rank_of(self, mask: int) -> int:
        return max(popcount(b & mask) for b in self.bases)

    def is_independent(self, mask: int) -> bool:
        return any(b & mask == mask for b in self.bases)

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.r == other.r and self.bases == other.bases

    def __hash__(self):
        return hash((self.n, self.r, self.bases))

    def __repr__(self):
        return f"Matroid(n={self.n}, r={self.r}, bases={len(self.bases)})"


def _canonical(n: int, masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(masks), key=elements_of))


def check_exchange(n: int, masks: tuple[int, ...]) -> None:
    """Raise ExchangeAxiomViolation on the first failing (B1, B2, e)."""
    family = set(masks)
    for b1 in masks:
        for b2 in masks:
            only1 = b1 & ~b2
            if not only1:
                continue
            only2 = b2 & ~b1
            for e in _bits(only1):
                base = b1 ^ e
                if not any((base | f) in family for f in _bits(only2)):
                    raise ExchangeAxiomViolation(
                        elements_of(b1), elements_of(b2), e.bit_length() - 1
                    )


def from_bases(n: int, candidate_bases: Iterable, check: bool = True) -> Matroid:
    """Build and validate a matroid; bases may be element iterables or bitmasks."""
    masks = []
    for b in candidate_bases:
        mask = b if isinstance(b, int) else to_mask(b)
        if mask >> n:
            raise ElementOutOfRange(f"basis {elements_of(mask)} has elements outside 0..{n - 1}")
        if not isinstance(b, int) and len(set(b)) != popcount(mask):
            raise UnequalCardinality(f"basis {tuple(b)} repeats an element")
        masks.append(mask)
    if not masks:
        raise EmptyBases("a matroid needs at least one basis")
    r = popcount(masks[0])
    for mask in masks:
        if popcount(mask) != r:
            raise UnequalCardinality(
                f"basis {elements_of(mask)} has {popcount(mask)} elements, expected {r}"
            )
    bases = _canonical(n, masks)
    if check:
        check_exchange(n, bases)
    return Matroid(n, r, bases)


def from_bases_unchecked(n: int, candidate_bases: Iterable) -> Matroid:
    """Trusted constructor: skips the exchange-axiom check."""
    return from_bases(n, candidate_bases, check=False)


def dual(M: Matroid) -> Matroid:
    full = M.ground_mask
    return Matroid(M.n, M.n - M.r, _canonical(M.n, (b ^ full for b in M.bases)))


def relabel(M: Matroid, perm) -> Matroid:
    """Image of ``M`` under the element map ``e -> perm[e]`` (a permutation of 0..n-1)."""
    out = []
    for b in M.bases:
        out.append(to_mask(perm[e] for e in elements_of(b)))
    return Matroid(M.n, M.r, _canonical(M.n, out))


def _compress(mask: int, kept: tuple[int, ...]) -> int:
    out = 0
    for new, old in enumerate(kept):
        if mask >> old & 1:
            out |= 1 << new
    return out


def minor(M: Matroid, delete=(), contract=()) -> tuple[Matroid, tuple[int, ...]]:
    """Return ``(M / contract \\ delete, labels)`` with ``labels[new] = old``.

    ``contract`` must be independent. Deleting a set that meets every basis
    drops the rank, as usual for restriction.
    """
    dmask = to_mask(delete)
    cmask = to_mask(contract)
    if dmask & cmask:
        raise OverlappingSets(f"delete and contract share {elements_of(dmask & cmask)}")
    if (dmask | cmask) >> M.n:
        raise ElementOutOfRange("minor sets must lie in the ground set")
    if not M.is_independent(cmask):
        raise DependentContraction(f"contract set {elements_of(cmask)} is dependent")
    restricted = [b & ~dmask for b in M.bases]
    top = max(popcount(b) for b in restricted)
    restricted = {b for b in restricted if popcount(b) == top}
    contracted = [b & ~cmask for b in restricted if b & cmask == cmask]
    kept = tuple(e for e in range(M.n) if not (dmask | cmask) >> e & 1)
    masks = [_compress(b, kept) for b in contracted]
    return Matroid(len(kept), top - popcount(cmask), _canonical(len(kept), masks)), kept


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    shift = M1.n
    masks = [b1 | (b2 << shift) for b1 in M1.bases for b2 in M2.bases]
    return Matroid(M1.n + M2.n, M1.r + M2.r, _canonical(M1.n + M2.n, masks))


def is_circuit_hyperplane(M: Matroid, H) -> bool:
    hmask = H if isinstance(H, int) else to_mask(H)
    if hmask >> M.n or popcount(hmask) != M.r or hmask in M.basis_set or M.r == 0:
        return False
    if M.rank_of(hmask) != M.r - 1:
        return False
    # a circuit: dropping any one element leaves an independent set
    for h in _bits(hmask):
        if not M.is_independent(hmask ^ h):
            return False
    for x in range(M.n):
        if not hmask >> x & 1 and M.rank_of(hmask | 1 << x) != M.r:
            return False
    return True


def relax(M: Matroid, H) -> Matroid:
    hmask = H if isinstance(H, int) else to_mask(H)
    if not is_circuit_hyperplane(M, hmask):
        raise NotACircuitHyperplane(f"{elements_of(hmask)} is not a circuit-hyperplane")
    return from_bases(M.n, M.bases + (hmask,))


def circuit_hyperplanes(M: Matroid) -> list[int]:
    """All circuit-hyperplanes, in lexicographic order."""
    out = []
    for combo in combinations(range(M.n), M.r):
        mask = to_mask(combo)
        if mask not in M.basis_set and is_circuit_hyperplane(M, mask):
            out.append(mask)
    return out


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                ra, rb = rb, ra
            self.parent[ra] = rb


@dataclass(frozen=True)
class ComponentPartition:
    blocks: tuple[tuple[int, ...], ...]

    @property
    def z(self) -> int:
        return len(self.blocks)


def connected_components(M: Matroid) -> ComponentPartition:
    """Components via single-element exchanges: e ~ f iff B1 Δ B2 = {e, f}."""
    uf = UnionFind(M.n)
    family = M.basis_set
    full = M.ground_mask
    for b in M.bases:
        outside = full & ~b
        for e in _bits(b):
            base = b ^ e
            for f in _bits(outside):
                if (base | f) in family:
                    uf.union(e.bit_length() - 1, f.bit_length() - 1)
    groups: dict[int, list[int]] = {}
    for e in range(M.n):
        groups.setdefault(uf.find(e), []).append(e)
    return ComponentPartition(tuple(sorted(tuple(g) for g in groups.values())))


def dim_W(M: Matroid) -> int:
    """Dimension of the space of basis weightings induced by element weights."""
    if M.r == 0:
        # only the empty basis, whose induced weight is always 0
        return 0
    return M.n - connected_components(M).z + 1


# --- isomorphism ---------------------------------------------------------


def _cooccurrence(M: Matroid) -> list[list[int]]:
    counts = [[0] * M.n for _ in range(M.n)]
    for b in M.bases:
        elems = elements_of(b)
        for e in elems:
            row = counts[e]
            for f in elems:
                row[f] += 1
    return counts


def _signatures(counts: list[list[int]]) -> list[tuple]:
    n = len(counts)
    return [
        (counts[e][e], tuple(sorted(counts[e][f] for f in range(n) if f != e)))
        for e in range(n)
    ]


def is_isomorphic(M: Matroid, N: Matroid) -> Optional[dict[int, int]]:
    """Return a bijection ``e -> phi(e)`` carrying bases of M onto bases of N, or None."""
    if (M.n, M.r, len(M.bases)) != (N.n, N.r, len(N.bases)):
        return None
    cm, cn = _cooccurrence(M), _cooccurrence(N)
    sm, sn = _signatures(cm), _signatures(cn)
    if sorted(sm) != sorted(sn):
        return None
    n, r = M.n, M.r
    domains = [[y for y in range(n) if sn[y] == sm[x]] for x in range(n)]

    # greedy order: small domains first, then stay adjacent to what is placed
    order: list[int] = []
    remaining = set(range(n))
    while remaining:
        x = min(remaining, key=lambda e: (len(domains[e]), -sum(cm[e][a] for a in order), e))
        order.append(x)
        remaining.remove(x)

    mbases, nbases = M.basis_set, N.basis_set
    phi: dict[int, int] = {}
    used = [False] * n

    def consistent(x: int, y: int) -> bool:
        for a, b in phi.items():
            if cm[x][a] != cn[y][b]:
                return False
        if r >= 1 and len(phi) >= r - 1:
            placed = list(phi)
            for combo in combinations(placed, r - 1):
                src = to_mask(combo) | 1 << x
                dst = to_mask(phi[a] for a in combo) | 1 << y
                if (src in mbases) != (dst in nbases):
                    return False
        return True

    def search(depth: int) -> bool:
        if depth == n:
            return True
        x = order[depth]
        for y in domains[x]:
            if used[y] or not consistent(x, y):
                continue
            phi[x] = y
            used[y] = True
            if search(depth + 1):
                return True
            del phi[x]
            used[y] = False
        return False

    if not search(0):
        return None
    return dict(sorted(phi.items()))


# --- minors ----------------------------------------------------------------


def find_minor(M: Matroid, N: Matroid) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Return ``(contract, delete)`` with ``M / contract \\ delete`` isomorphic to N.

    Every minor can be written with an independent contract set and a delete set
    that is coindependent in the contraction, so only those pairs are tried,
    in lexicographic order.
    """
    k = M.r - N.r
    d = M.n - N.n - k
    if k < 0 or d < 0:
        return None
    target = len(N.bases)
    for contract in combinations(range(M.n), k):
        cmask = to_mask(contract)
        above = [b ^ cmask for b in M.bases if b & cmask == cmask]
        if not above:
            continue
        rest = [e for e in range(M.n) if not cmask >> e & 1]
        for delete in combinations(rest, d):
            dmask = to_mask(delete)
            surviving = [b for b in above if not b & dmask]
            if len(surviving) != target:
                continue
            kept = tuple(e for e in rest if not dmask >> e & 1)
            candidate = Matroid(
                len(kept), N.r, _canonical(len(kept), (_compress(b, kept) for b in surviving))
            )
            if is_isomorphic(candidate, N) is not None:
                return contract, delete
    return None


def has_minor(M: Matroid, N: Matroid) -> bool:
    return find_minor(M, N) is not None


def _excluded(name: str) -> Matroid:
    from .builders import projective_geometry, uniform

    if name == "U24":
        return uniform(2, 4)
    fano = projective_geometry(2, 2)
    return fano if name == "F7" else dual(fano)


def is_binary(M: Matroid) -> bool:
    return not has_minor(M, _excluded("U24"))


def is_regular(M: Matroid) -> bool:
    return (
        is_binary(M)
        and not has_minor(M, _excluded("F7"))
        and not has_minor(M, _excluded("F7*"))
    )
