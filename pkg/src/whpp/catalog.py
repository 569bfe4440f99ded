"""Named matroids of the reference table, each guarded by its (n, |B|) checksum.

Representable entries are built from matrices, the rest from lists of
dependent r-sets (or lines, for rank 3). Names that are not pinned down by a
standard definition carry a ``note`` describing the construction used; the
checksum (and the tabulated dim V) is what makes the choice verifiable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .builders import (
    GFMatrix,
    affine_geometry,
    free_extension,
    from_matrix,
    from_nonbases,
    graphic,
    projective_geometry,
    projective_points,
    rank3_from_lines,
    uniform,
)
from .errors import ChecksumMismatch, UnknownName
from .matroid import Matroid, circuit_hyperplanes, relax

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

# the three columns of the reference table beyond n: dim V and |B|
TABLE1 = [
    ("M(K4)", 6, 6, 16),
    ("W^3", 6, 8, 17),
    ("F7", 7, 7, 28),
    ("F7^-", 7, 8, 29),
    ("F7^{--}", 7, 10, 30),
    ("F7^{-3}", 7, 13, 31),
    ("F7^{-4}", 7, 17, 32),
    ("F7^{-5}", 7, 22, 33),
    ("F7^{-6}", 7, 28, 34),
    ("U_{3,7}", 7, 35, 35),
    ("M(K4)+e", 7, 13, 31),
    ("W^3+e", 7, 17, 32),
    ("V8", 8, 18, 63),
    ("W^4", 8, 24, 52),
    ("S8", 8, 8, 48),
    ("T8", 8, 8, 59),
    ("AG(3,2)", 8, 8, 56),
    ("AG(3,2)'", 8, 9, 57),
    ("R8", 8, 10, 58),
    ("F8", 8, 10, 58),
    ("Q8", 8, 11, 59),
    ("L8", 8, 17, 62),
    ("AG(2,3)", 9, 9, 72),
    ("R9", 9, 9, 69),
    ("Pappus", 9, 16, 75),
    ("non-Pappus", 9, 17, 76),
    ("non-Desargues", 10, 27, 111),
    ("PG(2,3)", 13, 13, 234),
]

ALIASES = {
    "MK4": "M(K4)", "K4": "M(K4)", "W3": "W^3", "W4": "W^4",
    "F7-": "F7^-", "F7--": "F7^{--}", "F7^--": "F7^{--}",
    "F7-3": "F7^{-3}", "F7-4": "F7^{-4}", "F7-5": "F7^{-5}", "F7-6": "F7^{-6}",
    "U37": "U_{3,7}", "U_3,7": "U_{3,7}", "U(3,7)": "U_{3,7}",
    "MK4+e": "M(K4)+e", "W3+e": "W^3+e",
    "AG32": "AG(3,2)", "AG32'": "AG(3,2)'", "AG23": "AG(2,3)", "PG23": "PG(2,3)",
    "nP": "non-Pappus", "nD": "non-Desargues",
}


def _identity_plus(p: int, block) -> Matroid:
    rows = [[int(i == j) for j in range(4)] + list(block[i]) for i in range(4)]
    return from_matrix(GFMatrix(p, rows))


def _relax_first(M: Matroid, k: int = 1) -> Matroid:
    """Relax the first k circuit-hyperplanes of M, in lexicographic order."""
    hyperplanes = circuit_hyperplanes(M)
    for h in hyperplanes[:k]:
        M = relax(M, h)
    return M


def _fano() -> Matroid:
    cols = [(0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1)]
    return from_matrix(GFMatrix(2, [list(r) for r in zip(*cols)]))


def _ag32() -> Matroid:
    return _identity_plus(2, [(0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0)])


def _r8() -> Matroid:
    return _identity_plus(3, [(-1, 1, 1, 1), (1, -1, 1, 1), (1, 1, -1, 1), (1, 1, 1, -1)])


# In the labelling of AG(3,2) above its 14 planes are the affine planes of
# GF(2)^3; {0,5,6,7} and {1,2,3,4} are the two "twisted" planes of the cube.
F8_PLANES = [
    (0, 1, 2, 7), (0, 1, 3, 6), (0, 1, 4, 5), (0, 2, 3, 5), (0, 2, 4, 6), (0, 3, 4, 7),
    (0, 5, 6, 7), (1, 2, 3, 4), (1, 2, 5, 6), (1, 3, 5, 7), (1, 4, 6, 7), (2, 3, 6, 7),
]
L8_PLANES = [
    (0, 1, 2, 7), (0, 1, 3, 6), (0, 2, 3, 5), (1, 4, 6, 7), (2, 4, 5, 7), (3, 4, 5, 6),
    (0, 5, 6, 7), (1, 2, 3, 4),
]
# Vamos pairs {0,1},{2,3},{4,5},{6,7}: five pair-unions plus two transversals
V8_PLANES = [
    (0, 1, 2, 3), (0, 1, 4, 5), (0, 1, 6, 7), (2, 3, 4, 5), (2, 3, 6, 7),
    (0, 2, 4, 6), (1, 3, 5, 7),
]
W4_LINES = [(0, 1, 2), (2, 3, 4), (4, 5, 6), (6, 7, 0)]
PAPPUS_LINES = [
    (0, 1, 2), (3, 4, 5), (0, 4, 6), (1, 3, 6), (0, 5, 7), (2, 3, 7), (1, 5, 8), (2, 4, 8),
    (6, 7, 8),
]
# centre 0, triangles 1,2,3 and 4,5,6, side intersections 7,8,9 (axis dropped)
NON_DESARGUES_LINES = [
    (0, 1, 4), (0, 2, 5), (0, 3, 6), (1, 2, 7), (4, 5, 7), (1, 3, 8), (4, 6, 8),
    (2, 3, 9), (5, 6, 9),
]
# rational representation of F7^-; det(A_B)^2 is 4 on {1,3,5} and 1 elsewhere
NON_FANO_MATRIX = [
    [1, 1, 0, 0, 0, 1, 1],
    [0, 1, 1, 1, 0, 0, 1],
    [0, 0, 0, 1, 1, 1, 1],
]
# PG(2,3) without three points of a line and one point off it
R9_REMOVED = {(0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0)}


def _r9() -> Matroid:
    pts = [p for p in projective_points(2, 3) if p not in R9_REMOVED]
    return from_matrix(GFMatrix(3, [list(r) for r in zip(*pts)]))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str
    expected_n: int
    expected_dimV: int
    expected_B_count: int
    build: Callable[[], Matroid]
    note: str = ""


_BUILDERS: dict[str, tuple[str, Callable[[], Matroid], str]] = {
    "M(K4)": ("graph", lambda: graphic(K4_EDGES), "complete graph K4"),
    "W^3": ("relaxation", lambda: _relax_first(graphic(K4_EDGES)),
            "whirl: M(K4) with one triangle relaxed (17 bases; the graphic wheel has 16)"),
    "F7": ("gf-matrix", _fano, "all nonzero vectors of GF(2)^3"),
    "F7^-": ("relaxation", lambda: _relax_first(_fano(), 1), "F7 with its first line relaxed"),
    "F7^{--}": ("relaxation", lambda: _relax_first(_fano(), 2), "first 2 lines of F7 relaxed"),
    "F7^{-3}": ("relaxation", lambda: _relax_first(_fano(), 3), "first 3 lines of F7 relaxed"),
    "F7^{-4}": ("relaxation", lambda: _relax_first(_fano(), 4), "first 4 lines of F7 relaxed"),
    "F7^{-5}": ("relaxation", lambda: _relax_first(_fano(), 5), "first 5 lines of F7 relaxed"),
    "F7^{-6}": ("relaxation", lambda: _relax_first(_fano(), 6), "first 6 lines of F7 relaxed"),
    "U_{3,7}": ("uniform", lambda: uniform(3, 7), ""),
    "M(K4)+e": ("extension", lambda: free_extension(graphic(K4_EDGES)),
                "free single-element extension of M(K4)"),
    "W^3+e": ("extension", lambda: free_extension(_relax_first(graphic(K4_EDGES))),
              "free single-element extension of the whirl W^3"),
    "V8": ("nonbases", lambda: from_nonbases(8, 4, V8_PLANES),
           "Vamos planes plus the transversals {0,2,4,6},{1,3,5,7}; the plain Vamos "
           "matroid has 65 bases"),
    "W^4": ("lines", lambda: rank3_from_lines(8, W4_LINES),
            "rank 3: four 3-point lines in a cycle; the rank-4 whirl has 46 bases"),
    "S8": ("gf-matrix", lambda: _identity_plus(
        2, [(0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)]), "[I4 | A] over GF(2)"),
    "T8": ("gf-matrix", lambda: _identity_plus(
        3, [(0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0)]), "[I4 | J-I] over GF(3)"),
    "AG(3,2)": ("gf-matrix", _ag32, "[I4 | J-I] over GF(2)"),
    "AG(3,2)'": ("relaxation", lambda: _relax_first(_ag32()), "AG(3,2) with one plane relaxed"),
    "R8": ("gf-matrix", _r8, "real affine cube, [I4 | J-2I] over GF(3)"),
    "F8": ("nonbases", lambda: from_nonbases(8, 4, F8_PLANES),
           "cube planes of R8 with one diagonal plane swapped for a twisted plane"),
    "Q8": ("relaxation", lambda: _relax_first(_r8()), "R8 with one plane relaxed"),
    "L8": ("nonbases", lambda: from_nonbases(8, 4, L8_PLANES),
           "six cube faces and the two twisted planes"),
    "AG(2,3)": ("gf-matrix", lambda: affine_geometry(2, 3), ""),
    "R9": ("gf-matrix", _r9, "ternary Reid geometry"),
    "Pappus": ("lines", lambda: rank3_from_lines(9, PAPPUS_LINES), ""),
    "non-Pappus": ("lines", lambda: rank3_from_lines(9, PAPPUS_LINES[:-1]),
                   "Pappus with the line {6,7,8} relaxed"),
    "non-Desargues": ("lines", lambda: rank3_from_lines(10, NON_DESARGUES_LINES), ""),
    "PG(2,3)": ("gf-matrix", lambda: projective_geometry(2, 3), ""),
}

ENTRIES: dict[str, CatalogEntry] = {
    name: CatalogEntry(name, _BUILDERS[name][0], n, dim_v, count, _BUILDERS[name][1],
                       _BUILDERS[name][2])
    for name, n, dim_v, count in TABLE1
}
NAMES = tuple(ENTRIES)


def resolve(name: str) -> str:
    if name in ENTRIES:
        return name
    if name in ALIASES:
        return ALIASES[name]
    raise UnknownName(f"unknown catalog name {name!r}; known: {', '.join(NAMES)}")


def catalog(name: str) -> Matroid:
    return _build(resolve(name))


@lru_cache(maxsize=None)
def _build(name: str) -> Matroid:
    entry = ENTRIES[name]
    M = entry.build()
    if (M.n, M.basis_count) != (entry.expected_n, entry.expected_B_count):
        raise ChecksumMismatch(
            f"{entry.name}: built n={M.n}, |B|={M.basis_count}; "
            f"expected n={entry.expected_n}, |B|={entry.expected_B_count}"
        )
    return M


def list_catalog() -> list[CatalogEntry]:
    return list(ENTRIES.values())
