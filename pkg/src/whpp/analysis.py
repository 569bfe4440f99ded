"""Headline quantities and WHPP verdicts.

All weight checks are multiplicative over exact rationals: the log-linear
relation system is never evaluated numerically.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Optional

from .builders import RationalMatrix, from_matrix, projective_geometry
from .errors import RankDeficient, SupportMismatch
from .linalg import (
    AbelianInvariants,
    IntegerMatrix,
    bareiss_det,
    nullity_rational,
    rank_rational,
    smith_normal_form,
)
from .matroid import (
    Matroid,
    connected_components,
    dim_W,
    elements_of,
    is_binary,
    is_isomorphic,
    is_regular,
    to_mask,
)
from .quadrangles import (
    DegenerateQuadrangle,
    enumerate_degenerate_quadrangles,
    relation_matrix,
    signed_tutte_relations,
)

NOT_WHPP = "NOT_WHPP"
WHPP = "WHPP"
WHPP_IFF_HPP = "WHPP_IFF_HPP"
UNDETERMINED = "UNDETERMINED"

# matroids with dim V = dim W that are known to fail the HPP
SETTLED_NOT_WHPP = ("F7", "AG(3,2)", "S8", "T8", "PG(2,3)", "R9")


def dim_V(M: Matroid, quads: Optional[list[DegenerateQuadrangle]] = None) -> int:
    """Dimension of the solution space of the log-linear quadrangle relations."""
    return nullity_rational(relation_matrix(M, quads).matrix)


def tutte_invariants(
    M: Matroid, quads: Optional[list[DegenerateQuadrangle]] = None
) -> AbelianInvariants:
    """Free rank and torsion of the Tutte group based on the bases."""
    return smith_normal_form(signed_tutte_relations(M, quads).matrix)


def inner_free_rank(M: Matroid) -> int:
    return dim_V(M) - dim_W(M)


# --- weights ---------------------------------------------------------------


@dataclass
class WeightFunction:
    """Nonzero rational weight per basis (keys are basis bitmasks)."""

    weights: dict[int, Fraction] = field(default_factory=dict)

    def __getitem__(self, basis) -> Fraction:
        mask = basis if isinstance(basis, int) else to_mask(basis)
        return self.weights[mask]

    def rescaled(self, element_factors) -> "WeightFunction":
        """w'(B) = w(B) * prod_{e in B} element_factors[e]."""
        out = {}
        for mask, w in self.weights.items():
            for e in elements_of(mask):
                w = w * element_factors[e]
            out[mask] = w
        return WeightFunction(out)

    @classmethod
    def constant(cls, M: Matroid, value=1) -> "WeightFunction":
        return cls({b: Fraction(value) for b in M.bases})


class QuadrangleCheck(NamedTuple):
    ok: bool
    witness: Optional[DegenerateQuadrangle] = None

    def __bool__(self):
        return self.ok


def verify_quadrangle_relations(
    M: Matroid, w: WeightFunction, quads: Optional[list[DegenerateQuadrangle]] = None
) -> QuadrangleCheck:
    """Check w(B1) w(B3) = w(B2) w(B4) on every degenerate quadrangle."""
    if set(w.weights) != M.basis_set:
        raise SupportMismatch("weight support differs from the basis set")
    if any(v == 0 for v in w.weights.values()):
        raise SupportMismatch("weights must be nonzero on every basis")
    if quads is None:
        quads = enumerate_degenerate_quadrangles(M)
    ww = w.weights
    for q in quads:
        b1, b2, b3, b4 = q.cycle()
        if ww[b1] * ww[b3] != ww[b2] * ww[b4]:
            return QuadrangleCheck(False, q)
    return QuadrangleCheck(True)


def cauchy_binet_weights(A: RationalMatrix) -> tuple[Matroid, WeightFunction]:
    """Column matroid of A weighted by det(A_B)^2, the coefficients of det(A Z A^T)."""
    rank = rank_rational(IntegerMatrix.from_dense(A.integer_rows(), A.cols)) if A.rows else 0
    if rank != A.rows:
        raise RankDeficient(f"matrix has {A.rows} rows but rank {rank}")
    M = from_matrix(A)
    weights = {}
    for b in M.bases:
        d = Fraction(bareiss_det(A.columns(elements_of(b))))
        weights[b] = d * d
    return M, WeightFunction(weights)


def cauchy_binet_coefficients(A: RationalMatrix) -> dict[tuple[int, ...], Fraction]:
    """Every r-subset of columns with its coefficient det(A_S)^2 (zeros included)."""
    out = {}
    for cols in combinations(range(A.cols), A.rows):
        d = Fraction(bareiss_det(A.columns(cols)))
        out[cols] = d * d
    return out


# --- verdict -----------------------------------------------------------------


@dataclass
class Verdict:
    n: int
    r: int
    basis_count: int
    z: int
    dim_V: int
    dim_W: int
    inner_free_rank: int
    tutte_free_rank: int
    tutte_torsion: list[int]
    reduction_applies: bool
    is_binary: bool
    is_regular: bool
    is_projective_geometry: bool
    whpp_status: str
    justification: str

    def to_record(self) -> dict:
        return asdict(self)


def recognize_projective_geometry(M: Matroid) -> Optional[tuple[int, int]]:
    """(m, q) if M is isomorphic to PG(m, q) with m >= 2 and q prime."""
    from sympy import isprime

    m = M.r - 1
    if m < 2:
        return None
    q = 2
    while (q ** (m + 1) - 1) // (q - 1) <= M.n:
        if isprime(q) and (q ** (m + 1) - 1) // (q - 1) == M.n:
            if is_isomorphic(M, projective_geometry(m, q)) is not None:
                return m, q
        q += 1
    return None


def recognize_settled(M: Matroid) -> Optional[str]:
    from .catalog import ENTRIES, catalog

    for name in SETTLED_NOT_WHPP:
        entry = ENTRIES[name]
        if (entry.expected_n, entry.expected_B_count) != (M.n, M.basis_count):
            continue
        if is_isomorphic(M, catalog(name)) is not None:
            return name
    return None


def whpp_verdict(M: Matroid, quads: Optional[list[DegenerateQuadrangle]] = None) -> Verdict:
    if quads is None:
        quads = enumerate_degenerate_quadrangles(M)
    z = connected_components(M).z
    dv = dim_V(M, quads)
    dw = dim_W(M)
    tutte = tutte_invariants(M, quads)
    binary = is_binary(M)
    regular = binary and is_regular(M)
    pg = recognize_projective_geometry(M)
    reduction = dv == dw

    if binary:
        if regular:
            status, why = WHPP, "binary and regular: regular matroids have the HPP"
        else:
            status, why = NOT_WHPP, (
                "binary but not regular: a binary matroid has the WHPP iff it is regular"
            )
    elif pg is not None:
        status, why = NOT_WHPP, f"isomorphic to PG({pg[0]},{pg[1]}): no projective geometry has the WHPP"
    elif reduction:
        settled = recognize_settled(M)
        if settled is not None:
            status, why = NOT_WHPP, (
                f"dim V = dim W so WHPP iff HPP, and M is isomorphic to {settled}, "
                "which fails the HPP"
            )
        else:
            status, why = WHPP_IFF_HPP, "dim V = dim W: every stable weighting rescales to all ones"
    else:
        status, why = UNDETERMINED, f"dim V - dim W = {dv - dw} > 0: the reduction does not apply"

    return Verdict(
        n=M.n,
        r=M.r,
        basis_count=M.basis_count,
        z=z,
        dim_V=dv,
        dim_W=dw,
        inner_free_rank=dv - dw,
        tutte_free_rank=tutte.free_rank,
        tutte_torsion=list(tutte.torsion),
        reduction_applies=reduction,
        is_binary=binary,
        is_regular=regular,
        is_projective_geometry=pg is not None,
        whpp_status=status,
        justification=why,
    )
