import random

import pytest

from tests.helpers import random_relabel, random_uniform_sum, small_matroids
from whpp.builders import graphic, projective_geometry, uniform
from whpp.catalog import K4_EDGES, NAMES, catalog
from whpp.errors import (
    DependentContraction,
    EmptyBases,
    ExchangeAxiomViolation,
    NotACircuitHyperplane,
    OverlappingSets,
    UnequalCardinality,
)
from whpp.matroid import (
    circuit_hyperplanes,
    connected_components,
    dim_W,
    direct_sum,
    dual,
    elements_of,
    find_minor,
    from_bases,
    has_minor,
    is_binary,
    is_isomorphic,
    is_regular,
    minor,
    relabel,
    relax,
    to_mask,
)


def test_from_bases_uniform():
    M = from_bases(3, [{0, 1}, {0, 2}, {1, 2}])
    assert (M.n, M.r, M.basis_count) == (3, 2, 3)
    assert M == uniform(2, 3)


def test_exchange_violation_witness():
    with pytest.raises(ExchangeAxiomViolation) as info:
        from_bases(4, [{0, 1}, {2, 3}])
    err = info.value
    assert err.e in err.b1 and err.e not in err.b2


def test_construction_errors():
    with pytest.raises(EmptyBases):
        from_bases(3, [])
    with pytest.raises(UnequalCardinality):
        from_bases(3, [{0}, {1, 2}])


def test_fano_from_basis_list():
    F = catalog("F7")
    assert from_bases(7, F.basis_tuples()).basis_count == 28


def test_bases_are_lex_sorted():
    M = from_bases(4, [{2, 3}, {0, 1}, {1, 3}, {0, 3}, {1, 2}, {0, 2}])
    tuples = M.basis_tuples()
    assert tuples == sorted(tuples)


def test_dual():
    assert dual(uniform(2, 4)) == uniform(2, 4)
    F = catalog("F7")
    D = dual(F)
    assert D.basis_count == 28 and D.r == 4
    for name in NAMES:
        M = catalog(name)
        assert dual(dual(M)) == M
        from_bases(M.n, dual(M).bases)


def test_minor_examples():
    U = uniform(2, 4)
    assert minor(U, delete={3})[0] == uniform(2, 3)
    assert minor(U, contract={3})[0] == uniform(1, 3)
    F = catalog("F7")
    for e in range(7):
        N, labels = minor(F, delete={e})
        assert (N.n, N.r, N.basis_count) == (6, 3, 16)
        assert e not in labels
    assert minor(F)[0] == F


def test_minor_errors():
    with pytest.raises(OverlappingSets):
        minor(uniform(2, 4), delete={0}, contract={0})
    F = catalog("F7")
    line = circuit_hyperplanes(F)[0]
    with pytest.raises(DependentContraction):
        minor(F, contract=elements_of(line))


def test_minor_commutes_with_relabel():
    rng = random.Random(1)
    M = catalog("W^3")
    perm = list(range(M.n))
    rng.shuffle(perm)
    N, _ = minor(M, delete={0}, contract={1})
    P, _ = minor(relabel(M, perm), delete={perm[0]}, contract={perm[1]})
    assert is_isomorphic(N, P) is not None


def test_direct_sum():
    one = uniform(1, 1)
    S = direct_sum(one, one)
    assert S.bases == (to_mask({0, 1}),)
    assert connected_components(S).z == 2
    T = direct_sum(uniform(2, 3), one)
    assert T.basis_count == 3 and all(b >> 3 & 1 for b in T.bases)


def test_components_add_under_direct_sum():
    rng = random.Random(2)
    for _ in range(30):
        A, B = random_uniform_sum(rng, 2), random_uniform_sum(rng, 2)
        za, zb = connected_components(A).z, connected_components(B).z
        assert connected_components(direct_sum(A, B)).z == za + zb


def test_components_examples():
    assert connected_components(uniform(2, 4)).blocks == ((0, 1, 2, 3),)
    one = uniform(1, 1)
    assert connected_components(direct_sum(one, one)).blocks == ((0,), (1,))
    assert connected_components(catalog("F7")).z == 1
    loop = graphic([(0, 0)])
    assert (loop.r, loop.bases) == (0, (0,))
    assert connected_components(loop).z == 1


def test_dim_W():
    assert dim_W(catalog("F7")) == 7
    assert dim_W(direct_sum(uniform(1, 1), uniform(1, 1))) == 1
    assert dim_W(catalog("PG(2,3)")) == 13


def test_relax():
    F = catalog("F7")
    lines = circuit_hyperplanes(F)
    assert len(lines) == 7
    assert relax(F, lines[0]).basis_count == 29
    M = F
    for h in lines:
        M = relax(M, h)
    assert M == uniform(3, 7)
    with pytest.raises(NotACircuitHyperplane):
        relax(uniform(2, 3), {0, 1})


def test_relax_count_property():
    for name in ("M(K4)", "F7", "AG(3,2)", "R8", "Pappus"):
        M = catalog(name)
        for h in circuit_hyperplanes(M):
            assert relax(M, h).basis_count == M.basis_count + 1


def test_isomorphism():
    assert is_isomorphic(uniform(2, 3), graphic([(0, 1), (1, 2), (0, 2)])) is not None
    assert is_isomorphic(catalog("F7"), projective_geometry(2, 2)) is not None
    assert is_isomorphic(catalog("F7"), catalog("F7^-")) is None
    assert is_isomorphic(catalog("R8"), catalog("F8")) is None


def test_isomorphism_map_is_valid():
    rng = random.Random(3)
    for name in ("AG(3,2)", "non-Pappus", "PG(2,3)"):
        M = catalog(name)
        N = random_relabel(M, rng)
        phi = is_isomorphic(M, N)
        assert phi is not None
        assert {to_mask(phi[e] for e in elements_of(b)) for b in M.bases} == set(N.bases)
        assert is_isomorphic(N, M) is not None


def test_isomorphism_reflexive_on_catalog():
    for name in NAMES:
        assert is_isomorphic(catalog(name), catalog(name)) is not None


def test_minors():
    K4 = graphic(K4_EDGES)
    assert has_minor(K4, K4)
    assert not has_minor(K4, catalog("F7"))
    assert has_minor(uniform(3, 7), uniform(2, 4))
    contract, delete = find_minor(uniform(3, 7), uniform(2, 4))
    assert len(contract) == 1 and len(delete) == 2


def test_binary_regular():
    assert not is_binary(uniform(2, 4))
    K4 = graphic(K4_EDGES)
    assert is_binary(K4) and is_regular(K4)
    F = catalog("F7")
    assert is_binary(F) and not is_regular(F)
    assert is_binary(dual(F)) and not is_regular(dual(F))


def test_small_matroid_counts():
    levels = small_matroids(5)
    assert [len(levels[n]) for n in range(6)] == [1, 2, 4, 8, 17, 38]
