import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from rank1lat import core, modlat, svp
from rank1lat.checks import random_spec
from rank1lat.core import LatticeBasis
from rank1lat.modlat import GeneratorSpec

EQ6 = {(19, 3, 39), (3, 39, 19), (39, 19, 3)}
EQ8 = [(-28, 2, 26), (-2, -26, 28), (61, 61, 61)]


def box_min(basis, box):
    best = None
    for xs in itertools.product(range(-box, box + 1), repeat=basis.dim):
        if any(xs):
            n = basis.apply(xs).norm_sq
            best = n if best is None else min(best, n)
    return best


def test_shortest_vector_examples():
    lam, v = svp.shortest_vector(modlat.build_basis(GeneratorSpec(2196, (1, 13, 169))))
    assert (lam, v) == (28731, (1, 13, 169))
    assert svp.shortest_vector(LatticeBasis.identity(3)) == (1, (1, 0, 0))
    lam, _ = svp.shortest_vector(modlat.build_basis(GeneratorSpec(8, (1, 3))))
    assert lam == min(core.sym_residue(n, 8) ** 2 + core.sym_residue(3 * n, 8) ** 2 for n in range(1, 5))


@pytest.mark.parametrize("N,gen,lam,vec", [
    (244, (1, 13, 169), 1891, (3, 39, 19)),
    (366, (1, 13, 169), 1464, (2, 26, -28)),
    (61, (1, 13, 47), 122, (4, -9, 5)),
])
def test_svp_oracle_examples(N, gen, lam, vec):
    got_lam, got_vec = svp.svp_oracle(GeneratorSpec(N, gen))
    assert got_lam == lam
    assert got_vec == vec
    assert got_vec.norm_sq == lam


def test_oracle_includes_axis_vectors():
    # N=2, gen (1,1): class n=1 gives (1,+-1); N*e_i has norm 4
    assert svp.svp_oracle(GeneratorSpec(2, (1, 1))) == (2, (1, -1))
    assert svp.oracle_lambda_sq(GeneratorSpec(3, (1, 1, 1, 1, 1))) == 5
    # dimension 5 with N=2: N*e_i (norm 4) beats (1,1,1,1,1)
    lam, vec = svp.svp_oracle(GeneratorSpec(2, (1, 1, 1, 1, 1)))
    assert lam == 4 and vec == (2, 0, 0, 0, 0)


def test_oracle_half_residues():
    # N even, entry N/2: both signs are shortest representatives
    for N, gen in [(4, (1, 2)), (6, (1, 3, 5)), (10, (1, 5, 3)), (8, (3, 4, 4, 1))]:
        spec = GeneratorSpec(N, gen)
        assert svp.svp_oracle(spec) == svp.shortest_vector(modlat.build_basis(spec))


def test_minkowski_reduce_244():
    rep = svp.minkowski_reduce(modlat.build_basis(GeneratorSpec(244, (1, 13, 169))))
    assert {core.canonical_sign(c) for c in rep.reduced_basis} == EQ6
    assert rep.lambda1_sq == 1891
    assert rep.successive_minima_sq == (1891, 1891, 1891)
    assert rep.certified
    assert abs(rep.normalized - 1.11366) < 5e-5


def test_minkowski_reduce_366():
    basis = modlat.build_basis(GeneratorSpec(366, (1, 13, 169)))
    rep = svp.minkowski_reduce(basis)
    tabulated = LatticeBasis(EQ8)
    # the displayed basis spans the same lattice and is itself reduced
    assert core.unimodular_equivalent(tabulated, basis)
    assert svp.is_minkowski_reduced(tabulated)
    assert rep.reduced_basis.norms_sq() == tabulated.norms_sq() == [1464, 1464, 11163]
    assert rep.successive_minima_sq == (1464, 1464, 11163)


def test_minkowski_reduce_identity():
    rep = svp.minkowski_reduce(LatticeBasis.identity(3))
    assert rep.reduced_basis == LatticeBasis.identity(3)
    assert rep.successive_minima_sq == (1, 1, 1)


def test_is_minkowski_reduced():
    from rank1lat import families
    assert svp.is_minkowski_reduced(families.family_thm2(6).candidate_basis)
    assert svp.is_minkowski_reduced(families.family_thm3_4d(1).candidate_basis)
    # unsorted norms
    assert not svp.is_minkowski_reduced(LatticeBasis([(2, 0, 0), (0, 1, 0), (0, 0, 1)]))
    # b3 can be shortened by subtracting b1
    assert not svp.is_minkowski_reduced(LatticeBasis([(1, 0, 0), (0, 1, 0), (1, 0, 1)]))
    # sorted norms but b2 is not a shortest extension
    assert not svp.is_minkowski_reduced(LatticeBasis([(3, 0), (2, 1)]))


def test_box_conditions_weaker_than_exact_test():
    # in dimension 5 the box test can pass while the exact test fails only if
    # some coefficient exceeds the box; both agree on reduced bases
    rng = random.Random(3)
    for _ in range(30):
        spec = random_spec(rng, 300, dims=(3, 4, 5))
        rep = svp.minkowski_reduce(modlat.build_basis(spec))
        assert svp.box_conditions_hold(rep.reduced_basis)
        assert svp.is_minkowski_reduced(rep.reduced_basis)


def test_successive_minima():
    assert svp.successive_minima(LatticeBasis.identity(3)) == [1, 1, 1]
    assert svp.successive_minima(LatticeBasis([(1, 0), (0, 5)])) == [1, 25]


def test_enumeration_against_box():
    rng = random.Random(17)
    for _ in range(40):
        spec = random_spec(rng, 80, dims=(2, 3))
        basis = modlat.build_basis(spec)
        red = svp.minkowski_reduce(basis).reduced_basis
        assert svp.shortest_vector(basis)[0] == box_min(red, 2)


def test_oracle_equivalence_random():
    rng = random.Random(99)
    for _ in range(100):
        spec = random_spec(rng, 200)
        a = modlat.pointset_min_distance(spec)
        b, v = svp.shortest_vector(modlat.build_basis(spec))
        c, w = svp.svp_oracle(spec)
        assert a == b == c
        assert v == w


@settings(max_examples=60, deadline=None)
@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
def test_reduction_invariants_2d(a, b, c, d):
    if a * d - b * c == 0:
        return
    basis = LatticeBasis([(a, b), (c, d)])
    rep = svp.minkowski_reduce(basis)
    assert core.unimodular_equivalent(rep.reduced_basis, basis)
    assert rep.certified
    assert rep.lambda1_sq == svp.shortest_vector(basis)[0]


def test_normalized_length():
    assert svp.normalized_length(1891, 244 ** 2, 3) == pytest.approx(1891 ** 0.5 / 244 ** (2 / 3), rel=1e-14)
    assert svp.normalized_length(0, 5, 2) == 0.0
