import itertools
import random

import pytest

from rank1lat import core, modlat, svp
from rank1lat.checks import random_spec
from rank1lat.exceptions import CapExceeded, InvalidAxes, InvalidGenerator, NotInvertible
from rank1lat.modlat import GeneratorSpec


def brute_pairs(spec):
    pts = modlat.build_point_set(spec)
    return min(sum((a - b) ** 2 for a, b in zip(p, q))
               for p, q in itertools.combinations(pts, 2) if p != q)


def test_spec_validation():
    with pytest.raises(InvalidGenerator):
        GeneratorSpec(1, (1, 1))
    with pytest.raises(InvalidGenerator):
        GeneratorSpec(10, (1,))
    with pytest.raises(InvalidGenerator):
        GeneratorSpec(10, (1, 10))
    with pytest.raises(InvalidGenerator):
        GeneratorSpec(10, (2, 3, 4))
    with pytest.raises(InvalidGenerator):
        GeneratorSpec(20, (2, 4, 6), relaxed=True)
    assert GeneratorSpec(20, (6, 15, 18), relaxed=True).dim == 3


def test_normalize_generator():
    spec = modlat.normalize_generator(GeneratorSpec(244, (13, 169, 183)))
    expect = sorted((169 * 169 % 244, 169 * 183 % 244))
    assert spec.gen == (1, *expect)
    assert svp.oracle_lambda_sq(spec) == svp.oracle_lambda_sq(GeneratorSpec(244, (13, 169, 183)))
    assert modlat.normalize_generator(GeneratorSpec(26, (1, 3, 9))).gen == (1, 3, 9)
    assert modlat.normalize_generator(GeneratorSpec(244, (1, 169, 13))).gen == (1, 13, 169)
    with pytest.raises(NotInvertible):
        modlat.normalize_generator(GeneratorSpec(20, (6, 15, 18), relaxed=True))


def test_point_set():
    pts = modlat.build_point_set(GeneratorSpec(5, (1, 2, 3)))
    assert set(pts) == {(0, 0, 0), (1, 2, 3), (2, 4, 1), (3, 1, 4), (4, 3, 2)}
    assert modlat.build_point_set(GeneratorSpec(244, (1, 13, 169)))[19] == (19, 3, 39)
    assert len(set(modlat.build_point_set(GeneratorSpec(20, (6, 15, 18), relaxed=True)))) == 20


def test_build_basis():
    b = modlat.build_basis(GeneratorSpec(244, (1, 13, 169)))
    assert abs(b.det) == 244 ** 2
    assert b.columns[-1] == (1, 13, 169)
    b2 = modlat.build_basis(GeneratorSpec(8, (1, 3)))
    assert set(b2.columns) == {(0, 8), (1, 3)}
    assert abs(modlat.build_basis(GeneratorSpec(40, (1, 3, 9, 27))).det) == 40 ** 3


def test_build_basis_contains_points_and_nothing_more():
    rng = random.Random(5)
    for _ in range(40):
        spec = random_spec(rng, 60, dims=(2, 3, 4))
        basis = modlat.build_basis(spec)
        assert abs(basis.det) == spec.N ** (spec.dim - 1)
        for p in modlat.build_point_set(spec)[:10]:
            assert modlat.lattice_contains(basis, p)
        # the lattice meets the cube exactly in the point set
        for col in basis.columns:
            reduced = tuple(x % spec.N for x in col)
            assert reduced in set(modlat.build_point_set(spec))


def test_relaxed_basis_is_hnf_of_generators():
    spec = GeneratorSpec(20, (6, 15, 18), relaxed=True)
    basis = modlat.build_basis(spec)
    for p in modlat.build_point_set(spec):
        assert modlat.lattice_contains(basis, p)
    # covolume N^{d-1} since the N points are distinct
    assert abs(basis.det) == 400


def test_project_2d():
    spec = GeneratorSpec(244, (1, 13, 169))
    assert set(modlat.project_2d(spec, (0, 1)).columns) == {(0, 244), (1, 13)}
    assert set(modlat.project_2d(spec, (0, 2)).columns) == {(0, 244), (1, 169)}
    p12 = modlat.project_2d(spec, (1, 2))
    assert abs(p12.det) == 244
    # the projection onto (y, z) contains (13, 169)
    assert modlat.lattice_contains(p12, (13, 169))
    # all three projections of the N=244 lattice are congruent
    p01 = modlat.project_2d(spec, (0, 1))
    assert modlat.projections_congruent(p01, p12)
    for bad in [(0, 0), (0, 3), (-1, 1)]:
        with pytest.raises(InvalidAxes):
            modlat.project_2d(spec, bad)


def test_degenerate_sum_check():
    assert modlat.degenerate_sum_check(366, 13, -28)
    assert modlat.degenerate_sum_check(97, 13, 0)
    assert not modlat.degenerate_sum_check(244, 13, 19)


def test_pointset_min_distance_examples():
    assert modlat.pointset_min_distance(GeneratorSpec(244, (1, 13, 169))) == 1891
    assert modlat.pointset_min_distance(GeneratorSpec(26, (1, 3, 9))) == 91
    spec5 = GeneratorSpec(5, (1, 2, 3))
    assert modlat.pointset_min_distance(spec5) == brute_pairs(spec5)
    with pytest.raises(CapExceeded):
        modlat.pointset_min_distance(GeneratorSpec(6001, (1, 2)))


def test_pointset_matches_brute_force():
    rng = random.Random(11)
    for _ in range(60):
        spec = random_spec(rng, 40)
        assert modlat.pointset_min_distance(spec) == brute_pairs(spec)


def test_same_generator_class():
    s = GeneratorSpec(244, (1, 13, 169))
    assert modlat.same_generator_class(s, GeneratorSpec(244, (1, 13, 75)))
    assert modlat.same_generator_class(s, GeneratorSpec(244, (169, 1, 13)))
    assert modlat.same_generator_class(s, GeneratorSpec(244, (13, 169, 1)))
    assert not modlat.same_generator_class(s, GeneratorSpec(244, (1, 13, 170)))
    assert not modlat.same_generator_class(s, GeneratorSpec(245, (1, 13, 169)))


def test_all_orderings():
    specs = list(modlat.all_orderings(GeneratorSpec(10, (1, 2, 3))))
    # orderings with an even leading entry are not strict specs
    assert {sp.gen for sp in specs} == {(1, 2, 3), (1, 3, 2), (3, 1, 2), (3, 2, 1)}
