import math
from fractions import Fraction

import pytest

from rank1lat import core, families, modlat, svp
from rank1lat.exceptions import ParamOutOfRange
from rank1lat.families import GAMMA, RadicalConstant


def test_radical_constant():
    assert float(GAMMA[2]) == pytest.approx(2 / math.sqrt(3), rel=1e-15)
    assert float(GAMMA[5]) == pytest.approx(2 ** 0.6, rel=1e-15)
    assert float(GAMMA[2].sqrt()) == pytest.approx(math.sqrt(2 / math.sqrt(3)), rel=1e-15)
    assert str(GAMMA[2].sqrt()) == "2^(1/2)*3^(-1/4)"
    assert float(families.ONE) == 1.0
    r = RadicalConstant.power(2, Fraction(1, 3)) * RadicalConstant.power(2, Fraction(2, 3))
    assert r.factors == ((2, Fraction(1)),)


def test_hermite_bound():
    assert families.hermite_bound(3, 244) == pytest.approx(2 ** (1 / 6) * 244 ** (2 / 3), rel=1e-14)
    assert families.hermite_bound(3, 244) > math.sqrt(1891)
    assert families.hermite_bound(3, 1) == pytest.approx(2 ** (1 / 6))
    assert families.hermite_bound(5, 121) == pytest.approx(2 ** 0.3 * 121 ** 0.8)
    with pytest.raises(ParamOutOfRange):
        families.hermite_bound(6, 10)


def test_within_hermite_bound_exact():
    # fcc-limit: lambda^2 = 2^(1/3) N^(4/3); for N = 2 * t^3 that is 2 * (2 t^3)... use a direct check
    assert families.within_hermite_bound(1891, 244, 3)
    assert not families.within_hermite_bound(1939, 244, 3)  # 2^(1/3)*244^(4/3) ~ 1938.6


def test_rhombohedral_angle():
    rep = svp.minkowski_reduce(modlat.build_basis(modlat.GeneratorSpec(244, (1, 13, 169))))
    assert families.rhombohedral_angle(rep.reduced_basis) == pytest.approx(1.06572, abs=1e-5)
    fcc = core.LatticeBasis([(1, 1, 0), (1, 0, 1), (0, 1, 1)])
    assert families.rhombohedral_angle(fcc) == pytest.approx(math.pi / 3, abs=1e-12)
    assert families.rhombohedral_angle(core.LatticeBasis.identity(3)) == pytest.approx(math.pi / 2)
    # the literal signs (19,3,39),(3,39,19),(-39,-19,-3) give one obtuse angle
    lit = core.LatticeBasis([(19, 3, 39), (3, 39, 19), (-39, -19, -3)])
    angles = families.rhombohedral_angle(lit)
    assert isinstance(angles, tuple)
    assert sorted(angles)[-1] == pytest.approx(math.pi - 1.0657237, abs=1e-6)


def test_reference_constants():
    assert abs(families.REFERENCE.fcc_basis.det) == 2
    (x1, y1), (x2, y2) = families.REFERENCE.hex_basis
    assert x1 * y2 - x2 * y1 == pytest.approx(math.sqrt(3) / 2)


def test_thm1_examples():
    p = families.family_thm1(13)
    assert (p.N, p.predicted_lambda_sq) == (2196, 28731)
    assert p.predicted_normalized == pytest.approx(1.0032, abs=5e-4)
    p3 = families.family_thm1(3)
    assert (p3.N, p3.predicted_lambda_sq) == (26, 91)
    assert abs(families.family_thm1(100).predicted_normalized - 1) < 1e-3
    with pytest.raises(ParamOutOfRange):
        families.family_thm1(2)


def test_thm2_examples():
    p = families.family_thm2(6)
    assert (p.N, p.predicted_lambda_sq) == (1098, 13176)
    assert p.predicted_normalized == pytest.approx(1.0785, abs=5e-4)
    p50 = families.family_thm2(50)
    assert (p50.N, p50.gen) == (515150, (1, 101, 10201))
    p1 = families.family_thm2(1)
    assert (p1.N, p1.predicted_lambda_sq) == (13, 26)
    assert svp.oracle_lambda_sq(p1.spec) == 26


def test_thm3_examples():
    p = families.family_thm3_4d(1)
    assert (p.N, p.predicted_lambda_sq) == (40, 260)
    assert svp.svp_oracle(p.spec)[0] == 260
    assert (-1, -3, -9, 13) in p.candidate_basis.columns
    q = families.family_thm3_5d(1)
    assert (q.N, q.predicted_lambda_sq) == (121, 2420)
    assert (-1, -3, -9, -27, 40) in q.candidate_basis.columns


@pytest.mark.parametrize("fid,params", [
    ("thm1_cubic", range(3, 9)), ("thm2_fcc3d", range(1, 7)),
    ("thm3_4d", range(1, 5)), ("thm3_5d", range(1, 4)),
])
def test_candidate_bases_certify(fid, params):
    for k in params:
        p = families.family_point(fid, k)
        basis = modlat.build_basis(p.spec)
        assert core.unimodular_equivalent(p.candidate_basis, basis)
        assert abs(p.candidate_basis.det) == p.N ** (p.dim - 1)
        assert svp.is_minkowski_reduced(p.candidate_basis)
        assert p.candidate_basis.columns[0].norm_sq == p.predicted_lambda_sq


def test_limits_approached_from_below():
    for fid, params in [("thm2_fcc3d", range(1, 40)), ("thm3_4d", range(1, 30)), ("thm3_5d", range(1, 30))]:
        vals = [families.family_point(fid, k).predicted_normalized for k in params]
        limit = float(families.family_point(fid, 1).limit_constant)
        assert all(v < limit for v in vals)
        assert all(a < b for a, b in zip(vals, vals[1:]))


def test_hex_family():
    p0 = families.family_hex2d(0)
    assert (p0.N, p0.gen) == (8, (1, 3))
    assert families.hex_partial_quotients(0) == [2, 1, 2]
    assert families.continued_fraction([2, 1, 2]) == Fraction(3, 8)
    errs = []
    # float limit is accurate to ~1e-17, far below the s <= 5 errors
    for s in range(6):
        p = families.family_hex2d(s)
        errs.append(abs(Fraction(p.gen[1], p.N) - Fraction(families.HEX_SLOPE_LIMIT)))
        assert p.predicted_lambda_sq == svp.oracle_lambda_sq(p.spec)
    assert all(a > b for a, b in zip(errs, errs[1:]))


def test_convergents_alternate():
    q = families.hex_partial_quotients(3)
    cs = families.convergents(q)
    assert cs[-1] == families.continued_fraction(q)
    sides = [c > families.HEX_SLOPE_LIMIT for c in cs]
    assert all(a != b for a, b in zip(sides, sides[1:]))


def test_first_thm2_beating():
    p = families.first_thm2_beating()
    assert (p.param, p.N) == (32, 137312)
    assert not families.exceeds_normalized(*(lambda q: (q.predicted_lambda_sq, q.N))(families.family_thm2(31)), 1891, 244)


def test_unknown_family():
    with pytest.raises(ParamOutOfRange):
        families.family_point("nope", 1)
