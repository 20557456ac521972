import random
from fractions import Fraction as F

import pytest

from powertriples.families import (
    FAMILY_IDS,
    ExcludedParameterError,
    fam3_svalues,
    family_rst,
    family_triple,
    positivity_classify,
    symbolic_verify,
)
from powertriples.polynomials import RatFunc
from powertriples.triples import (
    DegenerateTripleError,
    PowerTuple,
    regularity_defect,
    verify_tuple,
)


class TestFamilyRST:
    def test_fam1_u3(self):
        r, s, t = family_rst("fam1", F(3))
        assert (r, s) == (F(41, 30), F(41, 24))
        assert (s * s * r * r - 1) / (s * s - r * r) == t * t

    def test_fam3a_remark_point(self):
        r, s, t = family_rst("fam3a", F(-2))
        assert (r, s) == (F(4), F(32, 7))

    def test_excluded_parameters(self):
        with pytest.raises(ExcludedParameterError):
            family_rst("fam1", F(1))
        with pytest.raises(ExcludedParameterError):
            family_rst("fam3a", F(3))
        with pytest.raises(ExcludedParameterError):
            family_rst("fam4", F(0))

    def test_fam4_sporadic_degenerates_flagged(self):
        # s or t vanishes at u in {-1, 1/3, -1/3} (zero witnesses); at u = 1
        # the pair collapses to r = s = 1 and is rejected as excluded
        for u in (F(-1), F(1), F(1, 3), F(-1, 3)):
            with pytest.raises((DegenerateTripleError, ExcludedParameterError)):
                family_triple("fam4", u)

    def test_defining_relation_everywhere(self):
        for fid in ("fam1", "fam2", "fam3a", "fam3b", "fam4"):
            r, s, t = family_rst(fid, F(7, 2))
            assert (s * s * r * r - 1) / (s * s - r * r) == t * t


class TestFamilyTriple:
    def test_fam1_golden(self):
        point = family_triple("fam1", F(3))
        assert point.triple.elements() == (
            F(1681, 1600),
            F(8063044, 3404025),
            F(62349625, 8714304),
        )

    def test_fam3a_golden(self):
        point = family_triple("fam3a", F(-2))
        assert point.triple.elements() == (F(240, 49), F(833, 16), F(69745, 784))

    def test_fam2_alpha2(self):
        point = family_triple("fam2", F(2))
        a, b, c = point.triple.elements()
        assert a == F(37 * 37 * 3, 23 * 23)
        assert isinstance(verify_tuple((a, b, c), 4), PowerTuple)

    def test_random_parameters_all_families(self):
        rng = random.Random(20260809)
        count = {fid: 0 for fid in FAMILY_IDS}
        attempts = 0
        while min(count.values()) < 200 and attempts < 5000:
            attempts += 1
            num = rng.randint(-60, 60)
            den = rng.randint(1, 40)
            u = F(num, den)
            for fid in FAMILY_IDS:
                if count[fid] >= 200:
                    continue
                param = u
                if fid == "fam2k":
                    param = (F(rng.randint(1, 9)), u)
                try:
                    point = family_triple(fid, param)
                except (ExcludedParameterError, DegenerateTripleError, ZeroDivisionError):
                    continue
                triple = point.triple
                assert isinstance(verify_tuple(triple.elements(), 4), PowerTuple)
                assert regularity_defect(*triple.elements()) == 0
                count[fid] += 1
        assert min(count.values()) >= 200, count

    def test_json_record(self):
        record = family_triple("fam1", F(3)).to_json()
        assert record["schema"] == "powertriples/family-point-v1"
        assert record["family"] == "fam1"
        assert record["parameter"] == "3"
        assert record["k"] == 4


class TestFam2k:
    def test_matches_fam2_through_alpha(self):
        # fam2k(k, u) agrees with fam2 at alpha = (ku^2+1)/(ku^2-1), exactly
        for k, u in [(F(2), F(3)), (F(5), F(1, 2)), (F(3), F(7, 5))]:
            alpha = (k * u * u + 1) / (k * u * u - 1)
            r1, s1, t1 = family_rst("fam2k", (k, u))
            r2, s2, t2 = family_rst("fam2", alpha)
            assert (r1, s1, t1) == (r2, s2, t2)

    def test_symbolic_in_u_for_fixed_k(self):
        u = RatFunc.x()
        k = F(2)
        r, s, t = family_rst("fam2k", (k, u))
        assert (s * s * r * r - 1) / (s * s - r * r) == t * t
        alpha = (k * u * u + 1) / (k * u * u - 1)
        r2, s2, t2 = family_rst("fam2", alpha)
        assert (r, s) == (r2, s2)


class TestSymbolicVerify:
    @pytest.mark.parametrize("fid", ["fam1", "fam2", "fam3a", "fam3b", "fam4"])
    def test_all_identities_hold(self, fid):
        report = symbolic_verify(fid)
        failed = [c.name for c in report.checks if not c.passed]
        assert report.all_passed, failed

    def test_fam4_has_square_c(self):
        report = symbolic_verify("fam4")
        assert any(c.name == "c is a perfect square in Q(u)" and c.passed for c in report.checks)

    def test_fam2k_not_symbolic(self):
        with pytest.raises(KeyError):
            symbolic_verify("fam2k")

    def test_report_json(self):
        data = symbolic_verify("fam1").to_json()
        assert data["family"] == "fam1" and data["all_passed"] is True


class TestFam3Pair:
    def test_same_r_reciprocal_s(self):
        u = RatFunc.x()
        r_a, s_a, _ = family_rst("fam3a", u)
        r_b, s_b, _ = family_rst("fam3b", u)
        assert r_a == r_b
        assert s_b == 1 / s_a
        for value in (F(2), F(-5), F(7, 2)):
            r_a, s_a, _ = family_rst("fam3a", value)
            r_b, s_b, _ = family_rst("fam3b", value)
            assert r_a == r_b and s_b == 1 / s_a


class TestFam3SValues:
    def test_numeric(self):
        values = fam3_svalues(F(2))
        assert F(32, 7) in values and F(7, 32) in values
        assert len(set(values)) == 8

    def test_symbolic_closure(self):
        u = RatFunc.x()
        values = fam3_svalues(u)
        assert len(set(values)) == 8
        value_set = set(values)
        for v in values:
            assert -v in value_set and 1 / v in value_set

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            fam3_svalues(F(0))

    def test_fam3b_b_always_negative(self):
        # closed form: b = -64(u^4-2u^2+9)u^4 / ((u^4+2u^2+9)^2 (u^2-3)^2)
        # and u^4-2u^2+9 = (u^2-1)^2 + 8 > 0, so b < 0 for every admissible u
        u = RatFunc.x()
        quartic = u**4 - 2 * u * u + 9
        assert quartic == (u * u - 1) ** 2 + 8
        for value in [F(1, 2), F(5), F(-7, 3), F(12), F(-2)]:
            point = family_triple("fam3b", value)
            assert point.triple.b < 0


class TestPositivity:
    def test_all_positive_examples(self):
        for u in (F(3), F(4), F(5, 2), F(10), F(-3)):
            report = positivity_classify(u)
            assert report.all_positive, u

    def test_mixed_sign_examples(self):
        for u in (F(1, 2), F(2), F(-2)):
            report = positivity_classify(u)
            assert report.b_sign < 0 and report.a_sign > 0 and report.c_sign > 0

    def test_unbounded_positive_sample(self):
        # u = n + 3 for n = 0..99: an unbounded all-positive sample
        for n in range(100):
            assert positivity_classify(F(n + 3)).all_positive

    def test_signs_match_triple(self):
        for u in (F(3), F(2), F(1, 2), F(-5, 2)):
            report = positivity_classify(u)
            a, b, c = family_triple("fam1", u).triple.elements()
            assert (a > 0) == (report.a_sign > 0)
            assert (b > 0) == (report.b_sign > 0)
            assert (c > 0) == (report.c_sign > 0)

    def test_u3_triple_matches_printed(self):
        assert family_triple("fam1", F(3)).triple.elements() == (
            F(1681, 1600),
            F(8063044, 3404025),
            F(62349625, 8714304),
        )
