import pytest

from pretzelsurgery.pretzel import (
    FamilyKind,
    MontesinosDescription,
    PretzelLink,
    PretzelError,
    canonicalize,
    component_count,
    family_link,
    family_membership,
    is_knot,
    orientation_flags,
    parse_montesinos,
    parse_pretzel,
)


class TestParsing:
    def test_parse_basic(self):
        assert parse_pretzel("-2,3,7") == PretzelLink((-2, 3, 7))
        assert parse_pretzel(" -1, -2, 3, 3 ") == PretzelLink((-1, -2, 3, 3))

    def test_parse_rejects(self):
        for bad in ("", "1,,2", "a,b", "1;2"):
            with pytest.raises(PretzelError):
                parse_pretzel(bad)

    def test_empty_params_rejected(self):
        with pytest.raises(PretzelError):
            PretzelLink(())


class TestComponents:
    @pytest.mark.parametrize(
        "params,count",
        [
            ((3,), 1),          # trefoil
            ((5,), 1),
            ((-2, 3, 7), 1),
            ((3, 5, 7), 1),
            ((2, 2), 2),        # all-even two regions
            ((2, 2, 2), 3),
            ((-1, -2, 3, 3), 1),
            ((-1, -1, 4, 3, 3), 1),
        ],
    )
    def test_component_count(self, params, count):
        assert component_count(PretzelLink(params)) == count
        assert is_knot(PretzelLink(params)) == (count == 1)

    def test_odd_region_parity_rule(self):
        # a pretzel with two odd and one even region is a knot
        assert is_knot(PretzelLink((-2, 5, 9)))
        # three odd regions close into a knot as well
        assert is_knot(PretzelLink((3, 3, 5)))


class TestCanonicalize:
    def test_rotation_and_reversal_invariance(self):
        base = canonicalize(PretzelLink((-2, 3, 7)))
        for params in ((3, 7, -2), (7, -2, 3), (7, 3, -2), (-2, 7, 3)):
            assert canonicalize(PretzelLink(params)) == base

    def test_idempotent(self):
        link = PretzelLink((5, -2, 3))
        assert canonicalize(canonicalize(link)) == canonicalize(link)


class TestOrientationFlags:
    def test_flags_shape(self):
        flags = orientation_flags(PretzelLink((-2, 3, 7)))
        assert len(flags) == 3

    def test_knot_flags_consistent_across_arcs(self):
        # each closure arc joins an outward port to an inward port
        link = PretzelLink((-2, 3, 7))
        flags = orientation_flags(link)
        n = len(flags)
        for i in range(n):
            j = (i + 1) % n
            assert flags[i].tr != flags[j].tl
            assert flags[i].br != flags[j].bl

    def test_clasp_region_antiparallel(self):
        # in the (-2,p,q) family the even region is the antiparallel clasp
        flags = orientation_flags(PretzelLink((-2, 3, 7)))
        assert not flags[0].parallel
        assert flags[1].parallel and flags[2].parallel


class TestFamilyMembership:
    def test_minus_2l(self):
        tag = family_membership(PretzelLink((-4, 5, 7)))
        assert tag.kind is FamilyKind.MINUS_2L
        assert (tag.index, tag.p, tag.q) == (2, 5, 7)

    def test_minus2_pq_maps_to_n1(self):
        tag = family_membership(PretzelLink((-2, 3, 7)))
        assert tag.kind is FamilyKind.MINUS1_2N
        assert (tag.index, tag.p, tag.q) == (1, 3, 7)

    def test_minus1_2n(self):
        tag = family_membership(PretzelLink((-1, 6, 3, 5)))
        assert tag.kind is FamilyKind.MINUS1_2N
        assert (tag.index, tag.p, tag.q) == (3, 3, 5)

    def test_minus1_2n_negative(self):
        tag = family_membership(PretzelLink((-1, -2, 3, 3)))
        assert tag.kind is FamilyKind.MINUS1_2N
        assert (tag.index, tag.p, tag.q) == (-1, 3, 3)

    def test_minus1_minus1_2m(self):
        tag = family_membership(PretzelLink((-1, -1, 4, 3, 3)))
        assert tag.kind is FamilyKind.MINUS1_MINUS1_2M
        assert (tag.index, tag.p, tag.q) == (2, 3, 3)

    def test_other(self):
        assert family_membership(PretzelLink((3, 5, 7))).kind is FamilyKind.OTHER

    def test_membership_unordered(self):
        a = family_membership(PretzelLink((-1, 6, 3, 5)))
        b = family_membership(PretzelLink((3, -1, 5, 6)))
        assert a == b

    def test_family_link_round_trip(self):
        for params in ((-4, 5, 7), (-1, 6, 3, 5), (-1, -1, 4, 3, 3)):
            tag = family_membership(PretzelLink(params))
            assert family_membership(family_link(tag)) == tag


class TestMontesinos:
    def test_parse(self):
        desc = parse_montesinos("1/3;1/3;-1/2")
        assert len(desc.tangles) == 3

    def test_as_pretzel_literal(self):
        desc = parse_montesinos("1/3;1/3;-1/2")
        assert desc.as_pretzel() == PretzelLink((3, 3, -2))

    def test_as_pretzel_rational_fails(self):
        assert parse_montesinos("2/5;1/3;1/3").as_pretzel() is None

    def test_parse_rejects(self):
        with pytest.raises(PretzelError):
            parse_montesinos("1/3;;1/2")
