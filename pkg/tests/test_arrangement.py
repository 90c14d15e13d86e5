import random
from fractions import Fraction

import pytest

from levelarr.arrangement import (
    Arrangement,
    DegenerateDeformationError,
    Hyperplane,
    Kind,
    delete,
    direction_classes,
    is_nondegenerate,
    make_catalan_type,
    make_cox_a,
    make_cox_b,
    make_deformation_a,
    make_deformation_b,
    make_m_catalan,
    random_deformation_a,
    random_deformation_b,
    restrict,
)
from levelarr.exactmath import dot, solve_affine


def hp(normal, offset=0):
    return Hyperplane(normal, offset)


class TestHyperplane:
    def test_canonical_scaling(self):
        assert hp((2, -2), 1) == hp((1, -1), Fraction(1, 2))
        assert hp((Fraction(1, 2), Fraction(-1, 2)), 1) == hp((1, -1), 2)

    def test_sign_normalization(self):
        # x2 - x1 = 3 and x1 - x2 = -3 are the same locus
        assert hp((-1, 1), 3) == hp((1, -1), -3)

    def test_zero_normal_rejected(self):
        with pytest.raises(ValueError):
            hp((0, 0), 1)

    def test_parallel_same_normal_tuple(self):
        assert hp((3, -3), 0).normal == hp((1, -1), 5).normal

    def test_forms(self):
        assert hp((0, 1, 0), 2).form() == ("coord", 1)
        assert hp((1, 0, -1), 0).form() == ("diff", 0, 2)
        assert hp((0, 1, 1), 0).form() == ("sum", 1, 2)
        assert hp((1, 2), 0).form() is None


class TestGenerators:
    def test_cox_a_counts(self):
        assert len(make_cox_a(2)) == 1
        assert len(make_cox_a(3)) == 3
        assert len(make_cox_a(4)) == 6
        with pytest.raises(ValueError):
            make_cox_a(1)

    def test_cox_b_counts(self):
        assert [h for h in make_cox_b(1)] == [hp((1,), 0)]
        assert len(make_cox_b(2)) == 4
        assert len(make_cox_b(3)) == 9
        with pytest.raises(ValueError):
            make_cox_b(0)

    def test_cox_kinds(self):
        assert make_cox_a(3).kind == Kind.TYPE_A
        assert make_cox_b(2).kind == Kind.TYPE_B

    def test_deformation_a_worked_example(self, example_a):
        arr = make_deformation_a(3, {(1, 2): [0, 1], (2, 3): [0], (1, 3): [0, 1]})
        assert arr.same_set(example_a)
        assert arr.kind == Kind.TYPE_A

    def test_deformation_a_trivial_cases(self):
        assert make_deformation_a(2, {(1, 2): [0]}).same_set(make_cox_a(2))
        catalan = make_deformation_a(2, {(1, 2): [-1, 0, 1]})
        assert catalan.same_set(make_catalan_type(2, [1], with_zero=True))

    def test_deformation_a_missing_pair(self):
        with pytest.raises(DegenerateDeformationError) as err:
            make_deformation_a(3, {(1, 2): [0], (2, 3): [0]})
        assert err.value.missing == ((1, 3),)

    def test_deformation_a_duplicate_offset(self):
        with pytest.raises(ValueError, match="duplicate"):
            make_deformation_a(2, {(1, 2): [1, 1]})

    def test_deformation_a_empty_list_degenerate(self):
        with pytest.raises(DegenerateDeformationError):
            make_deformation_a(2, {(1, 2): []})

    def test_deformation_b_worked_example(self, example_b):
        arr = make_deformation_b(2, {1: [0], 2: [0]}, {(1, 2): [0]}, {(1, 2): [1]})
        assert arr.same_set(example_b)
        assert arr.kind == Kind.TYPE_B

    def test_deformation_b_trivial_cases(self):
        assert make_deformation_b(1, {1: [0]}, {}, {}).same_set(make_cox_b(1))
        all_zero = make_deformation_b(2, {1: [0], 2: [0]}, {(1, 2): [0]}, {(1, 2): [0]})
        assert all_zero.same_set(make_cox_b(2))

    def test_deformation_b_missing_family(self):
        with pytest.raises(DegenerateDeformationError):
            make_deformation_b(2, {1: [0], 2: [0]}, {(1, 2): [0]}, {})

    def test_catalan_type(self):
        c = make_catalan_type(2, [1], with_zero=True)
        assert {h.offset for h in c} == {-1, 0, 1}
        assert len(make_catalan_type(3, [1], with_zero=True)) == 9
        semi = make_catalan_type(2, [2, 1], with_zero=False)
        assert {h.offset for h in semi} == {-2, -1, 1, 2}
        assert len(make_m_catalan(2, 2)) == 5

    def test_catalan_validation(self):
        with pytest.raises(ValueError):
            make_catalan_type(2, [1, 2], with_zero=True)  # increasing
        with pytest.raises(ValueError):
            make_catalan_type(2, [0], with_zero=True)  # not positive
        with pytest.raises(ValueError):
            make_catalan_type(2, [2, 2], with_zero=True)  # not strictly decreasing

    def test_duplicate_hyperplane_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            Arrangement(2, [hp((1, -1), 0), hp((2, -2), 0)])


class TestDirectionClasses:
    def test_partition(self, example_a):
        classes = direction_classes(example_a)
        assert len(classes) == 3
        members = sorted(i for cls in classes for i in cls.members)
        assert members == [0, 1, 2, 3, 4]


class TestNondegeneracy:
    def test_worked_example_is_nondegenerate(self, example_a):
        assert is_nondegenerate(example_a, Kind.TYPE_A).ok

    def test_missing_direction_reported(self):
        arr = Arrangement(3, [hp((0, 1, -1), 0), hp((1, 0, -1), 0)])
        report = is_nondegenerate(arr, Kind.TYPE_A)
        assert not report.ok
        assert report.missing == ((1, 2),)
        assert "missing direction" in report.explanation()

    def test_semiorder_is_nondegenerate(self):
        semi = make_catalan_type(2, [1], with_zero=False)
        assert is_nondegenerate(semi, Kind.TYPE_A).ok

    def test_foreign_hyperplane_reported(self):
        arr = Arrangement(2, [hp((1, -1), 0), hp((1, 2), 0)])
        report = is_nondegenerate(arr, Kind.TYPE_A)
        assert not report.ok
        assert report.foreign == (1,)

    def test_type_b_families(self):
        report = is_nondegenerate(make_cox_b(2), Kind.TYPE_B)
        assert report.ok
        arr = delete(make_cox_b(2), 0)  # drop x1 = 0
        report = is_nondegenerate(arr, Kind.TYPE_B)
        assert not report.ok
        assert ("x", 1) in report.missing


class TestDelete:
    def test_delete_only_hyperplane(self):
        arr = delete(make_cox_a(2), 0)
        assert len(arr) == 0
        assert arr.dim == 2
        assert arr.kind == Kind.GENERAL

    def test_delete_keeps_tag_when_direction_survives(self, example_a):
        assert delete(example_a, 1).kind == Kind.TYPE_A

    def test_delete_downgrades_tag(self, example_a):
        assert delete(delete(example_a, 1), 0).kind == Kind.GENERAL

    def test_bad_index(self, example_a):
        with pytest.raises(IndexError):
            delete(example_a, 5)

    def test_delete_then_readd_is_set_equal(self, example_a):
        h = example_a.hyperplanes[2]
        rebuilt = Arrangement(3, delete(example_a, 2).hyperplanes + (h,))
        assert rebuilt.same_set(example_a)


class TestRestrict:
    def test_worked_example_onto_first(self, example_a):
        # Restricting onto x1-x2 = 0 and dropping x2: the parallel hyperplane
        # x1-x2 = 1 disappears; x2-x3 = 0 and x1-x3 = 0 both map to y1-y2 = 0
        # (computed by substituting x2 = x1 by hand); x1-x3 = 1 maps to
        # y1-y2 = 1.
        res, kept = restrict(example_a, 0)
        assert kept == (0, 2)
        assert res.dim == 2
        assert set(res.hyperplanes) == {hp((1, -1), 0), hp((1, -1), 1)}
        assert res.kind == Kind.TYPE_A

    def test_cox_a3_single_image_class(self):
        arr = make_cox_a(3)
        idx = arr.hyperplanes.index(hp((1, -1, 0), 0))
        res, _ = restrict(arr, idx)
        assert len(res) == 1
        assert len(direction_classes(res)) == 1

    def test_cox_b2_onto_coordinate(self):
        arr = make_cox_b(2)
        idx = arr.hyperplanes.index(hp((1, 0), 0))
        res, kept = restrict(arr, idx)
        assert kept == (1,)
        assert list(res.hyperplanes) == [hp((1,), 0)]
        assert res.kind == Kind.TYPE_B

    def test_bad_index(self, example_a):
        with pytest.raises(IndexError):
            restrict(example_a, -1)

    def test_images_match_bruteforce_intersections(self, example_a, example_b):
        for arr in (example_a, example_b):
            for h_index in range(len(arr)):
                self._check_against_bruteforce(arr, h_index)

    @staticmethod
    def _check_against_bruteforce(arr, h_index):
        h0 = arr.hyperplanes[h_index]
        res, kept = restrict(arr, h_index)
        expected = set()
        for idx, h in enumerate(arr.hyperplanes):
            if idx == h_index:
                continue
            flat = solve_affine(
                [(h0.normal, h0.offset), (h.normal, h.offset)], dim=arr.dim
            )
            if flat is None or flat.dim == arr.dim - 1:
                continue  # empty, or h == h0
            point = tuple(flat.point[i] for i in kept)
            basis = [tuple(v[i] for i in kept) for v in flat.basis]
            # normal of the projected flat: a nonzero vector orthogonal to the
            # projected directions, found from the null space of the basis.
            null = solve_affine([(b, 0) for b in basis], dim=arr.dim - 1)
            assert null is not None and null.dim == 1
            normal = null.basis[0]
            expected.add(Hyperplane(normal, dot(normal, point)))
        assert set(res.hyperplanes) == expected

    def test_restriction_closure_type_a(self):
        rng = random.Random(97)
        for _ in range(12):
            arr = random_deformation_a(3, rng)
            for h_index in range(len(arr)):
                res, _ = restrict(arr, h_index)
                assert is_nondegenerate(res, Kind.TYPE_A).ok

    def test_restriction_closure_type_b(self):
        rng = random.Random(98)
        for _ in range(12):
            arr = random_deformation_b(2, rng)
            for h_index in range(len(arr)):
                res, _ = restrict(arr, h_index)
                assert is_nondegenerate(res, Kind.TYPE_B).ok

    def test_restriction_from_r1_gives_r0(self):
        arr = make_deformation_b(1, {1: [0, 1]}, {}, {})
        res, kept = restrict(arr, 0)
        assert res.dim == 0
        assert len(res) == 0
        assert kept == ()


class TestRandomGenerators:
    def test_reproducible(self):
        a1 = random_deformation_a(3, random.Random(5))
        a2 = random_deformation_a(3, random.Random(5))
        assert a1 == a2

    def test_offsets_within_pool(self):
        arr = random_deformation_a(4, random.Random(11), max_per_direction=2)
        for h in arr:
            assert abs(h.offset) <= 3
            assert h.offset.denominator in (1, 2)
        assert is_nondegenerate(arr, Kind.TYPE_A).ok

    def test_type_b_reproducible_and_valid(self):
        b1 = random_deformation_b(3, random.Random(9))
        b2 = random_deformation_b(3, random.Random(9))
        assert b1 == b2
        assert is_nondegenerate(b1, Kind.TYPE_B).ok
