import pytest

from lsalgo.exthom import (
    GradedDims,
    graded_hom_dims,
    lusztig_sheaf_endo_dims,
    series_consistency,
)
from lsalgo.weyl import char_table_sn


class TestGradedDims:
    def test_shape_enforced(self):
        with pytest.raises(ValueError):
            GradedDims((1, 2), 3)
        with pytest.raises(ValueError):
            GradedDims((1, -1), 1)

    def test_json(self):
        assert GradedDims((1, 1, 2), 2).to_json() == {"dims": [1, 1, 2], "max_k": 2}


class TestGradedHomDims:
    def test_s2_diagonal_series(self):
        table = char_table_sn(2)
        assert graded_hom_dims(table, "2", "2", 4).dims == (1, 1, 2, 2, 3)
        assert graded_hom_dims(table, "1.1", "1.1", 4).dims == (1, 1, 2, 2, 3)

    def test_s2_off_diagonal(self):
        table = char_table_sn(2)
        # 1/((1-u)^2) - 1/(1-u^2) halved: 0, 1, 1, 2, 2, ...
        assert graded_hom_dims(table, "2", "1.1", 4).dims == (0, 1, 1, 2, 2)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_degree_zero_entries(self, n):
        table = char_table_sn(n)
        for chi in table.char_ids():
            for psi in table.char_ids():
                dims = graded_hom_dims(table, chi, psi, 0).dims
                assert dims[0] == (1 if chi == psi else 0)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_symmetry(self, n):
        table = char_table_sn(n)
        ids = table.char_ids()
        for i, chi in enumerate(ids):
            for psi in ids[i:]:
                a = graded_hom_dims(table, chi, psi, 8)
                b = graded_hom_dims(table, psi, chi, 8)
                assert a == b

    def test_full_polynomial_algebra_recovered(self):
        # multiplicity series against the trivial character, weighted by
        # character degrees, must sum to the Molien series of the full
        # polynomial algebra 1/(1-u)^n
        for n in [2, 3, 4]:
            table = char_table_sn(n)
            identity_index = len(table.classes) - 1
            max_k = 8
            total = [0] * (max_k + 1)
            for irr in table.irreducibles:
                degree = irr.values[identity_index]
                dims = graded_hom_dims(table, irr.id, table.irreducibles[0].id, max_k).dims
                for k in range(max_k + 1):
                    total[k] += degree * dims[k]
            from math import comb

            expected = [comb(k + n - 1, n - 1) for k in range(max_k + 1)]
            assert total == expected


class TestEndoDims:
    def test_s2_rank2(self):
        table = char_table_sn(2)
        assert lusztig_sheaf_endo_dims(table, 2, 1).dims == (2, 4)

    def test_degree_zero_is_group_order(self):
        for n in [2, 3, 4]:
            table = char_table_sn(n)
            assert lusztig_sheaf_endo_dims(table, n, 0).dims == (table.group_order,)

    def test_s3_rank3_k2(self):
        table = char_table_sn(3)
        assert lusztig_sheaf_endo_dims(table, 3, 2).dims[2] == 36

    def test_matches_sum_over_pairs(self):
        # the endomorphism dims of the full induced sheaf decompose as
        # sum over (chi, psi) of deg(chi) * deg(psi) * hom dims
        n, max_k = 3, 6
        table = char_table_sn(n)
        identity_index = len(table.classes) - 1
        total = [0] * (max_k + 1)
        for chi in table.irreducibles:
            for psi in table.irreducibles:
                dims = graded_hom_dims(table, chi.id, psi.id, max_k).dims
                weight = chi.values[identity_index] * psi.values[identity_index]
                for k in range(max_k + 1):
                    total[k] += weight * dims[k]
        assert tuple(total) == lusztig_sheaf_endo_dims(table, n, max_k).dims


class TestSeriesConsistency:
    def test_s2_cases(self):
        table = char_table_sn(2)
        assert series_consistency(table, "2", "2", 10)
        assert series_consistency(table, "2", "1.1", 10)

    @pytest.mark.parametrize("n", [2, 3])
    def test_all_pairs(self, n):
        table = char_table_sn(n)
        for chi in table.char_ids():
            for psi in table.char_ids():
                assert series_consistency(table, chi, psi, 12)

    def test_detects_corruption(self):
        table = char_table_sn(2)
        # a wrong pairing would break the identity; simulate by comparing
        # mismatched character pairs through a custom check
        dims = graded_hom_dims(table, "2", "2", 6).dims
        other = graded_hom_dims(table, "2", "1.1", 6).dims
        assert dims != other
