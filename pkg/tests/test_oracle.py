from functools import lru_cache
from itertools import permutations

import pytest

from lsalgo.laurent import ONE, ZERO, t_power
from lsalgo.oracle import Tableau, charge, kostka_foulkes, ssyt_enumerate
from lsalgo.weyl import Partition, SizeMismatch, partitions_of
from lsalgo.blockdata import dominates

P = lambda *parts: Partition(tuple(parts))


def q_kostant_kostka(lam: tuple, mu: tuple, n: int) -> dict[int, int]:
    """Second independent oracle: the q-analogue of weight multiplicity,
    an alternating sum over the Weyl group of q-graded counts of ways to
    write w(lam+rho)-(mu+rho) as a sum of positive roots.  Positive roots
    of the type-A root system act as intervals on prefix sums, which makes
    the partition count a small memoized recursion."""
    lam = tuple(lam) + (0,) * (n - len(lam))
    mu = tuple(mu) + (0,) * (n - len(mu))
    rho = tuple(range(n - 1, -1, -1))
    intervals = [(i, j) for i in range(n) for j in range(i + 1, n)]

    @lru_cache(maxsize=None)
    def graded_count(profile, idx):
        if all(s == 0 for s in profile):
            return ((0, 1),)
        if idx < 0:
            return ()
        i, j = intervals[idx]
        cap = min(profile[m] for m in range(i, j))
        out: dict[int, int] = {}
        for k in range(cap + 1):
            reduced = tuple(profile[m] - (k if i <= m < j else 0)
                            for m in range(n - 1))
            for e, c in graded_count(reduced, idx - 1):
                out[e + k] = out.get(e + k, 0) + c
        return tuple(sorted(out.items()))

    shifted_lam = tuple(a + b for a, b in zip(lam, rho))
    shifted_mu = tuple(a + b for a, b in zip(mu, rho))
    total: dict[int, int] = {}
    for perm in permutations(range(n)):
        sign = (-1) ** sum(1 for a in range(n) for b in range(a + 1, n)
                           if perm[a] > perm[b])
        v = tuple(shifted_lam[p] - shifted_mu[i] for i, p in enumerate(perm))
        profile, running, feasible = [], 0, True
        for x in v[:-1]:
            running += x
            if running < 0:
                feasible = False
                break
            profile.append(running)
        if not feasible or sum(v) != 0:
            continue
        for e, c in graded_count(tuple(profile), len(intervals) - 1):
            total[e] = total.get(e, 0) + sign * c
    return {e: c for e, c in sorted(total.items()) if c}


class TestTableau:
    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            Tableau(((2, 1),))  # row decreases
        with pytest.raises(ValueError):
            Tableau(((1, 1), (1,)))  # column not strict
        with pytest.raises(ValueError):
            Tableau(((1,), (2, 2)))  # ragged upward

    def test_shape_and_content(self):
        t = Tableau(((1, 1, 2), (2,)))
        assert t.shape == P(3, 1)
        assert t.content == P(2, 2)

    def test_reading_word_bottom_up(self):
        t = Tableau(((1, 2), (3,)))
        assert t.reading_word() == (3, 1, 2)


class TestEnumeration:
    def test_single_tableau(self):
        out = ssyt_enumerate(P(2), P(1, 1))
        assert out == [Tableau(((1, 2),))]

    def test_two_tableaux(self):
        out = ssyt_enumerate(P(2, 1), P(1, 1, 1))
        assert len(out) == 2
        assert Tableau(((1, 2), (3,))) in out
        assert Tableau(((1, 3), (2,))) in out

    def test_superstandard_unique(self):
        for n in range(1, 7):
            for lam in partitions_of(n):
                assert len(ssyt_enumerate(lam, lam)) == 1

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            ssyt_enumerate(P(2), P(1, 1, 1))

    def test_none_when_not_dominating(self):
        assert ssyt_enumerate(P(2, 2), P(3, 1)) == []

    def test_deterministic_order(self):
        assert ssyt_enumerate(P(2, 1), P(1, 1, 1)) == ssyt_enumerate(P(2, 1), P(1, 1, 1))


class TestCharge:
    def test_row_word_12(self):
        assert charge(Tableau(((1, 2),))) == 1

    def test_single_letter(self):
        assert charge(Tableau(((1, 1, 1),))) == 0

    def test_charges_of_standard_pair(self):
        charges = {charge(t) for t in ssyt_enumerate(P(2, 1), P(1, 1, 1))}
        assert charges == {1, 2}

    def test_superstandard_has_charge_zero(self):
        for n in range(1, 7):
            for lam in partitions_of(n):
                (t,) = ssyt_enumerate(lam, lam)
                assert charge(t) == 0

    def test_increasing_row(self):
        for n in range(1, 7):
            t = Tableau((tuple(range(1, n + 1)),))
            assert charge(t) == n * (n - 1) // 2


class TestKostkaFoulkes:
    def test_column_content(self):
        q = t_power(1)
        assert kostka_foulkes(P(2), P(1, 1)) == q

    def test_diagonal_is_one(self):
        for n in range(1, 7):
            for lam in partitions_of(n):
                assert kostka_foulkes(lam, lam) == ONE

    def test_standard_content(self):
        q = t_power(1)
        assert kostka_foulkes(P(2, 1), P(1, 1, 1)) == q + q**2

    def test_known_values(self):
        q = t_power(1)
        assert kostka_foulkes(P(2, 2), P(2, 1, 1)) == q
        assert kostka_foulkes(P(3, 1), P(2, 1, 1)) == q + q**2
        assert kostka_foulkes(P(2, 2), P(1, 1, 1, 1)) == q**2 + q**4
        # q-analogue hook-length check: q^(n of conjugate) * [4]_q! / prod [hook]_q
        assert kostka_foulkes(P(3, 1), P(1, 1, 1, 1)) == q**3 + q**4 + q**5
        assert kostka_foulkes(P(2, 1, 1), P(1, 1, 1, 1)) == q + q**2 + q**3

    def test_evaluation_counts_tableaux(self):
        for n in range(1, 7):
            for lam in partitions_of(n):
                for mu in partitions_of(n):
                    value = kostka_foulkes(lam, mu)
                    assert value.evaluate_at_one() == len(ssyt_enumerate(lam, mu))

    def test_vanishing_matches_dominance(self):
        for n in range(1, 7):
            for lam in partitions_of(n):
                for mu in partitions_of(n):
                    vanishes = kostka_foulkes(lam, mu) == ZERO
                    assert vanishes == (not dominates(lam, mu))

    def test_single_row_closed_form(self):
        for n in range(1, 7):
            for mu in partitions_of(n):
                assert kostka_foulkes(P(n), mu) == t_power(mu.n_statistic())

    def test_nonnegative_coefficients(self):
        for lam in partitions_of(6):
            for mu in partitions_of(6):
                assert all(c > 0 for _, c in kostka_foulkes(lam, mu).items())

    @pytest.mark.parametrize("n", range(1, 6))
    def test_against_q_kostant_oracle(self, n):
        # the charge statistic and the alternating q-Kostant sum are
        # independent routes to the same polynomials
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                if not dominates(lam, mu):
                    continue
                by_charge = {e // 2: c for e, c in kostka_foulkes(lam, mu).items()}
                assert by_charge == q_kostant_kostka(lam.parts, mu.parts, n)

    def test_against_q_kostant_oracle_n6_spots(self):
        for lam, mu in [((5, 1), (3, 2, 1)), ((4, 2), (2, 2, 2)),
                        ((3, 2, 1), (2, 2, 1, 1)), ((4, 1, 1), (2, 2, 1, 1))]:
            by_charge = {e // 2: c
                         for e, c in kostka_foulkes(P(*lam), P(*mu)).items()}
            assert by_charge == q_kostant_kostka(lam, mu, 6)
