import pytest
from hypothesis import given, settings, strategies as st

from littlewood.complexes import complex_terms, enumerate_q, predicted_homology
from littlewood.modrules import ModOutcome
from littlewood.partitions import Partition, SkewShape, all_partitions_up_to


def P(*parts):
    return Partition(parts)


class TestEnumerateQ:
    def test_minus_one_small(self):
        assert enumerate_q(-1, 4) == [P(), P(1, 1), P(2, 1, 1)]

    def test_zero_small(self):
        assert enumerate_q(0, 4) == [P(), P(1), P(2, 1), P(2, 2)]

    def test_plus_one_small(self):
        assert enumerate_q(1, 4) == [P(), P(2), P(3, 1)]

    def test_minus_one_to_eight(self):
        assert enumerate_q(-1, 8) == [
            P(),
            P(1, 1),
            P(2, 1, 1),
            P(2, 2, 2),
            P(3, 1, 1, 1),
            P(3, 2, 2, 1),
            P(4, 1, 1, 1, 1),
        ]

    def test_bad_epsilon(self):
        with pytest.raises(ValueError):
            enumerate_q(2, 4)

    @pytest.mark.parametrize("epsilon", [-1, 0, 1])
    def test_frobenius_characterization(self, epsilon):
        family = set(enumerate_q(epsilon, 16))
        for mu in all_partitions_up_to(16):
            a, b = mu.frobenius()
            in_family = all(a[i] == b[i] + epsilon for i in range(len(a)))
            assert (mu in family) == in_family

    def test_transpose_swaps_sign(self):
        left = {mu.transpose() for mu in enumerate_q(-1, 14)}
        assert left == set(enumerate_q(1, 14))

    def test_zero_family_self_transpose(self):
        for mu in enumerate_q(0, 14):
            assert mu.transpose() == mu

    def test_size_parity(self):
        for eps in (-1, 1):
            assert all(mu.size % 2 == 0 for mu in enumerate_q(eps, 13))
        for mu in enumerate_q(0, 13):
            assert (mu.size - mu.rank()) % 2 == 0

    def test_sorted_and_bounded(self):
        for eps in (-1, 0, 1):
            family = enumerate_q(eps, 12)
            keys = [(mu.size, tuple(mu)) for mu in family]
            assert keys == sorted(keys)
            assert all(mu.size <= 12 for mu in family)
            assert len(set(family)) == len(family)

    def test_counts_match_inductive_description(self):
        # wrapping a largest-frame recursion gives the same counts
        def build(eps, max_size):
            found = {Partition(())}
            frontier = [Partition(())]
            while frontier:
                mu = frontier.pop()
                r = mu.rank()
                # add a new inner frame: arm a, leg a - eps, nested inside
                for a in range(max(1, 1 + eps), max_size):
                    arms, legs = mu.frobenius()
                    if r and a >= arms[r - 1]:
                        continue
                    new_arms = arms + (a,)
                    new_legs = legs + (a - eps,)
                    from littlewood.partitions import from_frobenius

                    cand = from_frobenius(new_arms, new_legs)
                    if cand.size <= max_size and cand not in found:
                        found.add(cand)
                        frontier.append(cand)
            return found

        for eps in (-1, 0, 1):
            assert set(enumerate_q(eps, 10)) == build(eps, 10)


class TestComplexTerms:
    def test_sp_presentation_shape(self):
        ct = complex_terms("sp", (1, 1))
        assert ct.degrees() == [0, 1]
        assert ct.terms[0] == [SkewShape((1, 1), ())]
        assert ct.terms[1] == [SkewShape((1, 1), (1, 1))]

    def test_sp_three_degrees(self):
        ct = complex_terms("sp", (2, 1, 1))
        assert ct.degrees() == [0, 1, 2]
        assert ct.terms[1] == [SkewShape((2, 1, 1), (1, 1))]
        assert ct.terms[2] == [SkewShape((2, 1, 1), (2, 1, 1))]

    def test_containment_drop(self):
        ct = complex_terms("sp", (2,))
        assert ct.degrees() == [0]

    def test_o_uses_plus_family(self):
        ct = complex_terms("o", (3, 1))
        assert ct.degrees() == [0, 1, 2]
        assert ct.terms[1] == [SkewShape((3, 1), (2,))]
        assert ct.terms[2] == [SkewShape((3, 1), (3, 1))]

    def test_gl_pairs(self):
        ct = complex_terms("gl", (1,), (1,))
        assert ct.degrees() == [0, 1]
        assert ct.terms[1] == [
            (SkewShape((1,), (1,)), SkewShape((1,), (1,)))
        ]

    def test_gl_transpose_mismatch_drops(self):
        # nu = (2) needs nu-transpose = (1,1) inside the second partition
        ct = complex_terms("gl", (2,), (2,))
        assert ct.degrees() == [0, 1]

    def test_max_degree_cap(self):
        ct = complex_terms("sp", (2, 1, 1), max_degree=1)
        assert ct.degrees() == [0, 1]

    def test_group_validation(self):
        with pytest.raises(ValueError):
            complex_terms("sp", (1,), (1,))
        with pytest.raises(ValueError):
            complex_terms("gl", (1,))
        with pytest.raises(ValueError):
            complex_terms("xx", (1,))

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(st.integers(min_value=0, max_value=6), max_size=5).map(
            lambda xs: Partition(sorted(xs, reverse=True))
        )
    )
    def test_sp_term_sizes(self, lam):
        ct = complex_terms("sp", lam)
        for i, shapes in ct.terms.items():
            for s in shapes:
                assert s.outer == lam
                assert s.inner.size == 2 * i


class TestPredictedHomology:
    def test_delegates_to_both_rules(self):
        out = predicted_homology("sp", 2, (6, 5, 4, 4, 3, 3, 2))
        assert out == ModOutcome.concentrated(8, Partition((6, 5)))

    def test_gl(self):
        out = predicted_homology("gl", 1, (1,), (1,))
        assert out.vanishes
