import random

import pytest
from hypothesis import given, strategies as st

from littlewood.partitions import Partition
from littlewood.weyl import (
    BottOutcome,
    WindowTooShort,
    _greedy_signed,
    bc_s0,
    bott,
    d_s0,
    dot_reflect,
    greedy_modify,
    is_singular,
    length_statistic_bc,
    length_statistic_d,
    sort_length,
)

heads = st.lists(st.integers(min_value=-6, max_value=6), min_size=0, max_size=7)


def shifted_inversions(head, extra=16):
    seq = list(head) + [0] * extra
    x = [seq[i] - (i + 1) for i in range(len(seq))]
    return sum(
        1
        for i in range(len(x))
        for j in range(i + 1, len(x))
        if x[i] < x[j]
    )


class TestDotReflect:
    def test_example(self):
        assert dot_reflect((3, 1), 1) == (0, 4)
        assert dot_reflect((1, 3, 1), 1) == (2, 2, 1)

    def test_pads(self):
        assert dot_reflect((3,), 1) == (-1, 4)
        assert dot_reflect((), 2) == (0, -1, 1)

    @given(heads, st.integers(min_value=1, max_value=8))
    def test_involution(self, head, i):
        once = dot_reflect(head, i)
        assert dot_reflect(once, i)[: len(head)] == tuple(head)

    def test_rejects_zero_index(self):
        with pytest.raises(ValueError):
            dot_reflect((1,), 0)


class TestBott:
    def test_sorted_fixed(self):
        out = bott((3, 2, 2))
        assert out == BottOutcome.regular(0, Partition((3, 2, 2)))

    def test_one_step(self):
        out = bott((1, 3, 1))
        assert out == BottOutcome.regular(1, Partition((2, 2, 1)))

    def test_singular(self):
        assert bott((1, 2)).singular
        assert bott((0, 1, 1)).singular

    def test_tail_participates(self):
        # a negative entry pulls implied zeros into the sort
        assert bott((-3,)).singular
        assert bott((2, -1)).singular
        out = bott((4, -2, 1, 3))
        assert out == BottOutcome.regular(3, Partition((4, 1, 1)))

    def test_empty(self):
        assert bott(()) == BottOutcome.regular(0, Partition(()))

    @given(heads)
    def test_choice_independent(self, head):
        rng = random.Random(0)
        base = bott(head)
        for chooser in (lambda a: a[-1], lambda a: rng.choice(a)):
            assert bott(head, choose=chooser) == base

    @given(heads)
    def test_zero_extension_invariant(self, head):
        assert bott(tuple(head) + (0, 0, 0)) == bott(head)

    @given(heads)
    def test_length_is_shifted_inversions(self, head):
        out = bott(head)
        if not out.singular:
            assert out.length == shifted_inversions(head)

    @given(heads)
    def test_result_permutes_shifted_values(self, head):
        out = bott(head)
        if out.singular:
            return
        extra = 16
        before = sorted(
            (list(head) + [0] * extra)[i] - (i + 1)
            for i in range(len(head) + extra)
        )
        res = list(out.result)
        after = sorted(
            (res + [0] * (len(head) + extra - len(res)))[i] - (i + 1)
            for i in range(len(head) + extra)
        )
        assert before == after


class TestExtraGenerators:
    def test_bc(self):
        assert bc_s0((5, 2), 1) == (-1, 2)
        assert bc_s0((), 0) == (2,)

    def test_d(self):
        assert d_s0((4, 1, 3), 2) == (2, -1, 3)
        assert d_s0((), 3) == (4, 4)

    def test_bc_involution(self):
        head = (3, 1, 1)
        assert bc_s0(bc_s0(head, 4), 4) == head

    def test_d_involution(self):
        head = (3, 1, 1)
        assert d_s0(d_s0(head, 5), 5) == head


class TestSingular:
    def test_bc(self):
        assert is_singular((3, 0, -1), "BC")
        assert is_singular((3, -3), "BC")
        assert not is_singular((3, 1, -2), "BC")

    def test_d_allows_one_zero(self):
        assert not is_singular((3, 0, -1), "D")
        assert is_singular((3, -3), "D")

    def test_a(self):
        assert is_singular((2, 2), "A")
        assert not is_singular((2, -2), "A")

    def test_tail_floor(self):
        with pytest.raises(WindowTooShort):
            is_singular((5, 1), "BC", tail_floor=5)
        assert not is_singular((5, 1), "BC", tail_floor=6)

    def test_unknown(self):
        with pytest.raises(ValueError):
            is_singular((1,), "E8")


def random_window(rng, symmetry):
    k = rng.randint(1, 6) if symmetry == "BC" else rng.randint(2, 6)
    mags = rng.sample(range(1, 20), k)
    return [m if rng.random() < 0.5 else -m for m in mags]


class TestGreedyLengths:
    def test_bc_worked_example(self):
        x = [4, 3, 1, -2, -5, -7, -9, -10, -11]
        count, final = _greedy_signed(list(x), "BC")
        assert count == 8
        assert final == [-1, -2, -3, -4, -5, -7, -9, -10, -11]
        assert length_statistic_bc(x) == 8

    def test_d_worked_example(self):
        x = [10, 8, 4, -2, -12, -14, -16, -18, -20]
        count, final = _greedy_signed(list(x), "D")
        assert count == 6
        assert final == [2, -4, -8, -10, -12, -14, -16, -18, -20]
        assert length_statistic_d(x) == 6

    def test_bc_closed_form_matches_greedy(self):
        rng = random.Random(7)
        for _ in range(300):
            x = random_window(rng, "BC")
            count, final = _greedy_signed(list(x), "BC")
            assert count == length_statistic_bc(x)
            assert final == sorted(final, reverse=True)
            assert final[0] < 0

    def test_d_closed_form_matches_greedy(self):
        rng = random.Random(8)
        for _ in range(300):
            x = random_window(rng, "D")
            count, final = _greedy_signed(list(x), "D")
            assert count == length_statistic_d(x)
            assert final == sorted(final, reverse=True)
            assert final[0] + final[1] < 0

    def test_magnitudes_invariant(self):
        rng = random.Random(9)
        for symmetry in ("BC", "D"):
            for _ in range(100):
                x = random_window(rng, symmetry)
                _, final = _greedy_signed(list(x), symmetry)
                assert sorted(map(abs, x)) == sorted(map(abs, final))


class TestGreedyModify:
    def test_bc_worked_example(self):
        lam_t = Partition((6, 5, 4, 4, 3, 3, 2)).transpose()
        assert lam_t == Partition((7, 7, 6, 4, 2, 1))
        out = greedy_modify(lam_t, "BC", 2)
        assert not out.singular
        assert out.length == 8
        assert out.result == Partition((2, 2, 2, 2, 2, 1))
        assert out.result.transpose() == Partition((6, 5))

    def test_d_worked_example(self):
        lam_t = Partition((4, 4, 4, 4, 3, 3, 2)).transpose()
        assert lam_t == Partition((7, 7, 6, 4))
        out = greedy_modify(lam_t, "D", 4)
        assert not out.singular
        assert out.length == 6
        assert out.result == Partition((3, 1))
        assert out.result.transpose() == Partition((2, 1, 1))

    def test_bc_singular(self):
        # transpose of (1,1) shifted against n=1 staircase hits zero
        assert greedy_modify((2,), "BC", 1).singular

    def test_dominant_fixed(self):
        # at most n rows in the transpose means no sorting at all
        out = greedy_modify((2, 1), "BC", 2)
        assert out == BottOutcome.regular(0, Partition((2, 1)))

    def test_rejects_negative_head(self):
        with pytest.raises(ValueError):
            greedy_modify((-1,), "BC", 2)

    def test_rejects_unknown_symmetry(self):
        with pytest.raises(ValueError):
            greedy_modify((1,), "A", 2)

    @given(
        st.lists(st.integers(min_value=0, max_value=9), max_size=6),
        st.integers(min_value=0, max_value=4),
    )
    def test_bc_size_bookkeeping(self, head, n):
        head = tuple(sorted(head, reverse=True))
        out = greedy_modify(head, "BC", n)
        if not out.singular:
            assert out.result.size <= sum(head)
            assert (sum(head) - out.result.size) % 2 == 0


class TestSortLength:
    def test_sorted(self):
        assert sort_length((5, 3, 1)) == 0

    def test_reversed(self):
        assert sort_length((1, 3, 5)) == 3

    def test_ties(self):
        assert sort_length((2, 2)) is None

    def test_single(self):
        assert sort_length((4,)) == 0
        assert sort_length(()) == 0
