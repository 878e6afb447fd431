from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rltkit.automaton import compile_pair_automaton
from rltkit.bitnum import SumSpec, sum_oracle
from rltkit.compiler import get_fixture
from rltkit.linrep import (
    LSD, MSD, LinearRepresentation, counting_representation, equivalent, equivalent_bruteforce,
    evaluate, hankel_rank, linear_combination, matmul, matvec, minimize, reverse, vecmat,
)
from conftest import compiled

THM6 = LinearRepresentation([1, 0], [[1, 0], [1, 0]], [[0, 1], [1, 1]], [1, 1])
THM8 = LinearRepresentation([1, 0], [[1, 0], [1, 0]], [[0, 1], [0, 2]], [1, 1])


def lsd_rep(spec):
    return counting_representation(compile_pair_automaton(SumSpec(*spec)))


def test_evaluate_examples():
    assert evaluate(THM6, 7) == 3
    assert evaluate(THM6, 0) == 1
    assert evaluate(THM6, 11) == 2
    assert THM6(0) == sum(a * b for a, b in zip(THM6.v, THM6.w))


def test_shape_validation():
    with pytest.raises(ValueError):
        LinearRepresentation([1, 0], [[1]], [[0, 1], [1, 1]], [1, 1])
    with pytest.raises(ValueError):
        LinearRepresentation([1, 0], [[1, 0], [1, 0]], [[0, 1], [1, 1]], [1])
    with pytest.raises(ValueError):
        LinearRepresentation([1], [[1]], [[1]], [1], order="big")


def test_counting_representation_examples():
    R = lsd_rep((1, -1, 0, 2))
    assert R.order == LSD
    assert [evaluate(R, n) for n in range(8)] == [1, 1, 1, 2, 1, 1, 2, 3]
    assert evaluate(lsd_rep((1, 0, 0, 2)), 7) == 4
    assert evaluate(lsd_rep((0, 6, 1, 3)), 0) == 1


def test_counting_representation_dimension():
    a = compile_pair_automaton(SumSpec(1, 2, 2, -1))
    assert counting_representation(a).rank == len(a.states)


def test_oracle_equivalence(all_fixtures):
    for f in all_fixtures:
        R = lsd_rep(f.spec)
        for n in range(1 << 12):
            assert evaluate(R, n) == sum_oracle(f.spec, n), (f.name, n)


def test_padding_invariance(all_fixtures):
    for f in all_fixtures:
        R = lsd_rep(f.spec)
        assert matvec(R.gamma0, R.w) == R.w
        M = reverse(R)
        assert vecmat(M.v, M.gamma0) == M.v


def test_reverse_examples():
    R = lsd_rep((1, -1, 0, 2))
    assert reverse(reverse(R)) == R
    assert reverse(R).rank == R.rank
    M = reverse(R)
    assert M.order == MSD
    for n in range(1024):
        assert evaluate(M, n) == sum_oracle(SumSpec(1, -1, 0, 2), n)


def test_reverse_preserves_evaluation(all_fixtures):
    for f in all_fixtures:
        R = lsd_rep(f.spec)
        M = reverse(R)
        for n in range(4096):
            assert evaluate(M, n) == evaluate(R, n)


@pytest.mark.parametrize("name,rank", [("thm6", 2), ("thm14", 3), ("thm17", 4)])
def test_minimize_examples(name, rank):
    f = get_fixture(name)
    assert minimize(reverse(lsd_rep(f.spec))).rank == rank


def test_minimize_idempotent_and_equivalent(all_fixtures):
    for f in all_fixtures:
        R = compiled(f.spec, False)
        M = minimize(R)
        MM = minimize(M)
        assert MM.rank == M.rank
        assert equivalent(M, R)
        assert equivalent(MM, R)


def test_minimal_rank_is_hankel_rank(all_fixtures):
    for f in all_fixtures:
        R = compiled(f.spec, False)
        M = minimize(R)
        # words shorter than rank+1 already span the row and column spaces
        assert hankel_rank(R, M.rank + 1) == M.rank, f.name


def test_minimize_zero_series():
    Z = LinearRepresentation([1, 0], [[1, 0], [0, 1]], [[1, 0], [0, 1]], [0, 0])
    assert minimize(Z).rank == 1
    assert all(minimize(Z)(n) == 0 for n in range(20))


def test_equivalent_examples():
    assert equivalent(THM6, THM6)
    assert equivalent(compiled((1, -1, 0, 2)), THM6)
    assert not equivalent(THM6, THM8)
    assert evaluate(THM6, 7) == 3 and evaluate(THM8, 7) == 4


def test_equivalent_agrees_with_bruteforce(all_fixtures):
    reps = [compiled(f.spec) for f in all_fixtures]
    for a in reps[:6]:
        for b in reps[:6]:
            assert equivalent(a, b) == equivalent_bruteforce(a, b)


def test_equivalent_mixed_orders():
    R = lsd_rep((1, -1, 0, 2))
    assert equivalent(THM6, R)


def test_linear_combination_examples():
    D = linear_combination(1, THM6, -1, THM6)
    assert all(D(n) == 0 for n in range(256))
    assert equivalent(linear_combination(1, THM6, 0, THM8), THM6)
    S = linear_combination(1, THM6, 1, THM6)
    assert S(7) == 6
    assert S.rank == 4


def test_linear_combination_order_mismatch():
    with pytest.raises(ValueError):
        linear_combination(1, THM6, 1, reverse(THM6))


small = st.integers(-3, 3)


@st.composite
def reps(draw, d=None):
    d = d or draw(st.integers(1, 3))
    vec = st.lists(small, min_size=d, max_size=d)
    mat = st.lists(vec, min_size=d, max_size=d)
    return LinearRepresentation(draw(vec), draw(mat), draw(mat), draw(vec))


@settings(max_examples=60, deadline=None)
@given(reps())
def test_minimize_preserves_series(R):
    M = minimize(R)
    assert M.rank <= R.rank
    assert equivalent(M, R)
    assert equivalent_bruteforce(M, R)
    assert M.rank == hankel_rank(R, R.rank + 1) or M.rank == 1


@settings(max_examples=60, deadline=None)
@given(reps(), reps())
def test_equivalence_procedures_agree(R1, R2):
    assert equivalent(R1, R2) == equivalent_bruteforce(R1, R2)


@settings(max_examples=40, deadline=None)
@given(reps(), st.integers(0, 4095))
def test_reverse_property(R, n):
    assert reverse(R)(n) == R(n)
    assert reverse(reverse(R)) == R


def test_matrix_helpers():
    A = ((Fraction(1), Fraction(2)), (Fraction(3), Fraction(4)))
    assert matmul(A, A) == ((7, 10), (15, 22))
    assert vecmat((1, 1), A) == (4, 6)
    assert matvec(A, (1, 1)) == (3, 7)
