from dataclasses import replace

import pytest

from rltkit import repfile
from rltkit.bitnum import SumSpec, sum_oracle
from rltkit.compiler import compile, get_fixture, match_fixture, verify_fixture
from rltkit.linrep import MSD, equivalent, evaluate
from rltkit.rlt import LinearRecurrence, identify_rlt, normal_form, recurrence_terms
from conftest import compiled


def test_compile_examples():
    R = compile((1, -1, 0, 2), minimize=True)
    assert R.order == MSD and R.rank == 2
    assert equivalent(R, get_fixture("thm6").representation())
    R17 = compile((1, 2, 2, -1))
    assert R17.rank == 4
    assert equivalent(R17, get_fixture("thm17").representation())
    R6 = compile((-2, 8, 1, 1))
    assert R6.rank == 3
    assert recurrence_terms(identify_rlt(R6), 9) == [1, 1, 0] * 3


def test_compile_unminimized_is_correct():
    R = compile((1, 0, 0, 2), minimize=False)
    for n in range(512):
        assert evaluate(R, n) == sum_oracle(SumSpec(1, 0, 0, 2), n)


def test_compile_rejects_bad_spec():
    with pytest.raises(ValueError):
        compile((1, -3, 0, 1))


def test_compile_is_deterministic(all_fixtures):
    for f in all_fixtures:
        for flag in (False, True):
            a = repfile.dumps(compile(f.spec, minimize=flag))
            b = repfile.dumps(compile(f.spec, minimize=flag))
            assert a == b


def test_fixture_registry(all_fixtures):
    names = [f.name for f in all_fixtures]
    assert len(names) == 14 == len(set(names))
    assert get_fixture("thm6").spec == (1, -1, 0, 2)
    assert get_fixture("thm8").spec == (1, 0, 0, 2)
    assert get_fixture("thm10").spec == (1, 1, 1, -1)
    assert get_fixture("thm7").spec == (0, 3, 0, 1)
    with pytest.raises(KeyError):
        get_fixture("nosuch")


def test_fixture_internal_consistency(all_fixtures):
    ranks = [f.rank for f in all_fixtures]
    assert ranks == [2, 2, 2, 2, 2, 3, 3, 4, 4, 4, 3, 3, 4, 3]
    for f in all_fixtures:
        assert normal_form(f.recurrence).rank == f.rank
        assert f.representation().rank == f.rank
        f.spec.check()


def test_verify_fixture_thm6():
    rep = verify_fixture(get_fixture("thm6"), 4096)
    assert rep.passed, str(rep)


def test_verify_fixture_thm14_identifies_narayana():
    rep = verify_fixture(get_fixture("thm14"), 4096)
    assert rep.passed
    assert rep.identified == LinearRecurrence((1, 0, 1), (1, 1, 1))
    assert str(rep.identified).startswith("S(n)=S(n-1)+S(n-3)")


def test_verify_fixture_negative_control():
    bad = replace(get_fixture("thm6"), rank=3)
    rep = verify_fixture(bad, 64)
    assert not rep.passed
    failed = [c.name for c in rep.checks if not c.passed]
    assert failed == ["minimized rank 3"]


def test_verify_fixture_wrong_recurrence():
    bad = replace(get_fixture("thm7"), recurrence=LinearRecurrence((1, 1), (1, 1)))
    rep = verify_fixture(bad, 64)
    assert not rep.passed


def test_match_fixture():
    assert match_fixture(identify_rlt(compiled((1, 7, 3, 1)))).name == "rlt4"
    assert match_fixture(LinearRecurrence((3,), (1,))) is None
