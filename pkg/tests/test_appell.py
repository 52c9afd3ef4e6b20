import pytest

from hermbranch.appell import (
    APPELL_LINES,
    SIGN_CORRECTIONS,
    appell_check,
    corrected_lines,
    regime,
    transition_check,
    transition_matrix,
)
from hermbranch.bases import dim2_element


@pytest.fixture(scope="module")
def verbatim():
    return appell_check(4, 4)


def test_examples():
    for b in range(1, 5):
        for a in range(b):
            assert not dim2_element("p", a, b, a).derive("z", 2)
    assert dim2_element("p", 2, 2, 0).derive("zbar", 2) == dim2_element("pt", 2, 1, 0)
    for a, b in [(1, 2), (2, 1), (2, 2), (0, 3)]:
        assert not dim2_element("q", a, b, b).derive("z", 1)


def test_regimes():
    assert (regime(1, 2), regime(2, 1), regime(2, 2)) == ("i", "ii", "iii")
    assert {line.regime for line in APPELL_LINES} == {"i", "ii", "iii"}


def test_verbatim_failures_are_exactly_the_misprints(verbatim):
    failed = [it for it in verbatim.items if not it.passed]
    assert failed
    assert {it.name.split(") ", 1)[1].split(" @")[0] for it in failed} == set(SIGN_CORRECTIONS)
    # the printed coefficient is +1, the computed one is -1
    assert all(it.detail == "actual coefficient -1" for it in failed)


def test_all_other_lines_pass(verbatim):
    for it in verbatim.items:
        text = it.name.split(") ", 1)[1].split(" @")[0]
        if text not in SIGN_CORRECTIONS:
            assert it.passed, it.name


def test_every_line_is_exercised(verbatim):
    seen = {it.name.split(") ", 1)[1].split(" @")[0] for it in verbatim.items}
    assert seen == {line.text for line in APPELL_LINES}


def test_corrected_table_passes():
    rep = appell_check(4, 4, corrected_lines())
    assert rep.ok
    assert sum("[sign corrected]" in it.name for it in rep.items) > 0


def test_closure():
    assert transition_check(4, 4).ok


def test_transition_matrix_shape():
    cols = transition_matrix(("z", 2), 2, 3)
    assert len(cols) == 2 + 3 + 2
    assert all(len(c) <= 1 for c in cols.values())
    assert all(not c for c in transition_matrix(("z", 1), 0, 2).values())
