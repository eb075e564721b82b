"""Every acceptance criterion at its stated tolerance; one line per criterion."""

import pytest

from bchromatic.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: c.__name__.removeprefix("criterion_"))
def test_criterion(criterion):
    res = criterion()
    print()
    print(res.line())
    assert res.passed, res.failures[:5]
