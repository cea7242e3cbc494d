r"""The thirteen acceptance checks, one test and one pass/fail line each.

Every check runs at its full stated bound.  The farthest-from-standard
equivalence has one known boundary case at n=4 where the closed forms do
not cover a pair at maximal distance; that check is implemented faithfully
and reports the mismatch rather than masking it.
"""
import pytest

from rauzy.cli import ACCEPTANCE

CAP = 7


@pytest.mark.parametrize(
    "name,func", ACCEPTANCE, ids=[name for name, _ in ACCEPTANCE]
)
def test_acceptance(name, func):
    ok, detail = func(CAP)
    print("%s: %s (%s)" % ("PASS" if ok else "FAIL", name, detail))
    assert ok, "%s: %s" % (name, detail)
