"""Acceptance suite: every numbered criterion, one pass/fail line each.

All checks are exact equalities; there are no tolerances to tune.  Run with
``pytest tests/test_acceptance.py -v`` (add ``-s`` to see the PASS lines as
they stream) or, equivalently, ``reflectinv verify-paper``.
"""

import json

import pytest

from reflectinv.cli import main
from reflectinv.verify import PaperVerification


@pytest.fixture(scope="module")
def verification():
    return PaperVerification()


CRITERIA = [
    (1, "group order 96"),
    (2, "image group orders 1, 4, 6, 96, 48, 96"),
    (3, "primary invariants of degrees 8 and 12"),
    (4, "scalar dimension series 1/((1-t^8)(1-t^12))"),
    (5, "equivariant series numerators for the five nontrivial reps"),
    (6, "reference generators equivariant at all 96 elements"),
    (7, "generator degrees and membership recovered"),
    (8, "freeness and dimension oracle agreement to degree 40"),
    (9, "sixteen distinct irreducibles, degree squares sum to 96"),
    (10, "basis routes agree; projection idempotent on random inputs"),
    (11, "out-of-scope items declared, nothing depends on them"),
]


@pytest.mark.parametrize("criterion,label", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(verification, criterion, label):
    result = verification.run([criterion])[0]
    print(result.line())
    assert result.passed, "\n".join(result.details)


def test_corrupted_reference_data_is_named(capsys):
    # fault injection: a wrong bundled invariant must fail its criterion
    from reflectinv.catalog import _build_st8
    from reflectinv.poly import variables

    corrupt = _build_st8()
    x, y = variables(2)
    corrupt.theta = corrupt.theta + x**4 * y**4
    result = PaperVerification(entry=corrupt).run([3])[0]
    assert not result.passed
    assert result.name == "Primary invariants"
    assert any("degree-8" in line for line in result.details)


def test_cli_verify_paper_json(capsys):
    code = main(["verify-paper", "--json"])
    out = capsys.readouterr().out
    assert code == 0
    report = json.loads(out)
    assert len(report) == 11
    assert all(item["passed"] for item in report)
    assert [item["criterion"] for item in report] == list(range(1, 12))
