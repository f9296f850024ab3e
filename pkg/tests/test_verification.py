"""Tests for the cross-check battery and its failure reporting."""

import pytest

from qhilb import hilbert, verification


def test_run_checks_all_pass():
    results = verification.run_checks([1, 2], 5)
    assert results
    for result in results:
        assert result.passed, (result.name, result.details)


def test_refinement_check_p3():
    result = verification.check_refinement(3, 4)
    assert result.passed, result.details


def test_theorem_vs_oracle_reports_first_difference(monkeypatch):
    # An off-by-one in the triangle weight must surface as a coefficient
    # mismatch with the first differing index in the details.
    true_weight = hilbert.triangle_weight
    monkeypatch.setattr(
        hilbert, "triangle_weight", lambda p, l: true_weight(p, l) + 1
    )
    result = verification.check_theorem_vs_oracle(1, 4)
    assert not result.passed
    assert "first difference at m=" in result.details


def test_tables_vs_enumeration_details():
    result = verification.check_tables_vs_enumeration(2, 8)
    assert result.passed
    assert "fountains compared" in result.details


def test_closed_form_rejects_large_p():
    with pytest.raises(ValueError):
        verification.check_closed_form(3, 4)


def test_sequence_mismatch_helper():
    assert verification._sequence_mismatch((1, 2, 3), (1, 2, 3)) is None
    assert "m=1" in verification._sequence_mismatch((1, 2, 3), (1, 9, 3))
    assert "lengths differ" in verification._sequence_mismatch((1, 2), (1, 2, 3))
