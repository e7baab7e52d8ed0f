# -*- coding: utf-8 -*-

"""Shared fixtures for the kptau test suite."""

import pytest

from kptau import fermion


@pytest.fixture(scope='session')
def calibrated():
    """Calibrate the fermionic engine once for the whole session."""
    report = fermion.calibrate(grade=6, max_offset=3)
    return report.convention
