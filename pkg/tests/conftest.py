import time

import pytest

from gaussorder.verify import sweep


@pytest.fixture(scope="session")
def full_sweep():
    """The acceptance-scale sweep, run once and shared by several criteria.

    Returns (report, elapsed_seconds).
    """
    start = time.monotonic()
    report = sweep(p_max=13, r_max=23, bit_guard=96)
    return report, time.monotonic() - start
