from functools import lru_cache
from pathlib import Path

from cloops.enumeration import enumerate_loops

FIXTURES = Path(__file__).parent / "fixtures"


@lru_cache(maxsize=None)
def loops_of_order(n):
    return tuple(enumerate_loops(n))


@lru_cache(maxsize=None)
def loops_up_to(n_max):
    return tuple(L for n in range(1, n_max + 1) for L in loops_of_order(n))


# filled by test_acceptance.py, printed at the end of the run by conftest.py
ACCEPTANCE: dict[int, str] = {}


def record(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[number] = line
    print(line)
    return ok
