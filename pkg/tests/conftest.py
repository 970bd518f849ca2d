import numpy as np
import pytest

from vallee_poussin import TestFunctionSpec, make_test_function


@pytest.fixture(scope="session")
def abs_sin():
    return make_test_function(TestFunctionSpec("holder_alpha", {"alpha": 1.0}))


@pytest.fixture(scope="session")
def cos3():
    return make_test_function(TestFunctionSpec("trig_poly", {"a": [0, 0, 1]}))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# criterion number -> (passed, one-line detail); filled by test_acceptance.py
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
