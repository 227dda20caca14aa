from __future__ import annotations

import pytest

import squigonometry as sg


@pytest.fixture(scope="session")
def ctx2() -> sg.EvalContext:
    return sg.build_context(2)


@pytest.fixture(scope="session")
def ctx3() -> sg.EvalContext:
    return sg.build_context(3)


@pytest.fixture(scope="session")
def ctx4() -> sg.EvalContext:
    return sg.build_context(4)


@pytest.fixture(scope="session")
def pi4() -> sg.PiRecord:
    return sg.compute_pi(4)
