from __future__ import annotations

import pytest

from kropinaflat import InstanceFile, KropinaInstance, build_instance

E1_TEXT = ("y1^3 + y1*y2^2 + y2^3", "y1")
E2_TEXT = ("(1 + x1)*y1^3 + y1*y2^2 + y2^3", "y1")
E3_TEXT = ("y1^3 + y1*y2^2 + y2^3", "(1 + x1)*y1")
E4_TEXT = ("(1 + x1)*y1^3 + (1 + x1)*y1*y2^2 + (1 + x1)*y2^3", "y1")


def make_instance(a_text: str, beta_text: str, n: int = 2, m: int = 3, **options) -> KropinaInstance:
    spec = InstanceFile(n=n, m=m, a_text=a_text, beta_text=beta_text, **options)
    return build_instance(spec)


@pytest.fixture(scope="session")
def e1() -> KropinaInstance:
    return make_instance(*E1_TEXT)


@pytest.fixture(scope="session")
def e2() -> KropinaInstance:
    return make_instance(*E2_TEXT)


@pytest.fixture(scope="session")
def e3() -> KropinaInstance:
    return make_instance(*E3_TEXT)


@pytest.fixture(scope="session")
def e4() -> KropinaInstance:
    return make_instance(*E4_TEXT)
