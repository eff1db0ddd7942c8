"""Shared instance populations, built once per session."""

import pytest

from bohrlab import (
    generate_thm1_instance,
    generate_thm2_instance,
    generate_transfer_instance,
)


@pytest.fixture(scope="session")
def thm1_population():
    return [generate_thm1_instance(1 + i % 8, seed=i) for i in range(200)]


@pytest.fixture(scope="session")
def thm2_population():
    return [generate_thm2_instance(1 + i % 8, seed=i) for i in range(200)]


@pytest.fixture(scope="session")
def transfer_population():
    return [
        generate_transfer_instance(1 + i % 4, 2 + i % 3, seed=i) for i in range(100)
    ]
