import pytest

from modlab.modules import direct_sum, regular_module, span, submodule_as_module
from modlab.rings import builtin_ring


@pytest.fixture(scope="session")
def Z4():
    return builtin_ring("Z4")


@pytest.fixture(scope="session")
def Z8():
    return builtin_ring("Z8")


@pytest.fixture(scope="session")
def F3():
    return builtin_ring("F3")


@pytest.fixture(scope="session")
def Z6():
    return builtin_ring("Z6")


@pytest.fixture(scope="session")
def F2xZ4():
    return builtin_ring("F2xZ4")


@pytest.fixture(scope="session")
def T2F2():
    return builtin_ring("T2F2")


@pytest.fixture(scope="session")
def z4_reg(Z4):
    return regular_module(Z4)


@pytest.fixture(scope="session")
def z2_over_z4(z4_reg):
    """Z/2 as a module over Z/4 (the unique size-2 submodule, repackaged)."""
    return submodule_as_module(span(z4_reg, [2])).module


@pytest.fixture(scope="session")
def z2_plus_z4(z2_over_z4, z4_reg):
    return direct_sum(z2_over_z4, z4_reg)


@pytest.fixture(scope="session")
def z8_reg(Z8):
    return regular_module(Z8)


@pytest.fixture(scope="session")
def z2_over_z8(z8_reg):
    return submodule_as_module(span(z8_reg, [4])).module


@pytest.fixture(scope="session")
def z2_plus_z8(z2_over_z8, z8_reg):
    return direct_sum(z2_over_z8, z8_reg)


@pytest.fixture(scope="session")
def s_block(F2xZ4):
    """The simple block component of the product ring, as a module."""
    reg = regular_module(F2xZ4)
    return submodule_as_module(span(reg, [(1, 0)])).module


@pytest.fixture(scope="session")
def c_block(F2xZ4):
    """The chain block component (Z/4 part) of the product ring."""
    reg = regular_module(F2xZ4)
    return submodule_as_module(span(reg, [(0, 1)])).module


@pytest.fixture(scope="session")
def s_plus_c(s_block, c_block):
    return direct_sum(s_block, c_block)
