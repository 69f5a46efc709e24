import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hopfcyclic.fields import GF, QQ
from hopfcyclic.hopf import group_algebra, sweedler_h4, trivial_hopf
from hopfcyclic.equivariant import (
    direct_sum_module_coalgebras,
    make_coefficient,
    quotient_ses,
    regular_module_coalgebra,
)
from hopfcyclic.linalg import Matrix

from groups import cyclic_table, symmetric_table


@pytest.fixture(scope="session")
def z2_q():
    return group_algebra(cyclic_table(2), QQ)


@pytest.fixture(scope="session")
def z4_q():
    return group_algebra(cyclic_table(4), QQ)


@pytest.fixture(scope="session")
def s3_q():
    return group_algebra(symmetric_table(3), QQ)


@pytest.fixture(scope="session")
def h4_q():
    return sweedler_h4(QQ)


@pytest.fixture(scope="session")
def k_q():
    return trivial_hopf(QQ)


@pytest.fixture(scope="session")
def direct_sum_ses_q(z2_q):
    C1 = regular_module_coalgebra(z2_q)
    C = direct_sum_module_coalgebras(C1, C1)
    K = Matrix.from_entries(QQ, 4, 2, [(0, 0, QQ.one), (1, 1, QQ.one)])
    return quotient_ses(C, K, "subcoalgebra")


@pytest.fixture(scope="session")
def k_eps_z2(z2_q):
    return make_coefficient("eps", z2_q)
