import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from invsemi import FiniteInverseSemigroup, PartialBijection, all_partial_bijections, close
from invsemi.symbolic import atomflip


def make_chain(length: int) -> FiniteInverseSemigroup:
    """Chain semilattice e_0 > e_1 > ... (meet = max of indices)."""
    return FiniteInverseSemigroup(
        [[max(i, j) for j in range(length)] for i in range(length)],
        labels=[f"e{i}" for i in range(length)])


@pytest.fixture(scope="session")
def i1():
    return close(list(all_partial_bijections(1)))


@pytest.fixture(scope="session")
def i2():
    return close(list(all_partial_bijections(2)))


@pytest.fixture(scope="session")
def i3():
    return close(list(all_partial_bijections(3)))


@pytest.fixture(scope="session")
def z2():
    return close([PartialBijection(2, {0: 1, 1: 0})])


@pytest.fixture(scope="session")
def z3():
    return close([PartialBijection(3, {0: 1, 1: 2, 2: 0})])


@pytest.fixture(scope="session")
def all_fixtures(i1, i2, i3, z2, z3):
    """The named desk-scale fixture family used by the acceptance criteria."""
    out = {"I_1": i1, "I_2": i2, "I_3": i3, "Z_2": z2, "Z_3": z3}
    for k in (2, 3, 4):
        out[f"chain_{k}"] = make_chain(k)
    for n in range(7):
        out[f"F_{n}"] = atomflip.truncation(n)
    return out


@pytest.fixture(scope="session")
def left_zero_table():
    """x y = x for both elements; inverses exist but are not unique."""
    return FiniteInverseSemigroup([[0, 0], [1, 1]])


def element_index(S: FiniteInverseSemigroup, pb: PartialBijection) -> int:
    """Index of a partial bijection inside a closure's label list."""
    for i, el in enumerate(S.labels):
        if el == pb:
            return i
    raise AssertionError(f"{pb} not found in semigroup labels")
