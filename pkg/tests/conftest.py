import pytest

from mllnets.core import parse_structure

# running net: a = tensor 1 4 5, b = par 3 2 6, c = par 5 6 7
THETA1 = """\
ax 1 2
ax 3 4
tensor 1 4 5
par 3 2 6
par 5 6 7
"""

CROSS = """\
ax 1 2
ax 3 4
tensor 1 4 5
par 3 2 6
"""

# two disjoint copies of the running net joined by a root tensor
THETA_BIG1 = """\
ax 1 2
ax 3 4
tensor 1 4 5
par 3 2 6
par 5 6 7
ax 8 9
ax 10 11
tensor 8 11 12
par 10 9 13
par 12 13 14
tensor 7 14 15
"""

TENSOR_AXIOM = "ax 1 2\ntensor 1 2 3\n"
PAR_AXIOM = "ax 1 2\npar 1 2 3\n"
DOUBLE_PAR = "ax 1 2\nax 3 4\npar 1 2 5\npar 3 4 6\npar 5 6 7\n"
TENSOR_OF_PARS = "ax 1 2\nax 3 4\npar 1 2 5\npar 3 4 6\ntensor 5 6 7\n"
TWO_TENSORS = "ax 1 2\nax 3 4\ntensor 1 2 5\ntensor 3 4 6\n"


@pytest.fixture
def theta1():
    return parse_structure(THETA1)


@pytest.fixture
def cross():
    return parse_structure(CROSS)


@pytest.fixture
def theta_big1():
    return parse_structure(THETA_BIG1)
