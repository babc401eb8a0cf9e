import pytest
from hypothesis import strategies as st

from idealis import VariableSet
from idealis.graphs import running_example


@pytest.fixture
def G():
    return running_example()


@st.composite
def exps_lists(draw, n=None, top=3, max_gens=5):
    n = draw(st.integers(1, 5)) if n is None else n
    vec = st.tuples(*[st.integers(0, top)] * n)
    return n, draw(st.lists(vec, min_size=0, max_size=max_gens))


def ring(n):
    return VariableSet.standard(n)
