import networkx as nx
import pytest
from hypothesis import strategies as st

from treeswitch.acceptance import acceptance_contexts
from treeswitch.family import FamilyCtx
from treeswitch.tree import Tree, build_tree, path


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 14) -> Tree:
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return path(n)
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return build_tree(n, nx.from_prufer_sequence(seq).edges())


contexts = st.sampled_from(acceptance_contexts())


@pytest.fixture
def f23() -> FamilyCtx:
    return FamilyCtx(23, 2, 3)
