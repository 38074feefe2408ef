import sys
from pathlib import Path

from hypothesis import settings, strategies as st

from forestalg import Forest, Tree

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def trees(max_leaves=3, decorations=(1, 2, 3)):
    leaf = st.sampled_from(decorations).map(Tree)
    return st.recursive(
        leaf,
        lambda kids: st.builds(Tree, st.sampled_from(decorations), st.lists(kids, min_size=1, max_size=3)),
        max_leaves=max_leaves,
    )


def forests(max_trees=3, max_leaves=3, decorations=(1, 2, 3), min_trees=0):
    return st.lists(trees(max_leaves, decorations), min_size=min_trees, max_size=max_trees).map(Forest)


def bounded_forests(max_order, **kw):
    return forests(**kw).filter(lambda f: f.order <= max_order)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
