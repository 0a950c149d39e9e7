from fractions import Fraction

import pytest
from hypothesis import strategies as st

from ultratree import validate_space, validate_tree

LABELS = [Fraction(v) for v in (1, 2, 3, 5, 7)] + [Fraction(11, 2), Fraction(1, 3)]


@pytest.fixture
def quadruple():
    # x, y, z, t with d(x,z) = d(y,t) = 1 and every other pair at 2.
    return validate_space(
        ["x", "y", "z", "t"],
        [
            ["0", "2", "1", "2"],
            ["2", "0", "2", "1"],
            ["1", "2", "0", "2"],
            ["2", "1", "2", "0"],
        ],
    )


@pytest.fixture
def pyramid():
    # The quadruple plus w at distance 2 from every other point.
    return validate_space(
        ["x", "y", "z", "t", "w"],
        [
            ["0", "2", "1", "2", "2"],
            ["2", "0", "2", "1", "2"],
            ["1", "2", "0", "2", "2"],
            ["2", "1", "2", "0", "2"],
            ["2", "2", "2", "2", "0"],
        ],
    )


@pytest.fixture
def triangle():
    # d(x,y) = d(y,z) = 2, d(x,z) = 1
    return validate_space(["x", "y", "z"], [[0, 2, 1], [2, 0, 2], [1, 2, 0]])


@pytest.fixture
def path_tree():
    # y - x - z labeled (2, 0, 1)
    return validate_tree(["y", "x", "z"], {"y": 2, "x": 0, "z": 1}, [("y", "x"), ("x", "z")])


@pytest.fixture
def single():
    return validate_space(["a"], [["0"]])


@st.composite
def ultrametric_matrices(draw, max_points=7):
    """Names and a matrix built from a random nested partition.

    Written without the package's tree code: every pair of points gets the
    label of the smallest block containing both.
    """
    n = draw(st.integers(1, max_points))
    dist = [[Fraction(0)] * n for _ in range(n)]

    def split(block, allowed):
        if len(block) == 1:
            return
        label = draw(st.sampled_from(allowed))
        lower = [v for v in allowed if v < label]
        if not lower:
            groups = [[p] for p in block]
        else:
            perm = draw(st.permutations(block))
            k = draw(st.integers(2, len(block)))
            cuts = sorted(draw(st.sets(st.integers(1, len(block) - 1), min_size=k - 1, max_size=k - 1)))
            groups = [list(perm[a:b]) for a, b in zip([0] + cuts, cuts + [len(block)])]
        for gi, g in enumerate(groups):
            for h in groups[gi + 1:]:
                for p in g:
                    for q in h:
                        dist[p][q] = dist[q][p] = label
        for g in groups:
            split(g, lower)

    split(list(range(n)), sorted(LABELS))
    return [f"v{i}" for i in range(n)], dist


@st.composite
def spaces(draw, max_points=7):
    names, dist = draw(ultrametric_matrices(max_points))
    return validate_space(names, dist)


@st.composite
def labeled_trees(draw, max_vertices=10, allow_zero_edges=True):
    n = draw(st.integers(1, max_vertices))
    pool = [Fraction(0)] + LABELS[:4]
    labels = [draw(st.sampled_from(pool)) for _ in range(n)]
    edges = []
    for i in range(1, n):
        j = draw(st.integers(0, i - 1))
        if not allow_zero_edges and labels[i] == 0 and labels[j] == 0:
            labels[i] = LABELS[0]
        edges.append((f"u{j}", f"u{i}"))
    return validate_tree([f"u{i}" for i in range(n)], labels, edges)


# Acceptance verdicts, printed once at the end of the run.
ACCEPTANCE = {}


@pytest.fixture
def acceptance():
    def record(criterion, ok, detail=""):
        ACCEPTANCE[criterion] = (ok, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[criterion]
        terminalreporter.write_line(f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}")
