"""Spaces generated by vertex-labeled trees: decision, synthesis and minimal extension.

A finite ultrametric space is generated by a labeled tree exactly when every
open ball is a centered sphere, and exactly when every internal node of its
representing tree has a leaf child.  :func:`is_ugvl` evaluates both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .diametrical import _parts
from .errors import EmptySpace, InputTooLarge, InternalCriterionMismatch, NotUGVL
from .labeled_tree import LabeledTree
from .represent import canonical_code, leafless_internal_nodes, representing_tree
from .space import Ball, UltraSpace, _center_of, induced_subspace, open_balls

MAX_EXTENSION_SEARCH = 16


def deficient_balls(space: UltraSpace) -> list:
    """Open balls that are not centered spheres, in :func:`open_balls` order."""
    return [b for b in open_balls(space) if _center_of(space, b.members) is None]


def is_ugvl(space: UltraSpace) -> bool:
    """Whether ``space`` is generated by some vertex-labeled tree.

    Computes the ball/centered-sphere criterion and the representing-tree
    leaf criterion independently and raises
    :class:`~ultratree.errors.InternalCriterionMismatch` if they disagree.
    """
    if len(space) == 0:
        raise EmptySpace("empty space")
    by_balls = not deficient_balls(space)
    by_tree = not leafless_internal_nodes(representing_tree(space))
    if by_balls != by_tree:
        raise InternalCriterionMismatch(
            f"ball criterion says {by_balls}, tree criterion says {by_tree}", space.points
        )
    return by_balls


def generating_tree(space: UltraSpace) -> LabeledTree:
    """A labeled tree on the points of ``space`` whose path-max distance is ``space``.

    Works top-down over diametral partitions: a singleton part ``{c}`` gets
    the label ``diam``, every other part is solved recursively and its
    lowest-index point is joined to ``c``.  Raises
    :class:`~ultratree.errors.NotUGVL` naming the first ball (top-down) whose
    partition has no singleton part.
    """
    if len(space) == 0:
        raise EmptySpace("empty space")
    labels = [Fraction(0)] * len(space)
    edges = []
    stack = [tuple(range(len(space)))]
    while stack:
        members = stack.pop()
        if len(members) == 1:
            continue
        parts, diam = _parts(space, members)
        singles = [p[0] for p in parts if len(p) == 1]
        if not singles:
            names = space.names(members)
            raise NotUGVL(f"ball {{{', '.join(names)}}} is not a centered sphere", names)
        hub = singles[0]
        labels[hub] = diam
        for part in parts:
            if part == (hub,):
                continue
            edges.append((min(hub, part[0]), max(hub, part[0])))
            stack.append(part)
    return LabeledTree(space.points, tuple(labels), tuple(sorted(edges)))


def delta(space: UltraSpace) -> int:
    """Number of open balls that are not centered spheres."""
    if len(space) == 0:
        raise EmptySpace("empty space")
    return len(deficient_balls(space))


@dataclass(frozen=True)
class ExtensionResult:
    extended: UltraSpace
    embedding: dict = field(compare=False)
    added: tuple = ()  # (new point name, deficient Ball of the original space)


def _fresh_names(space: UltraSpace, count: int) -> list:
    taken = set(space.points)
    out = []
    for k in range(1, count + 1):
        name = f"w#{k}"
        while name in taken:
            name += "_"
        taken.add(name)
        out.append(name)
    return out


def _extension_matrix(space: UltraSpace, glued: list, reps: list) -> list:
    n = len(space)
    dist = space.dist
    rows = [list(row) + [None] * len(glued) for row in dist]
    rows += [[None] * (n + len(glued)) for _ in glued]
    for a, (ball, b) in enumerate(zip(glued, reps)):
        wa = n + a
        rows[wa][wa] = Fraction(0)
        for x in range(n):
            rows[wa][x] = rows[x][wa] = max(ball.diameter, dist[b][x])
        for c in range(a + 1, len(glued)):
            other, b2 = glued[c], reps[c]
            value = max(ball.diameter, other.diameter, dist[b][b2])
            rows[wa][n + c] = rows[n + c][wa] = value
    return rows


def minimal_extension(space: UltraSpace, reverse: bool = False) -> ExtensionResult:
    """Smallest tree-generated superspace of ``space``, unique up to isometry.

    One new point ``w#k`` is glued under each open ball ``B`` that is not a
    centered sphere, at distance ``max(diam B, d(b, x))`` from each original
    ``x`` (``b`` any point of ``B``).  ``reverse=True`` visits deficient
    balls in reverse order and takes the highest-index representative; the
    result is isometric either way.
    """
    if len(space) == 0:
        raise EmptySpace("empty space")
    glued = deficient_balls(space)
    if not glued:
        return ExtensionResult(space, {p: p for p in space.points}, ())
    if reverse:
        glued = glued[::-1]
    reps = [b.members[-1] if reverse else b.members[0] for b in glued]
    rows = _extension_matrix(space, glued, reps)
    if __debug__:
        other = [b.members[0] if reverse else b.members[-1] for b in glued]
        assert rows == _extension_matrix(space, glued, other), "extension depends on representative"
    names = _fresh_names(space, len(glued))
    extended = UltraSpace(space.points + tuple(names), rows)
    return ExtensionResult(
        extended,
        {p: p for p in space.points},
        tuple(zip(names, glued)),
    )


def _distance_profile(space: UltraSpace) -> list:
    n = len(space)
    return sorted(space.dist[i][j] for i in range(n) for j in range(i + 1, n))


def contains_isometric_copy(big: UltraSpace, small: UltraSpace) -> bool:
    """Whether some subset of ``big`` induces a space isometric to ``small``."""
    if len(big) > MAX_EXTENSION_SEARCH:
        raise InputTooLarge(f"subset search limited to {MAX_EXTENSION_SEARCH} points")
    k = len(small)
    if k > len(big):
        return False
    target = canonical_code(representing_tree(small))
    profile = _distance_profile(small)
    dist = big.dist
    for subset in combinations(range(len(big)), k):
        cand = sorted(dist[i][j] for a, i in enumerate(subset) for j in subset[a + 1:])
        if cand != profile:
            continue
        sub = induced_subspace(big, big.names(subset))
        if canonical_code(representing_tree(sub)) == target:
            return True
    return False


def is_ugvl_extension(big: UltraSpace, small: UltraSpace) -> bool:
    """``big`` is tree-generated and contains an isometric copy of ``small``.

    Exhaustive over subsets, so ``big`` is limited to 16 points.
    """
    if len(big) > MAX_EXTENSION_SEARCH:
        raise InputTooLarge(f"subset search limited to {MAX_EXTENSION_SEARCH} points")
    return is_ugvl(big) and contains_isometric_copy(big, small)
