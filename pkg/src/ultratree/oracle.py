"""Slow reference implementations and seeded random instances.

Nothing here reuses the fast paths it is meant to check: balls come from
literal ``d(c, x) < r`` enumeration, centered spheres from the raw definition,
isometry from a search over bijections.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InputTooLarge, PoolTooSmall, UnknownVertex
from .labeled_tree import LabeledTree
from .represent import Node, RootedLabeledTree, realize_space
from .space import Ball, UltraSpace

DEFAULT_LABEL_POOL = tuple(Fraction(v) for v in (0, 1, 2, 3, 5, 7, Fraction(11, 2)))
MAX_ISOMETRY_POINTS = 7


@dataclass(frozen=True)
class RandomSpec:
    seed: int
    max_points: int = 8
    label_pool: tuple = DEFAULT_LABEL_POOL

    def __post_init__(self) -> None:
        if self.max_points < 1:
            raise ValueError("max_points must be at least 1")
        pool = tuple(Fraction(v) for v in self.label_pool)
        if len(set(pool)) != len(pool):
            raise ValueError("label_pool values must be distinct")
        if any(v < 0 for v in pool):
            raise ValueError("label_pool values must be nonnegative")
        if 0 not in pool:
            raise ValueError("label_pool must contain 0")
        object.__setattr__(self, "label_pool", pool)


def _radii(space: UltraSpace) -> list:
    values = sorted({v for row in space.dist for v in row})
    mids = [(a + b) / 2 for a, b in zip(values, values[1:])]
    return sorted(r for r in set(values) | set(mids) | {values[-1] + 1} if r > 0)


def oracle_open_balls(space: UltraSpace) -> tuple:
    """Every ``B_r(c) = {x : d(c, x) < r}`` over all centers and sample radii."""
    found = set()
    n = len(space)
    for c in range(n):
        for r in _radii(space):
            found.add(tuple(x for x in range(n) if space.dist[c][x] < r))
    balls = []
    for members in found:
        diam = max((space.dist[i][j] for i in members for j in members), default=Fraction(0))
        balls.append(Ball(members, diam))
    balls.sort(key=lambda b: (-len(b.members), b.members))
    return tuple(balls)


def _is_centered_sphere(space: UltraSpace, members: tuple) -> bool:
    target = set(members)
    for c in members:
        for r in {Fraction(0)} | set(space.dist[c]):
            sphere = {x for x in range(len(space)) if space.dist[x][c] == r} | {c}
            if sphere == target:
                return True
    return False


def oracle_is_ugvl(space: UltraSpace) -> bool:
    """Every open ball is a centered sphere, tested from the definition."""
    return all(_is_centered_sphere(space, b.members) for b in oracle_open_balls(space))


def oracle_isometric(s1: UltraSpace, s2: UltraSpace) -> bool:
    """Search bijections point by point, pruning on distances fixed so far."""
    if len(s1) > MAX_ISOMETRY_POINTS or len(s2) > MAX_ISOMETRY_POINTS:
        raise InputTooLarge(f"bijection search limited to {MAX_ISOMETRY_POINTS} points")
    n = len(s1)
    if n != len(s2):
        return False
    d1, d2 = s1.dist, s2.dist
    image = []
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in range(n):
            if used[j]:
                continue
            if all(d1[i][k] == d2[j][image[k]] for k in range(i)):
                used[j] = True
                image.append(j)
                if extend(i + 1):
                    return True
                image.pop()
                used[j] = False
        return False

    return extend(0)


def oracle_path_max(tree: LabeledTree, u: str, v: str) -> Fraction:
    """Path-max distance found by enumerating every simple path out of ``u``."""
    for w in (u, v):
        if w not in tree.index:
            raise UnknownVertex(f"unknown vertex {w!r}", (w,))
    if u == v:
        return Fraction(0)
    adj = {i: set() for i in range(len(tree))}
    for a, b in tree.edges:
        adj[a].add(b)
        adj[b].add(a)
    start, goal = tree.index[u], tree.index[v]
    paths = []

    def walk(path: list) -> None:
        if path[-1] == goal:
            paths.append(list(path))
            return
        for w in adj[path[-1]]:
            if w not in path:
                path.append(w)
                walk(path)
                path.pop()

    walk([start])
    assert len(paths) == 1, f"expected a unique path, found {len(paths)}"
    return max(tree.labels[w] for w in paths[0])


def random_shape(spec: RandomSpec) -> RootedLabeledTree:
    """Seeded random tree that is a valid representing shape.

    Internal nodes get at least two children and labels drawn from the pool,
    strictly decreasing downwards; leaves are labeled 0.
    """
    rng = random.Random(spec.seed)
    positive = sorted(v for v in spec.label_pool if v > 0)
    n = rng.randint(1, spec.max_points)
    if n >= 2 and not positive:
        raise PoolTooSmall("label_pool has no positive value for internal nodes")
    nodes = []

    def build(size: int, allowed: list) -> int:
        idx = len(nodes)
        nodes.append(None)
        if size == 1:
            nodes[idx] = Node(Fraction(0))
            return idx
        label = rng.choice(allowed)
        lower = [v for v in allowed if v < label]
        if lower:
            # Binary splits half the time: they are what produce balls
            # without a singleton part.
            k = 2 if rng.random() < 0.5 else rng.randint(2, size)
            cuts = sorted(rng.sample(range(1, size), k - 1))
            sizes = [b - a for a, b in zip([0] + cuts, cuts + [size])]
        else:
            sizes = [1] * size
        children = tuple(build(s, lower) for s in sizes)
        nodes[idx] = Node(label, children)
        return idx

    build(n, positive)
    return RootedLabeledTree(tuple(nodes), 0)


def random_space(spec: RandomSpec) -> UltraSpace:
    return realize_space(random_shape(spec))


def oracle_minimal(extended: UltraSpace, small: UltraSpace) -> bool:
    """No proper subset of ``extended`` holding a copy of ``small`` is tree-generated.

    Checks every subset directly with :func:`oracle_is_ugvl` and
    :func:`oracle_isometric`, so it is exponential twice over; keep inputs tiny.
    """
    n, k = len(extended), len(small)
    for size in range(k, n):
        for subset in combinations(range(n), size):
            sub = UltraSpace._trusted(
                [extended.points[i] for i in subset],
                [[extended.dist[i][j] for j in subset] for i in subset],
            )
            if not oracle_is_ugvl(sub):
                continue
            for inner in combinations(range(size), k):
                copy = UltraSpace._trusted(
                    [sub.points[i] for i in inner],
                    [[sub.dist[i][j] for j in inner] for i in inner],
                )
                if oracle_isometric(copy, small):
                    return False
    return True
