"""Free trees with rational vertex labels and the path-maximum distance they generate."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    Disconnected,
    DuplicateEdge,
    DuplicateName,
    HasCycle,
    InvalidInput,
    NegativeLabel,
    NotABall,
    NotAnUltrametricGenerator,
    SelfLoop,
    UnknownVertex,
)
from .rational import RatLike, format_rat, parse_rat
from .space import Ball, UltraSpace, open_balls


@dataclass(frozen=True)
class LabeledTree:
    """A tree on named vertices with one nonnegative rational label per vertex.

    ``edges`` holds index pairs ``(i, j)`` with ``i < j``, sorted.  The
    constructor validates; a one-vertex tree has no edges.
    """

    vertices: tuple
    labels: tuple
    edges: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        _check_tree(self.vertices, self.labels, self.edges)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def index(self) -> dict:
        idx = self.__dict__.get("_index")
        if idx is None:
            idx = {name: i for i, name in enumerate(self.vertices)}
            object.__setattr__(self, "_index", idx)
        return idx

    @property
    def adjacency(self) -> tuple:
        adj = self.__dict__.get("_adj")
        if adj is None:
            lists = [[] for _ in self.vertices]
            for i, j in self.edges:
                lists[i].append(j)
                lists[j].append(i)
            adj = tuple(tuple(sorted(a)) for a in lists)
            object.__setattr__(self, "_adj", adj)
        return adj

    def label(self, vertex: str) -> Fraction:
        return self.labels[self._idx(vertex)]

    def edge_names(self) -> list:
        return [(self.vertices[i], self.vertices[j]) for i, j in self.edges]

    def _idx(self, vertex: str) -> int:
        try:
            return self.index[vertex]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {vertex!r}", (vertex,)) from None

    def __repr__(self) -> str:
        labels = {v: format_rat(l) for v, l in zip(self.vertices, self.labels)}
        return f"LabeledTree(labels={labels!r}, edges={self.edge_names()!r})"


def _check_tree(vertices, labels, edges) -> None:
    n = len(vertices)
    if n == 0:
        raise Disconnected("a tree needs at least one vertex")
    if len(set(vertices)) != n:
        dup = next(v for v in vertices if vertices.count(v) > 1)
        raise DuplicateName(f"duplicate vertex name {dup!r}", (dup,))
    if len(labels) != n:
        raise InvalidInput("one label per vertex is required")
    for v, lab in zip(vertices, labels):
        if lab < 0:
            raise NegativeLabel(f"label of {v!r} is negative", (v,))
    seen = set()
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise UnknownVertex(f"edge ({i}, {j}) references a missing vertex")
        if i == j:
            raise SelfLoop(f"self-loop at {vertices[i]!r}", (vertices[i],))
        key = (min(i, j), max(i, j))
        if key in seen:
            raise DuplicateEdge(
                f"duplicate edge {vertices[key[0]]}-{vertices[key[1]]}",
                (vertices[key[0]], vertices[key[1]]),
            )
        seen.add(key)
    if len(edges) > n - 1:
        raise HasCycle(f"{len(edges)} edges on {n} vertices: a tree has {n - 1}")
    if len(edges) < n - 1:
        raise Disconnected(f"{len(edges)} edges on {n} vertices: a tree has {n - 1}")
    adj = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    reached = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    if len(reached) != n:
        # n - 1 edges but not connected: some component holds a cycle.
        raise HasCycle("edge set has n - 1 edges but is not connected, so it contains a cycle")


def validate_tree(
    vertices: Sequence[str],
    labels: Union[Mapping[str, RatLike], Sequence[RatLike]],
    edges: Iterable[Sequence[str]],
) -> LabeledTree:
    """Build a :class:`LabeledTree` from vertex names, labels and name pairs.

    ``labels`` is either a mapping keyed by vertex name or a sequence aligned
    with ``vertices``.
    """
    vertices = tuple(vertices)
    if isinstance(labels, Mapping):
        missing = [v for v in vertices if v not in labels]
        if missing:
            raise InvalidInput(f"no label for vertex {missing[0]!r}", (missing[0],))
        labels = [labels[v] for v in vertices]
    labs = tuple(parse_rat(x) for x in labels)
    index = {}
    for i, v in enumerate(vertices):
        index.setdefault(v, i)
    pairs = []
    for edge in edges:
        u, v = edge
        for w in (u, v):
            if w not in index:
                raise UnknownVertex(f"edge endpoint {w!r} is not a vertex", (w,))
        i, j = index[u], index[v]
        pairs.append((min(i, j), max(i, j)))
    return LabeledTree(vertices, labs, tuple(sorted(pairs)))


def generates_ultrametric(tree: LabeledTree) -> bool:
    """True iff every edge has at least one endpoint with a positive label."""
    return all(max(tree.labels[i], tree.labels[j]) > 0 for i, j in tree.edges)


def _bad_edge(tree: LabeledTree):
    for i, j in tree.edges:
        if tree.labels[i] == 0 and tree.labels[j] == 0:
            return tree.vertices[i], tree.vertices[j]
    return None


def _path_max_from(tree: LabeledTree, source: int) -> list:
    labels = tree.labels
    adj = tree.adjacency
    out = [None] * len(tree)
    out[source] = labels[source]
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if out[w] is None:
                out[w] = max(out[u], labels[w])
                queue.append(w)
    return out


def d_l(tree: LabeledTree, u: str, v: str) -> Fraction:
    """Largest label on the ``u``-``v`` path, endpoints included; 0 when ``u == v``."""
    i, j = tree._idx(u), tree._idx(v)
    if i == j:
        return Fraction(0)
    return _path_max_from(tree, i)[j]


def path_max_matrix(tree: LabeledTree) -> list:
    """Full matrix of :func:`d_l`, one traversal per source vertex."""
    rows = []
    for s in range(len(tree)):
        row = _path_max_from(tree, s)
        row[s] = Fraction(0)
        rows.append(row)
    return rows


def space_from_tree(tree: LabeledTree) -> UltraSpace:
    """The ultrametric space ``(V(T), d_l)``."""
    bad = _bad_edge(tree)
    if bad is not None:
        raise NotAnUltrametricGenerator(
            f"edge {bad[0]}-{bad[1]} has both endpoint labels 0", bad
        )
    return UltraSpace(tree.vertices, path_max_matrix(tree))


def _path(tree: LabeledTree, parent: list, target: int) -> list:
    out = [target]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])
    return out


def ball_subtree(tree: LabeledTree, generated_space: UltraSpace, ball: Ball) -> LabeledTree:
    """Union of the tree paths joining the ball's lowest-index point to its other points.

    For a tree generating ``generated_space`` the result has exactly the
    ball's points as vertices and generates the induced subspace.
    """
    if set(tree.vertices) != set(generated_space.points):
        raise InvalidInput("tree and space have different point sets")
    if ball not in open_balls(generated_space):
        raise NotABall("not an open ball of the space", generated_space.names(ball))
    names = generated_space.names(ball)
    root = tree.index[names[0]]
    parent = [None] * len(tree)
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in tree.adjacency[u]:
            if w not in seen:
                seen.add(w)
                parent[w] = u
                queue.append(w)
    keep = {root}
    for name in names[1:]:
        keep.update(_path(tree, parent, tree.index[name]))
    if keep != {tree.index[n] for n in names}:
        raise InvalidInput("tree does not generate the given space")
    order = sorted(keep)
    remap = {old: new for new, old in enumerate(order)}
    edges = tuple(
        sorted((remap[i], remap[j]) for i, j in tree.edges if i in keep and j in keep)
    )
    return LabeledTree(
        tuple(tree.vertices[i] for i in order),
        tuple(tree.labels[i] for i in order),
        edges,
    )
