"""Representing trees of finite ultrametric spaces.

The representing tree has the open balls as nodes, each labeled by its
diameter; the children of a ball are the parts of its diametral partition.
Two finite ultrametric spaces are isometric exactly when their representing
trees are isomorphic as labeled rooted trees, which :func:`canonical_code`
decides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .diametrical import _parts
from .errors import EmptySpace, InvalidShape, NotABall
from .labeled_tree import LabeledTree
from .space import Ball, UltraSpace, open_balls


@dataclass(frozen=True)
class Node:
    label: Fraction
    children: tuple = ()
    payload: Optional[tuple] = None  # point names, in index order of the source space
    name: Optional[str] = None


@dataclass(frozen=True)
class RootedLabeledTree:
    """A rooted tree stored as a node list with child links.

    The constructor only checks that the links form a rooted tree; whether it
    is a valid representing shape is :func:`validate_representing_shape`.
    """

    nodes: tuple
    root: int = 0

    def __post_init__(self) -> None:
        n = len(self.nodes)
        if not 0 <= self.root < n:
            raise InvalidShape("root is not a node")
        seen = {self.root}
        stack = [self.root]
        while stack:
            for c in self.nodes[stack.pop()].children:
                if not 0 <= c < n:
                    raise InvalidShape(f"child id {c} out of range")
                if c in seen:
                    raise InvalidShape(f"node {c} is reached twice")
                seen.add(c)
                stack.append(c)
        if len(seen) != n:
            raise InvalidShape("some nodes are not reachable from the root")

    def __len__(self) -> int:
        return len(self.nodes)

    def node_name(self, i: int) -> str:
        return self.nodes[i].name or f"n{i}"

    def parents(self) -> list:
        parent = [None] * len(self.nodes)
        for i, node in enumerate(self.nodes):
            for c in node.children:
                parent[c] = i
        return parent

    def preorder(self) -> list:
        out = []
        stack = [self.root]
        while stack:
            i = stack.pop()
            out.append(i)
            stack.extend(reversed(self.nodes[i].children))
        return out

    def leaves(self) -> list:
        return [i for i in self.preorder() if not self.nodes[i].children]


@dataclass(frozen=True, order=True)
class CanonicalCode:
    code: bytes


def representing_tree(space: UltraSpace) -> RootedLabeledTree:
    """Representing tree of ``space``, nodes numbered in preorder.

    Node payloads hold the point names of the corresponding ball; children
    are ordered by their lowest point index.
    """
    if len(space) == 0:
        raise EmptySpace("representing tree of an empty space")
    nodes = []

    def build(members: tuple) -> int:
        idx = len(nodes)
        nodes.append(None)
        if len(members) == 1:
            nodes[idx] = Node(Fraction(0), (), space.names(members), f"n{idx}")
            return idx
        parts, diam = _parts(space, members)
        children = tuple(build(p) for p in parts)
        nodes[idx] = Node(diam, children, space.names(members), f"n{idx}")
        return idx

    build(tuple(range(len(space))))
    return RootedLabeledTree(tuple(nodes), 0)


def validate_representing_shape(tree: RootedLabeledTree) -> bool:
    """No node with exactly one child, leaf iff label 0, labels strictly drop to children."""
    for node in tree.nodes:
        k = len(node.children)
        if k == 1:
            return False
        if (k == 0) != (node.label == 0):
            return False
        if any(tree.nodes[c].label >= node.label for c in node.children):
            return False
    return True


def realize_space(tree: RootedLabeledTree) -> UltraSpace:
    """Space on the leaves with distance = label of the lowest common ancestor.

    Leaves are named by their payload when every leaf payload is a single
    distinct name, otherwise ``p0, p1, ...`` in preorder.
    """
    if not validate_representing_shape(tree):
        raise InvalidShape("tree is not a representing shape")
    leaves = tree.leaves()
    payload_names = [
        tree.nodes[i].payload[0]
        for i in leaves
        if tree.nodes[i].payload is not None and len(tree.nodes[i].payload) == 1
    ]
    if len(payload_names) == len(leaves) and len(set(payload_names)) == len(leaves):
        names = payload_names
    else:
        names = [f"p{k}" for k in range(len(leaves))]

    parent = tree.parents()
    depth = [0] * len(tree)
    for i in tree.preorder():
        if parent[i] is not None:
            depth[i] = depth[parent[i]] + 1

    def lca(a: int, b: int) -> int:
        while depth[a] > depth[b]:
            a = parent[a]
        while depth[b] > depth[a]:
            b = parent[b]
        while a != b:
            a, b = parent[a], parent[b]
        return a

    n = len(leaves)
    dist = [[Fraction(0)] * n for _ in range(n)]
    for p in range(n):
        for q in range(p + 1, n):
            dist[p][q] = dist[q][p] = tree.nodes[lca(leaves[p], leaves[q])].label
    return UltraSpace._trusted(names, dist)


def _encode(tree: RootedLabeledTree, i: int) -> bytes:
    node = tree.nodes[i]
    kids = sorted(_encode(tree, c) for c in node.children)
    label = node.label
    body = b"".join(b"%d:%s" % (len(k), k) for k in kids)
    return b"%d/%d[%s]" % (label.numerator, label.denominator, body)


def canonical_code(tree: RootedLabeledTree) -> CanonicalCode:
    """Isomorphism invariant of a labeled rooted tree.

    Each node encodes its label followed by the sorted, length-prefixed codes
    of its children; names and payloads are ignored.
    """
    return CanonicalCode(_encode(tree, tree.root))


def isomorphic_rooted(t1: RootedLabeledTree, t2: RootedLabeledTree) -> bool:
    return canonical_code(t1) == canonical_code(t2)


def isometric(s1: UltraSpace, s2: UltraSpace) -> bool:
    """Decide isometry through representing-tree codes."""
    if len(s1) != len(s2):
        return False
    return isomorphic_rooted(representing_tree(s1), representing_tree(s2))


def hausdorff_distance(space: UltraSpace, b1: Ball, b2: Ball) -> Fraction:
    """Hausdorff distance between two open balls of ``space``."""
    balls = set(open_balls(space))
    for b in (b1, b2):
        if b not in balls:
            raise NotABall("not an open ball of the space", space.names(b))
    dist = space.dist

    def directed(a: Ball, b: Ball) -> Fraction:
        return max(min(dist[x][y] for y in b.members) for x in a.members)

    return max(directed(b1, b2), directed(b2, b1))


def to_labeled_tree(tree: RootedLabeledTree) -> LabeledTree:
    """Forget the root: the same nodes and labels as a free labeled tree."""
    names = tuple(tree.node_name(i) for i in range(len(tree)))
    edges = tuple(
        sorted((min(i, c), max(i, c)) for i, node in enumerate(tree.nodes) for c in node.children)
    )
    return LabeledTree(names, tuple(node.label for node in tree.nodes), edges)


def leafless_internal_nodes(tree: RootedLabeledTree) -> list:
    """Ids of internal nodes none of whose children is a leaf."""
    return [
        i
        for i, node in enumerate(tree.nodes)
        if node.children and all(tree.nodes[c].children for c in node.children)
    ]
