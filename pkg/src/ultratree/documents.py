"""JSON documents for spaces and trees, plus DOT rendering.

Space document::

    {"points": ["x", "y"], "matrix": [["0", "2"], ["2", "0"]]}

Tree document (``root`` present makes it a rooted tree; vertices may carry a
``members`` list, which rooted trees keep as node payloads)::

    {"vertices": [{"name": "x", "label": "0"}], "edges": [["x", "y"]], "root": "x"}

JSON is the interchange format; DOT output is for rendering only.
"""

from __future__ import annotations

import re
from typing import Union

from .labeled_tree import LabeledTree, validate_tree
from .rational import format_rat, parse_rat
from .represent import Node, RootedLabeledTree
from .space import UltraSpace, validate_space

_BAD_NAME = re.compile(r"[\s,\"']")


class DocumentError(ValueError):
    """Malformed document (wrong keys or types, bad rational literal, bad name)."""


def check_name(name) -> str:
    if not isinstance(name, str) or not name:
        raise DocumentError(f"point names must be nonempty strings, got {name!r}")
    if _BAD_NAME.search(name):
        raise DocumentError(f"name {name!r} contains whitespace, a comma or a quote")
    return name


def _rat(value):
    if isinstance(value, float):
        value = repr(value)
    try:
        return parse_rat(value)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def parse_space_document(doc) -> UltraSpace:
    if not isinstance(doc, dict) or "points" not in doc or "matrix" not in doc:
        raise DocumentError('space document needs "points" and "matrix"')
    points, matrix = doc["points"], doc["matrix"]
    if not isinstance(points, list) or not isinstance(matrix, list):
        raise DocumentError('"points" and "matrix" must be lists')
    if not all(isinstance(row, list) for row in matrix):
        raise DocumentError('"matrix" must be a list of rows')
    names = [check_name(p) for p in points]
    rows = [[_rat(v) for v in row] for row in matrix]
    return validate_space(names, rows)


def space_document(space: UltraSpace) -> dict:
    return {"points": list(space.points), "matrix": space.matrix_strings()}


def parse_tree_document(doc) -> Union[LabeledTree, RootedLabeledTree]:
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise DocumentError('tree document needs "vertices"')
    vertices = doc["vertices"]
    edges = doc.get("edges", [])
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise DocumentError('"vertices" and "edges" must be lists')
    names, labels, members = [], [], {}
    for v in vertices:
        if not isinstance(v, dict) or "name" not in v or "label" not in v:
            raise DocumentError('each vertex needs "name" and "label"')
        names.append(check_name(v["name"]))
        labels.append(_rat(v["label"]))
        if "members" in v:
            members[v["name"]] = tuple(check_name(m) for m in v["members"])
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise DocumentError("each edge must be a pair of names")
        pairs.append((e[0], e[1]))
    free = validate_tree(names, labels, pairs)
    root = doc.get("root")
    if root is None:
        return free
    if root not in free.index:
        raise DocumentError(f"root {root!r} is not a vertex")
    return _orient(free, pairs, free.index[root], members)


def _orient(free: LabeledTree, pairs, root: int, members: dict) -> RootedLabeledTree:
    # Children keep the order in which their edges appear in the document.
    neighbours = [[] for _ in free.vertices]
    for u, v in pairs:
        i, j = free.index[u], free.index[v]
        neighbours[i].append(j)
        neighbours[j].append(i)
    order, children = [], {}
    parent = {root: None}
    stack = [root]
    while stack:
        u = stack.pop()
        order.append(u)
        kids = [w for w in neighbours[u] if w != parent[u]]
        children[u] = kids
        for w in kids:
            parent[w] = u
        stack.extend(reversed(kids))
    renum = {old: new for new, old in enumerate(order)}
    nodes = tuple(
        Node(
            free.labels[old],
            tuple(renum[c] for c in children[old]),
            members.get(free.vertices[old]),
            free.vertices[old],
        )
        for old in order
    )
    return RootedLabeledTree(nodes, 0)


def tree_document(tree: Union[LabeledTree, RootedLabeledTree]) -> dict:
    if isinstance(tree, LabeledTree):
        return {
            "vertices": [
                {"name": v, "label": format_rat(l)} for v, l in zip(tree.vertices, tree.labels)
            ],
            "edges": [list(e) for e in tree.edge_names()],
        }
    vertices = []
    for i in tree.preorder():
        node = tree.nodes[i]
        entry = {"name": tree.node_name(i), "label": format_rat(node.label)}
        if node.payload is not None:
            entry["members"] = list(node.payload)
        vertices.append(entry)
    edges = [
        [tree.node_name(i), tree.node_name(c)] for i in tree.preorder() for c in tree.nodes[i].children
    ]
    return {"vertices": vertices, "edges": edges, "root": tree.node_name(tree.root)}


def to_dot(tree: Union[LabeledTree, RootedLabeledTree]) -> str:
    """Graphviz source: ``digraph`` parent->child for rooted trees, ``graph`` otherwise."""
    if isinstance(tree, LabeledTree):
        lines = ["graph T {"]
        for v, l in zip(tree.vertices, tree.labels):
            lines.append(f'  "{v}" [label="{v} | {format_rat(l)}"];')
        for u, v in tree.edge_names():
            lines.append(f'  "{u}" -- "{v}";')
        lines.append("}")
        return "\n".join(lines) + "\n"
    lines = ["digraph T {"]
    for i in tree.preorder():
        node = tree.nodes[i]
        if node.payload is not None:
            caption = f"{format_rat(node.label)} | {{{', '.join(node.payload)}}}"
        else:
            caption = f"{tree.node_name(i)} | {format_rat(node.label)}"
        lines.append(f'  "{tree.node_name(i)}" [label="{caption}"];')
    for i in tree.preorder():
        for c in tree.nodes[i].children:
            lines.append(f'  "{tree.node_name(i)}" -> "{tree.node_name(c)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
