"""Command-line interface.

Exit codes: 0 ok / yes, 1 parse error, 2 invalid input, 3 negative verdict,
4 property failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import campaign
from .documents import (
    DocumentError,
    parse_space_document,
    parse_tree_document,
    space_document,
    to_dot,
    tree_document,
)
from .errors import InvalidInput, NotUGVL, UltraTreeError
from .labeled_tree import LabeledTree, space_from_tree
from .rational import format_rat
from .represent import isometric, realize_space, representing_tree
from .ugvl import delta, generating_tree, is_ugvl, minimal_extension

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_NO = 3
EXIT_PROPERTY = 4


class _Exit(Exception):
    def __init__(self, code: int, payload: dict):
        super().__init__(payload.get("message", ""))
        self.code = code
        self.payload = payload


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _Exit(EXIT_PARSE, {"error": "ParseError", "message": str(exc)}) from None


def _parse(loader, path: str):
    doc = _load_json(path)
    try:
        return loader(doc)
    except DocumentError as exc:
        raise _Exit(EXIT_PARSE, {"error": "ParseError", "message": str(exc)}) from None
    except InvalidInput as exc:
        raise _Exit(
            EXIT_INVALID,
            {"error": exc.kind, "witness": list(exc.witness), "message": str(exc)},
        ) from None


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def cmd_validate(args) -> int:
    space = _parse(parse_space_document, args.space)
    print(f"ultrametric: ok, n={len(space)}, diam={format_rat(space.diameter)}")
    return EXIT_OK


def cmd_is_ugvl(args) -> int:
    space = _parse(parse_space_document, args.space)
    verdict = is_ugvl(space)
    print(f"UGVL: {'yes' if verdict else 'no'}, delta={delta(space)}")
    return EXIT_OK if verdict else EXIT_NO


def _emit_tree(tree, fmt: str) -> None:
    if fmt == "dot":
        sys.stdout.write(to_dot(tree))
    else:
        _emit(tree_document(tree))


def cmd_generate_tree(args) -> int:
    space = _parse(parse_space_document, args.space)
    try:
        tree = generating_tree(space)
    except NotUGVL as exc:
        raise _Exit(
            EXIT_NO, {"error": "NotUGVL", "ball": list(exc.ball), "message": str(exc)}
        ) from None
    _emit_tree(tree, args.format)
    return EXIT_OK


def cmd_eval_tree(args) -> int:
    tree = _parse(parse_tree_document, args.tree)
    try:
        if isinstance(tree, LabeledTree):
            space = space_from_tree(tree)
        else:
            space = realize_space(tree)
    except InvalidInput as exc:
        raise _Exit(
            EXIT_INVALID, {"error": exc.kind, "witness": list(exc.witness), "message": str(exc)}
        ) from None
    _emit(space_document(space))
    return EXIT_OK


def cmd_representing_tree(args) -> int:
    space = _parse(parse_space_document, args.space)
    _emit_tree(representing_tree(space), args.format)
    return EXIT_OK


def cmd_extend(args) -> int:
    space = _parse(parse_space_document, args.space)
    result = minimal_extension(space)
    doc = space_document(result.extended)
    doc["embedding"] = dict(result.embedding)
    doc["added"] = [
        {"name": name, "for_ball": list(space.names(ball))} for name, ball in result.added
    ]
    _emit(doc)
    return EXIT_OK


def cmd_isometric(args) -> int:
    a = _parse(parse_space_document, args.space_a)
    b = _parse(parse_space_document, args.space_b)
    verdict = isometric(a, b)
    print(f"isometric: {'yes' if verdict else 'no'}")
    return EXIT_OK if verdict else EXIT_NO


def cmd_proptest(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("ULTRATREE_SEED", "0"))
    report = campaign.run_campaign(seed, args.trials, args.max_points)
    sys.stdout.write("\n".join(report.lines()) + "\n")
    return EXIT_OK if report.ok else EXIT_PROPERTY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ultratree",
        description="Finite ultrametric spaces generated by vertex-labeled trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the ultrametric axioms")
    p.add_argument("space", help="space document (JSON), '-' for stdin")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("is-ugvl", help="decide generation by a labeled tree and report delta")
    p.add_argument("space")
    p.set_defaults(func=cmd_is_ugvl)

    p = sub.add_parser("generate-tree", help="emit a labeled tree generating the space")
    p.add_argument("space")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_generate_tree)

    p = sub.add_parser("eval-tree", help="emit the distance matrix generated by a tree")
    p.add_argument("tree", help="tree document; rooted trees are read as representing shapes")
    p.set_defaults(func=cmd_eval_tree)

    p = sub.add_parser("representing-tree", help="emit the representing tree of a space")
    p.add_argument("space")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_representing_tree)

    p = sub.add_parser("extend", help="emit the minimal tree-generated extension")
    p.add_argument("space")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("isometric", help="decide whether two spaces are isometric")
    p.add_argument("space_a")
    p.add_argument("space_b")
    p.set_defaults(func=cmd_isometric)

    p = sub.add_parser("proptest", help="run the seeded property campaign")
    p.add_argument("--seed", type=int, default=None, help="default: $ULTRATREE_SEED or 0")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-points", type=int, default=8)
    p.set_defaults(func=cmd_proptest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        sys.stderr.write(json.dumps(exc.payload, ensure_ascii=False) + "\n")
        return exc.code
    except UltraTreeError as exc:
        sys.stderr.write(json.dumps({"error": exc.kind, "message": str(exc)}) + "\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
