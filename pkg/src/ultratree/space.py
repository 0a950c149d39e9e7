"""Finite ultrametric spaces with exact rational distances.

A :class:`UltraSpace` is validated when it is built, so every function in the
package may assume the ultrametric axioms.  Point subsets are passed either as
iterables of point names or as :class:`Ball` objects; balls and centered
spheres are reported as sorted tuples of point indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    Asymmetric,
    DuplicateName,
    EmptySubset,
    NegativeDistance,
    NonzeroDiagonal,
    ShapeMismatch,
    StrongTriangleViolation,
    UnknownPoint,
    ZeroOffDiagonal,
)
from .rational import RatLike, format_rat, parse_rat

Members = tuple  # sorted tuple of point indices


@dataclass(frozen=True, order=True)
class Ball:
    """An open ball, identified by its member set.

    Two balls with the same members are equal whatever radius produced them;
    ``diameter`` is cached data and takes no part in equality or hashing.
    """

    members: Members
    diameter: Fraction = field(compare=False)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, index: int) -> bool:
        return index in self.members


@dataclass(frozen=True)
class UltraSpace:
    """A finite ultrametric space.

    Constructing one directly runs the full axiom check; use
    :func:`validate_space` for input coming from users.
    """

    points: tuple
    dist: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "dist", tuple(tuple(row) for row in self.dist))
        _check_axioms(self.points, self.dist)

    @classmethod
    def _trusted(cls, points: Sequence[str], dist: Sequence[Sequence[Fraction]]) -> "UltraSpace":
        # Skips validation; only for matrices that are ultrametric by construction.
        obj = object.__new__(cls)
        object.__setattr__(obj, "points", tuple(points))
        object.__setattr__(obj, "dist", tuple(tuple(row) for row in dist))
        return obj

    def __len__(self) -> int:
        return len(self.points)

    @property
    def index(self) -> dict:
        idx = self.__dict__.get("_index")
        if idx is None:
            idx = {name: i for i, name in enumerate(self.points)}
            object.__setattr__(self, "_index", idx)
        return idx

    def d(self, a: str, b: str) -> Fraction:
        """Distance between two points given by name."""
        try:
            return self.dist[self.index[a]][self.index[b]]
        except KeyError as exc:
            raise UnknownPoint(f"unknown point {exc.args[0]!r}", (exc.args[0],)) from None

    def indices(self, subset: Union[Ball, Iterable[str]]) -> Members:
        """Resolve a subset to a sorted tuple of indices, checking membership."""
        if isinstance(subset, Ball):
            members = subset.members
            if not members:
                raise EmptySubset("empty subset")
            if members[-1] >= len(self.points) or members[0] < 0:
                raise UnknownPoint("ball does not belong to this space", members)
            return members
        if isinstance(subset, str):
            subset = (subset,)
        out = set()
        for name in subset:
            try:
                out.add(self.index[name])
            except KeyError:
                raise UnknownPoint(f"unknown point {name!r}", (name,)) from None
        if not out:
            raise EmptySubset("empty subset")
        return tuple(sorted(out))

    def names(self, members: Union[Ball, Iterable[int]]) -> tuple:
        """Point names for a ball or an index collection, in index order."""
        if isinstance(members, Ball):
            members = members.members
        return tuple(self.points[i] for i in sorted(members))

    @property
    def diameter(self) -> Fraction:
        return max((max(row) for row in self.dist), default=Fraction(0))

    def matrix_strings(self) -> list:
        return [[format_rat(v) for v in row] for row in self.dist]

    def __repr__(self) -> str:
        return f"UltraSpace(points={list(self.points)!r}, matrix={self.matrix_strings()!r})"


def _check_axioms(points: Sequence[str], dist: Sequence[Sequence[Fraction]]) -> None:
    n = len(points)
    if len(dist) != n or any(len(row) != n for row in dist):
        raise ShapeMismatch(f"matrix must be {n}x{n} to match {n} point names")
    seen = set()
    for name in points:
        if name in seen:
            raise DuplicateName(f"duplicate point name {name!r}", (name,))
        seen.add(name)

    for i in range(n):
        if dist[i][i] != 0:
            raise NonzeroDiagonal(
                f"d({points[i]},{points[i]}) = {format_rat(dist[i][i])} must be 0", (points[i],)
            )
    for i in range(n):
        for j in range(i + 1, n):
            x, y = points[i], points[j]
            a, b = dist[i][j], dist[j][i]
            if a < 0 or b < 0:
                raise NegativeDistance(f"d({x},{y}) is negative", (x, y))
            if a != b:
                raise Asymmetric(
                    f"d({x},{y}) = {format_rat(a)} but d({y},{x}) = {format_rat(b)}", (x, y)
                )
            if a == 0:
                raise ZeroOffDiagonal(f"d({x},{y}) = 0 for distinct points", (x, y))
    for i in range(n):
        row_i = dist[i]
        for j in range(i + 1, n):
            dij = row_i[j]
            for k in range(n):
                if k == i or k == j:
                    continue
                if dij > max(row_i[k], dist[k][j]):
                    x, y, z = points[i], points[j], points[k]
                    raise StrongTriangleViolation(
                        f"d({x},{y}) = {format_rat(dij)} > max(d({x},{z}), d({z},{y})) = "
                        f"{format_rat(max(row_i[k], dist[k][j]))}",
                        (x, y, z),
                    )


def validate_space(names: Sequence[str], matrix: Sequence[Sequence[RatLike]]) -> UltraSpace:
    """Build an :class:`UltraSpace`, raising on the first violated axiom.

    Checks run in a fixed order (shape, names, diagonal, each pair, then each
    triple in index order) so the reported witness is deterministic.

    >>> validate_space(["a", "b"], [["0", "3/2"], ["3/2", "0"]]).d("a", "b")
    Fraction(3, 2)
    """
    names = tuple(names)
    try:
        rows = tuple(tuple(parse_rat(v) for v in row) for row in matrix)
    except TypeError:
        raise ShapeMismatch("matrix must be a sequence of rows") from None
    return UltraSpace(names, rows)


def diameter(space: UltraSpace, subset: Union[Ball, Iterable[str]]) -> Fraction:
    members = space.indices(subset)
    return _diameter(space, members)


def _diameter(space: UltraSpace, members: Sequence[int]) -> Fraction:
    dist = space.dist
    best = Fraction(0)
    for pos, i in enumerate(members):
        row = dist[i]
        for j in members[pos + 1:]:
            if row[j] > best:
                best = row[j]
    return best


def closed_ball(space: UltraSpace, center: int, radius: Fraction) -> Members:
    row = space.dist[center]
    return tuple(x for x in range(len(space)) if row[x] <= radius)


def open_balls(space: UltraSpace) -> tuple:
    """All distinct open balls, largest first, ties broken by member indices.

    In a finite space every open ball around ``c`` equals the closed ball
    ``{x : d(x, c) <= t}`` for some ``t`` in ``{0} | {d(c, y)}``, and the
    diameter of that set is its largest distance from ``c``.
    """
    found = {}
    for c in range(len(space)):
        row = space.dist[c]
        for t in sorted(set(row)):
            members = closed_ball(space, c, t)
            if members not in found:
                found[members] = max(row[x] for x in members)
    balls = [Ball(m, diam) for m, diam in found.items()]
    balls.sort(key=lambda b: (-len(b.members), b.members))
    return tuple(balls)


def _sphere(space: UltraSpace, center: int, radius: Fraction) -> Members:
    row = space.dist[center]
    return tuple(x for x in range(len(space)) if x == center or row[x] == radius)


def _center_of(space: UltraSpace, members: Members) -> Optional[int]:
    radius = _diameter(space, members)
    for c in members:
        if _sphere(space, c, radius) == members:
            return c
    return None


def centered_sphere_center(space: UltraSpace, subset: Union[Ball, Iterable[str]]) -> Optional[str]:
    """Name of the lowest-index center making ``subset`` a centered sphere.

    A centered sphere with at least two points has radius equal to its
    diameter, so only that radius needs testing.  Returns ``None`` when no
    member works.
    """
    members = space.indices(subset)
    c = _center_of(space, members)
    return None if c is None else space.points[c]


def centered_spheres(space: UltraSpace) -> tuple:
    """Every centered sphere as a sorted index tuple, largest first."""
    found = set()
    for c in range(len(space)):
        for r in set(space.dist[c]):
            found.add(_sphere(space, c, r))
    return tuple(sorted(found, key=lambda m: (-len(m), m)))


def is_discrete(space: UltraSpace) -> bool:
    values = {space.dist[i][j] for i in range(len(space)) for j in range(i + 1, len(space))}
    return len(values) <= 1


def induced_subspace(space: UltraSpace, subset: Union[Ball, Iterable[str]]) -> UltraSpace:
    """Restriction of ``space`` to ``subset``; points keep their original order."""
    members = space.indices(subset)
    return UltraSpace._trusted(
        [space.points[i] for i in members],
        [[space.dist[i][j] for j in members] for i in members],
    )
