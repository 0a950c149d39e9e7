"""Diametral partitions.

The diametrical graph joins points at distance equal to the space diameter.
In an ultrametric space it is complete multipartite, so only its parts are
computed: the classes of the relation ``d(u, v) < diam X``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import TooSmall
from .space import UltraSpace


@dataclass(frozen=True)
class DiametralPartition:
    parts: tuple  # sorted index tuples, ordered by lowest member
    space_diameter: Fraction

    def names(self, space: UltraSpace) -> list:
        return [space.names(p) for p in self.parts]


def _parts(space: UltraSpace, members) -> tuple:
    dist = space.dist
    diam = max(dist[i][j] for i in members for j in members)
    parts = []
    assigned = set()
    for i in members:
        if i in assigned:
            continue
        part = tuple(j for j in members if dist[i][j] < diam)
        # "Closer than the diameter" is an equivalence by the strong triangle
        # inequality; every member must see the same class.
        for j in part:
            assert tuple(k for k in members if dist[j][k] < diam) == part, (
                "relation d < diam is not transitive"
            )
        assigned.update(part)
        parts.append(part)
    return tuple(parts), diam


def diametral_partition(space: UltraSpace) -> DiametralPartition:
    """Parts of the diametrical graph of ``space`` (at least two points)."""
    if len(space) < 2:
        raise TooSmall("diametral partition needs at least 2 points")
    parts, diam = _parts(space, tuple(range(len(space))))
    return DiametralPartition(parts, diam)


def has_singleton_part(partition: DiametralPartition) -> bool:
    """Whether some part is a single point (equivalently, a spanning star exists)."""
    return any(len(p) == 1 for p in partition.parts)
