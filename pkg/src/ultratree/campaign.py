"""Seeded property campaign over random ultrametric spaces.

Each trial draws a representing shape with seed ``seed + trial``, realizes
it, and runs every property below.  A property returns ``False`` when it does
not apply to the instance (counted as skipped) and raises ``AssertionError``
on failure.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import oracle
from .diametrical import diametral_partition, has_singleton_part
from .labeled_tree import (
    ball_subtree,
    generates_ultrametric,
    path_max_matrix,
    space_from_tree,
)
from .represent import (
    hausdorff_distance,
    isometric,
    isomorphic_rooted,
    leafless_internal_nodes,
    realize_space,
    representing_tree,
    to_labeled_tree,
    validate_representing_shape,
)
from .space import (
    UltraSpace,
    _center_of,
    centered_spheres,
    closed_ball,
    induced_subspace,
    is_discrete,
    open_balls,
)
from .ugvl import deficient_balls, delta, generating_tree, is_ugvl, minimal_extension


class Instance:
    """One random space with lazily shared derived objects."""

    def __init__(self, seed: int, max_points: int):
        self.seed = seed
        self.spec = oracle.RandomSpec(seed, max_points)
        self.shape = oracle.random_shape(self.spec)
        self.space = realize_space(self.shape)
        self.balls = open_balls(self.space)
        self.tree = representing_tree(self.space)
        # Plain ball criterion: is_ugvl itself is exercised by the properties.
        self.ugvl = not deficient_balls(self.space)


def prop_generator_sound(inst: Instance):
    s = inst.space
    UltraSpace(s.points, s.dist)
    assert isomorphic_rooted(inst.tree, inst.shape), "representing tree differs from shape"


def prop_balls_laminar_and_centered(inst: Instance):
    s = inst.space
    for b in inst.balls:
        for c in b.members:
            assert closed_ball(s, c, b.diameter) == b.members, f"{b} not centered at {c}"
    for a, b in combinations(inst.balls, 2):
        sa, sb = set(a.members), set(b.members)
        assert not (sa & sb) or sa <= sb or sb <= sa, f"{a} and {b} overlap"


def prop_balls_oracle(inst: Instance):
    if len(inst.space) > 7:
        return False
    assert set(inst.balls) == set(oracle.oracle_open_balls(inst.space)), "open_balls differs"


def prop_sphere_radius(inst: Instance):
    s = inst.space
    for members in centered_spheres(s):
        if len(members) < 2:
            continue
        diam = max(s.dist[i][j] for i in members for j in members)
        assert any(
            {x for x in range(len(s)) if s.dist[x][c] == diam} | {c} == set(members) for c in members
        ), f"sphere {members} has radius != diameter"


def prop_discrete_three_way(inst: Instance):
    spheres = set(centered_spheres(inst.space))
    balls = {b.members for b in inst.balls}
    disc = is_discrete(inst.space)
    assert (spheres <= balls) == disc == (spheres == balls), (
        f"Cs<=B {spheres <= balls}, discrete {disc}, Cs==B {spheres == balls}"
    )


def prop_small_balls_are_spheres(inst: Instance):
    if len(inst.space) > 3:
        return False
    spheres = set(centered_spheres(inst.space))
    assert all(b.members in spheres for b in inst.balls), "a ball of a <=3 point space is not a sphere"
    assert inst.ugvl


def prop_partition(inst: Instance):
    s = inst.space
    if len(s) < 2:
        return False
    part = diametral_partition(s)
    diam = s.diameter
    assert part.space_diameter == diam
    assert len(part.parts) >= 2
    balls = {b.members for b in inst.balls}
    for p in part.parts:
        assert p in balls, f"part {p} is not an open ball"
        assert closed_ball(s, p[0], max((s.dist[p[0]][x] for x in p), default=Fraction(0))) == p
        assert all(s.dist[p[0]][x] < diam for x in p)
    for p, q in combinations(part.parts, 2):
        assert all(s.dist[i][j] == diam for i in p for j in q)
    whole = tuple(range(len(s)))
    assert has_singleton_part(part) == (_center_of(s, whole) is not None)


def prop_representing_tree(inst: Instance):
    assert validate_representing_shape(inst.tree), "representing tree has invalid shape"
    payloads = {inst.space.indices(node.payload) for node in inst.tree.nodes}
    assert payloads == {b.members for b in inst.balls}, "node payloads != open balls"
    assert len(payloads) == len(inst.tree.nodes)


def prop_round_trips(inst: Instance):
    assert isometric(realize_space(inst.tree), inst.space), "realize(represent(s)) not isometric"
    assert isomorphic_rooted(representing_tree(realize_space(inst.shape)), inst.shape)


def prop_hausdorff(inst: Instance):
    s, tree = inst.space, inst.tree
    free = to_labeled_tree(tree)
    balls = [s.indices(node.payload) for node in tree.nodes]
    lookup = {b.members: b for b in inst.balls}
    expected = path_max_matrix(free)
    hausdorff = [[hausdorff_distance(s, lookup[a], lookup[b]) for b in balls] for a in balls]
    assert hausdorff == expected, "Hausdorff matrix != tree path-max matrix"
    UltraSpace(free.vertices, hausdorff)
    assert generates_ultrametric(free)


def prop_criteria_agree(inst: Instance):
    is_ugvl(inst.space)
    by_balls = not deficient_balls(inst.space)
    by_tree = not leafless_internal_nodes(inst.tree)
    assert by_balls == by_tree, f"ball criterion {by_balls}, tree criterion {by_tree}"


def prop_ugvl_oracle(inst: Instance):
    if len(inst.space) > 7:
        return False
    assert oracle.oracle_is_ugvl(inst.space) == inst.ugvl


def prop_generate_eval(inst: Instance):
    if not inst.ugvl:
        return False
    s = inst.space
    tree = generating_tree(s)
    assert generates_ultrametric(tree)
    assert space_from_tree(tree) == s, "generating tree does not reproduce the matrix"
    labels = dict(zip(tree.vertices, tree.labels))
    if len(s) >= 2:
        assert max(labels.values()) == s.diameter
    for u in s.points:
        for v in s.points:
            assert oracle.oracle_path_max(tree, u, v) == s.d(u, v)
    for b in inst.balls:
        sub = ball_subtree(tree, s, b)
        assert set(sub.vertices) == set(s.names(b))
        assert space_from_tree(sub) == induced_subspace(s, s.names(b))


def prop_ball_heredity(inst: Instance):
    if not inst.ugvl:
        return False
    for b in inst.balls:
        assert is_ugvl(induced_subspace(inst.space, inst.space.names(b)))


def prop_delta_tree(inst: Instance):
    assert delta(inst.space) == len(leafless_internal_nodes(inst.tree))


def prop_extension(inst: Instance):
    s = inst.space
    fwd = minimal_extension(s)
    rev = minimal_extension(s, reverse=True)
    ext = fwd.extended
    UltraSpace(ext.points, ext.dist)
    assert len(ext) == delta(s) + len(s), "extension size != delta + card"
    assert induced_subspace(ext, s.points) == s, "extension does not restrict to the input"
    assert is_ugvl(ext), "extension is not tree-generated"
    assert len(fwd.added) == delta(s)
    assert isometric(ext, rev.extended), "forward and reversed extensions not isometric"


def prop_minimality(inst: Instance):
    if len(inst.space) > 4:
        return False
    ext = minimal_extension(inst.space).extended
    assert oracle.oracle_minimal(ext, inst.space), "a proper subset is already an extension"


def prop_isometric_oracle(inst: Instance):
    s = inst.space
    if len(s) > 7:
        return False
    rng = random.Random(inst.seed)
    perm = list(range(len(s)))
    rng.shuffle(perm)
    renamed = UltraSpace(
        [f"q{i}" for i in range(len(s))],
        [[s.dist[perm[i]][perm[j]] for j in range(len(s))] for i in range(len(s))],
    )
    assert isometric(s, renamed) and oracle.oracle_isometric(s, renamed)
    other = oracle.random_space(oracle.RandomSpec(inst.seed * 7919 + 17, inst.spec.max_points))
    if len(other) <= 7:
        assert isometric(s, other) == oracle.oracle_isometric(s, other)
    # Nudge one distance class: still ultrametric, isometric only by accident.
    top = s.diameter
    if len(s) >= 2:
        bumped = UltraSpace(s.points, [[v + 1 if v == top else v for v in row] for row in s.dist])
        assert isometric(s, bumped) == oracle.oracle_isometric(s, bumped)


PROPERTIES = (
    ("generator.sound", prop_generator_sound),
    ("balls.laminar_centered", prop_balls_laminar_and_centered),
    ("balls.oracle", prop_balls_oracle),
    ("spheres.radius_is_diameter", prop_sphere_radius),
    ("discrete.three_way", prop_discrete_three_way),
    ("small.balls_are_spheres", prop_small_balls_are_spheres),
    ("diametral.partition", prop_partition),
    ("represent.shape_and_payloads", prop_representing_tree),
    ("represent.round_trips", prop_round_trips),
    ("hausdorff.tree_metric", prop_hausdorff),
    ("ugvl.criteria_agree", prop_criteria_agree),
    ("ugvl.oracle", prop_ugvl_oracle),
    ("ugvl.generate_eval", prop_generate_eval),
    ("ugvl.ball_heredity", prop_ball_heredity),
    ("ugvl.delta_tree", prop_delta_tree),
    ("extension.contract", prop_extension),
    ("extension.minimality", prop_minimality),
    ("isometric.oracle", prop_isometric_oracle),
)


@dataclass
class CampaignReport:
    seed: int
    trials: int
    max_points: int
    counts: dict = field(default_factory=dict)  # name -> [passed, failed, skipped]
    failures: list = field(default_factory=list)  # (name, trial, space, message)
    ugvl_instances: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list:
        out = [
            f"campaign seed={self.seed} trials={self.trials} max_points={self.max_points} "
            f"ugvl_instances={self.ugvl_instances}"
        ]
        for name, (p, f, s) in self.counts.items():
            out.append(f"{name:<30} pass={p} fail={f} skip={s}")
        for name, trial, space, message in self.failures:
            doc = {"points": list(space.points), "matrix": space.matrix_strings()}
            out.append(f"FAIL {name} trial={trial}: {message}")
            out.append(f"  replay: {json.dumps(doc)}")
        out.append("result: " + ("PASS" if self.ok else "FAIL"))
        return out


def run_campaign(seed: int, trials: int, max_points: int = 8, properties=PROPERTIES) -> CampaignReport:
    report = CampaignReport(seed, trials, max_points)
    report.counts = {name: [0, 0, 0] for name, _ in properties}
    for trial in range(trials):
        inst = Instance(seed + trial, max_points)
        report.ugvl_instances += inst.ugvl
        for name, prop in properties:
            counts = report.counts[name]
            try:
                result = prop(inst)
            except Exception as exc:  # any exception is a property failure
                counts[1] += 1
                report.failures.append((name, trial, inst.space, f"{type(exc).__name__}: {exc}"))
                continue
            counts[2 if result is False else 0] += 1
    return report
