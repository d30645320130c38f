"""JSON serialisation for groups, partitions, decompositions, and systems."""

from __future__ import annotations

import json
import pathlib

from .cartesian import CartesianDecomposition, CartesianSystem
from .group import PermGroup
from .perm import Partition, Permutation


def group_to_json(g):
    out = {"degree": g.degree, "generators": [list(p.images) for p in g.generators]}
    if g.name:
        out["name"] = g.name
    return out


def group_from_json(data):
    return PermGroup(
        [Permutation(images) for images in data["generators"]],
        degree=data["degree"],
        name=data.get("name"),
    )


def partition_from_json(data, degree=None):
    return Partition(data, degree=degree)


def decomposition_to_json(e):
    return e.to_json()


def decomposition_from_json(data):
    return CartesianDecomposition.from_json(data)


def system_to_json(k):
    return k.to_json()


def system_from_json(data):
    group = group_from_json(data["group"])
    subgroups = [
        PermGroup([Permutation(images) for images in gens], degree=group.degree)
        for gens in data["subgroups"]
    ]
    return CartesianSystem(group, data["base_point"], subgroups)


def load_json(path):
    return json.loads(pathlib.Path(path).read_text())


def dump_json(data, path=None, pretty=False):
    text = json.dumps(data, indent=2 if pretty else None, sort_keys=True)
    if path is not None:
        pathlib.Path(path).write_text(text + "\n")
    return text
