"""JSON serialization: rationals travel as "p/q" or integer strings."""

from __future__ import annotations

import json
from fractions import Fraction

from .space import AdaptedProcess, FilteredSpace, build_space
from .times import (DistributionST, MixedST, PureST, RStepFunction,
                    RandomizedST)


class InputError(ValueError):
    """Malformed input file or JSON document."""


def parse_fraction(s) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"bad rational {s!r}: {e}") from None


def format_fraction(x: Fraction) -> str:
    return str(x)


def _require(doc: dict, key: str):
    if key not in doc:
        raise InputError(f"missing key {key!r}")
    return doc[key]


def space_to_dict(space: FilteredSpace) -> dict:
    return {
        "grid": [format_fraction(t) for t in space.grid],
        "outcomes": list(space.outcomes),
        "probs": [format_fraction(p) for p in space.probs],
        "partitions": [[sorted(block, key=space.outcomes.index)
                        for block in part] for part in space.partitions],
    }


def space_from_dict(doc: dict) -> FilteredSpace:
    return build_space(
        outcomes=list(_require(doc, "outcomes")),
        probs=[parse_fraction(p) for p in _require(doc, "probs")],
        grid=[parse_fraction(t) for t in _require(doc, "grid")],
        partitions=[[frozenset(b) for b in part]
                    for part in _require(doc, "partitions")],
    )


def process_to_dict(process: AdaptedProcess) -> dict:
    return {"values": {w: [format_fraction(x) for x in row]
                       for w, row in process.values.items()}}


def process_from_dict(doc: dict) -> AdaptedProcess:
    values = _require(doc, "values")
    return AdaptedProcess({w: tuple(parse_fraction(x) for x in row)
                           for w, row in values.items()})


def stopping_time_to_dict(eta) -> dict:
    if isinstance(eta, PureST):
        return {"kind": "pure", "stop_index": dict(eta.stop_index)}
    if isinstance(eta, MixedST):
        return {"kind": "mixed", "sections": {
            w: {"breaks": [format_fraction(r) for r in s.breaks],
                "values": list(s.values)}
            for w, s in eta.sections.items()}}
    if isinstance(eta, RandomizedST):
        return {"kind": "randomized", "paths": {
            w: [format_fraction(x) for x in row]
            for w, row in eta.paths.items()}}
    if isinstance(eta, DistributionST):
        return {"kind": "distribution", "mass": {
            w: [format_fraction(x) for x in row]
            for w, row in eta.mass.items()}}
    raise TypeError(f"not a stopping time: {type(eta).__name__}")


def stopping_time_from_dict(doc: dict):
    kind = _require(doc, "kind")
    if kind == "pure":
        return PureST({w: int(j) for w, j in _require(doc, "stop_index").items()})
    if kind == "mixed":
        sections = {}
        for w, s in _require(doc, "sections").items():
            try:
                sections[w] = RStepFunction(
                    tuple(parse_fraction(r) for r in _require(s, "breaks")),
                    tuple(int(v) for v in _require(s, "values")))
            except ValueError as e:
                raise InputError(f"bad section for {w!r}: {e}") from None
        return MixedST(sections)
    if kind == "randomized":
        return RandomizedST({w: tuple(parse_fraction(x) for x in row)
                             for w, row in _require(doc, "paths").items()})
    if kind == "distribution":
        return DistributionST({w: tuple(parse_fraction(x) for x in row)
                               for w, row in _require(doc, "mass").items()})
    raise InputError(f"unknown stopping-time kind {kind!r}")


def load_json(path) -> dict:
    try:
        with open(path) as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"{path}: {e}") from None


def dump_json(doc: dict, path) -> None:
    with open(path, "w") as f:
        json.dump(doc, f, indent=2, sort_keys=True)
        f.write("\n")
