"""Scene files: one JSON object describing a divisor pair.

A scene holds the toric coefficients, the non-canonical potentials keyed by
place label ("inf" or a prime), and optionally a base condition keyed by
closed-point label.  All numbers are strings parsed as exact rationals, e.g.

    {
      "c0": "1", "cinf": "0",
      "potentials": {
        "inf": {"kind": "convex", "points": [["1", "1"]],
               "left_slope": "0", "right_slope": "1"}
      },
      "base": {"0": "1/2"}
    }

Potentials at finite places are in log p units.  A "comment" key is ignored.
"""

from __future__ import annotations

import json
from pathlib import Path

from .divisors import Pair

_TOP_KEYS = {"c0", "cinf", "potentials", "base", "comment"}


def scene_from_dict(payload: dict) -> Pair:
    if not isinstance(payload, dict):
        raise ValueError(f"scene must be a JSON object, got {type(payload).__name__}")
    unknown = set(payload) - _TOP_KEYS
    if unknown:
        raise ValueError(
            f"unknown scene keys {sorted(unknown)}; expected a subset of "
            f"{sorted(_TOP_KEYS)}"
        )
    if "c0" not in payload:
        raise ValueError("scene is missing the required key 'c0'")
    try:
        return Pair.from_payload(payload)
    except (KeyError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed scene: {exc!r}") from exc


def scene_to_dict(pair: Pair) -> dict:
    return pair.to_payload()


def load_scene(path) -> Pair:
    path = Path(path)
    try:
        payload = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON ({exc})") from exc
    try:
        return scene_from_dict(payload)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def save_scene(pair: Pair, path, comment: str = None) -> None:
    payload = scene_to_dict(pair)
    if comment is not None:
        payload["comment"] = comment
    Path(path).write_text(json.dumps(payload, indent=2) + "\n")
