"""Bundled example fixtures, emitted by the ``examples`` CLI command.

Each builder returns a plain JSON-able dict; serialization through
``render`` is byte-stable (sorted keys, two-space indent, trailing newline)
so golden-file tests can compare output verbatim.
"""

from __future__ import annotations

import json

from .algebra import example_3dim, from_lie, meson, zero_algebra
from .errors import UnknownExample
from .schemas import algebra_to_json

# cross product on Q^3: [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2
_CROSS_BINARY = [
    [[0, 0, 0], [0, 0, 1], [0, -1, 0]],
    [[0, 0, -1], [0, 0, 0], [1, 0, 0]],
    [[0, 1, 0], [-1, 0, 0], [0, 0, 0]],
]


def cross_product_lie():
    return from_lie(_CROSS_BINARY, "crossproduct-lie")


def fixture_3dim() -> dict:
    return algebra_to_json(example_3dim())


def fixture_meson2() -> dict:
    return algebra_to_json(meson(2))


def fixture_meson3() -> dict:
    return algebra_to_json(meson(3))


def fixture_crossproduct_lie() -> dict:
    return algebra_to_json(cross_product_lie())


def fixture_abelian2() -> dict:
    return algebra_to_json(zero_algebra(2))


def fixture_circle_bundle() -> dict:
    """Two-chart circle with fibre the 3dim algebra.

    The overlap arcs share the coordinate (s = t on each arc), so paired
    transition samples list the same values; diag(1, 1+t^2, 1+t^2) is a
    fibrewise automorphism for every t and its declared reverse is the
    pointwise inverse.  The triple (U1, U2, U1) exercises the triple-overlap
    product against the implicit identity g_11.
    """
    diag = [["1", "0", "0"], ["0", "1 + t^2", "0"], ["0", "0", "1 + t^2"]]
    diag_inv = [["1", "0", "0"], ["0", "1/(1 + s^2)", "0"], ["0", "0", "1/(1 + s^2)"]]
    overlap = [["-1"], ["1/2"], ["1"]]
    return {
        "fiber": fixture_3dim(),
        "charts": [
            {"name": "U1", "coords": ["t"], "samples": [["-1"], ["-1/2"], ["0"], ["1/2"], ["1"]]},
            {"name": "U2", "coords": ["s"], "samples": [["-1"], ["-1/2"], ["0"], ["1/2"], ["1"]]},
        ],
        "transitions": [
            {"from": "U1", "to": "U2", "matrix": diag, "samples": overlap},
            {"from": "U2", "to": "U1", "matrix": diag_inv, "samples": overlap},
        ],
        "triples": [
            {
                "i": "U1",
                "j": "U2",
                "k": "U1",
                "samples": [[["-1"], ["-1"], ["-1"]], [["1"], ["1"], ["1"]]],
            }
        ],
    }


FIXTURES = {
    "3dim": fixture_3dim,
    "meson2": fixture_meson2,
    "meson3": fixture_meson3,
    "crossproduct-lie": fixture_crossproduct_lie,
    "abelian2": fixture_abelian2,
    "circle-bundle": fixture_circle_bundle,
}


def fixture(name: str) -> dict:
    try:
        builder = FIXTURES[name]
    except KeyError:
        raise UnknownExample(
            f"unknown example {name!r}; choose from {', '.join(sorted(FIXTURES))}"
        ) from None
    return builder()


def render(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
