from fractions import Fraction

import pytest

from lieyamaguti import adjoint, example_3dim, meson
from lieyamaguti.cohomology import random_cochain_pair
from lieyamaguti.errors import ShapeMismatch
from lieyamaguti.schemas import (
    algebra_from_json,
    algebra_to_json,
    cochain_pair_from_json,
    cochain_pair_to_json,
    frac_from_json,
    frac_to_str,
    representation_from_json,
    representation_to_json,
)


def test_frac_round_trip():
    for v in (Fraction(1, 2), Fraction(-7, 3), Fraction(4)):
        assert frac_from_json(frac_to_str(v)) == v
    assert frac_from_json(3) == 3
    assert frac_to_str(Fraction(4)) == "4"


def test_frac_rejects_junk():
    for bad in (True, 1.5, "a/b", "1/0", [1]):
        with pytest.raises(ShapeMismatch):
            frac_from_json(bad)


def test_algebra_round_trip(corpus):
    for name, (a, _) in corpus.items():
        obj = algebra_to_json(a)
        back = algebra_from_json(obj)
        assert back.dim == a.dim
        assert back.binary == a.binary
        assert back.ternary == a.ternary


def test_algebra_json_rejects_upper_triangle_violation():
    obj = {"dim": 2, "binary": [[2, 1, ["1", "0"]]], "ternary": []}
    with pytest.raises(ShapeMismatch):
        algebra_from_json(obj)


def test_algebra_json_rejects_duplicates():
    obj = {"dim": 2, "binary": [[1, 2, ["1", "0"]], [1, 2, ["0", "1"]]], "ternary": []}
    with pytest.raises(ShapeMismatch):
        algebra_from_json(obj)


def test_algebra_json_rejects_bad_vector_length():
    obj = {"dim": 3, "binary": [[1, 2, ["1", "0"]]], "ternary": []}
    with pytest.raises(ShapeMismatch):
        algebra_from_json(obj)


def test_algebra_json_omitted_entries_are_zero():
    a = algebra_from_json({"dim": 4})
    assert all(all(x == 0 for x in a.binary[i][j]) for i in range(4) for j in range(4))


def test_representation_round_trip():
    a = meson(2)
    r = adjoint(a)
    back = representation_from_json(representation_to_json(r), a.dim)
    assert back == r


def test_representation_bad_shapes():
    a = example_3dim()
    obj = representation_to_json(adjoint(a))
    obj["rho"] = obj["rho"][:2]
    with pytest.raises(ShapeMismatch):
        representation_from_json(obj, a.dim)


def test_cochain_pair_round_trip(rng):
    c = random_cochain_pair(1, 3, 3, rng)
    obj = cochain_pair_to_json(c)
    back = cochain_pair_from_json(obj, 3, 3)
    assert back.f.coeffs == c.f.coeffs
    assert back.g.coeffs == c.g.coeffs


def test_cochain_pair_json_rejects_bad_indices():
    with pytest.raises(ShapeMismatch):
        cochain_pair_from_json({"p": 1, "f": [[2, 1, ["1", "0", "0"]]], "g": []}, 3, 3)
