"""
Unit Tests for Measure-Spec Documents

Author: Disintegrator Team
Date: 2026-10-17
"""

import json
import pytest
from fractions import Fraction

from disintegrator.measures import load_spec, parse_document, validate_spec
from disintegrator.shared.exceptions import SpecValidationError
from disintegrator.spaces import Cylinder, Interval, NatSet, UnitInterval

HALF = Fraction(1, 2)


@pytest.fixture
def write_spec(tmp_path):
    """Write a document to a temporary file"""
    def write(doc, name="spec.json"):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc), encoding="utf-8")
        return path
    return write


def discrete(atoms, space="unit-interval"):
    return {"space": space, "measure": {"type": "finite-discrete", "atoms": atoms}}


class TestParse:
    """Test building measures from documents"""

    def test_finite_discrete(self):
        """Atoms and weights are exact"""
        space, mu = parse_document(discrete([["1/4", "1/2"], ["3/4", "1/2"]]))
        assert space == UnitInterval()
        assert mu.box_mass(Interval(0, HALF)).refine(10).contains(HALF)

    def test_naturals_with_integer_weights(self):
        """Integer weights are rationals too"""
        _, mu = parse_document(discrete([[3, 1]], space="naturals-discrete"))
        assert mu.box_mass(NatSet.of(3)).refine(4).contains(1)

    def test_convex_combination(self):
        """1/2 delta_{1/2} + 1/2 Lebesgue"""
        doc = {
            "space": "unit-interval",
            "measure": {"type": "convex", "components": [
                ["1/2", {"type": "finite-discrete", "atoms": [["1/2", 1]]}],
                ["1/2", {"type": "lebesgue"}],
            ]},
        }
        _, mu = parse_document(doc)
        assert mu.box_mass(Interval(0, HALF, True, True)).refine(10).contains(Fraction(3, 4))

    def test_product_on_pair(self):
        """Uniform x uniform on the ultrametric pair"""
        doc = {"space": "ultrametric-pair", "measure": {"type": "product", "factors": [
            {"type": "uniform"}, {"type": "uniform"},
        ]}}
        _, mu = parse_document(doc)
        assert mu.box_mass((Cylinder("01"), Cylinder("1"))).refine(4).contains(Fraction(1, 8))

    def test_histogram(self):
        """Dyadic cells carry their weight uniformly"""
        doc = {"space": "unit-interval", "measure": {"type": "dyadic-histogram", "cells": [
            [0, 1, 1, "1/4"], [1, 2, 1, "3/4"],
        ]}}
        _, mu = parse_document(doc)
        assert mu.box_mass(Interval(HALF, Fraction(3, 4))).refine(12).contains(Fraction(3, 8))

    def test_construction_defaults_space(self):
        """Construction selectors bring their own space"""
        space, mu = parse_document({"measure": {"type": "construction", "name": "mu_x", "x": [1, 0, 1]}})
        assert space.describe() == mu.space.describe()
        assert mu.descriptor["name"] == "mu_x"

    def test_witness_selector(self):
        """x may be given by witness pairs"""
        doc = {"measure": {"type": "construction", "name": "eta_x", "x": {"witness": [[0, 2], [3, 1]]}}}
        _, mu = parse_document(doc)
        assert mu.box_mass((NatSet.of(0, 1), Cylinder(""))).refine(10).contains(HALF)


class TestValidate:
    """Test diagnostics"""

    def test_weights_must_sum_to_one(self):
        """Weights summing to 9/10 are reported"""
        with pytest.raises(SpecValidationError) as info:
            parse_document(discrete([["0", "1/2"], ["1", "2/5"]]))
        assert any("weights sum 9/10 ≠ 1" in d for d in info.value.diagnostics)

    def test_malformed_rational(self):
        """A zero denominator is a parse diagnostic"""
        with pytest.raises(SpecValidationError) as info:
            parse_document(discrete([["0", "1/0"]]))
        assert any("malformed rational" in d for d in info.value.diagnostics)

    def test_bad_cell(self):
        """Cells need 0 <= i < j <= 2^m"""
        doc = {"space": "unit-interval", "measure": {"type": "dyadic-histogram", "cells": [[2, 1, 1, "1"]]}}
        with pytest.raises(SpecValidationError) as info:
            parse_document(doc)
        assert any("i < j" in d for d in info.value.diagnostics)

    def test_unknown_type(self):
        """An unknown type is anchored at the measure"""
        with pytest.raises(SpecValidationError) as info:
            parse_document({"space": "cantor", "measure": {"type": "dirichlet"}})
        assert info.value.diagnostics[0].startswith("measure")

    def test_space_mismatch(self):
        """Lebesgue on Cantor space is rejected"""
        with pytest.raises(SpecValidationError):
            parse_document({"space": "cantor", "measure": {"type": "lebesgue"}})

    def test_unknown_space(self):
        """Unknown space kinds are reported"""
        with pytest.raises(SpecValidationError) as info:
            parse_document({"space": "hilbert", "measure": {"type": "lebesgue"}})
        assert info.value.diagnostics[0].startswith("space")


class TestFiles:
    """Test loading from disk"""

    def test_valid_mixture_file(self, write_spec):
        """A mixture selector validates cleanly"""
        path = write_spec({"measure": {"type": "construction", "name": "mixture"}})
        assert validate_spec(path) == []
        _, mu = load_spec(path)
        assert mu.descriptor["name"] == "mixture"

    def test_syntax_error_has_line(self, write_spec):
        """Broken JSON is anchored at a line"""
        path = write_spec('{\n  "space": "cantor",\n  "measure": \n}')
        diagnostics = validate_spec(path)
        assert diagnostics and diagnostics[0].startswith("line 4")
