"""
Measure-Spec Documents - Disintegrator

Loads {"space": kind-tree, "measure": {...}} JSON documents into measures.
Rationals are "p/q" strings (plain integers are accepted). The measure is a
union discriminated on "type":

    finite-discrete   {"atoms": [[tag, "p/q"], ...]}
    lebesgue          {}
    uniform           {}
    product           {"factors": [measure, ...]}
    convex            {"components": [["p/q", measure], ...]}
    dyadic-histogram  {"cells": [[i, j, m, "p/q"], ...]}  uniform mass on (i/2^m, j/2^m)
    construction      {"name": "mu_x" | "eta_x" | "mixture" | "embed",
                       "x": [bits] | {"witness": [[m, n], ...]}}

Validation collects every problem it can find as a diagnostic string
anchored at the JSON path (or the line, for syntax errors).

Author: Disintegrator Team
Date: 2026-10-17
"""

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Any, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from disintegrator.shared.exceptions import ContractError, SpecValidationError, SpaceMismatch, UnknownKind
from disintegrator.shared.utils import parse_rational
from disintegrator.spaces import (
    Cantor, MetricSpace, Naturals, ProductSpace, UnitInterval, naturals_times_pair, space_from_tree,
)
from .base import Measure
from .continuity import ContinuitySetName
from .standard import ConvexCombination, FiniteDiscreteMeasure, Lebesgue, ProductMeasure, UniformCantor

logger = logging.getLogger(__name__)

Rational = Union[str, int]


def _rational(value: Any) -> str:
    """Field check: value parses as an exact rational."""
    try:
        parse_rational(value)
    except ValueError as e:
        raise ValueError(str(e))
    return value


# ===== DOCUMENT MODEL =====


class _Spec(BaseModel):
    model_config = ConfigDict(extra="forbid")


class FiniteDiscreteSpec(_Spec):
    type: Literal["finite-discrete"]
    atoms: List[Tuple[Any, Rational]] = Field(min_length=1)

    @field_validator("atoms")
    @classmethod
    def weights_are_rational(cls, atoms):
        for _, weight in atoms:
            _rational(weight)
        return atoms


class LebesgueSpec(_Spec):
    type: Literal["lebesgue"]


class UniformSpec(_Spec):
    type: Literal["uniform"]


class ProductSpec(_Spec):
    type: Literal["product"]
    factors: List["MeasureSpec"] = Field(min_length=2)


class ConvexSpec(_Spec):
    type: Literal["convex"]
    components: List[Tuple[Rational, "MeasureSpec"]] = Field(min_length=1)

    @field_validator("components")
    @classmethod
    def weights_are_rational(cls, components):
        for weight, _ in components:
            _rational(weight)
        return components


class HistogramSpec(_Spec):
    type: Literal["dyadic-histogram"]
    cells: List[Tuple[int, int, int, Rational]] = Field(min_length=1)

    @field_validator("cells")
    @classmethod
    def cells_are_dyadic(cls, cells):
        for i, j, m, weight in cells:
            if m < 0 or not 0 <= i < j <= 1 << m:
                raise ValueError(f"cell ({i}, {j}, {m}) needs 0 <= i < j <= 2^m")
            _rational(weight)
        return cells


class WitnessSpec(_Spec):
    witness: List[Tuple[int, int]]

    @field_validator("witness")
    @classmethod
    def naturals(cls, witness):
        for m, n in witness:
            if m < 0 or n < 0:
                raise ValueError(f"witness ({m}, {n}) is not a pair of naturals")
        return witness


class ConstructionSpec(_Spec):
    type: Literal["construction"]
    name: Literal["mu_x", "eta_x", "mixture", "embed"]
    x: Optional[Union[List[Literal[0, 1]], WitnessSpec]] = None
    horizon: Optional[int] = Field(None, ge=1)


MeasureSpec = Annotated[
    Union[FiniteDiscreteSpec, LebesgueSpec, UniformSpec, ProductSpec, ConvexSpec, HistogramSpec, ConstructionSpec],
    Field(discriminator="type"),
]

ProductSpec.model_rebuild()
ConvexSpec.model_rebuild()


class SpecDocument(_Spec):
    space: Any = None  # construction selectors default to their own space
    measure: MeasureSpec


# ===== BUILDERS =====


def _tag(space: MetricSpace, raw: Any) -> Any:
    """Dense-point tag of space from its JSON form."""
    if isinstance(space, UnitInterval):
        return parse_rational(raw)
    if isinstance(space, Naturals):
        if isinstance(raw, bool) or not isinstance(raw, int) or raw < 0:
            raise ValueError(f"{raw!r} is not a natural number")
        return raw
    if isinstance(space, Cantor):
        if not isinstance(raw, str) or set(raw) - {"0", "1"}:
            raise ValueError(f"{raw!r} is not a 0/1 word")
        return raw
    if not isinstance(raw, list) or len(raw) != len(space.factors):
        raise ValueError(f"{raw!r} is not a tag of {len(space.factors)}-factor product")
    return tuple(_tag(f, r) for f, r in zip(space.factors, raw))


def _enumeration(x):
    from disintegrator.oracle_harness import Enumeration

    if x is None:
        return Enumeration.empty()
    if isinstance(x, WitnessSpec):
        return Enumeration.from_witnesses(x.witness, label="spec")
    return Enumeration.from_bits(x)


def _construction(spec: ConstructionSpec) -> Measure:
    # constructions build on this package
    from disintegrator import constructions

    if spec.name == "mixture":
        return constructions.mixture(spec.horizon)
    table = constructions.witness_table(_enumeration(spec.x))
    if spec.name == "mu_x":
        return constructions.mu_x(table)
    if spec.name == "eta_x":
        return constructions.eta_x(table)
    return constructions.embed_discrete(constructions.mu_x(table))


def _histogram(space: MetricSpace, spec: HistogramSpec) -> Measure:
    from disintegrator.conditioning import condition
    from disintegrator.spaces import Interval

    components = []
    for i, j, m, weight in spec.cells:
        cell = Interval(Fraction(i, 1 << m), Fraction(j, 1 << m), i == 0, j == 1 << m)
        uniform = condition(Lebesgue(space), ContinuitySetName.from_region(space, cell, label=f"J({i},{j},{m})"))
        components.append((parse_rational(weight), uniform))
    return ConvexCombination(components, label="histogram")


def build_measure(space: MetricSpace, spec) -> Measure:
    """
    Measure on space described by a validated spec node.

    Raises:
        SpaceMismatch: If the described measure lives on another space
        InconsistentValues: If weights are not positive or do not sum to 1
    """
    if isinstance(spec, FiniteDiscreteSpec):
        atoms = [(_tag(space, tag), parse_rational(w)) for tag, w in spec.atoms]
        mu: Measure = FiniteDiscreteMeasure(space, atoms)
    elif isinstance(spec, LebesgueSpec):
        mu = Lebesgue()
    elif isinstance(spec, UniformSpec):
        mu = UniformCantor()
    elif isinstance(spec, ProductSpec):
        if not isinstance(space, ProductSpace) or len(space.factors) != len(spec.factors):
            raise SpaceMismatch(f"product of {len(spec.factors)} measures on {space}")
        mu = ProductMeasure([build_measure(f, s) for f, s in zip(space.factors, spec.factors)], space=space)
    elif isinstance(spec, ConvexSpec):
        mu = ConvexCombination([(parse_rational(w), build_measure(space, s)) for w, s in spec.components])
    elif isinstance(spec, HistogramSpec):
        if not isinstance(space, UnitInterval):
            raise SpaceMismatch(f"dyadic histograms live on [0,1], not {space}")
        mu = _histogram(space, spec)
    else:
        mu = _construction(spec)
    if mu.space != space:
        raise SpaceMismatch(f"{spec.type} measure lives on {mu.space}, document space is {space}")
    return mu


def construction_space(name: str) -> MetricSpace:
    """Space a construction selector lives on."""
    if name == "mixture":
        return naturals_times_pair()
    if name == "eta_x":
        return ProductSpace([Naturals(), Cantor()])
    if name == "embed":
        return ProductSpace([UnitInterval(), UnitInterval()])
    return ProductSpace([Naturals(), UnitInterval()])


# ===== LOADING =====


def _diagnostics(error: ValidationError) -> List[str]:
    out = []
    for item in error.errors():
        where = "/".join(str(part) for part in item["loc"]) or "<document>"
        out.append(f"{where}: {item['msg']}")
    return out


def parse_document(data: Any) -> Tuple[MetricSpace, Measure]:
    """
    Space and measure of a decoded document.

    Raises:
        SpecValidationError: With one diagnostic per problem found
    """
    try:
        doc = SpecDocument.model_validate(data)
    except ValidationError as e:
        raise SpecValidationError(_diagnostics(e))
    try:
        if doc.space is None and isinstance(doc.measure, ConstructionSpec):
            space = construction_space(doc.measure.name)
        else:
            space = space_from_tree(doc.space)
    except UnknownKind as e:
        raise SpecValidationError([f"space: {e}"])
    try:
        return space, build_measure(space, doc.measure)
    except (ContractError, ValueError) as e:
        raise SpecValidationError([f"measure: {e}"])


def load_spec(path: Union[str, Path]) -> Tuple[MetricSpace, Measure]:
    """
    Load a measure-spec JSON file.

    Raises:
        SpecValidationError: On unreadable JSON or an invalid document
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecValidationError([f"line {e.lineno}, column {e.colno}: {e.msg}"])
    space, mu = parse_document(data)
    logger.info(f"loaded {mu.label} on {space.describe()['kind']} from {path}")
    return space, mu


def validate_spec(path: Union[str, Path]) -> List[str]:
    """Diagnostics for a spec file; empty when it loads."""
    try:
        load_spec(path)
    except SpecValidationError as e:
        return e.diagnostics
    return []