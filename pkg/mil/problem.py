#!/usr/bin/env python3
"""
Problem files: one JSON document naming a field, the variables, the
generator matrices and, optionally, an hsop, invariant generators, a
presentation of the invariant ring and degree windows.

    {
      "name": "s2",
      "field": {"char": 3},
      "variables": ["x", "y"],
      "generators": [[["0", "1"], ["1", "0"]]],
      "hsop": ["x + y", "x*y"],
      "invariant_generators": ["x + y", "x*y"],
      "presentation": {"variables": ["s", "t"], "ambient_degrees": [1, 2],
                       "relations": [], "hsop": ["s", "t"], "cm_asserted": true},
      "windows": {"lc": [-4, -2], "invariants": 3}
    }
"""
import json
import logging
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .cohomology import HsopData, LocalCohomology, PresentedAlgebra, presented_a_invariant
from .errors import DimensionMismatch, ParseError, TransvectionsPresent, ValidationError
from .field import FieldSpec
from .group import SquareMatrix, closure
from .invariants import GroupAction
from .poly import RingCtx

logger = logging.getLogger('mil.problem')

KNOWN_KEYS = {'name', 'field', 'variables', 'generators', 'hsop', 'invariant_generators',
              'presentation', 'windows', 'description'}


def _require(data, key, kind, where='problem'):
    if key not in data:
        raise ParseError(f"{where} is missing '{key}'")
    if not isinstance(data[key], kind):
        raise ParseError(f"{where} '{key}' has the wrong type: {type(data[key]).__name__}")
    return data[key]


def _parse_polys(ring, texts, where):
    if not isinstance(texts, list) or not all(isinstance(t, str) for t in texts):
        raise ParseError(f"'{where}' must be a list of polynomial strings")
    return [ring.parse(t) for t in texts]


@dataclass
class ProblemSpec:
    name: str
    field: FieldSpec
    ring: RingCtx
    generators: list
    hsop: list = None
    invariant_generators: list = None
    presentation: PresentedAlgebra = None
    windows: dict = dc_field(default_factory=dict)
    source: dict = dc_field(default=None, repr=False)

    @classmethod
    def load(cls, path, verify=True):
        try:
            with open(path) as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: invalid JSON: {e}")
        except OSError as e:
            raise ParseError(f"cannot read {path}: {e}")
        logger.debug("loaded problem file %s", path)
        return cls.from_dict(data, verify=verify)

    @classmethod
    def from_dict(cls, data, verify=True):
        if not isinstance(data, dict):
            raise ParseError("a problem file must hold a JSON object")
        unknown = set(data) - KNOWN_KEYS
        if unknown:
            raise ParseError(f"unknown problem keys: {sorted(unknown)}")

        field = FieldSpec.from_dict(_require(data, 'field', dict))
        variables = _require(data, 'variables', list)
        ring = RingCtx(field, tuple(variables))
        generators = []
        for i, rows in enumerate(_require(data, 'generators', list)):
            if not isinstance(rows, list) or len(rows) != ring.n or any(
                    not isinstance(r, list) or len(r) != ring.n for r in rows):
                raise DimensionMismatch(f"generator {i} must be a {ring.n}x{ring.n} matrix")
            generators.append(SquareMatrix.from_strings(field, rows))
        if not generators:
            raise ParseError("at least one generator matrix is required")

        hsop = _parse_polys(ring, data['hsop'], 'hsop') if 'hsop' in data else None
        invariant_generators = (_parse_polys(ring, data['invariant_generators'], 'invariant_generators')
                                if 'invariant_generators' in data else None)
        presentation = cls._presentation(field, data['presentation']) if 'presentation' in data else None
        windows = data.get('windows') or {}
        if not isinstance(windows, dict):
            raise ParseError("'windows' must be an object")

        problem = cls(str(data.get('name', 'problem')), field, ring, generators, hsop,
                      invariant_generators, presentation, windows, data)
        if verify and hsop is not None:
            problem.verify()
        return problem

    @staticmethod
    def _presentation(field, block):
        if not isinstance(block, dict):
            raise ParseError("'presentation' must be an object")
        variables = _require(block, 'variables', list, 'presentation')
        degrees = _require(block, 'ambient_degrees', list, 'presentation')
        if len(degrees) != len(variables):
            raise DimensionMismatch(f"{len(variables)} presentation variables but {len(degrees)} degrees")
        ring = RingCtx(field, tuple(variables), weights=tuple(degrees))
        return PresentedAlgebra(
            ring,
            _parse_polys(ring, block.get('relations', []), 'presentation.relations'),
            _parse_polys(ring, _require(block, 'hsop', list, 'presentation'), 'presentation.hsop'),
            cm_asserted=bool(block.get('cm_asserted', False)),
        )

    def to_dict(self):
        return dict(self.source) if self.source is not None else {}

    @cached_property
    def group(self):
        return closure(self.generators)

    @cached_property
    def action(self):
        return GroupAction(self.group, self.ring)

    @cached_property
    def hsop_data(self):
        if self.hsop is None:
            raise ValidationError(f"problem {self.name} has no hsop")
        return HsopData.verified(self.action, self.hsop)

    def verify(self):
        """Check the hsop now rather than on first use."""
        return self.hsop_data

    @cached_property
    def cohomology(self):
        return LocalCohomology(self.action, self.hsop_data)

    def window(self, name, default=None):
        return self.windows.get(name, default)

    def a_invariant(self, floor=None):
        """(a, method): the cokernel search when licensed, else the asserted-CM presentation."""
        if not self.group.classification.has_transvection and self.hsop is not None:
            return self.cohomology.a_invariant(floor), 'cokernel'
        if self.presentation is not None and self.presentation.cm_asserted:
            return presented_a_invariant(self.presentation), 'presentation'
        if self.group.classification.has_transvection:
            raise TransvectionsPresent(f"{self.name} has transvections and no asserted-CM presentation")
        raise ValidationError(f"problem {self.name} has neither an hsop nor a presentation")
