#!/usr/bin/env python3
"""
Finite matrix groups: closure from generators and classification of the
elements (determinants, pseudoreflections, transvections).
"""
import logging
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from . import config, linalg
from .errors import ContextMismatch, DimensionMismatch, NotInvertible, OrderCapExceeded, ParseError
from .field import FieldSpec, Scalar


@dataclass(frozen=True)
class SquareMatrix:
    field: FieldSpec
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise DimensionMismatch(f"matrix must be square and nonempty, got {len(rows)} rows")
        object.__setattr__(self, 'rows', rows)

    @classmethod
    def identity(cls, field, n):
        return cls(field, linalg.identity(n))

    @classmethod
    def from_strings(cls, field, rows):
        """Row-major scalar strings (or ints), e.g. [["1", "1"], ["0", "1"]]."""
        try:
            return cls(field, [[field.element(v).code for v in row] for row in rows])
        except TypeError:
            raise ParseError(f"matrix rows must be lists of scalars, got {rows!r}")

    @property
    def n(self):
        return len(self.rows)

    @property
    def entries(self):
        return [[Scalar(self.field, c) for c in row] for row in self.rows]

    def __mul__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        if other.field != self.field:
            raise ContextMismatch("matrices over different fields")
        if other.n != self.n:
            raise DimensionMismatch(f"cannot multiply {self.n}x{self.n} by {other.n}x{other.n}")
        return SquareMatrix(self.field, linalg.matmul(self.field, self.rows, other.rows))

    def __pow__(self, e):
        result = SquareMatrix.identity(self.field, self.n)
        for _ in range(e):
            result = result * self
        return result

    def minus_identity(self):
        return linalg.subtract(self.field, self.rows, linalg.identity(self.n))

    def is_identity(self):
        return self.rows == tuple(tuple(r) for r in linalg.identity(self.n))

    @cached_property
    def determinant(self):
        return Scalar(self.field, linalg.determinant(self.field, self.rows))

    def inverse(self):
        rows = linalg.inverse(self.field, self.rows)
        if rows is None:
            raise NotInvertible(f"matrix {self} is singular")
        return SquareMatrix(self.field, rows)

    def to_strings(self):
        return [[self.field.format(c) for c in row] for row in self.rows]

    def __str__(self):
        return '[' + ', '.join('[' + ', '.join(row) + ']' for row in self.to_strings()) + ']'


@dataclass(frozen=True)
class ElementClassification:
    element_order: int
    determinant: Scalar
    rank_g_minus_I: int
    is_pseudoreflection: bool
    is_transvection: bool

    def to_dict(self):
        return {
            'order': self.element_order,
            'det': str(self.determinant),
            'rank_g_minus_I': self.rank_g_minus_I,
            'pseudoreflection': self.is_pseudoreflection,
            'transvection': self.is_transvection,
        }


@dataclass(frozen=True)
class GroupClassification:
    order: int
    in_SL: bool
    has_pseudoreflection: bool
    has_transvection: bool
    modular: bool
    cyclic_generator: int = None
    pseudoreflections: tuple = ()
    transvections: tuple = ()

    @property
    def cyclic(self):
        return self.cyclic_generator is not None

    def to_dict(self):
        return {
            'order': self.order,
            'in_SL': self.in_SL,
            'has_pseudoreflection': self.has_pseudoreflection,
            'has_transvection': self.has_transvection,
            'modular': self.modular,
            'cyclic_generator': self.cyclic_generator,
            'pseudoreflections': list(self.pseudoreflections),
            'transvections': list(self.transvections),
        }


def element_order(g):
    power = g
    order = 1
    while not power.is_identity():
        power = power * g
        order += 1
    return order


def classify_element(g):
    rank = linalg.rank(g.field, g.minus_identity())
    is_pseudoreflection = rank == 1
    is_transvection = False
    if is_pseudoreflection:
        n_minus = g.minus_identity()
        square = linalg.matmul(g.field, n_minus, n_minus)
        is_transvection = not any(any(row) for row in square)
    return ElementClassification(element_order(g), g.determinant, rank, is_pseudoreflection, is_transvection)


def one_minus_g_height(g):
    """Height of the ideal generated by the linear forms (1 - g)(x_i)."""
    return linalg.rank(g.field, linalg.subtract(g.field, linalg.identity(g.n), g.rows))


@dataclass
class FiniteMatrixGroup:
    field: FieldSpec
    generators: list
    elements: list
    logger: logging.Logger = dc_field(default=None, repr=False)

    def __post_init__(self):
        self.logger = self.logger or logging.getLogger('mil.group')
        self._index = {g: i for i, g in enumerate(self.elements)}

    @property
    def order(self):
        return len(self.elements)

    @property
    def n(self):
        return self.elements[0].n

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self._index

    def index(self, g):
        return self._index[g]

    @cached_property
    def element_classes(self):
        return [classify_element(g) for g in self.elements]

    @cached_property
    def classification(self):
        return classify_group(self)

    def subgroup(self, generators, cap=None):
        """Closure of `generators`, which must lie in this group."""
        for g in generators:
            if g not in self:
                raise ContextMismatch(f"{g} is not an element of the group")
        if not generators:
            return FiniteMatrixGroup(self.field, [], [self.elements[0]], self.logger)
        return closure(generators, cap, self.logger)

    def coset_representatives(self, subgroup):
        """First element of each class {h*g : h in subgroup}, in element order."""
        seen = set()
        reps = []
        for g in self.elements:
            if g in seen:
                continue
            reps.append(g)
            seen.update(h * g for h in subgroup.elements)
        return reps


def closure(generators, cap=None, logger=None):
    """Breadth-first closure under right multiplication by the generators, identity first."""
    logger = logger or logging.getLogger('mil.group')
    cap = config.order_cap(cap)
    if not generators:
        raise ValueError("at least one generator is required")
    field, n = generators[0].field, generators[0].n
    for g in generators:
        if g.field != field:
            raise ContextMismatch("generators over different fields")
        if g.n != n:
            raise DimensionMismatch(f"generators of sizes {n} and {g.n}")
        if not g.determinant:
            raise NotInvertible(f"generator {g} is singular")

    identity = SquareMatrix.identity(field, n)
    elements = [identity]
    seen = {identity}
    head = 0
    while head < len(elements):
        current = elements[head]
        head += 1
        for g in generators:
            product = current * g
            if product not in seen:
                seen.add(product)
                elements.append(product)
                if len(elements) > cap:
                    raise OrderCapExceeded(f"group order exceeds the cap of {cap}")
    logger.debug("closure of %d generators in GL_%d(%s): order %d", len(generators), n, field, len(elements))
    return FiniteMatrixGroup(field, list(generators), elements, logger)


def classify_group(group):
    classes = group.element_classes
    order = group.order
    pseudo = tuple(i for i, c in enumerate(classes) if c.is_pseudoreflection)
    trans = tuple(i for i, c in enumerate(classes) if c.is_transvection)
    cyclic = next((i for i, c in enumerate(classes) if c.element_order == order), None)
    return GroupClassification(
        order=order,
        in_SL=all(c.determinant.code == 1 for c in classes),
        has_pseudoreflection=bool(pseudo),
        has_transvection=bool(trans),
        modular=order % group.field.characteristic == 0,
        cyclic_generator=cyclic,
        pseudoreflections=pseudo,
        transvections=trans,
    )
