#!/usr/bin/env python3
"""
Top local cohomology H^n of R = K[x_1..x_n] and of invariant rings.

A class [r/(y_1..y_n)^d] of H^n_m(R) is zero exactly when r lies in
(y_1^d, .., y_n^d)R, so the degree-k strand is modelled by the slice of
A_d = R/(y^d)R in degree k + d*sum(deg y_i), for d large enough. The
degree-k piece of H^n of the invariant ring is the cokernel of
(eta_g) -> sum(eta_g - g(eta_g)) over the group generators, which is
valid when the group has no transvections.
"""
import itertools
import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import comb

from . import config, linalg
from .errors import (CMNotAsserted, DimensionMismatch, NonHomogeneousInput, PowerBudgetExceeded,
                     SearchFloorReached, StabilizationFailure, TransvectionsPresent, ValidationError,
                     ZeroPolynomial)
from .field import Scalar
from .groebner import buchberger, zero_ideal_basis
from .poly import Poly

TRANSVECTION_MARKER = 'transvections-present'
SOCLE_STRATEGIES = ('first', 'last')


def least_power(k, sigma):
    """Least d >= 1 with k + d*sigma >= 0."""
    return max(1, -(k // sigma)) if k < 0 else 1


class HsopData:
    """An hsop y_1..y_n of R with the Groebner bases of (y_1^d, .., y_n^d), computed once per d."""

    def __init__(self, ys, pair_budget=None, logger=None):
        if not ys:
            raise ValidationError("an hsop needs at least one element")
        for y in ys:
            if not y or not y.is_homogeneous():
                raise NonHomogeneousInput(f"hsop element {y} is not a nonzero form")
        self.ys = list(ys)
        self.ring = ys[0].ring
        self.degrees = tuple(y.degree() for y in ys)
        self.sigma = sum(self.degrees)
        self.pair_budget = pair_budget
        self.logger = logger or logging.getLogger('mil.cohomology')
        self._bases = {}
        self._lock = threading.Lock()

    @classmethod
    def verified(cls, action, ys, pair_budget=None, logger=None):
        if not action.verify_hsop(ys, pair_budget):
            raise ValidationError("the given forms do not generate an ideal of finite colength")
        return cls(ys, pair_budget, logger)

    def __len__(self):
        return len(self.ys)

    def basis(self, d):
        with self._lock:
            if d in self._bases:
                return self._bases[d]
        gb = buchberger([y ** d for y in self.ys], pair_budget=self.pair_budget, logger=self.logger)
        self.logger.debug("basis of the %d-th hsop powers: %d elements", d, len(gb))
        with self._lock:
            return self._bases.setdefault(d, gb)

    def product(self, e=1):
        result = self.ring.one()
        for y in self.ys:
            result = result * y ** e
        return result


@dataclass(frozen=True)
class CechClass:
    """[numerator / (y_1..y_n)^power]."""
    numerator: Poly
    power: int
    hsop: HsopData = dc_field(repr=False, compare=False)

    def __post_init__(self):
        if self.power < 1:
            raise ValidationError(f"class power must be positive, got {self.power}")
        if not self.numerator.is_homogeneous():
            raise NonHomogeneousInput(f"class numerator {self.numerator} is not homogeneous")

    @classmethod
    def from_denominator(cls, numerator, exponents, hsop):
        """[r / prod y_i^e_i], rewritten over the uniform power max(e_i)."""
        if len(exponents) != len(hsop):
            raise DimensionMismatch(f"{len(exponents)} exponents for an hsop of length {len(hsop)}")
        if any(e < 1 for e in exponents):
            raise ValidationError(f"denominator exponents must be positive, got {list(exponents)}")
        d = max(exponents)
        for y, e in zip(hsop.ys, exponents):
            numerator = numerator * y ** (d - e)
        return cls(numerator, d, hsop)

    @property
    def degree(self):
        if not self.numerator:
            raise ZeroPolynomial("the zero class has no degree")
        return self.numerator.degree() - self.power * self.hsop.sigma

    def raised(self, power):
        """The same class written over a larger power."""
        if power < self.power:
            raise ValueError(f"cannot lower the power {self.power} to {power}")
        return CechClass(self.numerator * self.hsop.product(power - self.power), power, self.hsop)

    def __add__(self, other):
        d = max(self.power, other.power)
        return CechClass(self.raised(d).numerator + other.raised(d).numerator, d, self.hsop)

    def __neg__(self):
        return CechClass(-self.numerator, self.power, self.hsop)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, code):
        return CechClass(self.numerator.scale(code), self.power, self.hsop)

    def __str__(self):
        return f"[{self.numerator} / ({' * '.join(f'({y})' for y in self.hsop.ys)})^{self.power}]"


@dataclass(frozen=True)
class Strand:
    degree: int
    power: int
    internal_degree: int
    basis: tuple
    gb: object = dc_field(default=None, repr=False, compare=False)

    @property
    def dimV(self):
        return len(self.basis)

    def coordinates(self, r):
        """Coordinates of the class of r on the basis, via its normal form."""
        if not self.basis:
            return []
        remainder = self.gb.reduce(r)
        position = {m: i for i, m in enumerate(self.basis)}
        coords = [0] * len(self.basis)
        for m, c in remainder.terms.items():
            if m not in position:
                raise DimensionMismatch(f"{r} does not lie in internal degree {self.internal_degree}")
            coords[position[m]] = c
        return coords

    def lift(self, vector):
        ring = self.gb.ring
        return Poly(ring, {m: c for m, c in zip(self.basis, vector) if c})


@dataclass(frozen=True)
class StrandReport:
    degree: int
    dimV: int
    dimW: int
    rank_H: int
    rank_fixed: int
    power: int = None
    marker: str = None

    def to_dict(self):
        data = {'k': self.degree, 'dimV': self.dimV, 'dimW': self.dimW,
                'rank_H': self.rank_H, 'rank_fixed': self.rank_fixed, 'power': self.power}
        if self.marker:
            data['marker'] = self.marker
        return data

    @classmethod
    def from_dict(cls, data):
        return cls(data['k'], data['dimV'], data['dimW'], data['rank_H'], data['rank_fixed'],
                   data.get('power'), data.get('marker'))


@dataclass(frozen=True)
class HilbertTable:
    reports: tuple
    omega: dict

    def rank_H(self, k):
        return next(r.rank_H for r in self.reports if r.degree == k)


class LocalCohomology:
    """H^n_m(R) strands under a GroupAction with an invariant hsop."""

    def __init__(self, action, hsop, power_budget=None, **kwargs):
        self.action = action
        self.hsop = hsop
        self.power_budget = config.power_budget(power_budget)
        self.logger = kwargs.get('logger') or logging.getLogger('mil.cohomology')
        self._strands = {}
        self._lock = threading.Lock()

    @property
    def ring(self):
        return self.action.ring

    @property
    def n(self):
        return self.ring.n

    @property
    def has_transvection(self):
        return self.action.group.classification.has_transvection

    def build_strand(self, k):
        with self._lock:
            if k in self._strands:
                return self._strands[k]
        strand = self._build_strand(k)
        with self._lock:
            return self._strands.setdefault(k, strand)

    def _build_strand(self, k):
        n, sigma = self.n, self.hsop.sigma
        if k > -n:
            return Strand(k, 0, None, ())
        target = comb(-k - 1, n - 1)
        d = least_power(k, sigma)
        while True:
            if d > self.power_budget:
                raise PowerBudgetExceeded(f"strand {k} did not reach dimension {target} by power {self.power_budget}")
            internal = k + d * sigma
            if internal > d * sigma - n:
                raise StabilizationFailure(f"internal degree {internal} above the socle degree {d * sigma - n}")
            gb = self.hsop.basis(d)
            monomials = gb.standard_monomials(internal).monomials
            if len(monomials) == target:
                self.logger.debug("strand %d: power %d, internal degree %d, dimension %d", k, d, internal, target)
                return Strand(k, d, internal, monomials, gb)
            if len(monomials) > target:
                raise StabilizationFailure(f"strand {k} has dimension {len(monomials)} > {target} at power {d}")
            d += 1

    def class_is_zero(self, c):
        return self.hsop.basis(c.power).contains(c.numerator)

    def act_on_class(self, g, c):
        return CechClass(self.action.act(g, c.numerator), c.power, c.hsop)

    def class_is_fixed(self, c):
        return all(self.class_is_zero(self.act_on_class(g, c) - c) for g in self.action.group.generators)

    def class_coordinates(self, c, strand=None):
        """Coordinates of a class in the strand of its degree, whatever its power."""
        strand = strand or self.build_strand(c.degree)
        if c.power <= strand.power:
            return strand.coordinates(c.raised(strand.power).numerator)
        # multiplication by (y_1..y_n)^(e-d) maps the strand isomorphically onto the power-e slice
        e = c.power
        gb = self.hsop.basis(e)
        shift = self.hsop.product(e - strand.power)
        internal = strand.degree + e * self.hsop.sigma
        upper = Strand(strand.degree, e, internal, gb.standard_monomials(internal).monomials, gb)
        columns = [upper.coordinates(Poly(self.ring, {m: 1}) * shift) for m in strand.basis]
        inverse = linalg.inverse(self.ring.field, linalg.transpose(columns))
        if inverse is None:
            raise StabilizationFailure(f"strand {strand.degree} does not map isomorphically to power {e}")
        target = upper.coordinates(c.numerator)
        return [row[0] for row in linalg.matmul(self.ring.field, inverse, [[v] for v in target])]

    def act_on_strand(self, g, strand):
        """Matrix whose j-th column holds the coordinates of g applied to the j-th basis class."""
        columns = [strand.coordinates(self.action.act(g, Poly(self.ring, {m: 1}))) for m in strand.basis]
        return linalg.transpose(columns) if columns else []

    def strand_report(self, k):
        strand = self.build_strand(k)
        dim = strand.dimV
        if not dim:
            return StrandReport(k, 0, 0, None if self.has_transvection else 0, 0, strand.power,
                                TRANSVECTION_MARKER if self.has_transvection else None)
        field = self.ring.field
        one_minus = [linalg.subtract(field, linalg.identity(dim), self.act_on_strand(g, strand))
                     for g in self.action.group.generators]
        dimW = linalg.column_rank(field, one_minus)
        stacked = [row for block in one_minus for row in block]
        rank_fixed = dim - linalg.rank(field, stacked)
        if self.has_transvection:
            return StrandReport(k, dim, dimW, None, rank_fixed, strand.power, TRANSVECTION_MARKER)
        return StrandReport(k, dim, dimW, dim - dimW, rank_fixed, strand.power)

    def default_floor(self):
        return -self.n * self.action.group.order - self.n

    def a_invariant(self, floor=None):
        """Largest k with a nonzero degree-k piece of H^n of the invariant ring."""
        if self.has_transvection:
            raise TransvectionsPresent("the cokernel description needs a group without transvections")
        floor = self.default_floor() if floor is None else floor
        if floor > -self.n:
            raise ValidationError(f"search floor {floor} lies above -n = {-self.n}")
        for k in range(-self.n, floor - 1, -1):
            if self.strand_report(k).rank_H:
                self.logger.info("a-invariant %d", k)
                return k
        raise SearchFloorReached(f"no nonzero strand between {-self.n} and the floor {floor}")

    def hilbert_of_H(self, k_from, k_to, workers=None):
        """Strand reports for k_to down to k_from, with the mirrored canonical-module ranks."""
        degrees = list(range(max(k_from, k_to), min(k_from, k_to) - 1, -1))
        count = config.workers(workers)
        if count == 1:
            reports = [self.strand_report(k) for k in degrees]
        else:
            with ThreadPoolExecutor(max_workers=count) as executor:
                reports = list(executor.map(self.strand_report, degrees))
        omega = {-r.degree: r.rank_H for r in reports}
        return HilbertTable(tuple(reports), omega)

    def socle_class(self, strategy='first'):
        """[det A / (y_1..y_n)] with y_i = sum_j A_ij x_j, the image of [1/(x_1..x_n)]."""
        if strategy not in SOCLE_STRATEGIES:
            raise ValueError(f"unknown splitting strategy {strategy!r}")
        ring, n = self.ring, self.n
        field = ring.field
        matrix = [[dict() for _ in range(n)] for _ in range(n)]
        for i, y in enumerate(self.hsop.ys):
            for mono, c in y.terms.items():
                support = [j for j, e in enumerate(mono) if e]
                if not support:
                    raise ValidationError(f"hsop element {y} has a constant term")
                j = support[0] if strategy == 'first' else support[-1]
                rest = mono[:j] + (mono[j] - 1,) + mono[j + 1:]
                matrix[i][j][rest] = field.add(matrix[i][j].get(rest, 0), c)
        entries = [[Poly(ring, cell) for cell in row] for row in matrix]
        det = ring.zero()
        for perm in itertools.permutations(range(n)):
            term = ring.one()
            for i, j in enumerate(perm):
                term = term * entries[i][j]
                if not term:
                    break
            if term:
                inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
                det = det - term if inversions % 2 else det + term
        return CechClass(det, 1, self.hsop)

    def socle_action_scalar(self, g, strategy='first'):
        """The scalar by which g acts on the degree -n strand."""
        socle = self.socle_class(strategy)
        strand = self.build_strand(-self.n)
        before = self.class_coordinates(socle, strand)
        after = self.class_coordinates(self.act_on_class(g, socle), strand)
        field = self.ring.field
        if not before[0]:
            raise StabilizationFailure("the socle class vanished")
        return Scalar(field, field.mul(after[0], field.inv(before[0])))

    def transfer_class(self, c):
        return CechClass(self.action.transfer(c.numerator), c.power, c.hsop)


@dataclass
class PresentedAlgebra:
    """S = P/I for a weighted polynomial ring P, with an hsop of S given in P's variables."""
    ring: object
    relations: list
    hsop: list
    cm_asserted: bool = False
    pair_budget: int = None
    logger: logging.Logger = dc_field(default=None, repr=False)

    def __post_init__(self):
        self.logger = self.logger or logging.getLogger('mil.cohomology')
        for f in list(self.relations) + list(self.hsop):
            if not f.is_homogeneous():
                raise NonHomogeneousInput(f"{f} is not homogeneous for the declared degrees")
        if not self.hsop or any(not y for y in self.hsop):
            raise ValidationError("a presentation needs a nonzero hsop")
        self.degrees = tuple(y.degree() for y in self.hsop)
        self.sigma = sum(self.degrees)
        self._bases = {}
        self._lock = threading.Lock()
        if not self.slice_basis(1).is_zero_dimensional():
            raise ValidationError("the presentation hsop does not have finite colength modulo the relations")

    @property
    def n(self):
        return len(self.hsop)

    def _cached_basis(self, key, gens):
        with self._lock:
            if key in self._bases:
                return self._bases[key]
        gb = buchberger(gens, self.pair_budget, logger=self.logger) if gens else zero_ideal_basis(self.ring)
        with self._lock:
            return self._bases.setdefault(key, gb)

    def relations_basis(self):
        return self._cached_basis(0, list(self.relations))

    def slice_basis(self, d):
        """Groebner basis of I + (y_1^d, .., y_n^d)."""
        return self._cached_basis(d, list(self.relations) + [y ** d for y in self.hsop])

    def quotient_hilbert(self, degrees):
        return self.relations_basis().hilbert(degrees)

    def top_degree(self):
        return self.slice_basis(1).top_degree()

    def stable_power(self, k):
        """A power at which the degree-k slice of S/(y^d)S has reached its limit, for CM S."""
        top = self.top_degree()
        exact = max((top - k - self.sigma + delta) // delta for delta in self.degrees)
        return max(least_power(k, self.sigma), exact, 1)

    def slice_dimension(self, d, k):
        internal = k + d * self.sigma
        return len(self.slice_basis(d).standard_monomials(internal)) if internal >= 0 else 0


def direct_strand_rank(pa, k, power_budget=None):
    """Rank of the degree-k piece of H^n of S, read off S/(y^d)S at a stable power d."""
    if not pa.cm_asserted:
        raise CMNotAsserted("direct strand ranks need cm_asserted: true in the presentation")
    budget = config.power_budget(power_budget)
    d = pa.stable_power(k)
    if d + 1 > budget:
        raise PowerBudgetExceeded(f"strand {k} needs power {d + 1}, above the budget {budget}")
    here, there = pa.slice_dimension(d, k), pa.slice_dimension(d + 1, k)
    if here != there:
        raise StabilizationFailure(f"strand {k}: dimension {here} at power {d} but {there} at power {d + 1}")
    pa.logger.debug("direct strand %d: power %d, rank %d", k, d, here)
    return here


def presented_a_invariant(pa, floor=None, power_budget=None):
    """Largest k with a nonzero strand; starts at top - sum(deg y_i), the highest possible."""
    if not pa.cm_asserted:
        raise CMNotAsserted("direct strand ranks need cm_asserted: true in the presentation")
    start = pa.top_degree() - pa.sigma
    floor = -pa.sigma if floor is None else floor
    for k in range(start, floor - 1, -1):
        if direct_strand_rank(pa, k, power_budget):
            return k
    raise SearchFloorReached(f"no nonzero strand between {start} and the floor {floor}")
