#!/usr/bin/env python3
"""
A finite matrix group acting on R = K[x_1..x_n] by linear substitution:
transfer and Reynolds operators, invariant spaces degree by degree,
algebra generators, and checks of hsops and relations.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import config, linalg
from .errors import (ArityMismatch, ComputationRefused, ContextMismatch, DimensionMismatch, ModularCase,
                     NonHomogeneousInput, NotHInvariant, NotInvariant, ValidationError, WrongCount)
from .groebner import SubalgebraMembership, buchberger
from .group import FiniteMatrixGroup, SquareMatrix, closure
from .poly import Poly


@dataclass(frozen=True)
class InvariantBasisSlice:
    degree: int
    basis: tuple

    @property
    def dimension(self):
        return len(self.basis)


@dataclass(frozen=True)
class PolynomialInvariantRing:
    """R^G = K[generators], certified by degree count."""
    generators: tuple
    degrees: tuple

    @property
    def a_invariant(self):
        return -sum(self.degrees)


class GroupAction:
    """ActionCtx: a FiniteMatrixGroup acting on a RingCtx with one variable per matrix row."""

    def __init__(self, group, ring, **kwargs):
        if group.n != ring.n:
            raise DimensionMismatch(f"{group.n}x{group.n} matrices cannot act on {ring.n} variables")
        if group.field != ring.field:
            raise ContextMismatch(f"group over {group.field} acting on a ring over {ring.field}")
        if not ring.standard:
            raise ValidationError("the group must act on a standard graded ring")
        self.group = group
        self.ring = ring
        self.logger = kwargs.get('logger') or logging.getLogger('mil.invariants')
        self._images = {}

    @property
    def field(self):
        return self.ring.field

    def _monomial_image(self, g, mono):
        cache = self._images.setdefault(g, {})
        if mono in cache:
            return cache[mono]
        i = next((i for i, e in enumerate(mono) if e), None)
        if i is None:
            image = self.ring.one()
        else:
            rest = mono[:i] + (mono[i] - 1,) + mono[i + 1:]
            linear = Poly(self.ring, {tuple(1 if j == k else 0 for k in range(self.ring.n)): c
                                      for j, c in enumerate(g.rows[i]) if c})
            image = self._monomial_image(g, rest) * linear
        cache[mono] = image
        return image

    def act(self, g, f):
        """x_i -> sum_j g[i][j] x_j, extended to a ring map."""
        if f.ring != self.ring:
            raise ContextMismatch("polynomial belongs to another ring")
        field = self.field
        acc = {}
        for mono, c in f.terms.items():
            for m, v in self._monomial_image(g, mono).terms.items():
                acc[m] = field.add(acc.get(m, 0), field.mul(c, v))
        return Poly(self.ring, acc)

    def is_invariant(self, f, elements=None):
        return all(self.act(g, f) == f for g in (elements or self.group.generators))

    def transfer(self, f):
        return self._orbit_sum(f, self.group.elements)

    def _orbit_sum(self, f, elements):
        field = self.field
        acc = {}
        for g in elements:
            for m, c in self.act(g, f).terms.items():
                acc[m] = field.add(acc.get(m, 0), c)
        return Poly(self.ring, acc)

    def transfer_coset(self, f, subgroup, representatives=None):
        """Sum of g(f) over representatives of the classes {h*g : h in subgroup}."""
        elements = subgroup.elements if isinstance(subgroup, FiniteMatrixGroup) else list(subgroup)
        if not self.is_invariant(f, elements):
            raise NotHInvariant(f"{f} is not fixed by the subgroup")
        if representatives is None:
            if not isinstance(subgroup, FiniteMatrixGroup):
                subgroup = self.group.subgroup([h for h in elements if not h.is_identity()])
            representatives = self.group.coset_representatives(subgroup)
        self._check_representatives(elements, representatives)
        return self._orbit_sum(f, representatives)

    def _check_representatives(self, subgroup_elements, representatives):
        covered = set()
        for g in representatives:
            if g not in self.group:
                raise ValidationError(f"coset representative {g} is not in the group")
            coset = {h * g for h in subgroup_elements}
            if coset & covered:
                raise ValidationError(f"representative {g} repeats a coset")
            covered |= coset
        if len(covered) != self.group.order:
            raise ValidationError(f"{len(representatives)} representatives do not cover the group")

    def reynolds(self, f):
        order = self.group.order
        p = self.field.characteristic
        if order % p == 0:
            raise ModularCase(f"|G| = {order} is divisible by the characteristic {p}")
        return self.transfer(f).scale(self.field.inv(self.field.from_int(order)))

    def fixed_space_matrix(self, degree):
        """Stacked matrices of (g - 1) on the degree-d monomials, one block per generator."""
        monomials = self.ring.monomials(degree)
        position = {m: i for i, m in enumerate(monomials)}
        field = self.field
        rows = []
        for g in self.group.generators:
            block = linalg.zeros(len(monomials), len(monomials))
            for col, mono in enumerate(monomials):
                for m, c in self._monomial_image(g, mono).terms.items():
                    block[position[m]][col] = c
                block[col][col] = field.sub(block[col][col], 1)
            rows.extend(r for r in block if any(r))
        return monomials, rows

    def invariant_space(self, degree):
        if degree < 0:
            return InvariantBasisSlice(degree, ())
        monomials, rows = self.fixed_space_matrix(degree)
        vectors = linalg.nullspace(self.field, rows, len(monomials))
        basis = [Poly(self.ring, {m: c for m, c in zip(monomials, v) if c}) for v in vectors]
        basis.sort(key=lambda f: self.ring.key(f.lead_monomial), reverse=True)
        self.logger.debug("degree %d: %d invariants among %d monomials", degree, len(basis), len(monomials))
        return InvariantBasisSlice(degree, tuple(basis))

    def invariant_hilbert(self, max_degree, workers=None):
        degrees = range(max_degree + 1)
        count = config.workers(workers)
        if count == 1:
            return [self.invariant_space(d).dimension for d in degrees]
        with ThreadPoolExecutor(max_workers=count) as executor:
            return [s.dimension for s in executor.map(self.invariant_space, degrees)]

    def algebra_generators_up_to(self, max_degree, pair_budget=None):
        """Greedy generators of the invariant subalgebra through degree D, as (poly, degree) pairs."""
        if max_degree < 1:
            raise ValueError(f"maximum degree must be at least 1, got {max_degree}")
        gens = []
        membership = None
        for d in range(1, max_degree + 1):
            for f in self.invariant_space(d).basis:
                if membership is None:
                    membership = SubalgebraMembership(list(gens), pair_budget, self.logger)
                member, _ = membership(f)
                if not member:
                    gens.append(f)
                    membership = None
                    self.logger.debug("new generator in degree %d: %s", d, f)
        return [(f, f.degree()) for f in gens]

    def verify_hsop(self, ys, pair_budget=None):
        """True iff the given n invariant forms generate an ideal of finite colength in R."""
        if len(ys) != self.ring.n:
            raise WrongCount(f"an hsop needs {self.ring.n} elements, got {len(ys)}")
        for y in ys:
            if not y or not y.is_homogeneous():
                raise NonHomogeneousInput(f"hsop element {y} is not a nonzero form")
            if not self.is_invariant(y):
                raise NotInvariant(f"hsop element {y} is not invariant")
        return buchberger(list(ys), pair_budget=pair_budget, logger=self.logger).is_zero_dimensional()

    def pseudoreflection_invariant_ring(self, pair_budget=None):
        """
        R^G for a cyclic group generated by diag(1,..,zeta,..,1) or by
        I + c*E_ij, returned only once the candidate generators are shown to
        be invariant, an hsop, and of degree product |G|.
        """
        group = self.group
        n, field = group.n, self.field
        variables = self.ring.gens()
        gens = None
        for g in [group.elements[i] for i in group.classification.pseudoreflections]:
            if group.element_classes[group.index(g)].element_order != group.order:
                continue
            off = [(i, j) for i in range(n) for j in range(n) if i != j and g.rows[i][j]]
            diagonal = [i for i in range(n) if g.rows[i][i] != 1]
            if not off and len(diagonal) == 1:
                i = diagonal[0]
                k = group.order
                gens = variables[:i] + [variables[i] ** k] + variables[i + 1:]
            elif len(off) == 1 and not diagonal:
                i, j = off[0]
                c, p = g.rows[i][j], field.characteristic
                form = variables[i] ** p - (variables[j] ** (p - 1) * variables[i]).scale(field.pow(c, p - 1))
                gens = variables[:i] + [form] + variables[i + 1:]
            if gens:
                break
        if gens is None:
            raise ComputationRefused("not a cyclic pseudoreflection group in diagonal or elementary form")
        if not all(self.is_invariant(f) for f in gens) or not self.verify_hsop(gens, pair_budget):
            raise ComputationRefused("candidate generators are not an invariant hsop")
        degrees = tuple(f.degree() for f in gens)
        product = 1
        for d in degrees:
            product *= d
        if product != group.order:
            raise ComputationRefused(f"degree product {product} differs from |G| = {group.order}")
        return PolynomialInvariantRing(tuple(gens), degrees)


def verify_relation(relation, gens):
    """Substitute gens for the variables of `relation`; True iff the result vanishes."""
    if relation.ring.n != len(gens):
        raise ArityMismatch(f"relation in {relation.ring.n} variables, {len(gens)} generators given")
    if not gens:
        return relation.is_zero()
    return relation.compose(list(gens), gens[0].ring).is_zero()


def group_action(generators, ring, cap=None, logger=None):
    """Close the generator matrices and attach them to `ring`."""
    mats = [g if isinstance(g, SquareMatrix) else SquareMatrix(ring.field, g) for g in generators]
    return GroupAction(closure(mats, cap, logger), ring, logger=logger)
