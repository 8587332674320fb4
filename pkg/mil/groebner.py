#!/usr/bin/env python3
"""
Buchberger's algorithm and the decision procedures built on it: normal
forms, ideal and subalgebra membership, standard monomials and quotient
Hilbert functions.
"""
import heapq
import logging
from dataclasses import dataclass, field as dc_field

from . import config
from .errors import ContextMismatch, NonHomogeneousInput, PairBudgetExceeded
from .poly import Poly, RingCtx


@dataclass(frozen=True)
class QuotientBasisSlice:
    degree: int
    monomials: tuple

    def __len__(self):
        return len(self.monomials)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _reduce_terms(ring, terms, basis):
    """Full reduction of a term dict by monic polynomials; returns the remainder dict."""
    field = ring.field
    desc = ring.descending_key
    leads = [(g.lead_monomial, g) for g in basis]
    pending = dict(terms)
    heap = [(desc(m), m) for m in pending]
    heapq.heapify(heap)
    remainder = {}
    while heap:
        _, mono = heapq.heappop(heap)
        coeff = pending.pop(mono, 0)
        if not coeff:
            continue
        reducer = next((item for item in leads if _divides(item[0], mono)), None)
        if reducer is None:
            remainder[mono] = coeff
            continue
        lead, g = reducer
        shift = tuple(a - b for a, b in zip(mono, lead))
        for gm, gc in g.terms.items():
            if gm == lead:
                continue
            target = tuple(a + b for a, b in zip(gm, shift))
            old = pending.get(target)
            new = field.sub(old or 0, field.mul(coeff, gc))
            if new:
                pending[target] = new
                if old is None:
                    heapq.heappush(heap, (desc(target), target))
            elif old is not None:
                del pending[target]
    return remainder


class GroebnerBasis:
    """A reduced, monic Groebner basis, sorted by leading monomial (largest first).

    `truncated` is the degree bound when the basis was only completed up to
    that degree; such a basis decides membership for homogeneous input of
    degree at most the bound.
    """

    def __init__(self, ring, generators, source, truncated=None, pairs=0):
        self.ring = ring
        self.generators = list(generators)
        self.source = list(source)
        self.truncated = truncated
        self.pairs = pairs

    @property
    def order(self):
        return self.ring.order

    @property
    def lead_monomials(self):
        return [g.lead_monomial for g in self.generators]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(str(g) for g in self.generators)}])"

    def reduce(self, f):
        if f.ring is not self.ring and f.ring != self.ring:
            raise ContextMismatch("polynomial and basis belong to different rings")
        return Poly(self.ring, _reduce_terms(self.ring, f.terms, self.generators))

    def contains(self, f):
        return self.reduce(f).is_zero()

    def is_standard(self, mono):
        return not any(_divides(lead, mono) for lead in self.lead_monomials)

    def is_zero_dimensional(self):
        n = self.ring.n
        covered = set()
        for lead in self.lead_monomials:
            support = [i for i, e in enumerate(lead) if e]
            if len(support) == 1:
                covered.add(support[0])
            elif not support:
                return True
        return len(covered) == n

    def standard_monomials(self, degree):
        return QuotientBasisSlice(degree, tuple(m for m in self.ring.monomials(degree) if self.is_standard(m)))

    def hilbert(self, degrees):
        return [len(self.standard_monomials(d)) for d in degrees]

    def top_degree(self):
        """Largest degree carrying a standard monomial; only defined when zero-dimensional."""
        if not self.is_zero_dimensional():
            raise ValueError("the quotient is not finite dimensional")
        ring = self.ring
        if any(not any(lead) for lead in self.lead_monomials):
            return -1
        bound = 0
        for i in range(ring.n):
            pure = min(lead[i] for lead in self.lead_monomials if lead[i] and sum(lead) == lead[i])
            bound += (pure - 1) * ring.weights[i]
        return max((d for d in range(bound + 1) if self.standard_monomials(d).monomials), default=-1)

    def total_dimension(self):
        top = self.top_degree()
        return sum(self.hilbert(range(top + 1)))


def _common_ring(gens):
    if not gens:
        raise ValueError("at least one generator is required")
    ring = gens[0].ring
    for g in gens[1:]:
        if g.ring != ring:
            raise ContextMismatch("generators belong to different rings")
    return ring


def buchberger(gens, pair_budget=None, degree_bound=None, logger=None):
    """Reduced Groebner basis of the ideal generated by `gens`.

    Pairs are taken smallest lcm first; pairs with coprime leading
    monomials and pairs covered by the chain criterion are dropped. With
    `degree_bound`, pairs whose lcm exceeds that degree are skipped.
    """
    logger = logger or logging.getLogger('mil.groebner')
    budget = config.pair_budget(pair_budget)
    ring = _common_ring(gens)
    key = ring.key
    basis = []
    for g in gens:
        if g:
            reduced = Poly(ring, _reduce_terms(ring, g.terms, basis))
            if reduced:
                basis.append(reduced.monic())
    leads = [g.lead_monomial for g in basis]

    queue = []
    pending = set()

    def add_pairs(j):
        for i in range(j):
            lcm = _lcm(leads[i], leads[j])
            if degree_bound is not None and ring.degree(lcm) > degree_bound:
                continue
            heapq.heappush(queue, (key(lcm), i, j, lcm))
            pending.add((i, j))

    for j in range(1, len(basis)):
        add_pairs(j)

    processed = 0
    while queue:
        _, i, j, lcm = heapq.heappop(queue)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        processed += 1
        if processed > budget:
            raise PairBudgetExceeded(f"Buchberger exceeded the S-pair budget of {budget}")
        if not any(min(a, b) for a, b in zip(leads[i], leads[j])):
            continue
        if _chain_covered(i, j, lcm, leads, pending):
            continue
        left, right = basis[i], basis[j]
        s_poly = (left.mul_term(tuple(a - b for a, b in zip(lcm, leads[i])), 1)
                  - right.mul_term(tuple(a - b for a, b in zip(lcm, leads[j])), 1))
        remainder = Poly(ring, _reduce_terms(ring, s_poly.terms, basis))
        if remainder:
            basis.append(remainder.monic())
            leads.append(basis[-1].lead_monomial)
            add_pairs(len(basis) - 1)

    result = _interreduce(ring, basis)
    logger.debug("groebner basis: %d generators from %d input, %d pairs", len(result), len(gens), processed)
    return GroebnerBasis(ring, result, gens, truncated=degree_bound, pairs=processed)


def _chain_covered(i, j, lcm, leads, pending):
    for k, lead in enumerate(leads):
        if k in (i, j) or not _divides(lead, lcm):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def _interreduce(ring, basis):
    minimal = []
    for idx, g in enumerate(basis):
        lead = g.lead_monomial
        covered = any(_divides(h.lead_monomial, lead) and (h.lead_monomial != lead or k < idx)
                      for k, h in enumerate(basis) if k != idx)
        if not covered:
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        reduced.append(Poly(ring, _reduce_terms(ring, g.terms, others)).monic())
    reduced.sort(key=lambda g: ring.key(g.lead_monomial), reverse=True)
    return reduced


def normal_form(f, gb):
    return gb.reduce(f)


def ideal_member(f, gens, pair_budget=None):
    gens = [g for g in gens if g]
    if not gens:
        return f.is_zero()
    return buchberger(gens, pair_budget=pair_budget).contains(f)


def is_zero_dimensional(gb):
    return gb.is_zero_dimensional()


def standard_monomials(gb, degree):
    return gb.standard_monomials(degree)


def quotient_hilbert(gb, degrees):
    return gb.hilbert(degrees)


def zero_ideal_basis(ring):
    return GroebnerBasis(ring, [], [])


@dataclass
class SubalgebraMembership:
    """Membership in K[gens] by eliminating the variables of R from (t_i - g_i).

    The basis is grown lazily: it is completed up to the largest degree
    queried so far.
    """
    gens: list
    pair_budget: int = None
    logger: logging.Logger = None
    _basis: GroebnerBasis = dc_field(default=None, init=False, repr=False)

    def __post_init__(self):
        self.logger = self.logger or logging.getLogger('mil.groebner')
        for g in self.gens:
            if not g or not g.is_homogeneous():
                raise NonHomogeneousInput(f"subalgebra generator {g} is not a nonzero form")
        if self.gens:
            ring = _common_ring(self.gens)
            self.ring = ring
            names = set(ring.variables)
            tags = []
            for i in range(len(self.gens)):
                name = f"t{i + 1}"
                while name in names:
                    name = '_' + name
                tags.append(name)
            self.tag_ring = RingCtx(ring.field, tags, 'grevlex', tuple(g.degree() for g in self.gens))
            self.elim_ring = RingCtx(ring.field, ring.variables + tuple(tags), 'elim',
                                     ring.weights + self.tag_ring.weights, ring.n)

    def _basis_for(self, degree):
        if self._basis is not None and (self._basis.truncated is None or self._basis.truncated >= degree):
            return self._basis
        n = self.ring.n
        originals = list(range(n))
        ideal = []
        for i, g in enumerate(self.gens):
            ideal.append(self.elim_ring.var(n + i) - g.embed(self.elim_ring, originals))
        self._basis = buchberger(ideal, pair_budget=self.pair_budget, degree_bound=degree, logger=self.logger)
        return self._basis

    def __call__(self, f):
        if f.is_zero():
            ring = self.tag_ring if self.gens else f.ring
            return True, ring.zero()
        if not f.is_homogeneous():
            raise NonHomogeneousInput(f"{f} is not homogeneous")
        if not self.gens:
            return f.degree() == 0, (f if f.degree() == 0 else None)
        if f.ring != self.ring:
            raise ContextMismatch("polynomial and generators belong to different rings")
        n = self.ring.n
        gb = self._basis_for(f.degree())
        remainder = gb.reduce(f.embed(self.elim_ring, list(range(n))))
        if any(any(m[:n]) for m in remainder.terms):
            return False, None
        return True, Poly(self.tag_ring, {m[n:]: c for m, c in remainder.terms.items()})


def subalgebra_member(f, gens, pair_budget=None):
    """(True, expression in tags t1..tm) when f lies in K[gens], else (False, None)."""
    return SubalgebraMembership(list(gens), pair_budget)(f)
