#!/usr/bin/env python3
"""
Property cross-checks run by `mil verify`. Each check returns a bool;
checks whose hypotheses do not hold for the problem are left out.
"""
import logging
import random
from math import comb

from . import linalg
from .cohomology import CechClass, direct_strand_rank
from .errors import ComputationRefused, ResourceCapExceeded, ValidationError
from .group import one_minus_g_height
from .invariants import verify_relation
from .poly import Poly

logger = logging.getLogger('mil.checks')

SEED = 20240611


def random_form(ring, degree, rng):
    field = ring.field
    terms = {m: rng.randrange(field.order) for m in ring.monomials(degree)}
    return Poly(ring, terms)


def group_checks(problem):
    group = problem.group
    classes = group.element_classes
    elements = group.elements
    closed = all(g * h in group for g in elements for h in group.generators)
    results = {
        'group contains the identity': elements[0].is_identity(),
        'group closed under generators': closed,
        'element orders divide |G|': all(group.order % c.element_order == 0 for c in classes),
        'det is multiplicative': all((g * h).determinant == g.determinant * h.determinant
                                     for g in elements for h in elements),
        'height one iff pseudoreflection': all((one_minus_g_height(g) == 1) == c.is_pseudoreflection
                                               for g, c in zip(elements, classes)),
    }
    if not group.classification.modular:
        results['nonmodular groups have no transvections'] = not group.classification.has_transvection
    return results


def transfer_checks(problem, rng):
    action = problem.action
    ring = problem.ring
    order = problem.group.order
    samples = [random_form(ring, d, rng) for d in (1, 2, 3)]
    results = {
        'transfer is invariant': all(action.is_invariant(action.transfer(f)) for f in samples),
    }
    invariants = list(action.invariant_space(2).basis)
    if invariants:
        s = invariants[0]
        results['transfer is |G| on invariants'] = all(action.transfer(t) == t.scale(order % ring.field.characteristic)
                                                       for t in invariants)
        results['transfer is R^G-linear'] = all(action.transfer(s * f) == s * action.transfer(f) for f in samples)
    if not problem.group.classification.modular:
        results['reynolds is idempotent'] = all(action.reynolds(action.reynolds(f)) == action.reynolds(f)
                                                for f in samples)
    return results


def strand_checks(problem, window):
    lc = problem.cohomology
    field = problem.field
    n = problem.ring.n
    classification = problem.group.classification
    results = {}
    dims, duality, exact, cyclic, killed = [], [], [], [], []
    for k in range(window[1], window[0] - 1, -1):
        strand = lc.build_strand(k)
        report = lc.strand_report(k)
        dims.append(strand.dimV == (comb(-k - 1, n - 1) if k <= -n else 0))
        if not strand.dimV:
            continue
        mats = [lc.act_on_strand(g, strand) for g in problem.group.generators]
        identity = linalg.identity(strand.dimV)
        dual = [row for m in mats for row in linalg.subtract(field, identity, linalg.transpose(m))]
        duality.append(report.dimV - report.dimW == strand.dimV - linalg.rank(field, dual))
        if report.rank_H is not None and not classification.modular:
            exact.append(report.rank_H == report.rank_fixed)
        if report.rank_H is not None and classification.cyclic:
            g = problem.group.elements[classification.cyclic_generator]
            one_minus = linalg.subtract(field, identity, lc.act_on_strand(g, strand))
            kernel = len(linalg.nullspace(field, one_minus, strand.dimV))
            cyclic.append(kernel == strand.dimV - linalg.rank(field, one_minus) == report.rank_fixed
                          and report.rank_H == report.rank_fixed)
        for m in strand.basis:
            eta = CechClass(Poly(problem.ring, {m: 1}), strand.power, problem.hsop_data)
            for g in problem.group.generators:
                killed.append(lc.class_is_zero(lc.transfer_class(eta - lc.act_on_class(g, eta))))
    results['strand dimensions match the closed form'] = all(dims)
    results['cokernel rank equals the dual fixed rank'] = all(duality)
    if exact:
        results['nonmodular: rank_H equals rank_fixed'] = all(exact)
    if cyclic:
        results['cyclic: rank_H equals rank_fixed'] = all(cyclic)
    results['transfer kills (1 - g) on strands'] = all(killed)
    return results


def socle_checks(problem):
    lc = problem.cohomology
    field = problem.field
    first, last = lc.socle_class('first'), lc.socle_class('last')
    return {
        'socle class is nonzero': not lc.class_is_zero(first),
        'socle class has degree -n': first.degree == -problem.ring.n,
        'socle class is independent of the splitting': lc.class_is_zero(first - last),
        'g acts on the socle by det(g)^-1': all(
            field.mul(lc.socle_action_scalar(g).code, g.determinant.code) == 1 for g in problem.group.elements),
    }


def a_invariant_checks(problem):
    n = problem.ring.n
    classification = problem.group.classification
    try:
        a, _ = problem.a_invariant()
    except (ComputationRefused, ResourceCapExceeded, ValidationError) as e:
        logger.info("a-invariant checks skipped: %s", e)
        return {}
    return {
        'a-invariant is at most -n': a <= -n,
        'a = -n iff in SL without pseudoreflections':
            (a == -n) == (classification.in_SL and not classification.has_pseudoreflection),
    }


def presentation_checks(problem, window, hilbert_degree):
    pa = problem.presentation
    results = {}
    gens = problem.invariant_generators
    if gens is not None and len(gens) == pa.ring.n:
        results['relations vanish on the invariant generators'] = all(verify_relation(r, gens) for r in pa.relations)
    if hilbert_degree is not None:
        results['invariant Hilbert function matches the presentation'] = (
            problem.action.invariant_hilbert(hilbert_degree) == pa.quotient_hilbert(range(hilbert_degree + 1)))
    if pa.cm_asserted and problem.hsop is not None and not problem.group.classification.has_transvection:
        lc = problem.cohomology
        results['cokernel ranks match the presentation'] = all(
            lc.strand_report(k).rank_H == direct_strand_rank(pa, k) for k in range(window[1], window[0] - 1, -1))
    return results


def run_checks(problem, **kwargs):
    """Every applicable check, in a fixed order."""
    log = kwargs.get('logger', logger)
    rng = random.Random(SEED)
    n = problem.ring.n
    window = problem.window('lc', [-n - 2, -n])
    hilbert_degree = problem.window('hilbert', problem.window('invariants'))

    results = {}
    results.update(group_checks(problem))
    results.update(transfer_checks(problem, rng))
    if problem.hsop is not None:
        results['hsop has finite colength'] = problem.action.verify_hsop(problem.hsop)
        results.update(strand_checks(problem, window))
        results.update(socle_checks(problem))
    results.update(a_invariant_checks(problem))
    if problem.presentation is not None:
        results.update(presentation_checks(problem, window, hilbert_degree))

    for name, ok in results.items():
        (log.debug if ok else log.error)("%s: %s", 'PASS' if ok else 'FAIL', name)
    return results
