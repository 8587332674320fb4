#!/usr/bin/env python3
"""
Bundled example problems and the reference values `mil reproduce`
compares against.
"""
import logging
import os
from dataclasses import dataclass

from .cohomology import CechClass, direct_strand_rank
from .errors import TransvectionsPresent, UnknownExample
from .groebner import ideal_member, subalgebra_member, SubalgebraMembership
from .invariants import verify_relation
from .problem import ProblemSpec
from .report import NOT_SPLIT_FLAG, derived_flags

logger = logging.getLogger('mil.bundled')

PROBLEM_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'problems')

PROBLEM_FILES = {
    's2': 's2.json',
    's2@2': 's2_char2.json',
    'a3': 'a3.json',
    'klein3': 'klein3.json',
    'klein6': 'klein6.json',
    'braun': 'braun.json',
    'sl_diagonal_f9': 'sl_diagonal_f9.json',
    'transvection_f3': 'transvection_f3.json',
    'reflection_f9': 'reflection_f9.json',
    'scalar_f9': 'scalar_f9.json',
}

# name: (a-invariant, in_SL, has_pseudoreflection)
A_BATTERY = {
    'a3': (-3, True, False),
    'sl_diagonal_f9': (-2, True, False),
    'klein6': (-6, True, False),
    'transvection_f3': (-4, True, True),
    'reflection_f9': (-5, False, True),
    's2': (-3, False, True),
    'scalar_f9': (-4, False, False),
}


def problem_path(name):
    if name not in PROBLEM_FILES:
        raise UnknownExample(f"no bundled problem {name!r}; choose from {sorted(PROBLEM_FILES)}")
    return os.path.join(PROBLEM_DIR, PROBLEM_FILES[name])


def load_bundled(name):
    return ProblemSpec.load(problem_path(name))


@dataclass
class CheckedValue:
    label: str
    expected: object
    actual: object

    @property
    def passed(self):
        return self.expected == self.actual

    def __str__(self):
        status = 'PASS' if self.passed else 'FAIL'
        return f"{status} {self.label}: {self.actual!r} (expected {self.expected!r})"


@dataclass
class Reproduction:
    example_id: str
    values: list

    @property
    def passed(self):
        return all(v.passed for v in self.values)

    def __len__(self):
        return len(self.values)


def _strand_triple(lc, k):
    report = lc.strand_report(k)
    return [report.dimV, report.rank_H, report.rank_fixed]


def _s2():
    p = load_bundled('s2')
    lc, ring = p.cohomology, p.ring
    x, e1 = ring.parse('x'), ring.parse('x + y')
    eta = CechClass(x, 1, p.hsop_data)
    swap = p.group.element_classes[1]
    strand = lc.build_strand(-2)
    one_minus = p.field.sub(1, lc.act_on_strand(p.group.generators[0], strand)[0][0])
    return [
        CheckedValue('swap is a pseudoreflection', True, swap.is_pseudoreflection),
        CheckedValue('swap is a transvection', False, swap.is_transvection),
        CheckedValue('strand -2 (dimV, rank_H, rank_fixed)', [1, 0, 0], _strand_triple(lc, -2)),
        CheckedValue('(1 - g) on [x/(e1 e2)] is multiplication by', 2, one_minus),
        CheckedValue('[x/(e1 e2)] is zero', False, lc.class_is_zero(eta)),
        CheckedValue('[e1/(e1 e2)] is zero', True, lc.class_is_zero(CechClass(e1, 1, p.hsop_data))),
        CheckedValue('transfer of [x/(e1 e2)] is zero', True, lc.class_is_zero(lc.transfer_class(eta))),
        CheckedValue('a-invariant', -3, p.a_invariant()[0]),
    ]


def _s2_char2():
    p = load_bundled('s2@2')
    lc = p.cohomology
    swap = p.group.element_classes[1]
    strand = lc.build_strand(-2)
    try:
        lc.a_invariant()
        refused = False
    except TransvectionsPresent:
        refused = True
    field = p.field
    matrix = lc.act_on_strand(p.group.generators[0], strand)
    return [
        CheckedValue('swap is a transvection', True, swap.is_transvection),
        CheckedValue('cokernel computation refused', True, refused),
        CheckedValue('(1 - g) on strand -2 is zero', True, field.sub(1, matrix[0][0]) == 0),
        CheckedValue('strand -2 rank_fixed', 1, lc.strand_report(-2).rank_fixed),
    ]


def _a3():
    p = load_bundled('a3')
    lc, ring, action = p.cohomology, p.ring, p.action
    c = p.group.classification
    e1, e2, delta, e3 = p.invariant_generators
    pa = p.presentation
    classes = [
        CechClass.from_denominator(ring.parse('x') * delta, (2, 1, 1), p.hsop_data),
        CechClass.from_denominator(delta, (2, 1, 1), p.hsop_data),
        CechClass.from_denominator(delta, (1, 2, 1), p.hsop_data),
        CechClass.from_denominator(ring.one(), (1, 1, 1), p.hsop_data),
    ]
    window = range(-3, -9, -1)
    ranks = [lc.strand_report(k).rank_H for k in window]
    return [
        CheckedValue('order, in_SL, pseudoreflection, modular, cyclic', [3, True, False, True, True],
                     [c.order, c.in_SL, c.has_pseudoreflection, c.modular, c.cyclic]),
        CheckedValue('relation vanishes', True, verify_relation(pa.relations[0], p.invariant_generators)),
        CheckedValue('delta lies in (e1, e2, e3)R', True, ideal_member(delta, [e1, e2, e3])),
        CheckedValue('delta lies in K[e1, e2, e3]', False, subalgebra_member(delta, [e1, e2, e3])[0]),
        CheckedValue('generator degrees up to 3', [1, 2, 3, 3],
                     [d for _, d in action.algebra_generators_up_to(3)]),
        CheckedValue('degrees of the four socle classes', [-3, -4, -5, -6], [cl.degree for cl in classes]),
        CheckedValue('the four classes are nonzero', [True] * 4, [not lc.class_is_zero(cl) for cl in classes]),
        CheckedValue('the four classes are fixed', [True] * 4, [lc.class_is_fixed(cl) for cl in classes]),
        CheckedValue('rank_H on -3..-8', [1, 1, 2, 4, 5, 7], ranks),
        CheckedValue('rank_H equals rank_fixed on -3..-8', True,
                     all(lc.strand_report(k).rank_H == lc.strand_report(k).rank_fixed for k in window)),
        CheckedValue('direct ranks on -3..-8', [1, 1, 2, 4, 5, 7], [direct_strand_rank(pa, k) for k in window]),
        CheckedValue('a-invariant', -3, p.a_invariant()[0]),
    ]


def _klein3():
    p = load_bundled('klein3')
    c = p.group.classification
    found = p.action.algebra_generators_up_to(2)
    gens = [f for f, _ in found]
    expected = p.invariant_generators
    computed_in_expected = SubalgebraMembership(expected)
    expected_in_computed = SubalgebraMembership(gens)
    same = all(computed_in_expected(f)[0] for f in gens) and all(expected_in_computed(f)[0] for f in expected)
    return [
        CheckedValue('order', 4, c.order),
        CheckedValue('both generators are transvections', True,
                     all(p.group.element_classes[p.group.index(g)].is_transvection for g in p.group.generators)),
        CheckedValue('generator degrees up to 2', [1, 2, 2], [d for _, d in found]),
        CheckedValue('generators span K[z, x^2 + xz, y^2 + yz]', True, same),
        CheckedValue('a-invariant of the polynomial invariant ring', -5, p.a_invariant()[0]),
    ]


def _klein6():
    p = load_bundled('klein6')
    lc, pa = p.cohomology, p.presentation
    r7, r6 = lc.strand_report(-7), lc.strand_report(-6)
    direct = [direct_strand_rank(pa, -7), direct_strand_rank(pa, -6)]
    a = p.a_invariant()[0]
    return [
        CheckedValue('strand -7 dimV, rank_H, rank_fixed', [6, 2, 4], [r7.dimV, r7.rank_H, r7.rank_fixed]),
        CheckedValue('strand -6 dimV, rank_H, rank_fixed', [1, 1, 1], [r6.dimV, r6.rank_H, r6.rank_fixed]),
        CheckedValue('direct ranks at -7 and -6', [2, 1], direct),
        CheckedValue('direct ranks equal rank_H at -7 and -6', True, direct == [r7.rank_H, r6.rank_H]),
        CheckedValue('a-invariant', -6, a),
        CheckedValue('flags', [NOT_SPLIT_FLAG],
                     derived_flags(a, p.ring.n, p.group.order, p.field.characteristic)),
        CheckedValue('presented Hilbert function 0..2', [1, 2, 9], pa.quotient_hilbert(range(3))),
    ]


def _braun():
    p = load_bundled('braun')
    c = p.group.classification
    return [
        CheckedValue('order', 12, c.order),
        CheckedValue('order divisible by 4 and 3', True, c.order % 12 == 0),
        CheckedValue('in_SL', True, c.in_SL),
        CheckedValue('has a transvection', True, c.has_transvection),
    ]


def _a_battery():
    values = []
    for name, (a, in_sl, pseudo) in A_BATTERY.items():
        p = load_bundled(name)
        c = p.group.classification
        values.append(CheckedValue(f'{name}: in_SL, pseudoreflection', [in_sl, pseudo],
                                   [c.in_SL, c.has_pseudoreflection]))
        values.append(CheckedValue(f'{name}: a-invariant', a, p.a_invariant()[0]))
    for name in ('transvection_f3', 'reflection_f9'):
        ring = load_bundled(name).action.pseudoreflection_invariant_ring()
        values.append(CheckedValue(f'{name}: a from the invariant polynomial ring', A_BATTERY[name][0],
                                   ring.a_invariant))
    return values


EXAMPLES = {
    's2': _s2,
    's2@2': _s2_char2,
    'a3': _a3,
    'klein3': _klein3,
    'klein6': _klein6,
    'braun': _braun,
    'a_battery': _a_battery,
}


def reproduce(example_id):
    if example_id not in EXAMPLES:
        raise UnknownExample(f"unknown example {example_id!r}; choose from {sorted(EXAMPLES)}")
    values = EXAMPLES[example_id]()
    for v in values:
        (logger.debug if v.passed else logger.error)("%s", v)
    return Reproduction(example_id, values)
