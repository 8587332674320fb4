#!/usr/bin/env python3
"""
Graded multivariate polynomials over a FieldSpec.

A Poly is a dict {exponent tuple: element code} with no zero entries. The
ring R of a problem is standard graded; positive variable weights are only
used for presented algebras P/I and for the tag variables of subalgebra
membership.
"""
from dataclasses import dataclass
from functools import cached_property

from .errors import ContextMismatch, DimensionMismatch, ParseError, ZeroPolynomial
from .field import FieldSpec, Scalar, parse_expression

MAX_VARIABLES = 16
ORDERS = ('grevlex', 'lex', 'elim')


@dataclass(frozen=True)
class RingCtx:
    field: FieldSpec
    variables: tuple
    order: str = 'grevlex'
    weights: tuple = None
    block: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'variables', tuple(self.variables))
        names = self.variables
        if len(set(names)) != len(names):
            raise ParseError(f"variable names must be distinct: {list(names)}")
        if any(not name.isidentifier() for name in names):
            raise ParseError(f"variable names must be identifiers: {list(names)}")
        if self.order not in ORDERS:
            raise ParseError(f"unknown monomial order {self.order!r}")
        if self.order != 'elim' and len(names) > MAX_VARIABLES:
            raise DimensionMismatch(f"at most {MAX_VARIABLES} variables are supported, got {len(names)}")
        weights = tuple(self.weights) if self.weights is not None else (1,) * len(names)
        if len(weights) != len(names) or any(not isinstance(w, int) or w < 1 for w in weights):
            raise ParseError(f"weights must be positive integers, one per variable: {list(weights)}")
        object.__setattr__(self, 'weights', weights)
        if self.order == 'elim' and not 0 < self.block < len(names):
            raise ParseError(f"elimination block {self.block} out of range")

    @property
    def n(self):
        return len(self.variables)

    @property
    def standard(self):
        return all(w == 1 for w in self.weights)

    def degree(self, mono):
        if self.standard:
            return sum(mono)
        return sum(w * e for w, e in zip(self.weights, mono))

    @cached_property
    def key(self):
        """Sort key on exponent tuples; larger key means larger monomial."""
        weights = self.weights

        def graded(mono):
            return (sum(w * e for w, e in zip(weights, mono)), tuple(-e for e in reversed(mono)))

        if self.order == 'grevlex':
            return graded
        if self.order == 'lex':
            return tuple
        b = self.block
        first_weights, last_weights = weights[:b], weights[b:]

        def elimination(mono):
            head, tail = mono[:b], mono[b:]
            return (sum(w * e for w, e in zip(first_weights, head)), tuple(-e for e in reversed(head)),
                    sum(w * e for w, e in zip(last_weights, tail)), tuple(-e for e in reversed(tail)))

        return elimination

    @cached_property
    def descending_key(self):
        """Exact reversal of `key`, for min-heaps that must pop the largest monomial first."""
        key = self.key

        def negate(value):
            if isinstance(value, tuple):
                return tuple(negate(v) for v in value)
            return -value

        return lambda mono: negate(key(mono))

    def zero(self):
        return Poly(self, {})

    def one(self):
        return Poly(self, {(0,) * self.n: 1})

    def constant(self, value):
        return Poly(self, {(0,) * self.n: self.field.element(value).code})

    def var(self, index):
        mono = [0] * self.n
        mono[index] = 1
        return Poly(self, {tuple(mono): 1})

    def gens(self):
        return [self.var(i) for i in range(self.n)]

    def parse(self, text):
        if isinstance(text, Poly):
            if text.ring != self:
                raise ContextMismatch("polynomial belongs to another ring")
            return text
        return Poly(self, parse_expression(self.field, text, self.variables))

    def monomials(self, degree):
        """Exponent tuples of (weighted) degree `degree`, largest first."""
        if degree < 0:
            return []
        weights = self.weights
        n = self.n
        out = []

        def extend(i, remaining, prefix):
            if i == n - 1:
                if remaining % weights[i] == 0:
                    out.append(tuple(prefix) + (remaining // weights[i],))
                return
            for e in range(remaining // weights[i], -1, -1):
                prefix.append(e)
                extend(i + 1, remaining - e * weights[i], prefix)
                prefix.pop()

        if n == 0:
            return [()] if degree == 0 else []
        extend(0, degree, [])
        out.sort(key=self.key, reverse=True)
        return out

    def format_monomial(self, mono):
        parts = []
        for name, e in zip(self.variables, mono):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return '*'.join(parts)

    def with_order(self, order, block=0):
        return RingCtx(self.field, self.variables, order, self.weights, block)


class Poly:
    __slots__ = ('ring', 'terms', '_lead')

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self._lead = None

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def lead_monomial(self):
        if self._lead is None:
            if not self.terms:
                raise ZeroPolynomial("the zero polynomial has no leading term")
            self._lead = max(self.terms, key=self.ring.key)
        return self._lead

    @property
    def lead_coefficient(self):
        return self.terms[self.lead_monomial]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: self.ring.key(item[0]), reverse=True)

    def coefficient(self, mono):
        return Scalar(self.ring.field, self.terms.get(tuple(mono), 0))

    def degree(self):
        if not self.terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(self.ring.degree(m) for m in self.terms)

    def homogeneous_components(self):
        """Homogeneous parts ordered by degree."""
        parts = {}
        for m, c in self.terms.items():
            parts.setdefault(self.ring.degree(m), {})[m] = c
        return [Poly(self.ring, parts[d]) for d in sorted(parts)]

    def is_homogeneous(self):
        return len({self.ring.degree(m) for m in self.terms}) <= 1

    def variables_used(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return used

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ContextMismatch("operands belong to different rings")
            return other
        if isinstance(other, (Scalar, int)) and not isinstance(other, bool):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f = self.ring.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = f.add(terms.get(m, 0), c)
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Poly(self.ring, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(self.ring.field.element(other).code)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f = self.ring.field
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = f.add(terms.get(m, 0), f.mul(c1, c2))
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent must be a natural number, got {e!r}")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, code):
        f = self.ring.field
        return Poly(self.ring, {m: f.mul(c, code) for m, c in self.terms.items()})

    def mul_term(self, mono, code):
        """Multiply by the single term code * x^mono."""
        f = self.ring.field
        return Poly(self.ring, {tuple(a + b for a, b in zip(m, mono)): f.mul(c, code)
                                for m, c in self.terms.items()})

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lead_coefficient))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (Scalar, int)) and not isinstance(other, bool):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- substitution --------------------------------------------------------

    def compose(self, images, target=None):
        """Replace the i-th variable by images[i]; the images live in `target`."""
        if len(images) != self.ring.n:
            raise DimensionMismatch(f"expected {self.ring.n} images, got {len(images)}")
        target = target or (images[0].ring if images else self.ring)
        powers = [{0: target.one(), 1: image} for image in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        if target.field != self.ring.field:
            raise ContextMismatch("substitution images live over another field")
        f = target.field
        constant = (0,) * target.n
        acc = {}
        for m, c in self.terms.items():
            term = Poly(target, {constant: c})
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            for mono, value in term.terms.items():
                acc[mono] = f.add(acc.get(mono, 0), value)
        return Poly(target, acc)

    def substitute(self, matrix):
        """Apply x_i -> sum_j M[i][j] x_j."""
        rows = getattr(matrix, 'rows', matrix)
        n = self.ring.n
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DimensionMismatch(f"substitution matrix must be {n}x{n}")
        variables = self.ring.gens()
        images = []
        for row in rows:
            image = self.ring.zero()
            for code, x in zip(row, variables):
                if code:
                    image = image + x.scale(code)
            images.append(image)
        return self.compose(images, self.ring)

    def embed(self, ring, positions):
        """Move into `ring`, sending variable i to variable positions[i]."""
        terms = {}
        for m, c in self.terms.items():
            mono = [0] * ring.n
            for i, e in enumerate(m):
                mono[positions[i]] += e
            terms[tuple(mono)] = c
        return Poly(ring, terms)

    # -- printing ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return '0'
        field = self.ring.field
        parts = []
        for m, c in self.sorted_terms():
            mono = self.ring.format_monomial(m)
            coeff = field.format(c)
            if '+' in coeff:
                coeff = f"({coeff})"
            if not mono:
                parts.append(coeff)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{coeff}*{mono}")
        return ' + '.join(parts)

    def __repr__(self):
        return f"Poly({self})"


def poly_arith(op, *operands):
    """Dispatch add, mul, scalar_mul or pow on polynomials sharing a ring."""
    if op == 'add':
        return operands[0] + operands[1]
    if op == 'mul':
        return operands[0] * operands[1]
    if op == 'scalar_mul':
        return operands[1] * operands[0]
    if op == 'pow':
        return operands[0] ** operands[1]
    raise ValueError(f"unknown polynomial operation {op!r}")


def linear_substitute(f, matrix):
    return f.substitute(matrix)


def degree_and_components(f):
    """(degree, homogeneous parts in increasing degree)."""
    return f.degree(), f.homogeneous_components()
