#!/usr/bin/env python3
"""
Exact arithmetic in F_p and F_{p^k} = F_p[a]/(m(a)).

Elements are encoded as integers c0 + c1*p + ... + c_{k-1}*p^(k-1), where
(c0, ..., c_{k-1}) are the coordinates with respect to 1, a, ..., a^(k-1).
FieldSpec owns the arithmetic on codes; Scalar is the public value type.
"""
import itertools
import logging
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from .errors import DivisionByZero, FieldError, NoSuchRoot, ParseError

logger = logging.getLogger('mil.field')

GENERATOR = 'a'
MAX_FIELD_SIZE = 2 ** 16

# Defaults for the small extension fields; F_9 uses a^2 + 1 so that a is a
# primitive 4-th root of unity.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (1, 0, 1),
}


def _poly_rem(num, den, p):
    """Remainder of num modulo monic den, coefficient lists over F_p (constant first)."""
    num = [c % p for c in num]
    dd = len(den) - 1
    for shift in range(len(num) - 1 - dd, -1, -1):
        lead = num[shift + dd]
        if lead:
            for i, c in enumerate(den):
                num[shift + i] = (num[shift + i] - lead * c) % p
    rem = num[:dd]
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def is_irreducible(modulus, p):
    """Trial division by every monic polynomial of degree at most deg/2."""
    k = len(modulus) - 1
    for degree in range(1, k // 2 + 1):
        for lower in itertools.product(range(p), repeat=degree):
            divisor = list(lower) + [1]
            if not _poly_rem(modulus, divisor, p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int
    extension_degree: int = 1
    modulus: tuple = dataclass_field(default=())

    def __post_init__(self):
        p, k = self.characteristic, self.extension_degree
        if not isinstance(p, int) or not sympy.isprime(p):
            raise FieldError(f"characteristic must be prime, got {p!r}")
        if not isinstance(k, int) or k < 1:
            raise FieldError(f"extension degree must be a positive integer, got {k!r}")
        if p ** k > MAX_FIELD_SIZE:
            raise FieldError(f"field of size {p}^{k} exceeds the supported {MAX_FIELD_SIZE} elements")

        if k == 1:
            object.__setattr__(self, 'modulus', (0, 1))
            return

        modulus = tuple(self.modulus) or DEFAULT_MODULI.get((p, k))
        if not modulus:
            raise FieldError(f"no default modulus for F_{p}^{k}; supply one in the field block")
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {k}, got {list(modulus)}")
        if any(not 0 <= c < p for c in modulus):
            raise FieldError(f"modulus coefficients must lie in [0, {p})")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {list(modulus)} is reducible over F_{p}")
        object.__setattr__(self, 'modulus', modulus)

    @classmethod
    def from_dict(cls, data):
        """Build from the input-file block {"char": p, "degree": k, "modulus": [...]}."""
        try:
            p = int(data['char'])
        except (KeyError, TypeError, ValueError):
            raise FieldError(f"field block needs an integer 'char', got {data!r}")
        return cls(p, int(data.get('degree', 1)), tuple(data.get('modulus') or ()))

    def to_dict(self):
        data = {'char': self.characteristic, 'degree': self.extension_degree}
        if self.extension_degree > 1:
            data['modulus'] = list(self.modulus)
        return data

    def __str__(self):
        if self.extension_degree == 1:
            return f"F_{self.characteristic}"
        return f"F_{self.characteristic}^{self.extension_degree}"

    @property
    def order(self):
        return self.characteristic ** self.extension_degree

    # -- code <-> coordinates ------------------------------------------------

    def digits(self, code):
        p = self.characteristic
        out = []
        for _ in range(self.extension_degree):
            code, r = divmod(code, p)
            out.append(r)
        return tuple(out)

    def encode(self, digits):
        p = self.characteristic
        code = 0
        for c in reversed(digits):
            code = code * p + (c % p)
        return code

    def _mul_raw(self, x, y):
        p, k = self.characteristic, self.extension_degree
        a, b = self.digits(x), self.digits(y)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        rem = _poly_rem(prod, self.modulus, p)
        return self.encode(rem + [0] * (k - len(rem)))

    @cached_property
    def _log_tables(self):
        """(exp, log) tables built from the smallest primitive element."""
        q = self.order
        for candidate in range(2, q):
            powers = [1]
            x = candidate
            while x != 1:
                powers.append(x)
                x = self._mul_raw(x, candidate)
            if len(powers) == q - 1:
                log = [0] * q
                for e, value in enumerate(powers):
                    log[value] = e
                logger.debug('%s: primitive element code %d', self, candidate)
                return powers, log
        raise FieldError(f"no primitive element found in {self}")

    @cached_property
    def _add_table(self):
        q = self.order
        if q > 729:
            return None
        p = self.characteristic
        digits = [self.digits(c) for c in range(q)]
        return [[self.encode([(u + v) % p for u, v in zip(digits[x], digits[y])]) for y in range(q)]
                for x in range(q)]

    # -- arithmetic on codes -------------------------------------------------

    def add(self, x, y):
        if self.extension_degree == 1:
            return (x + y) % self.characteristic
        if self.characteristic == 2:
            return x ^ y
        table = self._add_table
        if table is not None:
            return table[x][y]
        p = self.characteristic
        return self.encode([(u + v) % p for u, v in zip(self.digits(x), self.digits(y))])

    def neg(self, x):
        if self.extension_degree == 1:
            return -x % self.characteristic
        if self.characteristic == 2:
            return x
        return self.encode([-u for u in self.digits(x)])

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if not x or not y:
            return 0
        if self.extension_degree == 1:
            return x * y % self.characteristic
        exp, log = self._log_tables
        return exp[(log[x] + log[y]) % (self.order - 1)]

    def inv(self, x):
        if not x:
            raise DivisionByZero(f"inverse of zero in {self}")
        if self.extension_degree == 1:
            return pow(x, self.characteristic - 2, self.characteristic)
        exp, log = self._log_tables
        return exp[-log[x] % (self.order - 1)]

    def pow(self, x, e):
        if e == 0:
            return 1
        if e < 0:
            x, e = self.inv(x), -e
        if not x:
            return 0
        if self.extension_degree == 1:
            return pow(x, e, self.characteristic)
        exp, log = self._log_tables
        return exp[log[x] * e % (self.order - 1)]

    def from_int(self, n):
        return n % self.characteristic

    def from_rational(self, num, den):
        den = den % self.characteristic
        if not den:
            raise DivisionByZero(f"denominator divisible by {self.characteristic}")
        return self.mul(self.from_int(num), self.inv(den))

    def generator_power(self, e):
        """Code of a^e."""
        if self.extension_degree == 1:
            raise ParseError(f"'{GENERATOR}' is only defined in extension fields")
        return self.pow(self.characteristic, e)

    # -- values ----------------------------------------------------------------

    def element(self, value):
        """Coerce an int, a coordinate list, a string or a Scalar into a Scalar."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldError(f"scalar from {value.field} used in {self}")
            return value
        if isinstance(value, bool):
            raise FieldError("booleans are not field elements")
        if isinstance(value, int):
            return Scalar(self, self.from_int(value))
        if isinstance(value, (list, tuple)):
            if len(value) != self.extension_degree:
                raise FieldError(f"expected {self.extension_degree} coordinates, got {list(value)}")
            return Scalar(self, self.encode([int(c) for c in value]))
        if isinstance(value, str):
            return self.parse(value)
        raise FieldError(f"cannot interpret {value!r} as an element of {self}")

    def zero(self):
        return Scalar(self, 0)

    def one(self):
        return Scalar(self, 1)

    def elements(self):
        """All elements in code order (0, 1, 2, ..., q-1)."""
        return [Scalar(self, code) for code in range(self.order)]

    def parse(self, text):
        terms = parse_expression(self, text)
        if any(any(m) for m in terms):
            raise ParseError(f"{text!r} is not a scalar")
        return Scalar(self, terms.get((), 0))

    def format(self, code):
        if self.extension_degree == 1:
            return str(code)
        if not code:
            return '0'
        parts = []
        for e, c in reversed(list(enumerate(self.digits(code)))):
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                power = GENERATOR if e == 1 else f"{GENERATOR}^{e}"
                parts.append(power if c == 1 else f"{c}*{power}")
        return '+'.join(parts)


@dataclass(frozen=True)
class Scalar:
    field: FieldSpec
    code: int

    @property
    def coeffs(self):
        return self.field.digits(self.code)

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldError(f"cannot combine elements of {self.field} and {other.field}")
            return other.code
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        code = self._other(other)
        if code is None:
            return NotImplemented
        return Scalar(self.field, self.field.add(self.code, code))

    __radd__ = __add__

    def __sub__(self, other):
        code = self._other(other)
        if code is None:
            return NotImplemented
        return Scalar(self.field, self.field.sub(self.code, code))

    def __rsub__(self, other):
        code = self._other(other)
        if code is None:
            return NotImplemented
        return Scalar(self.field, self.field.sub(code, self.code))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        code = self._other(other)
        if code is None:
            return NotImplemented
        return Scalar(self.field, self.field.mul(self.code, code))

    __rmul__ = __mul__

    def __truediv__(self, other):
        code = self._other(other)
        if code is None:
            return NotImplemented
        return Scalar(self.field, self.field.mul(self.code, self.field.inv(code)))

    def __pow__(self, e):
        return Scalar(self.field, self.field.pow(self.code, e))

    def inverse(self):
        return Scalar(self.field, self.field.inv(self.code))

    def is_zero(self):
        return self.code == 0

    def __bool__(self):
        return self.code != 0

    def __str__(self):
        return self.field.format(self.code)

    def __repr__(self):
        return f"Scalar({self}, {self.field})"


def scalar_arith(op, *operands):
    """Dispatch one of add, sub, mul, inv, pow on Scalars (pow takes an int exponent)."""
    if op == 'add':
        return operands[0] + operands[1]
    if op == 'sub':
        return operands[0] - operands[1]
    if op == 'mul':
        return operands[0] * operands[1]
    if op == 'inv':
        return operands[0].inverse()
    if op == 'pow':
        return operands[0] ** operands[1]
    raise ValueError(f"unknown scalar operation {op!r}")


def unit_order(x):
    """Least m >= 1 with x^m = 1."""
    if x.is_zero():
        raise DivisionByZero("zero has no multiplicative order")
    f = x.field
    for m in sympy.divisors(f.order - 1):
        if f.pow(x.code, m) == 1:
            return m
    raise FieldError(f"{x} has no order dividing {f.order - 1}")


def find_root_of_unity(spec, m):
    """First element in code order whose multiplicative order is exactly m."""
    if m < 1 or (spec.order - 1) % m:
        raise NoSuchRoot(f"{m} does not divide {spec.order - 1} in {spec}")
    for code in range(1, spec.order):
        x = Scalar(spec, code)
        if unit_order(x) == m:
            return x
    raise NoSuchRoot(f"no element of order {m} in {spec}")


def parse_expression(field, text, variables=()):
    """
    Parse an ASCII polynomial expression into {exponent tuple: code}.

    Accepts +, -, *, ^ (or **), parentheses and integer or rational
    literals in the given variables and the extension generator "a".
    """
    names = list(variables)
    if GENERATOR in names:
        raise ParseError(f"'{GENERATOR}' is reserved for the extension generator")
    symbols = {name: sympy.Symbol(name) for name in names + [GENERATOR]}
    try:
        expr = parse_expr(str(text), local_dict=dict(symbols),
                          transformations=standard_transformations + (convert_xor,))
    except Exception as e:
        raise ParseError(f"cannot parse {text!r}: {e}")

    expr = sympy.sympify(expr)
    unknown = expr.free_symbols - set(symbols.values())
    if unknown:
        raise ParseError(f"unknown symbols in {text!r}: {sorted(str(s) for s in unknown)}")

    gens = [symbols[name] for name in names] + [symbols[GENERATOR]]
    try:
        poly = sympy.Poly(expr, *gens)
    except sympy.PolynomialError as e:
        raise ParseError(f"{text!r} is not a polynomial: {e}")
    if not (poly.domain.is_ZZ or poly.domain.is_QQ):
        raise ParseError(f"{text!r} has coefficients outside the rationals")

    terms = {}
    for monom, coeff in poly.terms():
        exps, gen_exp = tuple(monom[:-1]), monom[-1]
        rational = sympy.Rational(coeff)
        value = field.from_rational(int(rational.p), int(rational.q))
        if gen_exp:
            value = field.mul(value, field.generator_power(gen_exp))
        terms[exps] = field.add(terms.get(exps, 0), value)
    return {m: c for m, c in terms.items() if c}
