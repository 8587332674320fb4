#!/usr/bin/env python3
"""Exceptions raised by mil. Every class carries the CLI exit code it maps to."""


class MilError(Exception):
    exit_code = 1


class StabilizationFailure(MilError, RuntimeError):
    """A strand dimension disagreed with its closed form or failed to stabilize."""


# exit code 2: bad input

class ValidationError(MilError, ValueError):
    exit_code = 2


class ParseError(ValidationError):
    pass


class ConfigurationError(ValidationError):
    pass


class FieldError(ValidationError):
    pass


class NoSuchRoot(ValidationError):
    pass


class DivisionByZero(MilError, ZeroDivisionError):
    exit_code = 2


class ContextMismatch(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class ZeroPolynomial(ValidationError):
    pass


class NonHomogeneousInput(ValidationError):
    pass


class NotInvertible(ValidationError):
    pass


class WrongCount(ValidationError):
    pass


class NotInvariant(ValidationError):
    pass


class NotHInvariant(ValidationError):
    pass


class ArityMismatch(ValidationError):
    pass


class UnknownExample(ValidationError):
    pass


# exit code 3: the computation is not licensed for this input

class ComputationRefused(MilError):
    exit_code = 3


class TransvectionsPresent(ComputationRefused):
    pass


class CMNotAsserted(ComputationRefused):
    pass


class ModularCase(ComputationRefused):
    pass


# exit code 5: a configured resource cap was hit

class ResourceCapExceeded(MilError):
    exit_code = 5


class PairBudgetExceeded(ResourceCapExceeded):
    pass


class OrderCapExceeded(ResourceCapExceeded):
    pass


class PowerBudgetExceeded(ResourceCapExceeded):
    pass


class SearchFloorReached(ResourceCapExceeded):
    pass


EXIT_MISMATCH = 4

