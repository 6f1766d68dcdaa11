"""
Custom Exceptions - Disintegrator

Defines custom exception classes for error handling.

Two marker bases decide how the CLI reports a failure: ``ContractError``
(a precondition or invariant of the inputs was broken, exit code 2) and
``FuelError`` (a semidecision ran out of fuel, exit code 3).

Author: Disintegrator Team
Date: 2026-10-17
"""


class DisintegratorException(Exception):
    """Base exception for all Disintegrator errors."""
    pass


class ContractError(DisintegratorException):
    """Marker base for broken preconditions and invariants."""
    exit_code = 2


class FuelError(DisintegratorException):
    """Marker base for exhausted fuel or search budgets."""
    exit_code = 3


# ===== EXACT REALS =====

class ExactRealsException(DisintegratorException):
    """Base exception for exact real arithmetic."""
    pass


class DivisorStraddlesZero(ExactRealsException, FuelError):
    """Raised when no queried precision separates a divisor from 0."""
    pass


class EnclosureInconsistent(ExactRealsException, ContractError):
    """Raised when a refinement is disjoint from an earlier enclosure."""
    pass


class WitnessInconsistent(ExactRealsException, ContractError):
    """Raised when a lower bound exceeds the matching upper bound."""
    pass


class FuelExhausted(ExactRealsException, FuelError):
    """Raised when a squeeze does not reach the requested width."""
    pass


# ===== SPACES =====

class SpaceException(DisintegratorException):
    """Base exception for metric spaces and names."""
    pass


class UnknownKind(SpaceException, ContractError):
    """Raised for an unsupported space kind."""
    pass


class CauchyViolation(SpaceException, ContractError):
    """Raised when a sampled prefix breaks the fast-Cauchy bound."""
    pass


class SpaceMismatch(SpaceException, ContractError):
    """Raised when objects over different spaces are combined."""
    pass


# ===== MEASURES =====

class MeasureException(DisintegratorException):
    """Base exception for measures and continuity sets."""
    pass


class CertificateTimeout(MeasureException, FuelError):
    """Raised when no continuity radius certifies within a stage's fuel."""
    pass


class InconsistentValues(MeasureException, ContractError):
    """Raised when basis values violate additivity or monotonicity."""
    pass


# ===== CONDITIONING =====

class ConditioningException(DisintegratorException):
    """Base exception for conditioning."""
    pass


class NullConditioningSet(ConditioningException, ContractError):
    """Raised when positivity of the conditioning set is never certified."""
    pass


# ===== DISINTEGRATION =====

class DisintegrationException(DisintegratorException):
    """Base exception for disintegration."""
    pass


class SearchDiverged(DisintegrationException, FuelError):
    """Raised when no admissible basis set is found within fuel."""
    pass


# ===== ORACLES & REALIZERS =====

class OracleException(DisintegratorException):
    """Base exception for oracles and realizers."""
    pass


class OracleExhausted(OracleException, FuelError):
    """Raised when a fuel-bounded oracle cannot answer."""
    pass


class InputDemandExceeded(OracleException, FuelError):
    """Raised when a realizer demands more input than the cap allows."""
    pass


class NeedMoreInput(OracleException):
    """Raised by a realizer when its input prefix is too short."""

    def __init__(self, demanded: int, message: str = ""):
        self.demanded = demanded
        super().__init__(message or f"input prefix of length {demanded} needed")


# ===== CONSTRUCTIONS =====

class ConstructionException(DisintegratorException):
    """Base exception for the concrete constructions."""
    pass


class AmbiguousAtom(ConstructionException, ContractError):
    """Raised when an atom enclosure does not separate the two candidate values."""
    pass


# ===== SPEC FILES & CONFIG =====

class SpecFileException(DisintegratorException):
    """Base exception for measure-spec documents."""
    pass


class SpecValidationError(SpecFileException, ContractError):
    """Raised when a measure-spec document is invalid."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


class ConfigException(ContractError):
    """Raised when configuration is invalid."""
    pass
