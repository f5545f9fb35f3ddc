"""
Custom exceptions for the toolkit's service layer
"""

import functools

import networkx as nx


class ServiceError(Exception):
    """Base exception for toolkit errors"""
    pass

class ValidationError(ServiceError):
    """Raised when input validation fails"""
    pass

class NotFoundError(ServiceError):
    """Raised when a requested vertex, edge or identifier does not exist"""
    pass

class ConflictError(ServiceError):
    """Raised when operands belong to incompatible contexts"""
    pass

class ConsistencyError(ServiceError):
    """Raised when two computations that must agree do not (an implementation bug)"""
    pass


class GraphValidationError(ValidationError):
    """Raised when a graph violates its structural invariants"""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid graph")

class UnknownVertexError(NotFoundError):
    """Raised when a vertex id is not part of the graph"""
    pass

class UnknownIdentifierError(NotFoundError):
    """Raised when an expression names neither a vertex nor an edge"""
    pass

class CompositionError(ValidationError):
    """Raised when two paths cannot be concatenated"""
    pass

class PreconditionError(ValidationError):
    """Raised when an operation's hypotheses are not met"""
    pass

class DivisionByZeroError(ValidationError):
    """Raised on inversion of the zero scalar"""
    pass

class FieldMismatchError(ConflictError):
    """Raised when scalars or elements over different fields are combined"""
    pass

class GraphMismatchError(ConflictError):
    """Raised when elements over different graphs are combined"""
    pass


class ParseError(ValidationError):
    """Raised on malformed graph files or element expressions"""

    def __init__(self, message: str, line: int = None, column: int = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        elif column is not None:
            message = f"position {column}: {message}"
        super().__init__(message)


def handle_service_exceptions(logger=None):
    """Decorator to convert low-level exceptions into toolkit service exceptions"""
    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except ServiceError:
                # Re-raise our own errors unchanged
                raise
            except nx.NodeNotFound as e:
                if logger:
                    logger.error(f"Graph lookup failed in {func.__name__}: {e}")
                raise NotFoundError(f"Unknown vertex: {e}") from e
            except nx.NetworkXException as e:
                if logger:
                    logger.error(f"Graph algorithm error in {func.__name__}: {e}")
                raise ServiceError(f"Graph algorithm error: {e}") from e
            except ZeroDivisionError as e:
                if logger:
                    logger.error(f"Division by zero in {func.__name__}: {e}")
                raise DivisionByZeroError(f"Division by zero: {e}") from e
            except KeyError as e:
                if logger:
                    logger.error(f"Missing identifier in {func.__name__}: {e}")
                raise NotFoundError(f"Unknown identifier: {e}") from e
            except (ValueError, TypeError) as e:
                if logger:
                    logger.error(f"Validation error in {func.__name__}: {e}")
                raise ValidationError(f"Invalid input: {e}") from e
            except OSError as e:
                if logger:
                    logger.error(f"File error in {func.__name__}: {e}")
                raise ValidationError(f"Unable to read input: {e}") from e
            except Exception as e:
                if logger:
                    logger.error(f"Unexpected error in {func.__name__}: {e}", exc_info=True)
                raise ServiceError(f"Unexpected service error: {e}") from e
        return wrapper
    return decorator
