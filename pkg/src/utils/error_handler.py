"""
Error handling utilities for indatt.

This module provides the exception hierarchy shared by every computational
module, plus decorators that log and normalize failures the same way
everywhere.
"""

import logging
import traceback
from functools import wraps
from typing import Dict, Any, Callable, Optional, TypeVar, List

# Setup logger
logger = logging.getLogger('indatt.utils.error_handler')

# Define a type variable for function return types
T = TypeVar('T')


class IndattError(Exception):
    """Base exception for all computational errors."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None,
                 module: Optional[str] = None):
        """
        Initialize IndattError.

        Args:
            message: Error message
            details: Additional error details
            module: Name of the module that raised the error (if known)
        """
        self.message = message
        self.details = details or {}
        self.module = module
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.module:
            return f"[{self.module}] {self.message}"
        return self.message


class ConfigError(IndattError):
    """Exception for invalid configuration or command-line usage."""
    pass


# graph-core

class GraphError(IndattError):
    """Exception for graph construction and I/O errors."""
    pass


class Graph6HeaderError(GraphError):
    """Exception for a malformed graph6 size header."""
    pass


class Graph6ByteError(GraphError):
    """Exception for a graph6 byte outside the printable range 63..126."""
    pass


class Graph6LengthError(GraphError):
    """Exception for a graph6 body of the wrong length or with nonzero padding."""
    pass


class GraphSizeError(GraphError):
    """Exception for a vertex count outside the supported range."""
    pass


class GraphInvariantError(GraphError):
    """Exception for adjacency that is not symmetric, has loops or stray bits."""
    pass


# poly-core

class PolynomialError(IndattError):
    """Exception for polynomial arithmetic errors."""
    pass


class PolynomialParseError(PolynomialError):
    """Exception for text that is not a valid polynomial."""
    pass


class CoefficientOverflowError(PolynomialError):
    """Exception raised when a coefficient exceeds the configured digit guard."""
    pass


class FactorizationError(PolynomialError):
    """Exception for factorization requests outside the supported range."""
    pass


# dynamics

class DynamicsError(IndattError):
    """Exception for numerical dynamics errors."""
    pass


class RootSolverError(DynamicsError):
    """Exception for a root solve that did not converge."""

    def __init__(self, message: str, best_iterate: Any = None,
                 details: Optional[Dict[str, Any]] = None, module: Optional[str] = None):
        """
        Initialize RootSolverError.

        Args:
            message: Error message
            best_iterate: Best approximation found before giving up
            details: Additional error details
            module: Name of the module that raised the error
        """
        super().__init__(message, details=details, module=module)
        self.best_iterate = best_iterate


class NumericOverflowError(DynamicsError):
    """Exception for an evaluation that overflowed to infinity or NaN."""
    pass


class FixedPointError(DynamicsError):
    """Exception raised when a point is not a fixed point."""
    pass


class EmptyCloudError(DynamicsError):
    """Exception raised when a distance is requested on an empty point cloud."""
    pass


# search

class SearchError(IndattError):
    """Exception for search and enumeration errors."""
    pass


class EnumerationCapError(SearchError):
    """Exception raised when an enumeration request exceeds the vertex cap."""
    pass


def handle_computation_error(module: str) -> Callable[[Callable[..., T]], Callable[..., T]]:
    """
    Decorator for handling computational errors.

    Errors raised by this package are logged and re-raised with module
    context attached; anything else is wrapped in an IndattError.

    Args:
        module: Module name used as error context

    Returns:
        Decorator function
    """
    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        @wraps(func)
        def wrapper(*args, **kwargs) -> T:
            try:
                return func(*args, **kwargs)
            except IndattError as e:
                if e.module is None:
                    e.module = module
                logger.error(f"{type(e).__name__} in {module}.{func.__name__}: {e.message}")
                if e.details:
                    logger.debug(f"Details: {e.details}")
                raise
            except Exception as e:
                logger.error(f"Unexpected error in {module}.{func.__name__}: {str(e)}")
                logger.debug(traceback.format_exc())
                raise IndattError(f"Unexpected error: {str(e)}", module=module) from e

        return wrapper

    return decorator


def safe_call(fallback_value: T) -> Callable[[Callable[..., T]], Callable[..., T]]:
    """
    Decorator that ensures a function always returns a value, even if it fails.

    Args:
        fallback_value: Value to return if the function fails

    Returns:
        Decorator function
    """
    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        @wraps(func)
        def wrapper(*args, **kwargs) -> T:
            try:
                return func(*args, **kwargs)
            except Exception as e:
                logger.error(f"Error in {func.__name__}: {str(e)}")
                logger.debug(traceback.format_exc())
                return fallback_value

        return wrapper

    return decorator


def validate_fields(
    mapping: Dict[str, Any],
    required_fields: List[str],
    error_message: str = "Invalid configuration"
) -> Dict[str, Any]:
    """
    Validate that a mapping contains the required fields.

    Args:
        mapping: Mapping to validate
        required_fields: List of fields that must be present
        error_message: Message to use if validation fails

    Returns:
        The validated mapping

    Raises:
        ConfigError: If validation fails
    """
    missing_fields = [field for field in required_fields if field not in mapping]

    if missing_fields:
        raise ConfigError(
            f"{error_message}: Missing required fields: {', '.join(missing_fields)}",
            details={"missing_fields": missing_fields}
        )

    return mapping


def log_computation(module: str, operation: str, **params) -> None:
    """
    Log a computation request.

    Args:
        module: Module name (e.g., 'dynamics', 'search')
        operation: Operation name
        **params: Operation parameters
    """
    # Long inputs (polynomials, graph6 strings) are shortened
    short_params = {k: (v if len(str(v)) <= 60 else f"{str(v)[:57]}...")
                    for k, v in params.items()}

    logger.info(f"Computation: {module}.{operation}({short_params})")
