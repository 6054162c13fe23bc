"""
Tests for the error handling utility module.
"""

import unittest
from unittest.mock import patch
from src.utils.error_handler import (
    IndattError,
    ConfigError,
    GraphError,
    Graph6HeaderError,
    Graph6ByteError,
    Graph6LengthError,
    GraphSizeError,
    PolynomialError,
    CoefficientOverflowError,
    DynamicsError,
    RootSolverError,
    EmptyCloudError,
    SearchError,
    EnumerationCapError,
    handle_computation_error,
    validate_fields,
    safe_call,
    log_computation
)


class TestErrorClasses(unittest.TestCase):
    """Test cases for the error classes."""

    def test_error_basic(self):
        """Test basic IndattError initialization."""
        error = IndattError("Test error")
        self.assertEqual(error.message, "Test error")
        self.assertIsNone(error.module)
        self.assertEqual(error.details, {})
        self.assertEqual(str(error), "Test error")

    def test_error_with_module(self):
        """Test that the module prefixes the message."""
        error = IndattError("Bad input", module="graphs")
        self.assertEqual(str(error), "[graphs] Bad input")

    def test_error_with_details(self):
        """Test IndattError with details."""
        error = IndattError("Test error", details={"n": 70})
        self.assertEqual(error.details, {"n": 70})

    def test_error_families(self):
        """Test the subclass families."""
        families = [
            (Graph6HeaderError("x"), GraphError),
            (Graph6ByteError("x"), GraphError),
            (Graph6LengthError("x"), GraphError),
            (GraphSizeError("x"), GraphError),
            (CoefficientOverflowError("x"), PolynomialError),
            (EmptyCloudError("x"), DynamicsError),
            (EnumerationCapError("x"), SearchError),
            (ConfigError("x"), IndattError),
        ]

        for error, family in families:
            self.assertIsInstance(error, family)
            self.assertIsInstance(error, IndattError)

    def test_root_solver_error_keeps_iterate(self):
        """Test that RootSolverError carries the best iterate."""
        error = RootSolverError("No convergence", best_iterate=[1 + 1j])
        self.assertIsInstance(error, DynamicsError)
        self.assertEqual(list(error.best_iterate), [1 + 1j])


class TestHandleComputationError(unittest.TestCase):
    """Test cases for handle_computation_error decorator."""

    def test_successful_function(self):
        """Test that decorator passes through successful function results."""
        @handle_computation_error('graphs')
        def successful_function():
            return "success"

        self.assertEqual(successful_function(), "success")

    def test_error_gets_module(self):
        """Test that decorator re-raises package errors with the module attached."""
        @handle_computation_error('dynamics')
        def failing_function():
            raise DynamicsError("Test error")

        with self.assertRaises(DynamicsError) as ctx:
            failing_function()
        self.assertEqual(ctx.exception.module, "dynamics")

    def test_existing_module_kept(self):
        """Test that an inner module name is not overwritten."""
        @handle_computation_error('classifier')
        def failing_function():
            raise GraphError("Inner", module="graphs")

        with self.assertRaises(GraphError) as ctx:
            failing_function()
        self.assertEqual(ctx.exception.module, "graphs")

    def test_regular_exception_wrapped(self):
        """Test that decorator wraps regular exceptions in IndattError."""
        @handle_computation_error('search')
        def exception_function():
            raise ValueError("Test value error")

        with self.assertRaises(IndattError) as ctx:
            exception_function()
        self.assertIn("Test value error", ctx.exception.message)
        self.assertEqual(ctx.exception.module, "search")


class TestSafeCall(unittest.TestCase):
    """Test cases for safe_call decorator."""

    def test_successful_function(self):
        """Test that decorator passes through successful function results."""
        @safe_call(fallback_value="fallback")
        def successful_function():
            return "success"

        self.assertEqual(successful_function(), "success")

    def test_fallback_on_exception(self):
        """Test that decorator returns fallback value on exception."""
        @safe_call(fallback_value="fallback")
        def failing_function():
            raise ValueError("Test error")

        self.assertEqual(failing_function(), "fallback")

    def test_fallback_none(self):
        """Test a None fallback."""
        @safe_call(fallback_value=None)
        def none_function():
            raise SearchError("Test error")

        self.assertIsNone(none_function())


class TestValidateFields(unittest.TestCase):
    """Test cases for validate_fields function."""

    def test_valid_mapping(self):
        """Test validation of a complete mapping."""
        mapping = {"depth": 12, "cap": 1000}
        self.assertEqual(validate_fields(mapping, ["depth", "cap"]), mapping)

    def test_missing_field(self):
        """Test validation of an incomplete mapping."""
        with self.assertRaises(ConfigError) as ctx:
            validate_fields({"depth": 12}, ["depth", "cap"])
        self.assertEqual(ctx.exception.details["missing_fields"], ["cap"])

    def test_custom_error_message(self):
        """Test custom error message."""
        with self.assertRaises(ConfigError) as ctx:
            validate_fields({}, ["tol"], "Custom error message")
        self.assertTrue(ctx.exception.message.startswith("Custom error message"))


class TestLogComputation(unittest.TestCase):
    """Test cases for log_computation function."""

    @patch('logging.Logger.info')
    def test_log_computation(self, mock_info):
        """Test that computations are logged."""
        log_computation("dynamics", "backward_orbit", depth=12, cap=1000)

        mock_info.assert_called_once()
        log_message = mock_info.call_args[0][0]
        self.assertIn("dynamics.backward_orbit", log_message)
        self.assertIn("depth", log_message)
        self.assertIn("cap", log_message)

    @patch('logging.Logger.info')
    def test_long_parameter_shortened(self, mock_info):
        """Test that long parameters are shortened."""
        log_computation("polynomials", "iterate", poly="1+" + "z+" * 100 + "z")

        log_message = mock_info.call_args[0][0]
        self.assertIn("...", log_message)
        self.assertLess(len(log_message), 200)


if __name__ == '__main__':
    unittest.main()
