from fractions import Fraction

import pytest
from cantorlab import (
    CantorLabException,
    ConfigException,
    DepthExhaustedException,
    InsufficientTermsException,
    KraftViolationException,
    NotStableException,
    PreconditionException,
    ZeroMarginalException,
)


class TestCantorLabException:
    # =================================
    # Test Cases for creation
    # =================================

    def test_creation_without_arguments(self) -> None:
        # Arrange/Act
        exception = CantorLabException()

        # Assert
        assert exception is not None
        assert isinstance(exception, CantorLabException)
        assert exception.errors == exception.__class__.__name__

    # =================================

    def test_creation_with_arguments(self) -> None:
        # Arrange
        errors: str | list[str] = "Test exception!"

        # Act
        exception = CantorLabException(errors)

        # Assert
        assert exception.errors == errors

    # =================================
    # Test Cases for propagation
    # =================================

    def test_error_propagation(self) -> None:
        # Arrange/Act/Assert
        with pytest.raises(CantorLabException):
            raise CantorLabException("Test exception!")


class TestDomainExceptions:
    # =================================
    # Test Cases for hierarchy
    # =================================

    @pytest.mark.parametrize(
        ["exception"],
        [
            (ConfigException("bad key"),),
            (InsufficientTermsException(required=9, available=4),),
            (ZeroMarginalException("01"),),
            (NotStableException("1"),),
            (PreconditionException("no heavy-free path"),),
            (DepthExhaustedException(10),),
            (KraftViolationException(Fraction(5, 4)),),
        ],
    )
    def test_every_domain_exception_is_a_cantorlab_exception(self, exception: CantorLabException) -> None:
        # Arrange/Act/Assert
        with pytest.raises(CantorLabException):
            raise exception

    # =================================
    # Test Cases for context
    # =================================

    def test_insufficient_terms_carries_counts(self) -> None:
        # Arrange/Act
        exception = InsufficientTermsException(required=9, available=4)

        # Assert
        assert (exception.required, exception.available) == (9, 4)
        assert exception.errors == "insufficient sequence terms: need 9, have 4"

    # =================================

    @pytest.mark.parametrize(
        ["prefix", "depth", "expected"],
        [
            ("01", None, 2),
            ("", None, 0),
            ("1", 7, 7),
        ],
    )
    def test_zero_marginal_depth_defaults_to_prefix_length(self, prefix: str, depth: int | None, expected: int) -> None:
        # Arrange/Act
        exception = ZeroMarginalException(prefix, depth)

        # Assert
        assert exception.prefix == prefix
        assert exception.depth == expected

    # =================================

    def test_depth_exhausted_is_a_precondition(self) -> None:
        # Arrange/Act
        exception = DepthExhaustedException(10)

        # Assert
        assert isinstance(exception, PreconditionException)
        assert exception.depth == 10
        assert "maxdepth=10" in exception.reason

    # =================================

    def test_kraft_violation_reports_total(self) -> None:
        # Arrange/Act
        exception = KraftViolationException(Fraction(5, 4))

        # Assert
        assert exception.total == Fraction(5, 4)
        assert "5/4" in str(exception.errors)
