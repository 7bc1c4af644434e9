#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Exception hierarchy for the arc complex engine."""

from __future__ import annotations

from pathlib import Path
from typing import Any


class ArcComplexError(Exception):
    """Base exception for arc complex errors."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        """Initialize the error.

        Args:
            message: Error message
            details: Additional structured context (ids, counts, signatures)
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}


class RejectedInputError(ArcComplexError):
    """An operation was called with input violating its preconditions."""


class UnsupportedSignatureError(RejectedInputError):
    """The signature admits no hexagon decomposition."""


class UndefinedTransportError(RejectedInputError):
    """Transport was requested for the arc removed by the move itself."""


class NonFlippableError(RejectedInputError):
    """The arc lies in a single top simplex and cannot be flipped."""


class NotConnectedError(RejectedInputError):
    """Two ball nodes lie in different components of the explored ball."""


class TruncatedWindowError(RejectedInputError):
    """An exhaustive computation was requested on a truncated window."""


class InconsistentPatternError(RejectedInputError):
    """A configuration pattern contradicts itself."""


class ExportError(ArcComplexError):
    """An export destination could not be written."""

    def __init__(self, message: str, path: Path, details: dict[str, Any] | None = None) -> None:
        super().__init__(message, details)
        self.path = path


# 🔺✅🔚
