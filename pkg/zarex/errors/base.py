# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from __future__ import annotations

from typing import Callable, Type

# code -> every class registered under it; the precondition errors all share 6
exit_status_map: dict[int, list[Type[ZarexError]]] = {}


def exit_status(code: int) -> Callable[[Type[ZarexError]], Type[ZarexError]]:
    """
    Register an error class under a process exit status.

    Examples:
        >>> @exit_status(42)
        ... class AnswerError(ZarexError):
        ...     pass
        >>> AnswerError.exit_status
        42
    """

    def decorator(cls: Type[ZarexError]) -> Type[ZarexError]:
        cls.exit_status = code
        exit_status_map.setdefault(code, []).append(cls)
        return cls

    return decorator


class ZarexError(Exception):
    """A generic zarex error. Specific errors will subclass this."""

    exit_status: int = 2


@exit_status(3)
class SchemaError(ZarexError, ValueError):
    """An input document did not match its zarex/1 schema."""


@exit_status(4)
class GuardExceededError(ZarexError):
    """An exact operation was asked to search a space larger than the configured guard."""

    def __init__(self, what: str, size: int, limit: int) -> None:
        super().__init__(f"{what}: {size} exceeds the exact-search guard of {limit}")
        self.size = size
        self.limit = limit


@exit_status(5)
class UnknownCheckError(ZarexError, KeyError):
    """The requested verification check is not registered."""

    def __init__(self, check_id: str) -> None:
        super().__init__(check_id)
        self.check_id = check_id

    def __str__(self) -> str:
        return f"Unknown check {self.check_id!r}"


@exit_status(6)
class PatternError(ZarexError, ValueError):
    """A pattern violates its invariants or a transform precondition."""


@exit_status(6)
class DimensionMismatchError(ZarexError, ValueError):
    """Two objects that must share a dimension do not."""

    def __init__(self, left: int, right: int) -> None:
        super().__init__(f"Dimension mismatch: {left} != {right}")
        self.left = left
        self.right = right


@exit_status(6)
class AlignmentError(ZarexError, ValueError):
    """A length is not an integer multiple of the cell side it must align to."""


@exit_status(6)
class SolverError(ZarexError, ValueError):
    """A solver option is unsound or unsupported for the given input."""


@exit_status(7)
class CertificateError(ZarexError):
    """A certificate failed re-verification before being reported."""
