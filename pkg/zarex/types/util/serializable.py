# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from typing import ClassVar, Optional, Type, TypeVar, Union
from enum import Enum
import json

from ..primitive import JSON

SerializableSubtype = TypeVar("SerializableSubtype", bound="Serializable")


def dumps(data: JSON, indent: Optional[int] = None) -> str:
    """Dump JSON canonically: sorted keys, no trailing whitespace, ASCII only."""
    separators = (",", ": ") if indent is not None else (",", ":")
    return json.dumps(data, sort_keys=True, indent=indent, separators=separators)


class SerializerError(Exception):
    """Raised when a value does not fit its JSON form, in either direction."""


class Serializable:
    """
    Base class for types with a canonical JSON form.

    Top-level artifacts (matrices, patterns, regions, records) set ``schema_tag``. Their JSON
    carries a ``"schema"`` key, and input with a different value is rejected before any other
    field is looked at.
    """

    schema_tag: ClassVar[Optional[str]] = None

    def serialize(self) -> JSON:
        raise NotImplementedError()

    @classmethod
    def deserialize(cls: Type[SerializableSubtype], raw: JSON) -> SerializableSubtype:
        raise NotImplementedError()

    @classmethod
    def check_schema(cls, raw: JSON) -> None:
        if not cls.schema_tag or not isinstance(raw, dict):
            return
        found = raw.get("schema")
        if found is not None and found != cls.schema_tag:
            raise SerializerError(
                f"{cls.__name__} expects schema {cls.schema_tag!r}, got {found!r}"
            )

    def json(self, indent: Optional[int] = None) -> str:
        return dumps(self.serialize(), indent=indent)

    @classmethod
    def parse_json(
        cls: Type[SerializableSubtype], data: Union[str, bytes], source: Optional[str] = None
    ) -> SerializableSubtype:
        """
        Parse ``data`` as JSON and deserialize it into this type.

        Args:
            data: The JSON text.
            source: Where the text came from, prefixed to error messages.
        """
        prefix = f"{source}: " if source else ""
        try:
            raw = json.loads(data)
        except json.JSONDecodeError as e:
            raise SerializerError(f"{prefix}invalid JSON: {e}") from None
        try:
            return cls.deserialize(raw)
        except SerializerError as e:
            if not source:
                raise
            raise SerializerError(f"{prefix}{e}") from e


class SerializableEnum(Serializable, Enum):
    """
    Enums serialized as their value.

    Examples:
        >>> class Direction(SerializableEnum):
        ...     UP = "up"
        ...     DOWN = "down"
        >>> Direction.UP.serialize()
        'up'
        >>> Direction.deserialize("down")
        Direction.DOWN
    """

    def __init__(self, _) -> None:
        super().__init__()

    def serialize(self) -> str:
        return self.value

    @classmethod
    def deserialize(cls: Type[SerializableSubtype], raw: str) -> SerializableSubtype:
        try:
            return cls(raw)
        except ValueError as e:
            choices = ", ".join(repr(item.value) for item in cls)
            raise SerializerError(f"{raw!r} is not one of {choices}") from e

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.__class__.__name__}.{self.name}"
