# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from typing import Any, Callable, Dict, Iterator, NewType, Optional, Tuple, Type, TypeVar, Union
import copy
import logging

import attr

from ..primitive import JSON, SCHEMA
from .serializable import Serializable, SerializableSubtype, SerializerError

T = TypeVar("T")

Serializer = NewType("Serializer", Callable[[T], JSON])
Deserializer = NewType("Deserializer", Callable[[JSON], T])
serializer_map: Dict[Type[T], Serializer] = {}
deserializer_map: Dict[Type[T], Deserializer] = {}

META_JSON = "json"
META_HIDDEN = "hidden"
META_OMIT_EMPTY = "omitempty"
META_OMIT_DEFAULT = "omitdefault"

log = logging.getLogger("zarex.attrs")


def field(
    default: Any = attr.NOTHING,
    factory: Optional[Callable[[], Any]] = None,
    json: Optional[str] = None,
    hidden: bool = False,
    omit_empty: bool = True,
    omit_default: bool = False,
    metadata: Optional[Dict[str, Any]] = None,
    **kwargs,
):
    """
    A wrapper around :meth:`attr.ib` to conveniently add SerializableAttrs metadata fields.

    Args:
        default: Same as attr.ib, the default value for the field.
        factory: Same as attr.ib, a factory function that creates the default value.
        json: The JSON key used for de/serializing the object.
        hidden: Set to always omit the key from serialized objects.
        omit_empty: Set to omit the key from serialized objects if the value is ``None``.
        omit_default: Set to omit the key from serialized objects if the value is equal to the
            default.
        metadata: Additional metadata for attr.ib.
        **kwargs: Additional keyword arguments for attr.ib.

    Examples:
        >>> from attr import dataclass
        >>> from fractions import Fraction
        >>> @dataclass
        ... class Side(SerializableAttrs):
        ...     length: Fraction = field(json="n", default=Fraction(1))
        >>> Side(Fraction(3, 2)).serialize()
        {'n': '3/2'}
    """
    custom_meta = {
        META_JSON: json,
        META_HIDDEN: hidden,
        META_OMIT_EMPTY: omit_empty,
        META_OMIT_DEFAULT: omit_default,
    }
    metadata = metadata or {}
    metadata.update({k: v for k, v in custom_meta.items() if v is not None})
    return attr.ib(default=default, factory=factory, metadata=metadata, **kwargs)


def serializer(elem_type: Type[T]) -> Callable[[Serializer], Serializer]:
    """
    Define a custom serialization function for the given type.

    Examples:
        >>> from fractions import Fraction
        >>> @serializer(Fraction)
        ... def serialize_fraction(value: Fraction) -> JSON:
        ...     return str(value)
    """

    def decorator(func: Serializer) -> Serializer:
        serializer_map[elem_type] = func
        return func

    return decorator


def deserializer(elem_type: Type[T]) -> Callable[[Deserializer], Deserializer]:
    """Define a custom deserialization function for a given type hint."""

    def decorator(func: Deserializer) -> Deserializer:
        deserializer_map[elem_type] = func
        return func

    return decorator


def _fields(attrs_type: Type[T]) -> Iterator[Tuple[str, attr.Attribute]]:
    for field_meta in attr.fields(attrs_type):
        if field_meta.metadata.get(META_HIDDEN, False):
            continue
        yield field_meta.metadata.get(META_JSON, field_meta.name), field_meta


def _safe_default(val: T) -> T:
    if val is attr.NOTHING:
        return None
    elif isinstance(val, attr.Factory):
        return None if val.takes_self else val.factory()
    return copy.copy(val)


def _dict_to_attrs(attrs_type: Type[T], data: JSON) -> T:
    if not isinstance(data, dict):
        raise SerializerError(f"{attrs_type.__name__} must be a JSON object, got {data!r}")
    if issubclass(attrs_type, Serializable):
        attrs_type.check_schema(data)
    new_items = {}
    for json_name, field_meta in _fields(attrs_type):
        name = field_meta.name.lstrip("_")
        if json_name not in data:
            if field_meta.default is attr.NOTHING:
                raise SerializerError(
                    f"Missing value for required key {json_name} in {attrs_type.__name__}"
                )
            continue
        value = data[json_name]
        try:
            new_items[name] = _deserialize(field_meta.type, value, field_meta.default)
        except SerializerError as e:
            raise SerializerError(f"{attrs_type.__name__}.{json_name}: {e}") from e
        except (TypeError, ValueError, KeyError) as e:
            raise SerializerError(
                f"Failed to deserialize {value!r} into key {json_name} of {attrs_type.__name__}"
            ) from e
    try:
        return attrs_type(**new_items)
    except SerializerError:
        raise
    except (TypeError, ValueError) as e:
        raise SerializerError(f"Invalid {attrs_type.__name__}: {e}") from e


def _has_custom_deserializer(cls) -> bool:
    return issubclass(cls, Serializable) and getattr(cls.deserialize, "__func__") != getattr(
        SerializableAttrs.deserialize, "__func__"
    )


def _expect(value: JSON, kind: type, label: str) -> None:
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise SerializerError(f"expected {label}, got {value!r}")


def _deserialize(cls: Type[T], value: JSON, default: Optional[T] = None) -> T:
    if value is None:
        return _safe_default(default)

    if cls is Any or cls is JSON:
        return value

    deser = deserializer_map.get(cls)
    if deser is None and getattr(cls, "__supertype__", None):
        cls = cls.__supertype__
        deser = deserializer_map.get(cls)
    if deser is not None:
        return deser(value)

    if isinstance(cls, type) and attr.has(cls):
        if _has_custom_deserializer(cls):
            return cls.deserialize(value)
        return _dict_to_attrs(cls, value)
    if isinstance(cls, type) and issubclass(cls, Serializable):
        return cls.deserialize(value)
    if cls is bool:
        _expect(value, bool, "a boolean")
        return value
    if cls is int:
        _expect(value, int, "an integer")
        return value
    if cls is str:
        _expect(value, str, "a string")
        return value

    type_class = getattr(cls, "__origin__", None)
    args = getattr(cls, "__args__", ())
    if type_class is Union:
        if len(args) == 2 and isinstance(None, args[1]):
            return _deserialize(args[0], value, default)
        raise SerializerError(f"cannot deserialize {cls!r}")
    if type_class in (list, tuple, set, frozenset):
        _expect(value, list, "an array")
        if type_class is tuple and not (len(args) == 2 and args[1] is Ellipsis):
            if len(value) != len(args):
                raise SerializerError(f"expected {len(args)} items, got {len(value)}")
            return tuple(_deserialize(item_cls, item) for item_cls, item in zip(args, value))
        items = [_deserialize(args[0], item) for item in value]
        return type_class(items)
    if type_class is dict:
        _expect(value, dict, "an object")
        key_cls, val_cls = args
        return {
            _deserialize(key_cls, key): _deserialize(val_cls, item) for key, item in value.items()
        }
    return value


def _get_serializer(val: Any) -> Optional[Serializer]:
    return serializer_map.get(type(val))


def _serialize_attrs_field(data: T, field_meta: attr.Attribute) -> JSON:
    field_val = getattr(data, field_meta.name)
    if field_val is None:
        if field_meta.metadata.get(META_OMIT_EMPTY, True):
            return attr.NOTHING
        return None
    if field_meta.metadata.get(META_OMIT_DEFAULT, False) and field_val == field_meta.default:
        return attr.NOTHING
    return _serialize(field_val)


def _attrs_to_dict(data: T) -> JSON:
    new_dict = {}
    schema = getattr(data, "schema_tag", None)
    if schema:
        new_dict["schema"] = schema
    for json_name, field_meta in _fields(data.__class__):
        if not json_name:
            continue
        serialized = _serialize_attrs_field(data, field_meta)
        if serialized is not attr.NOTHING:
            new_dict[json_name] = serialized
    return new_dict


def _sorted_items(val: Union[set, frozenset]) -> list:
    try:
        return sorted(val)
    except TypeError:
        return sorted(val, key=repr)


def _serialize(val: Any) -> JSON:
    custom = _get_serializer(val)
    if custom is not None:
        return custom(val)
    if isinstance(val, Serializable):
        return val.serialize()
    elif isinstance(val, (set, frozenset)):
        return [_serialize(subval) for subval in _sorted_items(val)]
    elif isinstance(val, (tuple, list)):
        return [_serialize(subval) for subval in val]
    elif isinstance(val, dict):
        return {_serialize(subkey): _serialize(subval) for subkey, subval in val.items()}
    elif attr.has(val.__class__):
        return _attrs_to_dict(val)
    return val


class SerializableAttrs(Serializable):
    """
    An abstract :class:`Serializable` that assumes the subclass is an attrs dataclass.

    Subclasses that are top-level artifacts set ``schema_tag``; their serialized form then carries
    ``"schema": "zarex/1"`` and deserialization rejects any other schema value.

    Examples:
        >>> from attr import dataclass
        >>> @dataclass
        ... class Job(SerializableAttrs):
        ...     schema_tag = SCHEMA
        ...     seed: int
        >>> Job(7).serialize()
        {'schema': 'zarex/1', 'seed': 7}
    """

    @classmethod
    def deserialize(cls: Type[SerializableSubtype], data: JSON) -> SerializableSubtype:
        return _dict_to_attrs(cls, data)

    def serialize(self) -> JSON:
        return _attrs_to_dict(self)


__all__ = [
    "SCHEMA",
    "SerializableAttrs",
    "deserializer",
    "deserializer_map",
    "field",
    "serializer",
    "serializer_map",
]
