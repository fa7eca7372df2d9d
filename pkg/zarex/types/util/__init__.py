from .serializable import Serializable, SerializableEnum, SerializerError, dumps
from .serializable_attrs import (
    SerializableAttrs,
    deserializer,
    deserializer_map,
    field,
    serializer,
    serializer_map,
)

__all__ = [
    "Serializable",
    "SerializableEnum",
    "SerializerError",
    "dumps",
    "SerializableAttrs",
    "deserializer",
    "deserializer_map",
    "field",
    "serializer",
    "serializer_map",
]
