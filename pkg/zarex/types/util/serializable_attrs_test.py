# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from typing import Dict, FrozenSet, List, Optional, Tuple
from fractions import Fraction

from attr import dataclass
import pytest

from ..primitive import JSON, SCHEMA
from .serializable import SerializableEnum, SerializerError, dumps
from .serializable_attrs import SerializableAttrs, field


def test_simple_class():
    @dataclass
    class Foo(SerializableAttrs):
        hello: int
        world: str

    serialized = {"hello": 5, "world": "hi"}
    deserialized = Foo.deserialize(serialized)
    assert deserialized == Foo(5, "hi")
    assert deserialized.serialize() == serialized

    with pytest.raises(SerializerError):
        Foo.deserialize({"world": "hi"})


def test_default():
    @dataclass
    class Default(SerializableAttrs):
        no_default: int
        defaultful_value: int = 5

    d1 = Default.deserialize({"no_default": 3})
    assert d1.no_default == 3
    assert d1.defaultful_value == 5
    d2 = Default.deserialize({"no_default": 4, "defaultful_value": 6})
    assert d2.defaultful_value == 6


def test_factory():
    @dataclass
    class Factory(SerializableAttrs):
        manufactured_value: List[str] = field(factory=lambda: ["hi"])

    assert Factory.deserialize({}).manufactured_value == ["hi"]
    assert Factory.deserialize({"manufactured_value": None}).manufactured_value == ["hi"]
    factory1 = Factory.deserialize({})
    factory2 = Factory.deserialize({})
    assert factory1.manufactured_value is not factory2.manufactured_value


def test_hidden():
    @dataclass
    class HiddenField(SerializableAttrs):
        visible: str
        hidden: int = field(hidden=True, default=5)

    assert HiddenField.deserialize({"visible": "yay", "hidden": 4}).hidden == 5
    assert HiddenField("hmm", 5).serialize() == {"visible": "hmm"}


def test_omit_default():
    @dataclass
    class Flags(SerializableAttrs):
        fast: bool = field(default=False, omit_default=True)
        label: Optional[str] = None

    assert Flags().serialize() == {}
    assert Flags(True, "x").serialize() == {"fast": True, "label": "x"}


def test_strict_scalars():
    @dataclass
    class Counts(SerializableAttrs):
        n: int
        exact: bool

    with pytest.raises(SerializerError):
        Counts.deserialize({"n": True, "exact": True})
    with pytest.raises(SerializerError):
        Counts.deserialize({"n": 1, "exact": 1})
    with pytest.raises(SerializerError):
        Counts.deserialize({"n": "1", "exact": False})


def test_rationals_as_strings():
    @dataclass
    class Side(SerializableAttrs):
        length: Fraction
        corners: Tuple[Fraction, ...] = ()

    side = Side.deserialize({"length": "3/2", "corners": ["0", "-1/2"]})
    assert side.length == Fraction(3, 2)
    assert side.corners == (Fraction(0), Fraction(-1, 2))
    assert side.serialize() == {"length": "3/2", "corners": ["0", "-1/2"]}
    for bad in ("2/4", "3/1", "+1", "01", "1/-2", 1.5, 2):
        with pytest.raises(SerializerError):
            Side.deserialize({"length": bad})


def test_sets_serialize_sorted():
    @dataclass
    class Cells(SerializableAttrs):
        cells: FrozenSet[Tuple[int, int]]

    cells = Cells(frozenset({(2, 1), (1, 2), (1, 1)}))
    assert cells.serialize() == {"cells": [[1, 1], [1, 2], [2, 1]]}
    assert Cells.deserialize(cells.serialize()) == cells


def test_schema_tag():
    @dataclass
    class Tagged(SerializableAttrs):
        schema_tag = SCHEMA
        seed: int

    assert Tagged(1).serialize() == {"schema": "zarex/1", "seed": 1}
    assert Tagged.deserialize({"seed": 2}) == Tagged(2)
    with pytest.raises(SerializerError):
        Tagged.deserialize({"schema": "zarex/2", "seed": 2})


def test_json_passthrough():
    @dataclass
    class Loose(SerializableAttrs):
        params: Dict[str, JSON]
        extra: JSON = None

    loose = Loose.deserialize({"params": {"n": "4", "grid": [1, 2]}, "extra": {"a": None}})
    assert loose.params == {"n": "4", "grid": [1, 2]}
    assert loose.extra == {"a": None}


def test_enum_field():
    class Color(SerializableEnum):
        RED = "red"
        BLUE = "blue"

    @dataclass
    class Paint(SerializableAttrs):
        color: Color

    assert Paint.deserialize({"color": "blue"}).color is Color.BLUE
    with pytest.raises(SerializerError, match="'green' is not one of"):
        Paint.deserialize({"color": "green"})


def test_canonical_dumps():
    assert dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
    assert dumps({"b": 1, "a": 2}, indent=2) == '{\n  "a": 2,\n  "b": 1\n}'


def test_parse_json_errors():
    @dataclass
    class Foo(SerializableAttrs):
        hello: int

    assert Foo.parse_json('{"hello": 3}') == Foo(3)
    with pytest.raises(SerializerError, match="invalid JSON"):
        Foo.parse_json("{hello")
    with pytest.raises(SerializerError, match="^foo.json: Foo.hello: expected an integer"):
        Foo.parse_json('{"hello": "3"}', source="foo.json")
