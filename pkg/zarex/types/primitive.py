# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from typing import Dict, List, NewType, Tuple, Union

JSON = NewType("JSON", Union[str, int, float, bool, None, Dict[str, "JSON"], List["JSON"]])
JSON.__doc__ = "A union type that covers all JSON-serializable data."

SCHEMA = "zarex/1"

PatternID = NewType("PatternID", str)
PatternID.__doc__ = "A SHA-256 content hash of a pattern's or matrix's canonical JSON."

CacheKey = NewType("CacheKey", str)
CacheKey.__doc__ = "A SHA-256 content hash of an ``(operation, canonical params)`` pair."

Index = Tuple[int, ...]
"""A 0-based or 1-based position in a d-dimensional array, depending on context."""
