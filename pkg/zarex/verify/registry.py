# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from __future__ import annotations

from typing import Any, Callable, Dict, Iterable, List, Optional, Union
from fractions import Fraction
import inspect
import re

from ..errors import PatternError, SchemaError, UnknownCheckError
from ..matrix import all_ones, identity, single_one
from ..types import (
    JSON,
    BitMatrix,
    CheckReport,
    FinitePattern,
    Pattern,
    Segment,
    SegmentPattern,
    SerializerError,
    format_rat,
    lift_pattern,
    parse_rat,
)

CheckFunc = Callable[..., Union[CheckReport, List[CheckReport]]]
Params = Dict[str, Any]

HALF = Fraction(1, 2)

named_patterns: Dict[str, Pattern] = {
    "point": FinitePattern.of((0, 0)),
    "pair": FinitePattern.of((0, 0), (1, 0)),
    "column_pair": FinitePattern.of((0, 0), (0, 1)),
    "half_pair": FinitePattern.of((0, 0), (HALF, 0)),
    "diag_pair": FinitePattern.of((0, 0), (1, 1)),
    "anti_pair": FinitePattern.of((0, 1), (1, 0)),
    "corner": FinitePattern.of((0, 0), (1, 0), (0, 1)),
    "skew_triple": FinitePattern.of((0, 0), (HALF, 1), (1, HALF)),
    "unit_grid": FinitePattern.of((0, 0), (1, 0), (0, 1), (1, 1)),
    "half_grid": FinitePattern.of((0, 0), (HALF, 0), (0, HALF), (HALF, HALF)),
    "rising_segments": SegmentPattern([Segment(0, 0, HALF), Segment(1, 1, Fraction(3, 2))]),
    "falling_segments": SegmentPattern([Segment(1, 0, HALF), Segment(0, 1, Fraction(3, 2))]),
    "close_segments": SegmentPattern([Segment(0, 0, HALF), Segment(HALF, 1, Fraction(3, 2))]),
    "long_segment": SegmentPattern([Segment(0, 0, Fraction(3, 2))]),
}
for _name in ("point", "pair", "unit_grid"):
    named_patterns[f"lifted_{_name}"] = lift_pattern(named_patterns[_name])

named_matrices: Dict[str, BitMatrix] = {
    "J11": single_one(),
    "J12": all_ones(1, 2),
    "J22": all_ones(2, 2),
    "J23": all_ones(2, 3),
    "I2": identity(2),
    "I3": identity(3),
}


def named_pattern(name: str) -> Pattern:
    try:
        return named_patterns[name]
    except KeyError:
        raise PatternError(
            f"unknown pattern {name!r}, expected one of {', '.join(sorted(named_patterns))}"
        ) from None


def named_matrix(name: str) -> BitMatrix:
    try:
        return named_matrices[name]
    except KeyError:
        raise PatternError(
            f"unknown matrix {name!r}, expected one of {', '.join(sorted(named_matrices))}"
        ) from None


_INT = re.compile(r"^-?(0|[1-9][0-9]*)$")


def parse_param(raw: str) -> Union[int, Fraction, str]:
    """
    Turn one ``--params`` value into a Python value: integers stay integers, ``p/q`` becomes a
    :class:`Fraction` and names (patterns, matrices) stay strings.
    """
    if _INT.match(raw):
        return int(raw)
    if "/" in raw or raw[:1].isdigit() or raw[:1] == "-":
        try:
            return parse_rat(raw)
        except SerializerError as e:
            raise SchemaError(str(e)) from e
    return raw


def parse_params(pairs: Iterable[str]) -> Params:
    params = {}
    for pair in pairs:
        key, sep, raw = pair.partition("=")
        if not sep or not key:
            raise SchemaError(f"parameters are given as key=value, got {pair!r}")
        params[key.replace("-", "_")] = parse_param(raw)
    return params


def report_params(**params: Any) -> Dict[str, JSON]:
    return {
        key: format_rat(value) if isinstance(value, Fraction) else value
        for key, value in params.items()
    }


class CheckHandler:
    """A registered check: the function, its default cases and the parameters it takes."""

    name: str
    func: CheckFunc
    cases: List[Params]
    help_text: str

    def __init__(self, func: CheckFunc, name: str, cases: List[Params], help_text: str) -> None:
        self.func = func
        self.name = name
        self.cases = cases or [{}]
        self.help_text = help_text or (inspect.getdoc(func) or "").split("\n", 1)[0]
        self.params = set(inspect.signature(func).parameters)

    @property
    def randomized(self) -> bool:
        return "seed" in self.params

    def expand(
        self, overrides: Optional[Params] = None, seed: Optional[int] = None
    ) -> List[Params]:
        """
        The parameter sets to run: every default case with the accepted overrides applied, and
        duplicates that the overrides create dropped.
        """
        accepted = {k: v for k, v in (overrides or {}).items() if k in self.params}
        if seed is not None and self.randomized:
            accepted["seed"] = seed
        expanded = []
        for case in self.cases:
            params = {**case, **accepted}
            if params not in expanded:
                expanded.append(params)
        return expanded

    def __call__(self, **params: Any) -> List[CheckReport]:
        result = self.func(**params)
        return [result] if isinstance(result, CheckReport) else list(result)


checks: Dict[str, CheckHandler] = {}


def check(
    name: Optional[str] = None, *, cases: Optional[List[Params]] = None, help_text: str = ""
) -> Callable[[CheckFunc], CheckHandler]:
    """Decorator that registers a check under ``name`` (the function name by default)."""

    def decorator(func: CheckFunc) -> CheckHandler:
        handler = CheckHandler(func, name or func.__name__, cases or [], help_text)
        checks[handler.name] = handler
        return handler

    return decorator


def get_check(check_id: str) -> CheckHandler:
    try:
        return checks[check_id]
    except KeyError:
        raise UnknownCheckError(check_id) from None


def select_checks(ids: Iterable[str]) -> List[CheckHandler]:
    """Resolve check ids; ``all`` expands to every registered check in id order."""
    selected: List[CheckHandler] = []
    for check_id in ids:
        if check_id == "all":
            handlers = [checks[key] for key in sorted(checks)]
        else:
            handlers = [get_check(check_id)]
        selected += [handler for handler in handlers if handler not in selected]
    return selected
