# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from copy import copy
from logging import Formatter, LogRecord

PREFIX = "\033["
RESET = PREFIX + "0m"
ROOT_COLOR = "32m"  # green
OTHER_AREA_COLOR = "37m"
FOREIGN_COLOR = "36m"

# One colour per zarex.<area> logger, so interleaved solver and harness output stays readable.
AREA_COLORS = {
    "search": "35m",  # magenta
    "extremal": "34;1m",  # bright blue
    "grid": "33m",  # yellow
    "verify": "32;1m",  # bright green
    "cli": "37;1m",
    "cache": "90m",  # grey
}

LEVEL_COLORS = {
    "TRACE": "90m",
    "DEBUG": "37m",
    "INFO": "36m",
    "WARNING": "33;1m",
    "ERROR": "31;1m",
    "CRITICAL": f"37;1m{PREFIX}41m",  # white on red
}


def _paint(color: str, text: str) -> str:
    return f"{PREFIX}{color}{text}{RESET}"


class ColorFormatter(Formatter):
    """Colours level names and ``zarex.<area>`` logger names by area."""

    def _color_name(self, name: str) -> str:
        root, _, rest = name.partition(".")
        if root != "zarex":
            return _paint(FOREIGN_COLOR, name)
        if not rest:
            return _paint(ROOT_COLOR, name)
        area_color = AREA_COLORS.get(rest.split(".", 1)[0], OTHER_AREA_COLOR)
        return f"{_paint(ROOT_COLOR, root)}.{_paint(area_color, rest)}"

    def format(self, record: LogRecord) -> str:
        colored = copy(record)
        colored.name = self._color_name(record.name)
        if record.levelname in LEVEL_COLORS:
            colored.levelname = _paint(LEVEL_COLORS[record.levelname], record.levelname)
        return super().format(colored)
