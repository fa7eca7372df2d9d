# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
import logging

from .color import AREA_COLORS, OTHER_AREA_COLOR, PREFIX, RESET, ColorFormatter
from .trace import TRACE, TraceLogger


def paint(color: str, text: str) -> str:
    return f"{PREFIX}{color}{text}{RESET}"


def test_color_names() -> None:
    fmt = ColorFormatter()
    assert fmt._color_name("zarex") == paint("32m", "zarex")
    assert fmt._color_name("zarex.grid.search") == (
        f"{paint('32m', 'zarex')}.{paint(AREA_COLORS['grid'], 'grid.search')}"
    )
    assert fmt._color_name("zarex.misc").endswith(paint(OTHER_AREA_COLOR, "misc"))
    assert fmt._color_name("asyncio") == paint("36m", "asyncio")


def test_format_keeps_record_intact() -> None:
    record = logging.LogRecord("zarex.cli", logging.WARNING, __file__, 1, "hello", None, None)
    out = ColorFormatter("%(levelname)s %(name)s %(message)s").format(record)
    assert out.startswith(paint("33;1m", "WARNING"))
    assert out.endswith(" hello")
    assert (record.name, record.levelname) == ("zarex.cli", "WARNING")


def test_trace_logger(caplog) -> None:
    log = logging.getLogger("zarex.search.test")
    assert isinstance(log, TraceLogger)
    with caplog.at_level(TRACE, logger="zarex.search.test"):
        log.trace("visited %d nodes", 12)
    assert "visited 12 nodes" in caplog.text
